// Diagram invariants: the quotient-module class of the pairwise linking
// vector, integer reductions through pair tables, the rung-surgery sum for
// even ladders, crossing-number lower bounds, binomial parity counts, and
// chirality certificates.
#pragma once

#include <string>
#include <vector>

#include "sgi/diagram.hpp"
#include "sgi/epsilon.hpp"
#include "sgi/linking.hpp"

namespace sgi {

// Coordinates of the diagram's pairwise linking vector in the free part of
// the quotient module (length lm.rank()).
Vec wu_invariant(const Diagram& d, const LinkingModule& lm);

// Sum over crossings of sign times the table entry of the crossed pair
// (same-edge and adjacent-edge crossings contribute nothing).
long long reduced_invariant(const Diagram& d, const EpsilonTable& t);

// Even-rung ladders M_{2N}: sum over all rungs of the child reduction of
// the restricted diagram after deleting that rung and smoothing.
long long t_invariant(const Diagram& d);

// ceil(|value| / max_abs(t)): every diagram realizing `value` through `t`
// needs at least this many crossings.
long long crossing_lower_bound(long long value, const EpsilonTable& t);

// Parity of C(n, 7) for odd n >= 7 (returns 0 or 1).
int k7_count_parity(unsigned long n);

// True when the table keeps its values along the automorphism:
// t(sa, sb) * dir(a) * dir(b) == t(a, b) on every disjoint pair.
bool epsilon_invariant(const EpsilonTable& t, const Automorphism& a);

struct ChiralityCertificate {
    std::string graph;
    // "chiral-embedding" | "intrinsically-chiral-hypotheses-verified" |
    // "inconclusive"
    std::string verdict;
    long long value = 0;
    std::vector<std::string> evidence;
};

// Checks the computational hypotheses of the applicable chirality criterion:
// even ladders use the rung-surgery invariant against its mirror; K7, odd
// ladders, and the Heawood graph use table parity plus symmetry analysis.
// `table` may be null for even ladders only.
ChiralityCertificate certify_chirality(const Diagram& d, const EpsilonTable* table);

}  // namespace sgi

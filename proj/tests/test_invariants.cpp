// Diagram invariants: module classes, table reductions, the rung-surgery
// sum, crossing bounds, binomial parities, table symmetry, and chirality
// certificates.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "sgi/catalog.hpp"
#include "sgi/families.hpp"
#include "sgi/invariants.hpp"
#include "sgi/moves.hpp"
#include "support.hpp"

using namespace sgi;

TEST_CASE("the module class of a diagram: linearity, mirror, walks") {
    auto g = build_family("K6");
    LinkingModule lm(g);

    Diagram empty = Diagram::empty(g);
    Vec zero = wu_invariant(empty, lm);
    REQUIRE(static_cast<int>(zero.size()) == lm.rank());
    for (const auto& x : zero) CHECK(x == 0);

    Diagram d = testsup::random_diagram(g, 15, 9);
    Vec v = wu_invariant(d, lm);
    CHECK(v == lm.reduce(pairwise_linking(d)));

    // Mirroring negates the class.
    Vec m = wu_invariant(mirror_diagram(d), lm);
    for (size_t k = 0; k < v.size(); ++k) CHECK(m[k] == -v[k]);

    // Walks never move the class.
    Diagram w = d;
    random_walk(w, 150, 31);
    CHECK(wu_invariant(w, lm) == v);

    CHECK_THROWS_AS(wu_invariant(testsup::random_diagram(build_family("K5"), 3, 1), lm),
                    DomainError);
}

TEST_CASE("table reduction of a diagram") {
    auto g = build_family("K7");
    EpsilonTable t = builtin_epsilon("k7");
    Diagram d = Diagram::empty(g);
    d.add_crossing(g->edge_index("z1"), 0, g->edge_index("z3"), 0, 1);
    d.add_crossing(g->edge_index("z3"), 16, g->edge_index("z1"), 16, 1);
    d.add_crossing(g->edge_index("x1"), 0, g->edge_index("y3"), 0, -1);
    d.add_crossing(g->edge_index("x1"), 16, g->edge_index("x2"), 0, 1);  // adjacent: ignored
    d.add_crossing(g->edge_index("x3"), 0, g->edge_index("x3"), 16, 1);  // self: ignored
    CHECK(reduced_invariant(d, t) == 3);  // 2*(+1) + (-1)*(-1)

    // Mirror antisymmetry on seeded diagrams.
    auto k6 = build_family("K6");
    EpsilonTable geo = builtin_epsilon("k6-ex27");
    for (unsigned long long seed : {1ull, 2ull, 3ull}) {
        Diagram r = testsup::random_diagram(k6, 12, seed);
        CHECK(reduced_invariant(mirror_diagram(r), geo) == -reduced_invariant(r, geo));
    }

    // Walks never move the reduction when the table is a homomorphism.
    auto hw = build_family("Heawood");
    EpsilonTable ht = builtin_epsilon("heawood");
    Diagram hd = testsup::random_diagram(hw, 10, 4);
    long long before = reduced_invariant(hd, ht);
    random_walk(hd, 200, 77);
    CHECK(reduced_invariant(hd, ht) == before);

    CHECK_THROWS_AS(reduced_invariant(Diagram::empty(k6), t), DomainError);
}

TEST_CASE("rung-surgery invariant of even ladders") {
    auto entry = catalog_entry("mobius-even");
    // M4 carrying 2m+1 half-twists: the sum over all four rungs.
    for (long long m : {0, 1, 2}) {
        Diagram d = entry.build({2, m});
        CHECK(t_invariant(d) == 4 * (2 * m + 1));
        CHECK(t_invariant(mirror_diagram(d)) == -4 * (2 * m + 1));
    }
    // M6: six rungs.
    for (long long m : {0, 1}) {
        Diagram d = entry.build({3, m});
        CHECK(t_invariant(d) == 6 * (2 * m + 1));
    }
    // The empty even-ladder diagram sums to zero.
    CHECK(t_invariant(Diagram::empty(build_family("Mobius", 4))) == 0);

    // Walks preserve the rung-surgery sum.
    Diagram d = entry.build({2, 1});
    long long before = t_invariant(d);
    random_walk(d, 120, 5);
    CHECK(t_invariant(d) == before);

    CHECK_THROWS_AS(t_invariant(Diagram::empty(build_family("Mobius", 5))), DomainError);
    CHECK_THROWS_AS(t_invariant(Diagram::empty(build_family("K5"))), DomainError);
}

TEST_CASE("crossing-number lower bounds") {
    EpsilonTable sec5 = builtin_epsilon("k6-sec5");
    EpsilonTable hw = builtin_epsilon("heawood");
    EpsilonTable m7 = builtin_epsilon("mobius", 7);
    CHECK(crossing_lower_bound(-13, sec5) == 13);
    CHECK(crossing_lower_bound(15, hw) == 3);
    CHECK(crossing_lower_bound(0, hw) == 0);
    CHECK(crossing_lower_bound(1, m7) == 1);
    CHECK(crossing_lower_bound(7, m7) == 2);
    CHECK(crossing_lower_bound(-12, m7) == 2);
    CHECK_THROWS_AS(crossing_lower_bound(5, zero_table(sec5.graph, "z")), DomainError);
}

TEST_CASE("parity of the heptad count") {
    CHECK(k7_count_parity(7) == 1);
    CHECK(k7_count_parity(15) == 1);
    CHECK(k7_count_parity(23) == 1);
    CHECK(k7_count_parity(11) == 0);
    CHECK(k7_count_parity(19) == 0);
    CHECK_THROWS_AS(k7_count_parity(5), DomainError);
    CHECK_THROWS_AS(k7_count_parity(6), DomainError);
    CHECK_THROWS_AS(k7_count_parity(8), DomainError);
}

TEST_CASE("table symmetry under automorphisms") {
    auto m5 = build_family("Mobius", 5);
    EpsilonTable t = builtin_epsilon("mobius", 5);
    auto auts = automorphisms(*m5);
    REQUIRE(auts.size() == 20);
    for (const auto& a : auts) CHECK(epsilon_invariant(t, a));

    // Breaking one entry breaks invariance under a rim rotation.
    const int u1 = m5->vertex_index("u1"), u2 = m5->vertex_index("u2"),
              u3 = m5->vertex_index("u3");
    const Automorphism* rot = nullptr;
    for (const auto& a : auts)
        if (a.vperm[u1] == u2 && a.vperm[u2] == u3) rot = &a;
    REQUIRE(rot != nullptr);
    EpsilonTable bent = t;
    bent.vals[m5->pair_index("x1", "x3")] += 1;
    CHECK_FALSE(epsilon_invariant(bent, *rot));
}

TEST_CASE("even-ladder certificates compare the invariant with its mirror") {
    Diagram d = catalog_entry("mobius-even").build({2, 0});
    ChiralityCertificate c = certify_chirality(d, nullptr);
    CHECK(c.graph == "M4");
    CHECK(c.verdict == "chiral-embedding");
    CHECK(c.value == 4);
    CHECK_FALSE(c.evidence.empty());

    ChiralityCertificate z = certify_chirality(Diagram::empty(build_family("Mobius", 4)), nullptr);
    CHECK(z.verdict == "inconclusive");
    CHECK(z.value == 0);
}

TEST_CASE("symmetry certificates for the verified families") {
    Diagram k7d = catalog_entry("k7-standard").build({});
    EpsilonTable k7t = builtin_epsilon("k7");
    ChiralityCertificate c = certify_chirality(k7d, &k7t);
    CHECK(c.graph == "K7");
    CHECK(c.verdict == "intrinsically-chiral-hypotheses-verified");
    CHECK(c.value == 35);
    CHECK(c.evidence.size() >= 2);

    Diagram m5d = catalog_entry("mobius-one-crossing").build({2});
    EpsilonTable m5t = builtin_epsilon("mobius", 5);
    ChiralityCertificate cm = certify_chirality(m5d, &m5t);
    CHECK(cm.graph == "M5");
    CHECK(cm.verdict == "intrinsically-chiral-hypotheses-verified");
    CHECK(cm.value == 1);

    Diagram hwd = catalog_entry("heawood-standard").build({});
    EpsilonTable hwt = builtin_epsilon("heawood");
    ChiralityCertificate ch = certify_chirality(hwd, &hwt);
    CHECK(ch.graph == "Heawood");
    CHECK(ch.verdict == "intrinsically-chiral-hypotheses-verified");
    CHECK(ch.value == 49);

    // An even value defeats the parity hypothesis.
    auto k7 = build_family("K7");
    Diagram even = Diagram::empty(k7);
    even.add_crossing(k7->edge_index("z1"), 0, k7->edge_index("z3"), 0, 1);
    even.add_crossing(k7->edge_index("z1"), 16, k7->edge_index("z3"), 16, 1);
    ChiralityCertificate ce = certify_chirality(even, &k7t);
    CHECK(ce.verdict == "inconclusive");
    CHECK(ce.value == 2);

    // No criterion is wired up for other graphs.
    ChiralityCertificate ck5 =
        certify_chirality(testsup::random_diagram(build_family("K5"), 4, 8), nullptr);
    CHECK(ck5.verdict == "inconclusive");

    CHECK_THROWS_AS(certify_chirality(k7d, nullptr), DomainError);
    CHECK_THROWS_AS(certify_chirality(k7d, &m5t), DomainError);
}

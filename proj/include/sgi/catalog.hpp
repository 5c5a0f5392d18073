// A named catalog of parametric diagrams with known reduced values: the
// standard K7 and Heawood diagrams, twisted ladder and K6 families, and the
// two-triangle Hopf diagrams.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sgi/diagram.hpp"
#include "sgi/epsilon.hpp"

namespace sgi {

struct CatalogEntry {
    std::string name;
    std::vector<std::string> params;  // integer parameters, in order
    std::string formula;              // expected value in those parameters
    bool uses_t = false;              // value measured by the rung-surgery invariant
    std::function<Diagram(const std::vector<long long>&)> build;
    std::function<long long(const std::vector<long long>&)> expected;
    // Reduction table the expected value refers to; unset when uses_t.
    std::function<EpsilonTable(const std::vector<long long>&)> table;
};

const std::vector<CatalogEntry>& catalog_entries();

// DomainError for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace sgi

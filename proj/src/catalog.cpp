// The built-in diagram catalog and its expected-value formulas.
#include "sgi/catalog.hpp"

#include <cstdlib>

#include "sgi/families.hpp"

namespace sgi {

namespace {

int cyc(long long k, int m) {  // 1-based wraparound
    long long r = k % m;
    if (r <= 0) r += m;
    return static_cast<int>(r);
}

void need(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

// Stacks crossings with fresh ascending positions per edge.
struct Builder {
    Diagram d;
    std::vector<long long> cnt;

    explicit Builder(GraphPtr g) : d(Diagram::empty(g)), cnt(g->edge_count(), 0) {}

    void cross(const std::string& over, const std::string& under, int sign,
               long long times = 1) {
        int oe = d.graph->edge_index_checked(over);
        int ue = d.graph->edge_index_checked(under);
        for (long long t = 0; t < times; ++t) {
            long long op = 16 * cnt[oe]++;
            long long up = 16 * cnt[ue]++;
            d.add_crossing(oe, op, ue, up, sign);
        }
    }
};

std::string lab(char c, long long i) { return std::string(1, c) + std::to_string(i); }

std::vector<CatalogEntry> make_entries() {
    std::vector<CatalogEntry> out;

    out.push_back(CatalogEntry{
        "k7-standard",
        {},
        "35",
        false,
        [](const std::vector<long long>&) {
            Builder b(build_family("K7"));
            for (int i = 1; i <= 7; ++i) b.cross(lab('z', i), lab('z', cyc(i + 1, 7)), 1);
            for (int i = 1; i <= 7; ++i) b.cross(lab('z', i), lab('z', cyc(i + 2, 7)), 1);
            const LabeledGraph& g = *b.d.graph;
            for (int i = 1; i <= 7; ++i)
                for (int j = 1; j <= 7; ++j) {
                    int yi = g.edge_index_checked(lab('y', i));
                    int zj = g.edge_index_checked(lab('z', j));
                    if (!g.edges_adjacent(yi, zj)) b.cross(lab('y', i), lab('z', j), 1);
                }
            return b.d;
        },
        [](const std::vector<long long>&) -> long long { return 35; },
        [](const std::vector<long long>&) { return builtin_epsilon("k7"); }});

    out.push_back(CatalogEntry{
        "heawood-standard",
        {},
        "49",
        false,
        [](const std::vector<long long>&) {
            Builder b(build_family("Heawood"));
            for (int j = 1; j <= 7; ++j) b.cross(lab('y', j), lab('y', cyc(j + 1, 7)), 1);
            for (int j = 1; j <= 7; ++j) b.cross(lab('y', j), lab('y', cyc(j + 2, 7)), 1);
            return b.d;
        },
        [](const std::vector<long long>&) -> long long { return 49; },
        [](const std::vector<long long>&) { return builtin_epsilon("heawood"); }});

    out.push_back(CatalogEntry{
        "mobius-one-crossing",
        {"N"},
        "1",
        false,
        [](const std::vector<long long>& a) {
            need(a[0] >= 2, "mobius-one-crossing needs N >= 2");
            int n = static_cast<int>(2 * a[0] + 1);
            Builder b(build_family("Mobius", n));
            b.cross("x1", lab('x', n + 1), -1);
            return b.d;
        },
        [](const std::vector<long long>&) -> long long { return 1; },
        [](const std::vector<long long>& a) {
            return builtin_epsilon("mobius", static_cast<int>(2 * a[0] + 1));
        }});

    out.push_back(CatalogEntry{
        "mobius-odd",
        {"N", "k", "s"},
        "-s*(2k+1)",
        false,
        [](const std::vector<long long>& a) {
            need(a[0] >= 2, "mobius-odd needs N >= 2");
            need(a[1] >= 0, "mobius-odd needs k >= 0");
            need(a[2] == 1 || a[2] == -1, "mobius-odd needs s in {+1,-1}");
            int n = static_cast<int>(2 * a[0] + 1);
            Builder b(build_family("Mobius", n));
            b.cross("x1", lab('x', n + 1), static_cast<int>(a[2]), 2 * a[1] + 1);
            return b.d;
        },
        [](const std::vector<long long>& a) -> long long { return -a[2] * (2 * a[1] + 1); },
        [](const std::vector<long long>& a) {
            return builtin_epsilon("mobius", static_cast<int>(2 * a[0] + 1));
        }});

    out.push_back(CatalogEntry{
        "mobius-even",
        {"N", "m"},
        "2N*(2m+1)",
        true,
        [](const std::vector<long long>& a) {
            need(a[0] >= 2, "mobius-even needs N >= 2");
            need(a[1] >= 0, "mobius-even needs m >= 0");
            int n = static_cast<int>(2 * a[0]);
            Builder b(build_family("Mobius", n));
            b.cross("x1", lab('x', n + 1), 1, 2 * a[1] + 1);
            return b.d;
        },
        [](const std::vector<long long>& a) -> long long {
            return 2 * a[0] * (2 * a[1] + 1);
        },
        nullptr});

    out.push_back(CatalogEntry{
        "k6-twisted",
        {"n"},
        "-(2n+3)",
        false,
        [](const std::vector<long long>& a) {
            need(a[0] >= 0, "k6-twisted needs n >= 0");
            Builder b(build_family("K6"));
            b.cross("y1", "y4", 1, 2 * a[0] + 1);
            b.cross("x3", "z2", 1);
            b.cross("y3", "y6", 1);
            return b.d;
        },
        [](const std::vector<long long>& a) -> long long { return -(2 * a[0] + 3); },
        [](const std::vector<long long>&) { return builtin_epsilon("k6-sec5"); }});

    out.push_back(CatalogEntry{
        "heawood-twisted",
        {"k", "m", "n"},
        "10*(k+m+n)+15",
        false,
        [](const std::vector<long long>& a) {
            need(a[0] >= 0 && a[1] >= 0 && a[2] >= 0,
                 "heawood-twisted needs k, m, n >= 0");
            Builder b(build_family("Heawood"));
            b.cross("x1", "x8", 1, 2 * a[0] + 1);
            b.cross("x3", "x10", 1, 2 * a[1] + 1);
            b.cross("x5", "x12", 1, 2 * a[2] + 1);
            return b.d;
        },
        [](const std::vector<long long>& a) -> long long {
            return 10 * (a[0] + a[1] + a[2]) + 15;
        },
        [](const std::vector<long long>&) { return builtin_epsilon("heawood"); }});

    out.push_back(CatalogEntry{
        "hopf-2k3",
        {"c"},
        "2c",
        false,
        [](const std::vector<long long>& a) {
            Builder b(build_family("2K3"));
            if (a[0] != 0) b.cross("e1", "d1", a[0] > 0 ? 1 : -1, 2 * std::llabs(a[0]));
            return b.d;
        },
        [](const std::vector<long long>& a) -> long long { return 2 * a[0]; },
        [](const std::vector<long long>&) { return builtin_epsilon("2k3"); }});

    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = make_entries();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : catalog_entries())
        if (e.name == name) return e;
    throw DomainError("no catalog entry named " + name);
}

}  // namespace sgi

// Crossing diagrams: text round-trips, validation, mirroring, pairwise
// linking, cycle linking numbers, and restriction along rung surgery.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "sgi/epsilon.hpp"
#include "sgi/families.hpp"
#include "sgi/io.hpp"
#include "support.hpp"

using namespace sgi;

TEST_CASE("graph text round-trips byte for byte") {
    auto g = build_family("2K3");
    std::string text = serialize_graph(*g);
    GraphPtr back = parse_graph_text(text);
    CHECK(back->same_structure(*g));
    CHECK(back->name() == g->name());
    CHECK(serialize_graph(*back) == text);

    // Comments and blank lines are tolerated.
    GraphPtr small = parse_graph_text("# demo\ngraph T\n\nvertex a\nvertex b\nedge e a b\n");
    CHECK(small->edge_count() == 1);

    CHECK_THROWS_AS(parse_graph_text(""), DomainError);
    CHECK_THROWS_AS(parse_graph_text("vertex a\n"), DomainError);
    CHECK_THROWS_AS(parse_graph_text("graph T\nvertex a\nvertex a\n"), DomainError);
    CHECK_THROWS_AS(parse_graph_text("graph T\nwhat a\n"), DomainError);
    CHECK_THROWS_AS(parse_graph_text("graph T\ngraph U\n"), DomainError);
}

TEST_CASE("diagram text round-trips with an inline graph") {
    auto g = build_family("K5");
    Diagram d = testsup::random_diagram(g, 12, 77);
    std::string text = serialize_diagram(d);
    Diagram back = parse_diagram_text(text, "");
    REQUIRE(back.crossings.size() == d.crossings.size());
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        CHECK(back.crossings[i].over_edge == d.crossings[i].over_edge);
        CHECK(back.crossings[i].over_pos == d.crossings[i].over_pos);
        CHECK(back.crossings[i].under_edge == d.crossings[i].under_edge);
        CHECK(back.crossings[i].under_pos == d.crossings[i].under_pos);
        CHECK(back.crossings[i].sign == d.crossings[i].sign);
    }
    CHECK(serialize_diagram(back) == text);
}

TEST_CASE("diagram text can reference a graph file") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "sgi-io-test";
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "k5.sg");
        out << serialize_graph(*build_family("K5"));
    }
    Diagram d = parse_diagram_text("use k5.sg\ncrossing e1 0 e3 0 1\n", dir.string());
    CHECK(d.graph->name() == "K5");
    REQUIRE(d.crossings.size() == 1);
    CHECK(d.crossings[0].sign == 1);

    CHECK_THROWS_AS(parse_diagram_text("use k5.sg\ngraph T\nvertex a\n", dir.string()),
                    DomainError);
    CHECK_THROWS_AS(parse_diagram_text("crossing e1 0 e3 0 1\n", dir.string()), DomainError);
    CHECK_THROWS_AS(
        parse_diagram_text("use k5.sg\ncrossing e1 0 e3 0 2\n", dir.string()), DomainError);
    CHECK_THROWS_AS(parse_diagram_text("use k5.sg\ncrossing e1 0 zz 0 1\n", dir.string()),
                    DomainError);
    CHECK_THROWS_AS(parse_diagram_text("use k5.sg\ncrossing e1 0 e3 1\n", dir.string()),
                    DomainError);
    fs::remove_all(dir);
}

TEST_CASE("pair-table text round-trips and rejects bad lines") {
    auto g = build_family("K6");
    EpsilonTable t = builtin_epsilon("k6-ex27");
    std::string text = serialize_epsilon(t);
    EpsilonTable back = parse_epsilon_text(text, g);
    CHECK(back.vals == t.vals);
    CHECK(serialize_epsilon(back) == text);

    auto k5 = build_family("K5");
    EpsilonTable sparse = parse_epsilon_text("epsilon K5\ne1 e3 4\n", k5);
    CHECK(sparse.value("e1", "e3") == 4);
    CHECK(sparse.value("e1", "e4") == 0);

    CHECK_THROWS_AS(parse_epsilon_text("", k5), DomainError);
    CHECK_THROWS_AS(parse_epsilon_text("epsilon K33\n", k5), DomainError);
    CHECK_THROWS_AS(parse_epsilon_text("epsilon K5\ne1 e2 1\n", k5), DomainError);
    CHECK_THROWS_AS(parse_epsilon_text("epsilon K5\ne1 zz 1\n", k5), DomainError);
    CHECK_THROWS_AS(parse_epsilon_text("epsilon K5\ne1 e3 1\ne3 e1 2\n", k5), DomainError);
    CHECK_THROWS_AS(parse_epsilon_text("epsilon K5\ne1 e3 x\n", k5), DomainError);
}

TEST_CASE("diagram validation catches malformed data") {
    auto g = build_family("K5");
    Diagram d = testsup::random_diagram(g, 8, 3);
    d.validate();

    Diagram bad = d;
    bad.crossings[0].sign = 2;
    CHECK_THROWS_AS(bad.validate(), DomainError);

    bad = d;
    bad.crossings[0].over_edge = 99;
    CHECK_THROWS_AS(bad.validate(), DomainError);

    bad = d;
    bad.crossings.push_back(bad.crossings[0]);  // duplicate id and positions
    CHECK_THROWS_AS(bad.validate(), DomainError);

    bad = d;
    bad.crossings[1].id = bad.crossings[0].id;
    CHECK_THROWS_AS(bad.validate(), DomainError);

    // Two sides of different crossings on one edge at the same position.
    Diagram e = Diagram::empty(g);
    e.add_crossing(g->edge_index("e1"), 5, g->edge_index("e3"), 0, 1);
    e.add_crossing(g->edge_index("e1"), 5, g->edge_index("e4"), 0, 1);
    CHECK_THROWS_AS(e.validate(), DomainError);
}

TEST_CASE("strands come back sorted by position") {
    auto g = build_family("K5");
    Diagram d = Diagram::empty(g);
    const int e1 = g->edge_index("e1"), e3 = g->edge_index("e3"), e4 = g->edge_index("e4");
    int a = d.add_crossing(e1, 32, e3, 0, 1);
    int b = d.add_crossing(e4, 7, e1, 16, -1);
    auto s = d.strand(e1);
    REQUIRE(s.size() == 2);
    CHECK(s[0].pos == 16);
    CHECK(s[0].cidx == d.find_index(b));
    CHECK_FALSE(s[0].is_over);
    CHECK(s[1].pos == 32);
    CHECK(s[1].cidx == d.find_index(a));
    CHECK(s[1].is_over);
    CHECK(d.strand(g->edge_index("e2")).empty());

    d.remove_id(a);
    CHECK(d.strand(e1).size() == 1);
    CHECK_THROWS_AS(d.remove_id(a), DomainError);
    CHECK_THROWS_AS(d.by_id(a), DomainError);
    CHECK(d.by_id(b).sign == -1);
}

TEST_CASE("mirroring swaps strands and negates the linking vector") {
    auto g = build_family("K6");
    Diagram d = testsup::random_diagram(g, 20, 11);
    Diagram m = mirror_diagram(d);
    REQUIRE(m.crossings.size() == d.crossings.size());
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        CHECK(m.crossings[i].over_edge == d.crossings[i].under_edge);
        CHECK(m.crossings[i].under_edge == d.crossings[i].over_edge);
        CHECK(m.crossings[i].sign == -d.crossings[i].sign);
    }
    Vec v = pairwise_linking(d), w = pairwise_linking(m);
    REQUIRE(v.size() == w.size());
    for (size_t k = 0; k < v.size(); ++k) CHECK(w[k] == -v[k]);

    // Mirroring twice restores the original exactly.
    Diagram mm = mirror_diagram(m);
    CHECK(serialize_diagram(mm) == serialize_diagram(d));
}

TEST_CASE("pairwise linking sums signs over disjoint pairs only") {
    auto g = build_family("K5");
    Diagram d = Diagram::empty(g);
    const int e1 = g->edge_index("e1"), e2 = g->edge_index("e2");
    const int e3 = g->edge_index("e3"), e4 = g->edge_index("e4");
    d.add_crossing(e1, 0, e3, 0, 1);
    d.add_crossing(e3, 16, e1, 16, 1);  // order within the pair is irrelevant
    d.add_crossing(e1, 32, e4, 0, -1);
    d.add_crossing(e1, 48, e2, 0, 1);   // shares a vertex: no pair to count
    d.add_crossing(e2, 16, e2, 32, 1);  // self-crossing: likewise
    d.validate();
    Vec v = pairwise_linking(d);
    for (int k = 0; k < g->pair_count(); ++k) {
        if (k == g->pair_index(e1, e3))
            CHECK(v[k] == 2);
        else if (k == g->pair_index(e1, e4))
            CHECK(v[k] == -1);
        else
            CHECK(v[k] == 0);
    }
}

TEST_CASE("linking number of the two triangles") {
    auto g = build_family("2K3");
    const std::vector<std::string> ca = {"e1", "e2", "e3"}, cb = {"d1", "d2", "d3"};
    const int e1 = g->edge_index("e1"), d1 = g->edge_index("d1");

    auto hopf = [&](int half_twists, int sign) {
        Diagram d = Diagram::empty(g);
        for (int i = 0; i < half_twists; ++i)
            d.add_crossing(e1, 16 * i, d1, 16 * i, sign);
        return d;
    };
    CHECK(linking_number(hopf(2, 1), ca, cb) == 1);
    CHECK(linking_number(hopf(2, 1), cb, ca) == 1);
    CHECK(linking_number(hopf(4, -1), ca, cb) == -2);
    CHECK(linking_number(hopf(6, 1), ca, cb) == 3);
    CHECK(linking_number(hopf(0, 1), ca, cb) == 0);

    CHECK_THROWS_AS(linking_number(hopf(1, 1), ca, cb), DomainError);  // odd count
    CHECK_THROWS_AS(linking_number(hopf(2, 1), {"e1", "e2"}, cb), DomainError);
    CHECK_THROWS_AS(linking_number(hopf(2, 1), {"e1", "e1", "e2"}, cb), DomainError);
    CHECK_THROWS_AS(linking_number(hopf(2, 1), {}, cb), DomainError);
    CHECK_THROWS_AS(linking_number(hopf(2, 1), ca, ca), DomainError);  // shared vertices
    CHECK_THROWS_AS(
        linking_number(hopf(2, 1), {"e1", "e2", "e3", "d1", "d2", "d3"}, cb), DomainError);
}

TEST_CASE("restriction along rung surgery of the 4-rung ladder") {
    auto m4 = build_family("Mobius", 4);
    EpsilonTable m3t = m3_inherited_table();

    // One positive crossing on the opposite rim pair; every rung's surgery
    // sends it to a child crossing contributing exactly +1 against the
    // inherited table.
    for (int r = 1; r <= 4; ++r) {
        CAPTURE(r);
        Diagram d = Diagram::empty(m4);
        d.add_crossing(m4->edge_index("x1"), 0, m4->edge_index("x5"), 0, 1);
        RungSurgery s = delete_rung_and_smooth(m4, "y" + std::to_string(r));
        Diagram child = restrict_diagram(d, s.merge);
        REQUIRE(child.crossings.size() == 1);
        const Crossing& c = child.crossings[0];
        long long v = m3t.vals[s.child->pair_index(c.over_edge, c.under_edge)];
        CHECK(c.sign * v == 1);
    }

    // Surgery at the first rung in detail: the crossing lands on the merged
    // rim pair with a flipped sign.
    Diagram d = Diagram::empty(m4);
    d.add_crossing(m4->edge_index("x1"), 0, m4->edge_index("x5"), 0, 1);
    RungSurgery s = delete_rung_and_smooth(m4, "y1");
    Diagram child = restrict_diagram(d, s.merge);
    REQUIRE(child.crossings.size() == 1);
    CHECK(child.crossings[0].over_edge == s.child->edge_index("x6"));
    CHECK(child.crossings[0].under_edge == s.child->edge_index("x3"));
    CHECK(child.crossings[0].sign == -1);
    CHECK(m3t.value("x6", "x3") == -1);

    // Crossings on the deleted rung are dropped.
    Diagram e = Diagram::empty(m4);
    e.add_crossing(m4->edge_index("x1"), 0, m4->edge_index("x5"), 0, 1);
    e.add_crossing(m4->edge_index("y1"), 0, m4->edge_index("y3"), 0, 1);
    Diagram ce = restrict_diagram(e, s.merge);
    CHECK(ce.crossings.size() == 1);

    // A crossing on the other merged rim edge joins the same child pair and
    // keeps its place in the strand order.
    Diagram f = Diagram::empty(m4);
    f.add_crossing(m4->edge_index("x1"), 0, m4->edge_index("x5"), 0, 1);
    f.add_crossing(m4->edge_index("x8"), 0, m4->edge_index("x4"), 0, -1);
    Diagram cf = restrict_diagram(f, s.merge);
    REQUIRE(cf.crossings.size() == 2);
    auto strand6 = cf.strand(s.child->edge_index("x6"));
    REQUIRE(strand6.size() == 2);
    // Host x1 sits earlier on the merged child edge than host x8.
    CHECK(cf.crossings[strand6[0].cidx].under_edge == s.child->edge_index("x3"));
    CHECK(cf.crossings[strand6[0].cidx].over_edge == s.child->edge_index("x6"));
    CHECK(cf.crossings[strand6[0].cidx].sign == -1);

    CHECK_THROWS_AS(restrict_diagram(testsup::random_diagram(build_family("K5"), 2, 1), s.merge),
                    DomainError);
}

TEST_CASE("restriction along rung surgery of the 6-rung ladder") {
    auto m6 = build_family("Mobius", 6);
    EpsilonTable m5t = builtin_epsilon("mobius", 5);
    Diagram d = Diagram::empty(m6);
    d.add_crossing(m6->edge_index("x1"), 0, m6->edge_index("x7"), 0, 1);
    RungSurgery s = delete_rung_and_smooth(m6, "y1");
    Diagram child = restrict_diagram(d, s.merge);
    REQUIRE(child.crossings.size() == 1);
    CHECK(child.crossings[0].over_edge == s.child->edge_index("x10"));
    CHECK(child.crossings[0].under_edge == s.child->edge_index("x5"));
    CHECK(child.crossings[0].sign == -1);
    CHECK(m5t.value("x10", "x5") == -1);
}

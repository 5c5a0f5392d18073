// Move application, applicability search, seeded random walks, and replay.
#include "sgi/moves.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace sgi {

const char* kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::R1Insert: return "r1-insert";
        case MoveKind::R1Delete: return "r1-delete";
        case MoveKind::R2Insert: return "r2-insert";
        case MoveKind::R2Delete: return "r2-delete";
        case MoveKind::R3: return "r3";
        case MoveKind::TwistInsert: return "vtwist-insert";
        case MoveKind::TwistDelete: return "vtwist-delete";
        case MoveKind::SlideInsert: return "vslide-insert";
        case MoveKind::SlideDelete: return "vslide-delete";
        default: return "crossing-change";
    }
}

std::string move_to_string(const Move& m) {
    std::string s = kind_name(m.kind);
    for (const auto& a : m.args) s += " " + a;
    return s;
}

Move parse_move(const std::string& line) {
    std::istringstream in(line);
    std::string kind;
    if (!(in >> kind)) throw DomainError("empty move line");
    Move m;
    bool found = false;
    for (MoveKind k :
         {MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert, MoveKind::R2Delete,
          MoveKind::R3, MoveKind::TwistInsert, MoveKind::TwistDelete, MoveKind::SlideInsert,
          MoveKind::SlideDelete, MoveKind::CrossingChange}) {
        if (kind == kind_name(k)) {
            m.kind = k;
            found = true;
            break;
        }
    }
    if (!found) throw DomainError("unknown move kind: " + kind);
    std::string a;
    while (in >> a) m.args.push_back(a);
    return m;
}

unsigned long long WalkRng::uniform(unsigned long long n) {
    if (n == 0) throw DomainError("draw from an empty range");
    unsigned long long rem = (std::numeric_limits<unsigned long long>::max() % n + 1) % n;
    if (rem == 0) return eng_() % n;
    unsigned long long bound = 0ULL - rem;
    for (;;) {
        unsigned long long x = eng_();
        if (x < bound) return x % n;
    }
}

namespace {

long long arg_int(const Move& m, size_t i, const std::string& what) {
    if (i >= m.args.size()) throw DomainError("move is missing its " + what);
    try {
        size_t used = 0;
        long long v = std::stoll(m.args[i], &used);
        if (used != m.args[i].size()) throw std::invalid_argument(m.args[i]);
        return v;
    } catch (const std::exception&) {
        throw DomainError("bad " + what + ": " + m.args[i]);
    }
}

int arg_edge(const Diagram& d, const Move& m, size_t i) {
    if (i >= m.args.size()) throw DomainError("move is missing an edge label");
    return d.graph->edge_index_checked(m.args[i]);
}

int arg_vertex(const Diagram& d, const Move& m, size_t i) {
    if (i >= m.args.size()) throw DomainError("move is missing a vertex id");
    int v = d.graph->vertex_index(m.args[i]);
    if (v < 0) throw DomainError("unknown vertex id: " + m.args[i]);
    return v;
}

int arg_sign(const Move& m, size_t i) {
    long long s = arg_int(m, i, "sign");
    if (s != 1 && s != -1) throw DomainError("sign must be +1 or -1");
    return static_cast<int>(s);
}

void set_side_pos(Diagram& d, const StrandSide& s, long long pos) {
    if (s.is_over)
        d.crossings[s.cidx].over_pos = pos;
    else
        d.crossings[s.cidx].under_pos = pos;
}

// k fresh ascending positions inside the given gap of the edge's strand,
// renumbering the edge's sides (order preserved) when the gap is too tight.
std::vector<long long> slot_positions(Diagram& d, int edge, int slot, int k) {
    auto sides = d.strand(edge);
    const int len = static_cast<int>(sides.size());
    if (slot < 0 || slot > len)
        throw DomainError("slot " + std::to_string(slot) + " out of range on edge " +
                          d.graph->edge(edge).label);
    std::vector<long long> out;
    if (len == 0) {
        for (int t = 0; t < k; ++t) out.push_back(16LL * t);
        return out;
    }
    if (slot == 0) {
        long long hi = sides.front().pos;
        for (int t = k; t >= 1; --t) out.push_back(hi - 16LL * t);
        return out;
    }
    if (slot == len) {
        long long lo = sides.back().pos;
        for (int t = 1; t <= k; ++t) out.push_back(lo + 16LL * t);
        return out;
    }
    long long lo = sides[slot - 1].pos;
    long long hi = sides[slot].pos;
    if (hi - lo < k + 1) {
        long long spacing = 16LL * (k + 1);
        for (int t = 0; t < len; ++t) set_side_pos(d, sides[t], spacing * t);
        sides = d.strand(edge);
        lo = sides[slot - 1].pos;
        hi = sides[slot].pos;
    }
    long long step = (hi - lo) / (k + 1);
    for (int t = 1; t <= k; ++t) out.push_back(lo + step * t);
    return out;
}

int side_index(const std::vector<StrandSide>& strand, int cidx, bool over) {
    for (size_t i = 0; i < strand.size(); ++i)
        if (strand[i].cidx == cidx && strand[i].is_over == over) return static_cast<int>(i);
    return -1;
}

// ----- R1 -----

void do_r1_insert(Diagram& d, int edge, int slot, int sign, bool over_first) {
    auto ps = slot_positions(d, edge, slot, 2);
    if (over_first)
        d.add_crossing(edge, ps[0], edge, ps[1], sign);
    else
        d.add_crossing(edge, ps[1], edge, ps[0], sign);
}

bool can_r1_delete(const Diagram& d, int cidx) {
    const Crossing& c = d.crossings[cidx];
    if (c.over_edge != c.under_edge) return false;
    auto strand = d.strand(c.over_edge);
    int a = side_index(strand, cidx, true);
    int b = side_index(strand, cidx, false);
    return std::abs(a - b) == 1;
}

// ----- R2 -----

void do_r2_insert(Diagram& d, int ea, int sa, int eb, int sb, bool a_over, int sign) {
    if (ea == eb) throw DomainError("poke insertion needs two distinct edges");
    auto ps = slot_positions(d, ea, sa, 2);
    auto qs = slot_positions(d, eb, sb, 2);
    if (a_over) {
        d.add_crossing(ea, ps[0], eb, qs[0], sign);
        d.add_crossing(ea, ps[1], eb, qs[1], -sign);
    } else {
        d.add_crossing(eb, qs[0], ea, ps[0], sign);
        d.add_crossing(eb, qs[1], ea, ps[1], -sign);
    }
}

bool can_r2_delete(const Diagram& d, int i1, int i2) {
    if (i1 == i2) return false;
    const Crossing& c1 = d.crossings[i1];
    const Crossing& c2 = d.crossings[i2];
    if (c1.over_edge != c2.over_edge || c1.under_edge != c2.under_edge) return false;
    if (c1.sign != -c2.sign) return false;
    auto so = d.strand(c1.over_edge);
    int a = side_index(so, i1, true);
    int b = side_index(so, i2, true);
    if (std::abs(a - b) != 1) return false;
    auto su = d.strand(c1.under_edge);
    a = side_index(su, i1, false);
    b = side_index(su, i2, false);
    return std::abs(a - b) == 1;
}

// ----- R3 -----

std::vector<int> triple_edges(const Diagram& d, const std::array<int, 3>& cidx) {
    std::set<int> es;
    for (int i : cidx) {
        es.insert(d.crossings[i].over_edge);
        es.insert(d.crossings[i].under_edge);
    }
    return {es.begin(), es.end()};
}

bool check_r3(const Diagram& d, const std::array<int, 3>& cidx) {
    if (cidx[0] == cidx[1] || cidx[0] == cidx[2] || cidx[1] == cidx[2]) return false;
    bool has_pair = false;
    for (int e : triple_edges(d, cidx)) {
        auto strand = d.strand(e);
        std::vector<int> group;
        for (size_t t = 0; t < strand.size(); ++t)
            if (strand[t].cidx == cidx[0] || strand[t].cidx == cidx[1] ||
                strand[t].cidx == cidx[2])
                group.push_back(static_cast<int>(t));
        if (group.empty()) continue;
        if (group.back() - group.front() + 1 != static_cast<int>(group.size())) return false;
        if (group.size() >= 2) has_pair = true;
    }
    return has_pair;
}

void do_r3(Diagram& d, const std::array<int, 3>& cidx) {
    if (!check_r3(d, cidx))
        throw DomainError("triangle slide does not apply to these three crossings");
    for (int e : triple_edges(d, cidx)) {
        auto strand = d.strand(e);
        std::vector<int> group;
        for (size_t t = 0; t < strand.size(); ++t)
            if (strand[t].cidx == cidx[0] || strand[t].cidx == cidx[1] ||
                strand[t].cidx == cidx[2])
                group.push_back(static_cast<int>(t));
        std::vector<long long> pos;
        for (int t : group) pos.push_back(strand[t].pos);
        for (size_t t = 0; t < group.size(); ++t)
            set_side_pos(d, strand[group[t]], pos[group.size() - 1 - t]);
    }
}

// ----- vertex twist -----

std::vector<int> incident_edges(const LabeledGraph& g, int v) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.incident(e, v)) out.push_back(e);
    return out;
}

int v_end_slot(const Diagram& d, int edge, int v) {
    if (d.graph->edge(edge).tail == v) return 0;
    return static_cast<int>(d.strand(edge).size());
}

void do_twist_insert(Diagram& d, int v, int sign) {
    auto inc = incident_edges(*d.graph, v);
    const int deg = static_cast<int>(inc.size());
    if (deg < 2) throw DomainError("vertex twist needs degree at least 2");
    std::vector<std::vector<long long>> pos(deg);
    for (int i = 0; i < deg; ++i)
        pos[i] = slot_positions(d, inc[i], v_end_slot(d, inc[i], v), deg - 1);
    for (int i = 0; i < deg; ++i)
        for (int j = i + 1; j < deg; ++j) {
            long long pi = pos[i][j - 1];  // rank of j among partners of i
            long long pj = pos[j][i];      // rank of i among partners of j
            d.add_crossing(inc[i], pi, inc[j], pj, sign);
        }
}

// The candidate block: on every incident edge, the deg-1 sides nearest the
// vertex must pair the incident edges exactly once each, with one sign.
bool find_twist_block(const Diagram& d, int v, std::vector<int>* ids_out) {
    auto inc = incident_edges(*d.graph, v);
    const int deg = static_cast<int>(inc.size());
    if (deg < 2) return false;
    std::map<int, int> occur;  // cidx -> sides seen in windows
    for (int e : inc) {
        auto strand = d.strand(e);
        if (static_cast<int>(strand.size()) < deg - 1) return false;
        bool from_start = (d.graph->edge(e).tail == v);
        for (int t = 0; t < deg - 1; ++t) {
            const StrandSide& s =
                from_start ? strand[t] : strand[strand.size() - 1 - t];
            occur[s.cidx]++;
        }
    }
    if (static_cast<int>(occur.size()) != deg * (deg - 1) / 2) return false;
    std::set<int> incset(inc.begin(), inc.end());
    std::set<std::pair<int, int>> pairs;
    int sign = 0;
    std::vector<int> ids;
    for (const auto& [cidx, cnt] : occur) {
        if (cnt != 2) return false;
        const Crossing& c = d.crossings[cidx];
        if (c.over_edge == c.under_edge) return false;
        if (!incset.count(c.over_edge) || !incset.count(c.under_edge)) return false;
        if (sign == 0) sign = c.sign;
        if (c.sign != sign) return false;
        pairs.insert({std::min(c.over_edge, c.under_edge), std::max(c.over_edge, c.under_edge)});
        ids.push_back(c.id);
    }
    if (static_cast<int>(pairs.size()) != deg * (deg - 1) / 2) return false;
    if (ids_out) *ids_out = ids;
    return true;
}

// ----- vertex slide -----

void do_slide_insert(Diagram& d, int e, int v, int slot, int s, bool e_over) {
    if (d.graph->incident(e, v)) throw DomainError("slide edge must avoid the vertex");
    auto inc = incident_edges(*d.graph, v);
    const int deg = static_cast<int>(inc.size());
    if (deg == 0) throw DomainError("isolated vertex");
    auto pe = slot_positions(d, e, slot, deg);
    for (int t = 0; t < deg; ++t) {
        int h = inc[t];
        long long ph = slot_positions(d, h, v_end_slot(d, h, v), 1)[0];
        int sign = s * (d.graph->edge(h).tail == v ? 1 : -1);
        if (e_over)
            d.add_crossing(e, pe[t], h, ph, sign);
        else
            d.add_crossing(h, ph, e, pe[t], sign);
    }
}

// A deletable slide block: deg(v) consecutive sides on `e` whose crossings
// hit each incident edge once at its near-vertex side, with one handedness
// and one over/under role.
bool find_slide_block(const Diagram& d, int e, int v, std::vector<int>* ids_out) {
    if (d.graph->incident(e, v)) return false;
    auto inc = incident_edges(*d.graph, v);
    const int deg = static_cast<int>(inc.size());
    if (deg == 0) return false;
    std::set<int> incset(inc.begin(), inc.end());
    auto se = d.strand(e);
    if (static_cast<int>(se.size()) < deg) return false;
    for (size_t w = 0; w + deg <= se.size(); ++w) {
        std::set<int> seen_edges;
        std::vector<int> ids;
        int role = -1;  // 1: e over, 0: e under
        int s = 0;
        bool ok = true;
        for (int t = 0; t < deg && ok; ++t) {
            const StrandSide& side = se[w + t];
            const Crossing& c = d.crossings[side.cidx];
            int other = side.is_over ? c.under_edge : c.over_edge;
            int r = side.is_over ? 1 : 0;
            if (role < 0) role = r;
            if (r != role || !incset.count(other) || !seen_edges.insert(other).second) {
                ok = false;
                break;
            }
            auto sh = d.strand(other);
            bool from_start = (d.graph->edge(other).tail == v);
            const StrandSide& near =
                from_start ? sh.front() : sh.back();
            if (near.cidx != side.cidx || near.is_over == side.is_over) {
                ok = false;
                break;
            }
            int want = (d.graph->edge(other).tail == v) ? 1 : -1;
            int s_here = c.sign * want;  // c.sign == s * want  =>  s = c.sign * want
            if (s == 0) s = s_here;
            if (s_here != s) ok = false;
            ids.push_back(c.id);
        }
        if (ok && static_cast<int>(seen_edges.size()) == deg) {
            if (ids_out) *ids_out = ids;
            return true;
        }
    }
    return false;
}

}  // namespace

void apply_move(Diagram& d, const Move& m) {
    switch (m.kind) {
        case MoveKind::R1Insert: {
            int e = arg_edge(d, m, 0);
            int slot = static_cast<int>(arg_int(m, 1, "slot"));
            int sign = arg_sign(m, 2);
            if (m.args.size() < 4 || (m.args[3] != "over-first" && m.args[3] != "under-first"))
                throw DomainError("kink insertion needs over-first or under-first");
            do_r1_insert(d, e, slot, sign, m.args[3] == "over-first");
            return;
        }
        case MoveKind::R1Delete: {
            int id = static_cast<int>(arg_int(m, 0, "crossing id"));
            int ci = d.find_index(id);
            if (ci < 0 || !can_r1_delete(d, ci))
                throw DomainError("kink deletion does not apply to crossing " +
                                  std::to_string(id));
            d.remove_id(id);
            return;
        }
        case MoveKind::R2Insert: {
            int ea = arg_edge(d, m, 0);
            int sa = static_cast<int>(arg_int(m, 1, "slot"));
            int eb = arg_edge(d, m, 2);
            int sb = static_cast<int>(arg_int(m, 3, "slot"));
            if (m.args.size() < 5 || (m.args[4] != "a-over" && m.args[4] != "b-over"))
                throw DomainError("poke insertion needs a-over or b-over");
            int sign = arg_sign(m, 5);
            do_r2_insert(d, ea, sa, eb, sb, m.args[4] == "a-over", sign);
            return;
        }
        case MoveKind::R2Delete: {
            int id1 = static_cast<int>(arg_int(m, 0, "crossing id"));
            int id2 = static_cast<int>(arg_int(m, 1, "crossing id"));
            int i1 = d.find_index(id1);
            int i2 = d.find_index(id2);
            if (i1 < 0 || i2 < 0 || !can_r2_delete(d, i1, i2))
                throw DomainError("poke deletion does not apply to crossings " +
                                  std::to_string(id1) + ", " + std::to_string(id2));
            d.remove_id(id1);
            d.remove_id(id2);
            return;
        }
        case MoveKind::R3: {
            std::array<int, 3> ci;
            for (int t = 0; t < 3; ++t) {
                int id = static_cast<int>(arg_int(m, t, "crossing id"));
                ci[t] = d.find_index(id);
                if (ci[t] < 0)
                    throw DomainError("no crossing with id " + std::to_string(id));
            }
            do_r3(d, ci);
            return;
        }
        case MoveKind::TwistInsert: {
            int v = arg_vertex(d, m, 0);
            int sign = arg_sign(m, 1);
            do_twist_insert(d, v, sign);
            return;
        }
        case MoveKind::TwistDelete: {
            int v = arg_vertex(d, m, 0);
            std::vector<int> ids;
            if (!find_twist_block(d, v, &ids))
                throw DomainError("no removable twist block at vertex " + m.args[0]);
            for (int id : ids) d.remove_id(id);
            return;
        }
        case MoveKind::SlideInsert: {
            int e = arg_edge(d, m, 0);
            int v = arg_vertex(d, m, 1);
            int slot = static_cast<int>(arg_int(m, 2, "slot"));
            int sign = arg_sign(m, 3);
            if (m.args.size() < 5 || (m.args[4] != "over" && m.args[4] != "under"))
                throw DomainError("slide insertion needs over or under");
            do_slide_insert(d, e, v, slot, sign, m.args[4] == "over");
            return;
        }
        case MoveKind::SlideDelete: {
            int e = arg_edge(d, m, 0);
            int v = arg_vertex(d, m, 1);
            std::vector<int> ids;
            if (!find_slide_block(d, e, v, &ids))
                throw DomainError("no removable slide block for edge " + m.args[0] +
                                  " at vertex " + m.args[1]);
            for (int id : ids) d.remove_id(id);
            return;
        }
        case MoveKind::CrossingChange: {
            int id = static_cast<int>(arg_int(m, 0, "crossing id"));
            int i = d.find_index(id);
            if (i < 0) throw DomainError("no crossing with id " + std::to_string(id));
            Crossing& c = d.crossings[i];
            std::swap(c.over_edge, c.under_edge);
            std::swap(c.over_pos, c.under_pos);
            c.sign = -c.sign;
            return;
        }
    }
    throw DomainError("unhandled move kind");
}

namespace {

std::string istr(long long v) { return std::to_string(v); }

// Countable tuple spaces share the layout: per block, slot * 4 + s * 2 + r.
bool pick_r1_insert(Diagram& d, WalkRng& rng, Move* out) {
    const LabeledGraph& g = *d.graph;
    unsigned long long total = 0;
    std::vector<unsigned long long> per(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        per[e] = (d.strand(e).size() + 1) * 4ULL;
        total += per[e];
    }
    if (total == 0) return false;
    unsigned long long idx = rng.uniform(total);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (idx >= per[e]) {
            idx -= per[e];
            continue;
        }
        int slot = static_cast<int>(idx / 4);
        int s = (idx % 4) / 2 == 0 ? 1 : -1;
        bool over_first = (idx % 2) == 0;
        *out = Move{MoveKind::R1Insert,
                    {g.edge(e).label, istr(slot), istr(s),
                     over_first ? "over-first" : "under-first"}};
        return true;
    }
    return false;
}

bool pick_r2_insert(Diagram& d, WalkRng& rng, Move* out) {
    const LabeledGraph& g = *d.graph;
    const int E = g.edge_count();
    std::vector<unsigned long long> len(E);
    for (int e = 0; e < E; ++e) len[e] = d.strand(e).size();
    unsigned long long total = 0;
    for (int a = 0; a < E; ++a)
        for (int b = a + 1; b < E; ++b) total += (len[a] + 1) * (len[b] + 1) * 4ULL;
    if (total == 0) return false;
    unsigned long long idx = rng.uniform(total);
    for (int a = 0; a < E; ++a)
        for (int b = a + 1; b < E; ++b) {
            unsigned long long block = (len[a] + 1) * (len[b] + 1) * 4ULL;
            if (idx >= block) {
                idx -= block;
                continue;
            }
            unsigned long long sa = idx / ((len[b] + 1) * 4ULL);
            unsigned long long rest = idx % ((len[b] + 1) * 4ULL);
            unsigned long long sb = rest / 4;
            bool a_over = (rest % 4) / 2 == 0;
            int s = (rest % 2) == 0 ? 1 : -1;
            *out = Move{MoveKind::R2Insert,
                        {g.edge(a).label, istr(sa), g.edge(b).label, istr(sb),
                         a_over ? "a-over" : "b-over", istr(s)}};
            return true;
        }
    return false;
}

bool pick_slide_insert(Diagram& d, WalkRng& rng, Move* out) {
    const LabeledGraph& g = *d.graph;
    unsigned long long total = 0;
    std::vector<unsigned long long> len(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) len[e] = d.strand(e).size();
    for (int e = 0; e < g.edge_count(); ++e)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!g.incident(e, v)) total += (len[e] + 1) * 4ULL;
    if (total == 0) return false;
    unsigned long long idx = rng.uniform(total);
    for (int e = 0; e < g.edge_count(); ++e)
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.incident(e, v)) continue;
            unsigned long long block = (len[e] + 1) * 4ULL;
            if (idx >= block) {
                idx -= block;
                continue;
            }
            int slot = static_cast<int>(idx / 4);
            int s = (idx % 4) / 2 == 0 ? 1 : -1;
            bool over = (idx % 2) == 0;
            *out = Move{MoveKind::SlideInsert,
                        {g.edge(e).label, g.vertices()[v], istr(slot), istr(s),
                         over ? "over" : "under"}};
            return true;
        }
    return false;
}

bool pick_from(std::vector<Move>& cands, WalkRng& rng, Move* out) {
    if (cands.empty()) return false;
    *out = cands[rng.uniform(cands.size())];
    return true;
}

bool pick_move(Diagram& d, MoveKind k, WalkRng& rng, Move* out) {
    const LabeledGraph& g = *d.graph;
    switch (k) {
        case MoveKind::R1Insert: return pick_r1_insert(d, rng, out);
        case MoveKind::R2Insert: return pick_r2_insert(d, rng, out);
        case MoveKind::SlideInsert: return pick_slide_insert(d, rng, out);
        case MoveKind::R1Delete: {
            std::vector<Move> c;
            for (size_t i = 0; i < d.crossings.size(); ++i)
                if (can_r1_delete(d, static_cast<int>(i)))
                    c.push_back({MoveKind::R1Delete, {istr(d.crossings[i].id)}});
            return pick_from(c, rng, out);
        }
        case MoveKind::R2Delete: {
            std::vector<Move> c;
            std::map<std::pair<int, int>, std::vector<int>> groups;
            for (size_t i = 0; i < d.crossings.size(); ++i)
                groups[{d.crossings[i].over_edge, d.crossings[i].under_edge}].push_back(
                    static_cast<int>(i));
            for (const auto& [key, idxs] : groups)
                for (size_t a = 0; a < idxs.size(); ++a)
                    for (size_t b = a + 1; b < idxs.size(); ++b)
                        if (can_r2_delete(d, idxs[a], idxs[b]))
                            c.push_back({MoveKind::R2Delete,
                                         {istr(d.crossings[idxs[a]].id),
                                          istr(d.crossings[idxs[b]].id)}});
            return pick_from(c, rng, out);
        }
        case MoveKind::R3: {
            // Crossing adjacency through consecutive strand sides.
            std::set<std::pair<int, int>> adj;
            for (int e = 0; e < g.edge_count(); ++e) {
                auto strand = d.strand(e);
                for (size_t t = 0; t + 1 < strand.size(); ++t) {
                    int a = strand[t].cidx, b = strand[t + 1].cidx;
                    if (a != b) adj.insert({std::min(a, b), std::max(a, b)});
                }
            }
            std::map<int, std::set<int>> nb;
            for (const auto& [a, b] : adj) {
                nb[a].insert(b);
                nb[b].insert(a);
            }
            std::vector<Move> c;
            for (const auto& [a, bs] : nb)
                for (int b : bs) {
                    if (b <= a) continue;
                    for (int e : nb[b]) {
                        if (e <= b || !bs.count(e)) continue;
                        std::array<int, 3> tri = {a, b, e};
                        if (check_r3(d, tri))
                            c.push_back({MoveKind::R3,
                                         {istr(d.crossings[a].id), istr(d.crossings[b].id),
                                          istr(d.crossings[e].id)}});
                    }
                }
            return pick_from(c, rng, out);
        }
        case MoveKind::TwistInsert: {
            std::vector<Move> c;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (g.degree(v) < 2) continue;
                c.push_back({MoveKind::TwistInsert, {g.vertices()[v], "1"}});
                c.push_back({MoveKind::TwistInsert, {g.vertices()[v], "-1"}});
            }
            return pick_from(c, rng, out);
        }
        case MoveKind::TwistDelete: {
            std::vector<Move> c;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (find_twist_block(d, v, nullptr))
                    c.push_back({MoveKind::TwistDelete, {g.vertices()[v]}});
            return pick_from(c, rng, out);
        }
        case MoveKind::SlideDelete: {
            std::vector<Move> c;
            for (int e = 0; e < g.edge_count(); ++e)
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (find_slide_block(d, e, v, nullptr))
                        c.push_back({MoveKind::SlideDelete, {g.edge(e).label, g.vertices()[v]}});
            return pick_from(c, rng, out);
        }
        default: return false;
    }
}

}  // namespace

WalkResult random_walk(Diagram& d, int steps, unsigned long long seed,
                       const std::function<bool(const Diagram&, const Move&)>& observer) {
    static const MoveKind kinds[9] = {
        MoveKind::R1Insert, MoveKind::R1Delete,  MoveKind::R2Insert,
        MoveKind::R2Delete, MoveKind::R3,        MoveKind::TwistInsert,
        MoveKind::TwistDelete, MoveKind::SlideInsert, MoveKind::SlideDelete};
    WalkRng rng(seed);
    WalkResult res;
    for (int s = 0; s < steps; ++s) {
        MoveKind k = kinds[rng.uniform(9)];
        Move m;
        if (!pick_move(d, k, rng, &m)) {
            res.skipped++;
            continue;
        }
        apply_move(d, m);
        res.applied++;
        res.log.push_back(m);
        if (observer && !observer(d, m)) return res;
    }
    return res;
}

void replay(Diagram& d, const std::vector<Move>& log,
            const std::function<bool(const Diagram&, const Move&)>& observer) {
    for (const auto& m : log) {
        apply_move(d, m);
        if (observer && !observer(d, m)) return;
    }
}

}  // namespace sgi

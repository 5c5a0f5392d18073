// Command-line front end: modules, invariants, table verification/solving,
// bounds, random-walk fuzzing, replay, the diagram catalog, decompositions,
// and chirality certificates.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgi/catalog.hpp"
#include "sgi/diagram.hpp"
#include "sgi/epsilon.hpp"
#include "sgi/families.hpp"
#include "sgi/invariants.hpp"
#include "sgi/io.hpp"
#include "sgi/linking.hpp"
#include "sgi/moves.hpp"

using nlohmann::ordered_json;
using namespace sgi;

namespace {

std::string base_dir_of(const std::string& path) {
    if (path == "-") return ".";
    std::string dir = std::filesystem::path(path).parent_path().string();
    return dir.empty() ? "." : dir;
}

Diagram load_diagram(const std::string& path) {
    return parse_diagram_text(read_text_file(path), base_dir_of(path));
}

GraphPtr load_graph(const std::string& path) {
    return parse_graph_text(read_text_file(path));
}

// A graph spec is an existing file path, "-", or a family name ("2K3",
// "K5", "K33", "K6", "K7", "Heawood", "M<n>").
GraphPtr resolve_graph(const std::string& spec) {
    if (spec == "-" || std::filesystem::exists(spec)) return load_graph(spec);
    int n = 0;
    if (parse_mobius_name(spec, &n)) return build_family("Mobius", n);
    for (const char* f : {"2K3", "K5", "K33", "K6", "K7", "Heawood"})
        if (spec == f) return build_family(f);
    throw DomainError("no graph file or family named " + spec);
}

// A table spec is an existing file path, or a built-in key ("2k3", "k5",
// "k33", "k7", "mobius", "heawood", "k6-ex27", "k6-sec5"); "mobius" picks
// its size from the graph's name (M3 uses the inherited table).
EpsilonTable resolve_epsilon(const std::string& spec, GraphPtr g) {
    if (spec != "-" && std::filesystem::exists(spec))
        return parse_epsilon_text(read_text_file(spec), g);
    if (spec == "mobius") {
        int n = 0;
        if (!parse_mobius_name(g->name(), &n))
            throw DomainError("the mobius table needs a ladder graph, not " + g->name());
        EpsilonTable t = (n == 3) ? m3_inherited_table() : builtin_epsilon("mobius", n);
        if (!t.graph->same_structure(*g))
            throw DomainError("graph " + g->name() + " is not the canonical ladder");
        return t;
    }
    EpsilonTable t = builtin_epsilon(spec);
    if (!t.graph->same_structure(*g))
        throw DomainError("table " + spec + " does not match graph " + g->name());
    return t;
}

void emit(bool json, const ordered_json& j, const std::string& text) {
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string torsion_text(const std::vector<Int>& tor) {
    if (tor.empty()) return "none";
    std::string s;
    for (size_t i = 0; i < tor.size(); ++i) s += (i ? "," : "") + tor[i].get_str();
    return s;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path);
    out << content;
}

int cmd_graph(bool json, const std::string& spec, const std::string& out_path) {
    GraphPtr g = resolve_graph(spec);
    std::string body = serialize_graph(*g);
    if (!out_path.empty()) write_file(out_path, body);
    ordered_json j;
    j["graph"] = g->name();
    j["vertices"] = g->vertex_count();
    j["edges"] = g->edge_count();
    j["pairs"] = g->pair_count();
    emit(json, j, out_path.empty() ? body : "");
    return 0;
}

int cmd_module(bool json, const std::string& path, bool dump) {
    GraphPtr g = resolve_graph(path);
    LinkingModule lm(g);
    ordered_json j;
    j["graph"] = g->name();
    j["pairs"] = lm.pair_count();
    j["generators"] = lm.generator_count();
    j["rank"] = lm.rank();
    j["torsion"] = ordered_json::array();
    for (const Int& t : lm.torsion()) j["torsion"].push_back(t.get_str());
    std::ostringstream text;
    text << "rank " << lm.rank() << ", torsion " << torsion_text(lm.torsion()) << "\n";
    if (dump) {
        ordered_json rows = ordered_json::array();
        for (int k = 0; k < lm.pair_count(); ++k) {
            auto [a, b] = g->pair_labels(k);
            text << "# col " << k << ": " << a << " " << b << "\n";
        }
        const auto& gens = lm.generators();
        for (size_t k = 0; k < gens.size(); ++k)
            text << "# row " << k << ": " << g->edge(gens[k].first).label << " "
                 << g->vertices()[gens[k].second] << "\n";
        const Mat& B = lm.relation_matrix();
        for (size_t k = 0; k < gens.size(); ++k) {
            ordered_json row = ordered_json::array();
            for (int p = 0; p < lm.pair_count(); ++p) {
                text << (p ? " " : "") << B[p][k].get_str();
                row.push_back(B[p][k].get_str());
            }
            text << "\n";
            rows.push_back(row);
        }
        j["matrix"] = rows;
    }
    emit(json, j, text.str());
    return 0;
}

int cmd_invariant(bool json, const std::string& path, const std::string& eps, bool wu,
                  bool rung) {
    Diagram d = load_diagram(path);
    ordered_json j;
    std::ostringstream text;
    if (rung) {
        long long v = t_invariant(d);
        j["rung_surgery"] = v;
        text << "rung-surgery value " << v << "\n";
    } else if (wu) {
        LinkingModule lm(d.graph);
        Vec c = wu_invariant(d, lm);
        j["rank"] = lm.rank();
        j["wu"] = ordered_json::array();
        text << "wu value [";
        for (size_t i = 0; i < c.size(); ++i) {
            j["wu"].push_back(c[i].get_str());
            text << (i ? ", " : "") << c[i].get_str();
        }
        text << "]\n";
    } else {
        if (eps.empty())
            throw UsageError("invariant needs --epsilon, --wu, or --rung-surgery");
        EpsilonTable t = resolve_epsilon(eps, d.graph);
        long long v = reduced_invariant(d, t);
        long long b = crossing_lower_bound(v, t);
        j["reduced"] = v;
        j["bound"] = b;
        text << "reduced value " << v << ", bound " << b << "\n";
    }
    emit(json, j, text.str());
    return 0;
}

int cmd_verify(bool json, const std::string& gpath, const std::string& eps) {
    GraphPtr g = resolve_graph(gpath);
    EpsilonTable t = resolve_epsilon(eps, g);
    HomCheck hc = verify_homomorphism(t);
    ordered_json j;
    j["homomorphism"] = hc.ok;
    std::ostringstream text;
    if (hc.ok) {
        text << "homomorphism: yes\n";
    } else {
        j["edge"] = hc.edge;
        j["vertex"] = hc.vertex;
        j["defect"] = hc.defect;
        text << "homomorphism: no\n"
             << "fails at edge " << hc.edge << ", vertex " << hc.vertex << ", defect "
             << hc.defect << "\n";
    }
    emit(json, j, text.str());
    return hc.ok ? 0 : 1;
}

int cmd_solve(bool json, const std::string& gpath, const std::vector<std::string>& pin_specs) {
    GraphPtr g = resolve_graph(gpath);
    std::vector<Pin> pins;
    for (const std::string& s : pin_specs) {
        std::istringstream in(s);
        Pin p;
        if (!(in >> p.a >> p.b >> p.value)) throw UsageError("bad pin: " + s);
        std::string extra;
        if (in >> extra) throw UsageError("bad pin: " + s);
        pins.push_back(p);
    }
    SolveResult r = solve_epsilon(g, pins);
    if (!r.consistent) {
        emit(json, ordered_json{{"consistent", false}}, "no integer table meets the pins\n");
        return 1;
    }
    ordered_json j;
    j["consistent"] = true;
    j["solution_rank"] = r.solution_rank;
    j["entries"] = ordered_json::array();
    for (int k = 0; k < g->pair_count(); ++k)
        if (r.particular.vals[k] != 0) {
            auto [a, b] = g->pair_labels(k);
            j["entries"].push_back({{"a", a}, {"b", b}, {"value", r.particular.vals[k]}});
        }
    std::ostringstream text;
    text << "# solution rank " << r.solution_rank << "\n"
         << serialize_epsilon(r.particular);
    emit(json, j, text.str());
    return 0;
}

int cmd_bound(bool json, const std::string& gpath, const std::string& eps, long long value) {
    GraphPtr g = resolve_graph(gpath);
    EpsilonTable t = resolve_epsilon(eps, g);
    long long b = crossing_lower_bound(value, t);
    emit(json, ordered_json{{"bound", b}},
         "bound " + std::to_string(b) + "\n");
    return 0;
}

int cmd_fuzz(bool json, const std::string& path, const std::string& eps, int steps,
             unsigned long long seed, const std::string& log_path) {
    Diagram d = load_diagram(path);
    EpsilonTable t = resolve_epsilon(eps, d.graph);
    long long v0 = reduced_invariant(d, t);
    bool constant = true;
    std::string drift_move;
    long long drift_value = 0;
    WalkResult r = random_walk(d, steps, seed, [&](const Diagram& cur, const Move& m) {
        long long v = reduced_invariant(cur, t);
        if (v != v0) {
            constant = false;
            drift_move = move_to_string(m);
            drift_value = v;
            return false;
        }
        return true;
    });
    if (!log_path.empty()) {
        std::string body;
        for (const Move& m : r.log) body += move_to_string(m) + "\n";
        write_file(log_path, body);
    }
    ordered_json j;
    j["invariant"] = v0;
    j["constant"] = constant;
    j["applied"] = r.applied;
    j["skipped"] = r.skipped;
    std::ostringstream text;
    if (constant) {
        text << "invariant constant: " << v0 << "\n"
             << "applied " << r.applied << ", skipped " << r.skipped << "\n";
    } else {
        j["drift_move"] = drift_move;
        j["drift_value"] = drift_value;
        text << "invariant drift after " << drift_move << ": " << v0 << " -> "
             << drift_value << "\n";
    }
    emit(json, j, text.str());
    return constant ? 0 : 1;
}

int cmd_replay(bool json, const std::string& path, const std::string& log_path,
               const std::string& eps) {
    Diagram d = load_diagram(path);
    std::vector<Move> log;
    {
        std::istringstream in(read_text_file(log_path));
        std::string line;
        while (std::getline(in, line)) {
            size_t h = line.find('#');
            if (h != std::string::npos) line = line.substr(0, h);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            log.push_back(parse_move(line));
        }
    }
    bool have_eps = !eps.empty();
    EpsilonTable t;
    long long v0 = 0;
    if (have_eps) {
        t = resolve_epsilon(eps, d.graph);
        v0 = reduced_invariant(d, t);
    }
    bool constant = true;
    std::string drift_move;
    replay(d, log, [&](const Diagram& cur, const Move& m) {
        if (!have_eps) return true;
        if (reduced_invariant(cur, t) != v0) {
            constant = false;
            drift_move = move_to_string(m);
            return false;
        }
        return true;
    });
    if (!constant) {
        emit(json, ordered_json{{"constant", false}, {"drift_move", drift_move}},
             "invariant drift after " + drift_move + "\n");
        return 1;
    }
    ordered_json j;
    j["applied"] = log.size();
    j["crossings"] = d.crossings.size();
    std::ostringstream text;
    text << "applied " << log.size() << ", crossings " << d.crossings.size() << "\n";
    if (have_eps) {
        j["invariant"] = v0;
        text << "invariant constant: " << v0 << "\n";
    }
    emit(json, j, text.str());
    return 0;
}

int cmd_catalog(bool json, bool list, const std::string& name,
                const std::vector<long long>& args, const std::string& out_path) {
    if (list) {
        ordered_json j = ordered_json::array();
        std::ostringstream text;
        for (const CatalogEntry& e : catalog_entries()) {
            ordered_json item;
            item["name"] = e.name;
            item["params"] = e.params;
            item["value"] = e.formula;
            item["rung_surgery"] = e.uses_t;
            j.push_back(item);
            text << e.name;
            for (const std::string& p : e.params) text << " <" << p << ">";
            text << " : value " << e.formula << (e.uses_t ? " (rung surgery)" : "") << "\n";
        }
        emit(json, j, text.str());
        return 0;
    }
    if (name.empty()) throw UsageError("catalog needs --list or an entry name");
    const CatalogEntry& e = catalog_entry(name);
    if (args.size() != e.params.size()) {
        std::string want;
        for (const std::string& p : e.params) want += " <" + p + ">";
        throw UsageError(name + " takes" + (want.empty() ? " no parameters" : want));
    }
    Diagram d = e.build(args);
    long long expected = e.expected(args);
    long long value;
    ordered_json j;
    j["name"] = e.name;
    j["crossings"] = d.crossings.size();
    std::ostringstream text;
    text << "name " << e.name << "\n"
         << "crossings " << d.crossings.size() << "\n";
    if (e.uses_t) {
        value = t_invariant(d);
        j["value"] = value;
        text << "value " << value << "\n";
    } else {
        EpsilonTable t = e.table(args);
        value = reduced_invariant(d, t);
        long long b = crossing_lower_bound(value, t);
        j["value"] = value;
        j["bound"] = b;
        text << "value " << value << "\n"
             << "bound " << b << "\n";
    }
    if (value != expected)
        throw DomainError("catalog value mismatch for " + name + ": built " +
                          std::to_string(value) + ", expected " + std::to_string(expected));
    if (!out_path.empty()) write_file(out_path, serialize_diagram(d));
    emit(json, j, text.str());
    return 0;
}

int cmd_decompose(bool json, const std::string& which) {
    StandardDecomposition sd = run_standard_decomposition(which);
    ordered_json j;
    j["target"] = sd.target_name;
    if (!sd.result.ok) {
        j["ok"] = false;
        emit(json, j, "no integer decomposition of " + sd.target_name + "\n");
        return 1;
    }
    j["ok"] = true;
    j["multiplier"] = sd.result.m.get_str();
    j["coeffs"] = ordered_json::object();
    std::ostringstream text;
    text << "target " << sd.target_name << "\n"
         << "multiplier " << sd.result.m.get_str() << "\n";
    for (size_t q = 0; q < sd.tags.size(); ++q) {
        j["coeffs"][sd.tags[q]] = sd.result.coeffs[q].get_str();
        text << "coeff " << sd.tags[q] << " " << sd.result.coeffs[q].get_str() << "\n";
    }
    emit(json, j, text.str());
    return 0;
}

int cmd_certify(bool json, const std::string& path, const std::string& eps) {
    Diagram d = load_diagram(path);
    EpsilonTable t;
    bool have = !eps.empty();
    if (have) t = resolve_epsilon(eps, d.graph);
    ChiralityCertificate cert = certify_chirality(d, have ? &t : nullptr);
    ordered_json j;
    j["graph"] = cert.graph;
    j["verdict"] = cert.verdict;
    j["value"] = cert.value;
    j["evidence"] = cert.evidence;
    std::ostringstream text;
    text << "graph " << cert.graph << "\n"
         << "verdict " << cert.verdict << "\n"
         << "value " << cert.value << "\n";
    for (const std::string& ev : cert.evidence) text << "evidence: " << ev << "\n";
    emit(json, j, text.str());
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"spatial-graph diagram invariants"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string gr_spec, gr_out;
    auto* gr = app.add_subcommand("graph", "write a canonical family graph file");
    gr->add_option("family", gr_spec, "family name or graph file")->required();
    gr->add_option("--out", gr_out, "write the graph file here");

    std::string mod_path;
    bool mod_dump = false;
    auto* mod = app.add_subcommand("module", "rank and torsion of the pair quotient");
    mod->add_option("graph", mod_path, "graph file (.sg), family name, or -")->required();
    mod->add_flag("--dump-matrix", mod_dump, "print the relation matrix");

    std::string inv_path, inv_eps;
    bool inv_wu = false, inv_rung = false;
    auto* inv = app.add_subcommand("invariant", "evaluate diagram invariants");
    inv->add_option("diagram", inv_path, "diagram file (.sgd), or -")->required();
    inv->add_option("--epsilon", inv_eps, "pair table: file or built-in key");
    inv->add_flag("--wu", inv_wu, "full quotient-module coordinates");
    inv->add_flag("--rung-surgery", inv_rung, "even-ladder rung-surgery value");

    std::string ver_graph, ver_eps;
    auto* ver = app.add_subcommand("verify-epsilon", "check a table against all relations");
    ver->add_option("graph", ver_graph, "graph file (.sg), family name, or -")->required();
    ver->add_option("epsilon", ver_eps, "pair table: file or built-in key")->required();

    std::string sol_graph;
    std::vector<std::string> sol_pins;
    auto* sol = app.add_subcommand("solve-epsilon", "solve for tables meeting pinned values");
    sol->add_option("graph", sol_graph, "graph file (.sg), family name, or -")->required();
    sol->add_option("--pin", sol_pins, "pinned entry \"<edge> <edge> <value>\"");

    std::string bnd_graph, bnd_eps;
    long long bnd_value = 0;
    auto* bnd = app.add_subcommand("bound", "crossing-number lower bound for a value");
    bnd->add_option("graph", bnd_graph, "graph file (.sg), family name, or -")->required();
    bnd->add_option("--epsilon", bnd_eps, "pair table: file or built-in key")->required();
    bnd->add_option("--value", bnd_value, "attained invariant value")->required();

    std::string fz_path, fz_eps, fz_log;
    int fz_steps = 1000;
    unsigned long long fz_seed = 1;
    auto* fz = app.add_subcommand("fuzz", "random-walk the moves, watching an invariant");
    fz->add_option("diagram", fz_path, "diagram file (.sgd), or -")->required();
    fz->add_option("--epsilon", fz_eps, "pair table: file or built-in key")->required();
    fz->add_option("--steps", fz_steps, "walk length (default 1000)");
    fz->add_option("--seed", fz_seed, "walk seed (default 1)");
    fz->add_option("--log", fz_log, "write applied moves to this file");

    std::string rp_path, rp_log, rp_eps;
    auto* rp = app.add_subcommand("replay", "re-apply a logged move sequence");
    rp->add_option("diagram", rp_path, "diagram file (.sgd), or -")->required();
    rp->add_option("--log", rp_log, "move log file")->required();
    rp->add_option("--epsilon", rp_eps, "pair table to watch while replaying");

    bool cat_list = false;
    std::string cat_name, cat_out;
    std::vector<long long> cat_args;
    auto* cat = app.add_subcommand("catalog", "build a named diagram with known value");
    cat->add_flag("--list", cat_list, "list catalog entries");
    cat->add_option("name", cat_name, "catalog entry name");
    cat->add_option("params", cat_args, "integer parameters");
    cat->add_option("--out", cat_out, "write the diagram file here");

    std::string dec_which;
    auto* dec = app.add_subcommand("decompose", "standard subgraph decompositions");
    dec->add_option("which", dec_which, "k6 or k7")->required();

    std::string cf_path, cf_eps;
    auto* cf = app.add_subcommand("certify", "chirality certificate for a diagram");
    cf->add_option("diagram", cf_path, "diagram file (.sgd), or -")->required();
    cf->add_option("--epsilon", cf_eps, "pair table: file or built-in key");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (gr->parsed()) return cmd_graph(json, gr_spec, gr_out);
    if (mod->parsed()) return cmd_module(json, mod_path, mod_dump);
    if (inv->parsed()) return cmd_invariant(json, inv_path, inv_eps, inv_wu, inv_rung);
    if (ver->parsed()) return cmd_verify(json, ver_graph, ver_eps);
    if (sol->parsed()) return cmd_solve(json, sol_graph, sol_pins);
    if (bnd->parsed()) return cmd_bound(json, bnd_graph, bnd_eps, bnd_value);
    if (fz->parsed()) return cmd_fuzz(json, fz_path, fz_eps, fz_steps, fz_seed, fz_log);
    if (rp->parsed()) return cmd_replay(json, rp_path, rp_log, rp_eps);
    if (cat->parsed()) return cmd_catalog(json, cat_list, cat_name, cat_args, cat_out);
    if (dec->parsed()) return cmd_decompose(json, dec_which);
    if (cf->parsed()) return cmd_certify(json, cf_path, cf_eps);
    throw UsageError("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

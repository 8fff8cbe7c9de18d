// Command-line front end. JSON results go to stdout, one-line summaries to
// stderr. Exit codes: 0 success, 1 negative or inconclusive, 2 invalid input,
// 3 search budget exhausted.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "bglink/bglink.hpp"

using namespace bglink;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

std::string rational_text(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string describe(const Fingerprint& f) {
    std::string s = std::to_string(f.components) + " component(s), chi " + std::to_string(f.chi_max) +
                    ", signature " + std::to_string(f.signature) + ", det " + std::to_string(f.determinant);
    if (f.split)
        s += ", split into " + std::to_string(f.per_component.size()) + " pieces";
    return s;
}

// One of --graph FILE, --theta P,Q, --partition A1,A2,...
struct GraphSource {
    std::string graph_file;
    std::string theta;
    std::string partition;

    void add_to(CLI::App* cmd, bool with_partition) {
        auto* g = cmd->add_option("--graph", graph_file, "graph JSON file");
        auto* t = cmd->add_option("--theta", theta, "complete graph P,Q");
        g->excludes(t);
        if (with_partition) {
            auto* a = cmd->add_option("--partition", partition, "twisted torus graph A1,A2,...");
            a->excludes(g)->excludes(t);
        }
    }

    BipartiteGraph load() const {
        if (!graph_file.empty())
            return graph_from_json(read_json_file(graph_file));
        if (!theta.empty()) {
            const auto [p, q] = parse_pair(theta);
            return complete_graph(p, q);
        }
        if (!partition.empty())
            return twisted_torus_graph(parse_partition(partition));
        throw FormatError("no graph given (--graph, --theta or --partition)");
    }
};

int run_invariants(const GraphSource& src) {
    const Fingerprint f = fingerprint(src.load());
    emit(to_json(f));
    std::cerr << describe(f) << "\n";
    return kOk;
}

int run_braid(const GraphSource& src, bool expanded) {
    const BipartiteGraph g = reduce(src.load()).graph;
    if (g.empty())
        throw FormatError("the graph reduces to a disjoint union of unknots; there is no braid to print");
    const BandWord w = band_word_from_graph(g);
    Json out{{"strands", w.strands}, {"band_word", to_string(w)}};
    if (expanded) {
        const BraidWord a = free_reduce(expand_band_word(w));
        out["artin_word"] = to_string(a);
        out["exponent_sum"] = exponent_sum(a);
    }
    emit(out);
    std::cerr << w.letters.size() << " band generator(s) on " << w.strands << " strand(s)\n";
    return kOk;
}

int run_dual(const std::string& text, bool check) {
    const Partition a = parse_partition(text);
    const Partition d = dual_partition(a);
    Json out{{"partition", a.parts()}, {"dual", d.parts()}};
    int code = kOk;
    if (check) {
        const bool same = fingerprint(twisted_torus_graph(a)) == fingerprint(twisted_torus_graph(d));
        out["fingerprints_equal"] = same;
        code = same ? kOk : kNegative;
    }
    emit(out);
    std::cerr << "dual of (" << text << ") has " << d.size() << " parts\n";
    return code;
}

int run_adjacent(const std::string& source, const std::string& target, const std::string& target_file,
                 SearchBudget budget) {
    const auto [p, q] = parse_pair(source);
    BipartiteGraph goal;
    if (!target_file.empty()) {
        goal = graph_from_json(read_json_file(target_file));
    } else {
        const auto [a, b] = parse_pair(target);
        goal = complete_graph(a, b);
    }
    if (goal.empty())
        throw FormatError("target graph has no edges");
    const SearchOutcome r = adjacency_search(p, q, goal, budget);
    switch (r.status) {
    case SearchStatus::found:
        emit(to_json(*r.certificate));
        std::cerr << "adjacent: " << r.certificate->moves.size() << " split(s), " << r.states << " states\n";
        return kOk;
    case SearchStatus::impossible:
        emit(Json{{"verdict", "negative"}, {"reason", "target chi is below the source chi"}, {"depth", r.depth}});
        std::cerr << "not adjacent: splitting cannot lower chi\n";
        return kNegative;
    case SearchStatus::budget_exhausted:
        emit(Json{{"verdict", "inconclusive"}, {"reason", "budget exhausted"}, {"depth", r.depth}, {"states", r.states}});
        std::cerr << "inconclusive: budget exhausted after " << r.states << " states\n";
        return kBudget;
    case SearchStatus::not_found:
        break;
    }
    emit(Json{{"verdict", "inconclusive"}, {"reason", "no match among the states searched"}, {"depth", r.depth},
              {"states", r.states}});
    std::cerr << "inconclusive: no match among " << r.states << " states\n";
    return kNegative;
}

int run_search_subgraph(const std::string& theta, int edges, const std::string& match_file) {
    const auto [p, q] = parse_pair(theta);
    const Fingerprint match = fingerprint_from_json(read_json_file(match_file));
    const auto witnesses = subgraph_search(p, q, edges, match);
    Json list = Json::array();
    for (const BipartiteGraph& g : witnesses)
        list.push_back(to_json(g));
    emit(Json{{"count", witnesses.size()}, {"witnesses", std::move(list)}});
    std::cerr << witnesses.size() << " witness class(es)\n";
    return witnesses.empty() ? kNegative : kOk;
}

int run_density_graph(const std::string& file) {
    const BipartiteGraph g = graph_from_json(read_json_file(file));
    const Rational d = density(g);
    emit(Json{{"edges", g.edge_count()},
              {"p", g.nonisolated(Side::upper)},
              {"q", g.nonisolated(Side::lower)},
              {"density", rational_text(d)}});
    std::cerr << "density " << rational_text(d) << "\n";
    return kOk;
}

int run_density_match(const std::string& file, int cap) {
    const Fingerprint match = fingerprint_from_json(read_json_file(file));
    const DensityEstimate est = density_estimate(match, cap);
    if (!est.witness) {
        emit(Json{{"verdict", "inconclusive"}, {"reason", "no reduced graph in the frames searched"}, {"cap", cap}});
        std::cerr << "no witness up to frame size " << cap << "\n";
        return kNegative;
    }
    emit(Json{{"lower_bound", rational_text(est.lower_bound)},
              {"witness", to_json(*est.witness)},
              {"cutoff", est.cutoff},
              {"exhausted", est.exhausted}});
    std::cerr << "density >= " << rational_text(est.lower_bound) << (est.exhausted ? ", no larger frame can do better" : "") << "\n";
    return kOk;
}

int run_catalog_build(const std::string& max, const std::string& out, const std::string& generated) {
    const auto [p, q] = parse_pair(max);
    const std::size_t n = catalog_build(p, q, out, generated);
    emit(Json{{"entries", n}, {"path", out}, {"version", kPipelineVersion}});
    std::cerr << "wrote " << n << " entries to " << out << "\n";
    return kOk;
}

int run_catalog_lookup(const std::string& fp_file, const std::string& catalog) {
    const Fingerprint f = fingerprint_from_json(read_json_file(fp_file));
    const auto hits = catalog_lookup(f, catalog);
    Json list = Json::array();
    for (const auto& [p, q] : hits)
        list.push_back({p, q});
    emit(Json{{"matches", std::move(list)}});
    std::cerr << hits.size() << " match(es)" << (hits.size() > 1 ? ", fingerprint collision" : "") << "\n";
    return hits.empty() ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bipartite graph links: invariants, adjacency search and torus-link catalog"};
    app.require_subcommand(1);

    GraphSource inv_src;
    auto* inv = app.add_subcommand("invariants", "fingerprint of a graph's boundary link");
    inv_src.add_to(inv, true);

    GraphSource braid_src;
    bool expanded = false;
    auto* braid = app.add_subcommand("braid", "band word of a graph");
    braid_src.add_to(braid, false);
    braid->add_flag("--expanded", expanded, "also print the free-reduced Artin word");

    std::string dual_partition_text;
    bool dual_check = false;
    auto* dual = app.add_subcommand("dual", "dual (conjugate) partition");
    dual->add_option("--partition", dual_partition_text, "A1,A2,...")->required();
    dual->add_flag("--check", dual_check, "compare fingerprints of both twisted torus graphs");

    std::string adj_source, adj_target, adj_target_file;
    SearchBudget budget;
    auto* adj = app.add_subcommand("adjacent", "search fork splittings of a complete graph");
    adj->add_option("--source", adj_source, "P,Q")->required();
    auto* tgt = adj->add_option("--target", adj_target, "A,B");
    auto* tgt_file = adj->add_option("--target-graph", adj_target_file, "target graph JSON file");
    tgt->excludes(tgt_file);
    adj->add_option("--max-states", budget.max_states, "state budget")->check(CLI::PositiveNumber);
    adj->add_option("--max-seconds", budget.max_seconds, "time budget")->check(CLI::PositiveNumber);

    std::string sub_theta, sub_match;
    int sub_edges = 0;
    auto* sub = app.add_subcommand("search-subgraph", "edge subsets of a complete graph with a given fingerprint");
    sub->add_option("--theta", sub_theta, "P,Q")->required();
    sub->add_option("--edges", sub_edges, "edge count")->required();
    sub->add_option("--match", sub_match, "fingerprint JSON file")->required();

    std::string dens_graph, dens_match;
    int dens_cap = 0;
    auto* dens = app.add_subcommand("density", "density of a graph, or best density for a fingerprint");
    auto* dg = dens->add_option("--graph", dens_graph, "graph JSON file");
    auto* dm = dens->add_option("--match", dens_match, "fingerprint JSON file");
    auto* dc = dens->add_option("--cap", dens_cap, "largest frame size")->check(CLI::Range(2, 64));
    dg->excludes(dm)->excludes(dc);
    dm->needs(dc);

    std::string cat_max, cat_out, cat_generated = "unspecified", cat_fp, cat_file;
    auto* cat = app.add_subcommand("catalog", "torus-link fingerprint catalog");
    cat->require_subcommand(1);
    auto* build = cat->add_subcommand("build", "write the catalog");
    build->add_option("--max", cat_max, "P,Q")->required();
    build->add_option("--out", cat_out, "output file")->required();
    build->add_option("--generated", cat_generated, "timestamp recorded in the header");
    auto* lookup = cat->add_subcommand("lookup", "find torus links with a fingerprint");
    lookup->add_option("--fingerprint", cat_fp, "fingerprint JSON file")->required();
    lookup->add_option("--catalog", cat_file, "catalog file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*inv)
            return run_invariants(inv_src);
        if (*braid)
            return run_braid(braid_src, expanded);
        if (*dual)
            return run_dual(dual_partition_text, dual_check);
        if (*adj) {
            if (adj_target.empty() && adj_target_file.empty())
                throw FormatError("give --target A,B or --target-graph FILE");
            return run_adjacent(adj_source, adj_target, adj_target_file, budget);
        }
        if (*sub)
            return run_search_subgraph(sub_theta, sub_edges, sub_match);
        if (*dens) {
            if (!dens_graph.empty())
                return run_density_graph(dens_graph);
            if (dens_match.empty())
                throw FormatError("give --graph FILE or --match FILE --cap N");
            return run_density_match(dens_match, dens_cap);
        }
        if (*build)
            return run_catalog_build(cat_max, cat_out, cat_generated);
        if (*lookup)
            return run_catalog_lookup(cat_fp, cat_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}

// lchoose: command-line front end. JSON goes to stdout, prose to stderr.
//
// Exit codes: 0 success / property holds, 1 property refuted,
// 2 inconclusive, 3 usage or input error, 4 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "lchoose/bundles.hpp"
#include "lchoose/constructions.hpp"
#include "lchoose/error.hpp"
#include "lchoose/interchange.hpp"
#include "lchoose/lowerbound.hpp"
#include "lchoose/search.hpp"
#include "lchoose/solver.hpp"

namespace fs = std::filesystem;
using namespace lchoose;

namespace {

enum Exit { kOk = 0, kRefuted = 1, kInconclusive = 2, kUsage = 3, kInternal = 4 };

struct Common {
    int threads = 1;
    std::uint64_t budget_nodes = 0;
    std::uint64_t budget_ms = 0;
    std::string out;
    std::uint64_t seed = 20240601;
};

SearchBudget budget_of(const Common& c) {
    SearchBudget b;
    b.max_nodes = c.budget_nodes;
    b.max_wall = std::chrono::milliseconds(c.budget_ms);
    return b;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string write_json(const std::string& dir, const std::string& name, const Json& j) {
    fs::create_directories(dir);
    const fs::path path = fs::path(dir) / name;
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << j.dump(2) << "\n";
    return path.string();
}

int exit_for(ChoosabilityStatus s) {
    switch (s) {
        case ChoosabilityStatus::Choosable: return kOk;
        case ChoosabilityStatus::NotChoosable: return kRefuted;
        default: return kInconclusive;
    }
}

int cmd_phi(const std::string& lambda_text) {
    const Lambda lambda = Lambda::parse(lambda_text);
    const auto st = lambda_stats(lambda);
    const PhiValue phi = phi_formula(lambda);
    Json j{{"schema", kSchema},
           {"lambda", lambda.parts()},
           {"trivial", lambda.is_trivial()},
           {"k", st.k},
           {"q", st.q},
           {"m1", st.m1},
           {"m_odd", st.m_odd}};
    j["phi"] = phi.is_infinite() ? Json("infinite") : Json(phi.value());
    if (lambda.is_trivial()) {
        j["previous_bounds"] = nullptr;
    } else {
        const auto b = phi_bounds_previous(lambda);
        j["previous_bounds"] = Json{{"lower", b.lower}, {"upper", b.upper}};
    }
    std::cerr << "phi(" << lambda.to_string() << ") = " << phi.to_string() << "\n";
    emit(j);
    return kOk;
}

AssignmentDocument load_assignment(const std::string& path, const std::string& graph_text,
                                   std::optional<MultipartiteGraph>& graph) {
    AssignmentDocument doc = assignment_from_json(read_json_file(path));
    if (!graph_text.empty()) {
        graph = MultipartiteGraph::parse(graph_text);
    } else if (doc.graph) {
        graph = doc.graph;
    } else {
        throw ParseError("no graph: pass --graph or include \"graph\" in the assignment file");
    }
    if (graph->vertex_count() != doc.lists.vertex_count()) {
        throw ParseError("graph has " + std::to_string(graph->vertex_count()) + " vertices but the file has " +
                         std::to_string(doc.lists.vertex_count()) + " lists");
    }
    return doc;
}

int cmd_solve(const std::string& graph_text, const std::string& path) {
    std::optional<MultipartiteGraph> graph;
    const auto doc = load_assignment(path, graph_text, graph);
    const auto colouring = find_colouring(*graph, doc.lists);
    Json j{{"schema", kSchema}, {"graph", graph->part_sizes()}, {"colourable", colouring.has_value()}};
    j["colouring"] = colouring ? colouring_to_json(*colouring) : Json("none");
    std::cerr << (colouring ? "colourable" : "not colourable") << " from the given lists\n";
    emit(j);
    return colouring ? kOk : kRefuted;
}

int cmd_check(const std::string& graph_text, const std::string& lambda_text, const std::string& assignment,
              const Common& c) {
    const Lambda lambda = Lambda::parse(lambda_text);
    if (!assignment.empty()) {
        std::optional<MultipartiteGraph> graph;
        const auto doc = load_assignment(assignment, graph_text, graph);
        std::optional<ColourPartition> witness;
        if (doc.partition && doc.partition->lambda() == lambda && doc.partition->witnesses(doc.lists)) {
            witness = doc.partition;
        } else {
            witness = find_lambda_partition(doc.lists, lambda);
        }
        const bool colourable = find_colouring(*graph, doc.lists).has_value();
        const bool refutes = witness.has_value() && !colourable;
        Json j{{"schema", kSchema},
               {"graph", graph->part_sizes()},
               {"lambda", lambda.parts()},
               {"lambda_valid", witness.has_value()},
               {"colourable", colourable},
               {"status", refutes ? "NOT_CHOOSABLE" : "NO_REFUTATION"}};
        j["partition"] = witness ? Json(witness->classes()) : Json(nullptr);
        std::cerr << (refutes ? "the assignment is a bad lambda-list assignment\n"
                              : "the assignment does not refute lambda-choosability\n");
        emit(j);
        return refutes ? kRefuted : kOk;
    }
    if (graph_text.empty()) throw ParseError("--graph is required");
    const MultipartiteGraph graph = MultipartiteGraph::parse(graph_text);
    ChoosabilityOptions options;
    options.threads = c.threads;
    const Verdict v = is_choosable(graph, lambda, budget_of(c), options);
    Json j = verdict_to_json(v, graph);
    j["graph"] = graph.part_sizes();
    j["lambda"] = lambda.parts();
    if (v.counterexample && !c.out.empty()) {
        j["counterexample_ref"] = write_json(c.out, "counterexample.json", assignment_to_json(*v.counterexample, &graph));
    }
    std::cerr << graph.to_string() << " with lambda " << lambda.to_string() << ": " << to_string(v.status) << " ("
              << v.orbits_checked << " orbits, universe bound " << v.universe_bound << ")\n";
    emit(j);
    return exit_for(v.status);
}

int param_int(const Json& params, const char* name, std::optional<int> fallback = std::nullopt) {
    if (!params.contains(name)) {
        if (fallback) return *fallback;
        throw ParseError(std::string("manifest params need \"") + name + "\"");
    }
    if (!params[name].is_number_integer()) throw ParseError(std::string("param \"") + name + "\" must be an integer");
    return params[name].get<int>();
}

Json k_assignment_json(const MultipartiteGraph& graph, const ListAssignment& lists, int k) {
    const ColourPartition single(Lambda({k}), std::vector<int>(static_cast<std::size_t>(lists.universe_size()), 0));
    return assignment_to_json(lists, &single, &graph);
}

int cmd_gen(const std::string& manifest_path, const Common& c) {
    const GenerationManifest m = manifest_from_json(read_json_file(manifest_path));
    const std::string dir = c.out.empty() ? "." : c.out;
    Json files = Json::array();
    if (m.family == "lemma1") {
        const int a = param_int(m.params, "a");
        const int b = param_int(m.params, "b");
        const int cc = param_int(m.params, "c");
        const bool allow = m.params.value("allow_empty_e", false);
        const auto inst = build_lemma1(a, b, cc, allow);
        const std::string name =
            "lemma1_" + std::to_string(a) + "_" + std::to_string(b) + "_" + std::to_string(cc) + ".json";
        files.push_back(write_json(dir, name, assignment_to_json(inst.lists, &inst.partition, &inst.graph)));
    } else if (m.family == "k42") {
        const int k = param_int(m.params, "k");
        std::vector<K42Sizes> sizes;
        if (m.params.contains("a1")) {
            sizes.push_back({param_int(m.params, "a1"), param_int(m.params, "a3"), param_int(m.params, "b1")});
        } else {
            sizes = k42_size_triples(k);
        }
        for (const auto& s : sizes) {
            const auto inst = build_bad_k42(k, s);
            const std::string name = "k42_" + std::to_string(k) + "_" + std::to_string(s.a1) + "_" +
                                     std::to_string(s.a3) + "_" + std::to_string(s.b1) + ".json";
            files.push_back(write_json(dir, name, k_assignment_json(inst.graph, inst.lists, k)));
        }
    } else {
        const int k = param_int(m.params, "k");
        const int count = param_int(m.params, "count", 1);
        if (m.params.value("random", false)) {
            std::mt19937_64 rng(c.seed);
            for (int i = 0; i < count; ++i) {
                const auto cand = random_threes_candidate(k, rng);
                files.push_back(write_json(dir, "threes_" + std::to_string(k) + "_random_" + std::to_string(i) + ".json",
                                           k_assignment_json(cand.graph(), cand.lists(), k)));
            }
        } else {
            int written = 0;
            const auto summary = enumerate_bad_threes(k, budget_of(c), [&](const ThreesResult& r) {
                if (!r.bad) return true;
                files.push_back(write_json(dir, "threes_" + std::to_string(k) + "_bad_" + std::to_string(written) + ".json",
                                           k_assignment_json(r.candidate.graph(), r.candidate.lists(), k)));
                return ++written < count;
            });
            std::cerr << summary.candidates << " candidates examined, " << summary.bad << " bad\n";
        }
    }
    std::cerr << "wrote " << files.size() << " file(s) to " << dir << "\n";
    emit(Json{{"schema", kSchema}, {"family", m.family}, {"params", m.params}, {"files", files}});
    return kOk;
}

int cmd_verify(const std::string& name, const Common& c) {
    BundleOptions o;
    o.threads = c.threads;
    o.seed = c.seed;
    const BundleResult r = run_bundle(name, o);
    std::cerr << name << ": " << (r.passed ? "PASS" : "FAIL") << " - " << r.summary << "\n";
    emit(Json{{"schema", kSchema},
              {"bundle", r.name},
              {"passed", r.passed},
              {"summary", r.summary},
              {"elapsed_ms", r.elapsed.count()},
              {"details", r.details}});
    return r.passed ? kOk : kRefuted;
}

int cmd_search(const std::string& lambda_text, int n_max, const Common& c) {
    const Lambda lambda = Lambda::parse(lambda_text);
    ChoosabilityOptions options;
    options.threads = c.threads;
    const auto report = phi_search(lambda, n_max, budget_of(c), options);
    std::vector<std::optional<std::string>> refs(report.cells.size());
    bool inconclusive = false;
    for (std::size_t i = 0; i < report.cells.size(); ++i) {
        const auto& cell = report.cells[i];
        if (cell.verdict.status == ChoosabilityStatus::Inconclusive) inconclusive = true;
        if (cell.verdict.counterexample && !c.out.empty()) {
            const MultipartiteGraph g(cell.parts);
            std::string name = "counterexample_n" + std::to_string(cell.n);
            for (int p : cell.parts) name += "_" + std::to_string(p);
            refs[i] = write_json(c.out, name + ".json", assignment_to_json(*cell.verdict.counterexample, &g));
        }
    }
    if (report.trivial) {
        std::cerr << "lambda is trivial: every complete k-partite graph is lambda-choosable\n";
    } else {
        std::cerr << report.cells.size() << " cells; minimum "
                  << (report.minimum ? std::to_string(*report.minimum) : std::string("not reached")) << "\n";
    }
    emit(phi_report_to_json(report, refs));
    return inconclusive ? kInconclusive : kOk;
}

int cmd_tuple(const std::vector<int>& caps, int k_t) {
    if (caps.size() != 4) throw ParseError("--caps takes four values");
    const auto t = find_reducible_4tuple({caps[0], caps[1], caps[2], caps[3]}, k_t);
    Json j{{"schema", kSchema}, {"caps", caps}, {"k_t", k_t}};
    j["tuple"] = t ? Json(t->a) : Json(nullptr);
    std::cerr << (t ? "reducible tuple " + t->to_string() : std::string("no reducible tuple")) << "\n";
    emit(j);
    return kOk;
}

int cmd_recipes(int k_t, int i2, int i3, int i4, int which) {
    if (which != 1 && which != 2) throw ParseError("--case must be 1 or 2");
    const auto tuples = case_recipe_tuples(k_t, i2, i3, i4, which == 1 ? RecipeCase::One : RecipeCase::Two);
    Json arr = Json::array();
    for (const auto& t : tuples) {
        arr.push_back(Json{{"name", t.name},
                           {"tuple", t.tuple.a},
                           {"residue", t.residue < 0 ? Json(nullptr) : Json(t.residue)},
                           {"claimed_weight", t.claimed_weight},
                           {"nonnegative", t.nonnegative},
                           {"within_caps", t.within_caps},
                           {"sums_ok", t.sums_ok}});
    }
    emit(Json{{"schema", kSchema}, {"k_t", k_t}, {"i2", i2}, {"i3", i3}, {"i4", i4}, {"case", which}, {"tuples", arr}});
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lambda-choosability laboratory for complete multipartite graphs"};
    app.require_subcommand(1);
    Common c;
    std::string lambda_text;
    std::string graph_text;
    std::string assignment;
    std::string manifest;
    std::string bundle;
    int n_max = 0;
    std::vector<int> caps;
    int k_t = 0, i2 = 0, i3 = 0, i4 = 0, which = 1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--threads", c.threads, "Worker threads")->envname("LCHOOSE_THREADS")->check(CLI::PositiveNumber);
        sub->add_option("--budget-nodes", c.budget_nodes, "Search node budget (0 = unlimited)");
        sub->add_option("--budget-ms", c.budget_ms, "Advisory wall-clock budget in ms (0 = unlimited)");
        sub->add_option("--out", c.out, "Directory for written files");
        sub->add_option("--seed", c.seed, "Seed for randomised suites");
    };

    auto* phi = app.add_subcommand("phi", "Closed-form phi(lambda) and the earlier bounds");
    phi->add_option("-l,--lambda", lambda_text, "lambda, e.g. 1,3 or 2*3")->required();

    auto* solve = app.add_subcommand("solve", "Find an L-colouring of a complete multipartite graph");
    solve->add_option("-g,--graph", graph_text, "Part sizes, e.g. 3,3");
    solve->add_option("-a,--assignment,assignment", assignment, "List-assignment JSON file")->required();

    auto* check = app.add_subcommand("check", "Decide lambda-choosability (or test one assignment)");
    check->add_option("-g,--graph", graph_text, "Part sizes, e.g. 3,3");
    check->add_option("-l,--lambda", lambda_text, "lambda")->required();
    check->add_option("-a,--assignment", assignment, "Test this assignment instead of enumerating");
    add_common(check);

    auto* gen = app.add_subcommand("gen", "Write the assignments described by a generation manifest");
    gen->add_option("manifest", manifest, "Manifest JSON file")->required();
    add_common(gen);

    auto* verify = app.add_subcommand("verify", "Run a named verification bundle");
    verify->add_option("bundle", bundle, "Bundle name")->required();
    add_common(verify);

    auto* search = app.add_subcommand("search", "Sweep complete k-partite graphs for the least non-choosable order");
    search->add_option("-l,--lambda", lambda_text, "lambda")->required();
    search->add_option("--n-max", n_max, "Largest vertex count")->required();
    add_common(search);

    auto* tuple = app.add_subcommand("tuple", "Least reducible 4-tuple for given part counts");
    tuple->add_option("--caps", caps, "|I_1|,|I_2|,|I_3|,|I_4|")->required()->delimiter(',');
    tuple->add_option("--kt", k_t, "Target k_t")->required();

    auto* recipes = app.add_subcommand("recipes", "Tuples built by the lower-bound case analysis");
    recipes->add_option("--kt", k_t, "Odd k_t >= 3")->required();
    recipes->add_option("--i2", i2, "|I_2|")->required();
    recipes->add_option("--i3", i3, "|I_3|")->required();
    recipes->add_option("--i4", i4, "|I_4|");
    recipes->add_option("--case", which, "1 or 2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*phi) return cmd_phi(lambda_text);
        if (*solve) return cmd_solve(graph_text, assignment);
        if (*check) return cmd_check(graph_text, lambda_text, assignment, c);
        if (*gen) return cmd_gen(manifest, c);
        if (*verify) return cmd_verify(bundle, c);
        if (*search) return cmd_search(lambda_text, n_max, c);
        if (*tuple) return cmd_tuple(caps, k_t);
        if (*recipes) return cmd_recipes(k_t, i2, i3, i4, which);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

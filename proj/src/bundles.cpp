#include "lchoose/bundles.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "lchoose/constructions.hpp"
#include "lchoose/error.hpp"
#include "lchoose/lowerbound.hpp"
#include "lchoose/oracles.hpp"
#include "lchoose/search.hpp"
#include "lchoose/solver.hpp"

namespace lchoose {

namespace {

using Json = nlohmann::json;

ChoosabilityOptions solver_options(const BundleOptions& o) {
    ChoosabilityOptions c;
    c.threads = o.threads;
    return c;
}

// A counterexample is trusted only if both solvers fail on it and it really
// is a lambda-list assignment.
bool certified_bad(const MultipartiteGraph& g, const LambdaAssignment& la) {
    return la.partition.witnesses(la.lists) && oracle::brute_partition_exists(la.lists, la.partition.lambda()) &&
           !find_colouring(g, la.lists) && !oracle::naive_colouring(g, la.lists);
}

BundleResult phi2_exhaustive(const BundleOptions& o) {
    BundleResult r;
    const Lambda lambda({2});
    const auto report = phi_search(lambda, 6, SearchBudget{}, solver_options(o));
    bool below_ok = true;
    std::map<std::vector<int>, bool> bad_at_six;
    Json cells = Json::array();
    for (const auto& cell : report.cells) {
        const MultipartiteGraph g(cell.parts);
        Json c{{"n", cell.n}, {"parts", cell.parts}, {"status", to_string(cell.verdict.status)},
               {"exhaustive", cell.verdict.exhaustive}, {"orbits", cell.verdict.orbits_checked}};
        if (cell.n <= 5) {
            below_ok = below_ok && cell.verdict.status == ChoosabilityStatus::Choosable && cell.verdict.exhaustive;
        } else if (cell.verdict.counterexample) {
            bad_at_six[cell.parts] = certified_bad(g, *cell.verdict.counterexample);
            c["certified"] = bad_at_six[cell.parts];
        } else {
            bad_at_six[cell.parts] = false;
        }
        cells.push_back(std::move(c));
    }
    const bool k33 = bad_at_six[{3, 3}];
    const bool k42 = bad_at_six[{4, 2}];
    const bool k51 = !bad_at_six[{5, 1}];
    const bool minimum = report.minimum && *report.minimum == 6 && phi_choosability(2) == 6;
    r.passed = below_ok && k33 && k42 && k51 && minimum && report.exhaustive_below;
    std::ostringstream s;
    s << "n<=5 all CHOOSABLE exhaustive: " << (below_ok ? "yes" : "no") << "; K_{3,3} bad certified: "
      << (k33 ? "yes" : "no") << "; K_{4,2} bad certified: " << (k42 ? "yes" : "no")
      << "; minimum n = " << (report.minimum ? std::to_string(*report.minimum) : "none");
    r.summary = s.str();
    r.details = Json{{"cells", cells}, {"minimum", report.minimum ? Json(*report.minimum) : Json(nullptr)}};
    return r;
}

BundleResult lemma1_grid(const BundleOptions&) {
    BundleResult r;
    r.passed = true;
    Json rows = Json::array();
    std::ostringstream s;
    for (auto [a, b, c] : {std::array<int, 3>{1, 0, 1}, {1, 1, 1}, {2, 0, 1}}) {
        const auto inst = build_lemma1(a, b, c);
        const auto rep = verify_lemma1(inst);
        const bool searched = find_lambda_partition(inst.lists, inst.lambda).has_value();
        const bool ok = rep.passed() && searched && inst.graph.vertex_count() == 2 * inst.k + 3 * a + 3 &&
                        inst.lists.universe_size() == 2 * inst.k - a;
        r.passed = r.passed && ok;
        rows.push_back(Json{{"a", a}, {"b", b}, {"c", c}, {"k", inst.k}, {"vertices", inst.graph.vertex_count()},
                            {"universe", inst.lists.universe_size()}, {"colourable", rep.colourable},
                            {"partition_found", searched}, {"violations", rep.violations}, {"passed", ok}});
        s << "(" << a << "," << b << "," << c << "): n=" << inst.graph.vertex_count()
          << " |C|=" << inst.lists.universe_size() << (ok ? " ok" : " FAILED") << "; ";
    }
    r.summary = s.str();
    r.details = rows;
    return r;
}

struct Structured {
    std::string label;
    MultipartiteGraph graph;
    ListAssignment lists;
};

std::vector<Lambda> odd_lambdas(int k) {
    std::vector<Lambda> out;
    for (const auto& l : partitions_of(k)) {
        if (l.odd_count() > 0) out.push_back(l);
    }
    return out;
}

BundleResult parity(const BundleOptions& o) {
    BundleResult r;
    r.passed = true;
    Json details = Json::object();
    std::ostringstream s;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    Json recorded = Json::array();

    for (int k : {2, 4}) {
        std::vector<Structured> bad;
        for (const auto& sizes : k42_size_triples(k)) {
            auto inst = build_bad_k42(k, sizes);
            const bool is_bad = !find_colouring(inst.graph, inst.lists) && !oracle::naive_colouring(inst.graph, inst.lists);
            if (!is_bad) ++failures;
            bad.push_back({"k42(" + std::to_string(sizes.a1) + "," + std::to_string(sizes.a3) + "," +
                               std::to_string(sizes.b1) + ")",
                           inst.graph, inst.lists});
        }
        std::uint64_t threes_bad = 0;
        const auto summary = enumerate_bad_threes(k, SearchBudget{}, [&](const ThreesResult& t) {
            if (t.bad) {
                ++threes_bad;
                bad.push_back({"threes", t.candidate.graph(), t.candidate.lists()});
            }
            return true;
        });
        if (threes_bad == 0) ++failures;
        details["k" + std::to_string(k)] = Json{{"k42_instances", k42_size_triples(k).size()},
                                               {"threes_candidates", summary.candidates},
                                               {"threes_bad", threes_bad},
                                               {"threes_completion", to_string(summary.completion)}};
        for (const auto& inst : bad) {
            for (const auto& l : odd_lambdas(k)) {
                ++checks;
                const bool none = !find_lambda_partition(inst.lists, l) &&
                                  !oracle::brute_partition_exists(inst.lists, l) &&
                                  parity_obstruction_check(inst.graph, inst.lists, l, true);
                if (!none) ++failures;
            }
            if (inst.label != "threes" || k == 2) {
                for (const auto& l : partitions_of(k)) {
                    if (l.odd_count() > 0) continue;
                    recorded.push_back(Json{{"k", k}, {"instance", inst.label}, {"lambda", l.parts()},
                                            {"partition", find_lambda_partition(inst.lists, l).has_value()}});
                }
            }
        }
        s << "k=" << k << ": " << bad.size() << " bad structured assignments; ";
    }

    // k = 6: arithmetic fast path everywhere, partition search on a sample.
    std::mt19937_64 rng(o.seed);
    std::vector<Structured> six;
    for (const auto& sizes : k42_size_triples(6)) {
        auto inst = build_bad_k42(6, sizes);
        six.push_back({"k42", inst.graph, inst.lists});
    }
    for (int i = 0; i < 20; ++i) {
        auto cand = random_threes_candidate(6, rng);
        cand.validate();
        six.push_back({"threes", cand.graph(), cand.lists()});
    }
    const auto lambdas6 = odd_lambdas(6);
    std::uint64_t confirmed = 0;
    for (std::size_t i = 0; i < six.size(); ++i) {
        for (const auto& l : lambdas6) {
            ++checks;
            if (!parity_obstruction_check(six[i].graph, six[i].lists, l, false)) ++failures;
        }
        if (six[i].label == "threes") {
            const Lambda l33({3, 3});
            std::uniform_int_distribution<std::size_t> pick(0, lambdas6.size() - 1);
            for (const auto& l : {l33, lambdas6[pick(rng)]}) {
                ++checks;
                ++confirmed;
                if (!parity_obstruction_check(six[i].graph, six[i].lists, l, true)) ++failures;
            }
        }
    }
    for (const auto& inst : six) {
        if (inst.label != "k42") continue;
        ++checks;
        ++confirmed;
        if (!parity_obstruction_check(inst.graph, inst.lists, Lambda({3, 3}), true)) ++failures;
    }
    s << "k=6: " << six.size() << " structured instances, " << confirmed << " confirmed by search; " << checks
      << " checks, " << failures << " failures";
    details["k6"] = Json{{"instances", six.size()}, {"search_confirmations", confirmed}};
    details["even_lambda_outcomes"] = recorded;
    details["checks"] = checks;
    details["failures"] = failures;
    r.passed = failures == 0;
    r.summary = s.str();
    r.details = details;
    return r;
}

BundleResult tuple_audit(const BundleOptions&) {
    BundleResult r;
    std::uint64_t cases = 0;
    std::uint64_t found = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t subgraph_failures = 0;
    for (int k_t : {3, 5}) {
        for (int n1 = 0; n1 <= 6; ++n1)
            for (int n2 = 0; n2 <= 6; ++n2)
                for (int n3 = 0; n3 <= 6; ++n3)
                    for (int n4 = 0; n4 <= 6; ++n4) {
                        const std::array<int, 4> caps{n1, n2, n3, n4};
                        ++cases;
                        const auto fast = find_reducible_4tuple(caps, k_t);
                        const auto slow = oracle::brute_reducible(caps, k_t);
                        if (fast != slow) ++mismatches;
                        if (!fast) continue;
                        ++found;
                        // One large part keeps the remainder nonempty.
                        std::vector<int> sizes{9};
                        for (int sz = 1; sz <= 4; ++sz) sizes.insert(sizes.end(), static_cast<std::size_t>(caps[sz - 1]), sz);
                        const auto [x, rest] = subgraph_from_tuple(MultipartiteGraph(sizes), *fast);
                        const int nx = x.vertex_count();
                        if (x.part_count() != k_t || nx < 2 * k_t + 1 || nx > 2 * k_t + 2 ||
                            rest.vertex_count() + nx != 9 + n1 + 2 * n2 + 3 * n3 + 4 * n4) {
                            ++subgraph_failures;
                        }
                    }
    }
    r.passed = mismatches == 0 && subgraph_failures == 0;
    r.summary = std::to_string(cases) + " cases, " + std::to_string(found) + " with a reducible tuple, " +
                std::to_string(mismatches) + " oracle mismatches, " + std::to_string(subgraph_failures) +
                " subgraph failures";
    r.details = Json{{"cases", cases}, {"reducible", found}, {"mismatches", mismatches},
                     {"subgraph_failures", subgraph_failures}};
    return r;
}

BundleResult recipe_audit(const BundleOptions&) {
    BundleResult r;
    std::uint64_t tuples = 0;
    std::uint64_t bad_sums = 0;
    Json negatives = Json::array();
    for (int k_t : {3, 5, 7}) {
        for (int i2 = 0; i2 <= k_t - 2; ++i2) {
            for (int i3 = 0; i3 <= 4; ++i3) {
                for (auto which : {RecipeCase::One, RecipeCase::Two}) {
                    for (const auto& t : case_recipe_tuples(k_t, i2, i3, 0, which)) {
                        ++tuples;
                        if (!t.sums_ok) ++bad_sums;
                        if (!t.nonnegative) {
                            negatives.push_back(Json{{"k_t", k_t}, {"i2", i2}, {"i3", i3}, {"recipe", t.name},
                                                     {"tuple", t.tuple.to_string()}});
                        }
                    }
                }
            }
        }
    }
    r.passed = bad_sums == 0 && tuples > 0;
    r.summary = std::to_string(tuples) + " recipe tuples, " + std::to_string(bad_sums) + " with wrong sums, " +
                std::to_string(negatives.size()) + " with a negative entry (flagged)";
    r.details = Json{{"tuples", tuples}, {"bad_sums", bad_sums}, {"negative_entries", negatives}};
    return r;
}

BundleResult formula_coherence(const BundleOptions&) {
    BundleResult r;
    std::uint64_t count = 0;
    std::uint64_t failures = 0;
    for (int k = 1; k <= 12; ++k) {
        for (const auto& l : partitions_of(k)) {
            if (l.is_trivial()) continue;
            ++count;
            const auto st = lambda_stats(l);
            const int phi = phi_formula(l).value();
            const auto bounds = phi_bounds_previous(l);
            bool ok = bounds.lower <= phi && phi <= bounds.upper;
            if (st.m_odd == st.m1) ok = ok && phi == 2 * st.k + st.m1 + 2;
            ok = ok && phi >= phi_choosability(k) && phi_formula(Lambda({k})).value() == phi_choosability(k);
            if (!ok) ++failures;
        }
    }
    r.passed = failures == 0 && count > 0;
    r.summary = std::to_string(count) + " nontrivial multisets with sum <= 12, " + std::to_string(failures) + " failures";
    r.details = Json{{"multisets", count}, {"failures", failures}};
    return r;
}

// Drops colours no list uses and renumbers the rest.
ListAssignment compact(std::vector<ColourSet> lists) {
    ColourSet used = 0;
    for (ColourSet l : lists) used |= l;
    std::vector<int> rename(kMaxColours, -1);
    int next = 0;
    for_each_colour(used, [&](int c) { rename[c] = next++; });
    for (ColourSet& l : lists) {
        ColourSet m = 0;
        for_each_colour(l, [&](int c) { m |= colour_bit(rename[c]); });
        l = m;
    }
    return ListAssignment(next, std::move(lists));
}

bool solver_agrees(const MultipartiteGraph& g, const ListAssignment& lists) {
    const auto fast = find_colouring(g, lists);
    const auto slow = oracle::naive_colouring(g, lists);
    if (fast.has_value() != slow.has_value()) return false;
    return !fast || is_proper_list_colouring(g, lists, *fast);
}

BundleResult solver_oracle(const BundleOptions& o) {
    BundleResult r;
    std::mt19937_64 rng(o.seed);
    std::uint64_t random_cases = 0;
    std::uint64_t micro_cases = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t colourable = 0;
    for (int i = 0; i < 10000; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        const int k = std::uniform_int_distribution<int>(1, n)(rng);
        const auto vectors = enumerate_part_vectors(n, k);
        const auto& parts = vectors[std::uniform_int_distribution<std::size_t>(0, vectors.size() - 1)(rng)];
        const int u = std::uniform_int_distribution<int>(1, 5)(rng);
        std::uniform_int_distribution<ColourSet> subset(1, first_colours(u));
        std::vector<ColourSet> lists;
        for (int v = 0; v < n; ++v) lists.push_back(subset(rng));
        const MultipartiteGraph g(parts);
        const auto la = compact(lists);
        ++random_cases;
        if (!solver_agrees(g, la)) ++disagreements;
        if (find_colouring(g, la)) ++colourable;
    }
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (const auto& parts : enumerate_part_vectors(n, k)) {
                const MultipartiteGraph g(parts);
                for (int u = 1; u <= 3; ++u) {
                    const ColourSet all = first_colours(u);
                    std::vector<ColourSet> lists(static_cast<std::size_t>(n), 1);
                    while (true) {
                        ColourSet seen = 0;
                        for (ColourSet l : lists) seen |= l;
                        if (seen == all) {
                            ++micro_cases;
                            if (!solver_agrees(g, ListAssignment(u, lists))) ++disagreements;
                        }
                        std::size_t v = 0;
                        while (v < lists.size() && ++lists[v] > all) lists[v++] = 1;
                        if (v == lists.size()) break;
                    }
                }
            }
        }
    }
    r.passed = disagreements == 0;
    r.summary = std::to_string(random_cases) + " random + " + std::to_string(micro_cases) + " micro-grid instances, " +
                std::to_string(disagreements) + " disagreements";
    r.details = Json{{"random", random_cases}, {"random_colourable", colourable}, {"micro", micro_cases},
                     {"disagreements", disagreements}, {"seed", o.seed}};
    return r;
}

BundleResult order_coherence(const BundleOptions& o) {
    BundleResult r;
    std::uint64_t pairs = 0;
    std::uint64_t compared = 0;
    std::uint64_t violations = 0;
    std::uint64_t skipped = 0;
    Json rows = Json::array();
    const auto options = solver_options(o);
    for (int k = 1; k <= 3; ++k) {
        const auto lambdas = partitions_of(k);
        for (int n = k; n <= 6; ++n) {
            for (const auto& parts : enumerate_part_vectors(n, k)) {
                const MultipartiteGraph g(parts);
                std::map<Lambda, Verdict> verdicts;
                for (const auto& l : lambdas) verdicts.emplace(l, is_choosable(g, l, SearchBudget{}, options));
                for (const auto& lo : lambdas) {
                    for (const auto& hi : lambdas) {
                        if (!lambda_leq(lo, hi)) continue;
                        ++pairs;
                        const auto& vl = verdicts.at(lo);
                        const auto& vh = verdicts.at(hi);
                        if (vl.status == ChoosabilityStatus::Inconclusive || vh.status == ChoosabilityStatus::Inconclusive) {
                            ++skipped;
                            continue;
                        }
                        ++compared;
                        if (vl.status == ChoosabilityStatus::Choosable && vh.status != ChoosabilityStatus::Choosable) {
                            ++violations;
                        }
                    }
                }
                Json v = Json::object();
                for (const auto& [l, verdict] : verdicts) v[l.to_string()] = to_string(verdict.status);
                rows.push_back(Json{{"parts", parts}, {"verdicts", v}});
            }
        }
    }
    r.passed = violations == 0 && compared > 0;
    r.summary = std::to_string(pairs) + " (graph, lambda <= lambda') pairs, " + std::to_string(compared) +
                " with definitive verdicts, " + std::to_string(violations) + " violations";
    r.details = Json{{"pairs", pairs}, {"compared", compared}, {"skipped", skipped}, {"violations", violations},
                     {"graphs", rows}};
    return r;
}

const std::vector<std::pair<std::string, std::function<BundleResult(const BundleOptions&)>>>& registry() {
    static const std::vector<std::pair<std::string, std::function<BundleResult(const BundleOptions&)>>> r{
        {"phi2-exhaustive", phi2_exhaustive}, {"lemma1-grid", lemma1_grid},
        {"parity-k4", parity},                {"tuple-audit", tuple_audit},
        {"recipe-audit", recipe_audit},       {"formula-coherence", formula_coherence},
        {"solver-oracle", solver_oracle},     {"order-coherence", order_coherence},
    };
    return r;
}

}  // namespace

std::vector<std::string> bundle_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

BundleResult run_bundle(const std::string& name, const BundleOptions& options) {
    for (const auto& [n, fn] : registry()) {
        if (n != name) continue;
        const auto start = std::chrono::steady_clock::now();
        BundleResult r = fn(options);
        r.name = name;
        r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        return r;
    }
    throw ContractError("unknown bundle \"" + name + "\"");
}

}  // namespace lchoose

#include "lchoose/interchange.hpp"

#include <fstream>

#include "lchoose/error.hpp"

namespace lchoose {

Json assignment_to_json(const ListAssignment& lists, const ColourPartition* partition,
                        const MultipartiteGraph* graph) {
    Json j;
    j["universe"] = lists.universe_size();
    j["lists"] = lists.to_vectors();
    if (partition != nullptr) {
        j["partition"] = partition->classes();
        j["lambda"] = partition->lambda().parts();
    } else {
        j["partition"] = nullptr;
        j["lambda"] = nullptr;
    }
    if (graph != nullptr) j["graph"] = graph->part_sizes();
    return j;
}

Json assignment_to_json(const LambdaAssignment& assignment, const MultipartiteGraph* graph) {
    return assignment_to_json(assignment.lists, &assignment.partition, graph);
}

namespace {

template <typename T>
T field(const Json& j, const char* name) {
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("field \"") + name + "\": " + e.what());
    }
}

}  // namespace

AssignmentDocument assignment_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("assignment must be a JSON object");
    const int universe = field<int>(j, "universe");
    const auto raw = field<std::vector<std::vector<int>>>(j, "lists");
    std::optional<ListAssignment> lists;
    try {
        lists = ListAssignment::from_vectors(universe, raw);
    } catch (const ContractError& e) {
        throw ParseError(std::string("lists: ") + e.what());
    }
    AssignmentDocument doc{*lists, std::nullopt, std::nullopt, std::nullopt};
    try {
        if (j.contains("lambda") && !j["lambda"].is_null()) doc.lambda = Lambda(field<std::vector<int>>(j, "lambda"));
        if (j.contains("partition") && !j["partition"].is_null()) {
            if (!doc.lambda) throw ParseError("\"partition\" given without \"lambda\"");
            doc.partition = ColourPartition(*doc.lambda, field<std::vector<int>>(j, "partition"));
            if (doc.partition->universe_size() != universe) {
                throw ParseError("\"partition\" must have one entry per colour");
            }
        }
        if (j.contains("graph") && !j["graph"].is_null()) {
            doc.graph = MultipartiteGraph(field<std::vector<int>>(j, "graph"));
            if (doc.graph->vertex_count() != doc.lists.vertex_count()) {
                throw ParseError("\"graph\" has " + std::to_string(doc.graph->vertex_count()) + " vertices but " +
                                 std::to_string(doc.lists.vertex_count()) + " lists are given");
            }
        }
    } catch (const ContractError& e) {
        throw ParseError(e.what());
    }
    return doc;
}

Json colouring_to_json(const Colouring& colouring) { return Json(colouring.colour_of); }

Json verdict_to_json(const Verdict& verdict, const MultipartiteGraph& graph) {
    Json j;
    j["schema"] = kSchema;
    j["status"] = to_string(verdict.status);
    j["exhaustive"] = verdict.exhaustive;
    j["orbits_checked"] = verdict.orbits_checked;
    j["nodes"] = verdict.nodes;
    j["universe_bound"] = verdict.universe_bound;
    j["counterexample"] = verdict.counterexample ? assignment_to_json(*verdict.counterexample, &graph) : Json(nullptr);
    return j;
}

Json phi_report_to_json(const PhiSearchReport& report, const std::vector<std::optional<std::string>>& refs) {
    Json j;
    j["schema"] = kSchema;
    j["lambda"] = report.lambda.parts();
    j["trivial"] = report.trivial;
    j["n_min"] = report.n_min;
    j["n_max"] = report.n_max;
    j["minimum"] = report.minimum ? Json(*report.minimum) : Json(nullptr);
    j["exhaustive_below"] = report.exhaustive_below;
    j["elapsed_ms"] = report.elapsed.count();
    Json cells = Json::array();
    for (std::size_t i = 0; i < report.cells.size(); ++i) {
        const auto& cell = report.cells[i];
        Json c;
        c["n"] = cell.n;
        c["parts"] = cell.parts;
        c["status"] = to_string(cell.verdict.status);
        c["exhaustive"] = cell.verdict.exhaustive;
        c["orbits_checked"] = cell.verdict.orbits_checked;
        c["counterexample_ref"] = i < refs.size() && refs[i] ? Json(*refs[i]) : Json(nullptr);
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    return j;
}

GenerationManifest manifest_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("manifest must be a JSON object");
    GenerationManifest m;
    m.family = field<std::string>(j, "family");
    if (m.family != "lemma1" && m.family != "k42" && m.family != "threes") {
        throw ParseError("unknown family \"" + m.family + "\"");
    }
    m.params = j.contains("params") ? j["params"] : Json::object();
    if (!m.params.is_object()) throw ParseError("\"params\" must be an object");
    return m;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace lchoose

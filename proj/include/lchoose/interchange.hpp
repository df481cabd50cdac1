#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lchoose/assignment.hpp"
#include "lchoose/graph.hpp"
#include "lchoose/lambda.hpp"
#include "lchoose/search.hpp"
#include "lchoose/solver.hpp"

namespace lchoose {

inline constexpr const char* kSchema = "lchoose/1";

using Json = nlohmann::json;

/// Contents of a list-assignment file. "partition" needs "lambda".
struct AssignmentDocument {
    ListAssignment lists;
    std::optional<Lambda> lambda;
    std::optional<ColourPartition> partition;
    std::optional<MultipartiteGraph> graph;
};

/// {"universe", "lists", "partition", "lambda"} plus "graph" (part sizes) when
/// given. Lists are written sorted.
Json assignment_to_json(const ListAssignment& lists, const ColourPartition* partition = nullptr,
                        const MultipartiteGraph* graph = nullptr);
Json assignment_to_json(const LambdaAssignment& assignment, const MultipartiteGraph* graph = nullptr);

/// Throws ParseError naming the offending field.
AssignmentDocument assignment_from_json(const Json& j);

Json colouring_to_json(const Colouring& colouring);

/// {"schema", "status", "exhaustive", "orbits_checked", "nodes", "counterexample", "universe_bound"}.
Json verdict_to_json(const Verdict& verdict, const MultipartiteGraph& graph);

/// Cells carry "counterexample_ref"; refs[i] is the path written for cell i, if any.
Json phi_report_to_json(const PhiSearchReport& report, const std::vector<std::optional<std::string>>& refs);

struct GenerationManifest {
    std::string family;  // "lemma1", "k42" or "threes"
    Json params;
};

/// Throws ParseError for a missing or unknown family or non-object params.
GenerationManifest manifest_from_json(const Json& j);

/// Reads and parses a JSON file; throws ParseError if it cannot.
Json read_json_file(const std::string& path);

}  // namespace lchoose

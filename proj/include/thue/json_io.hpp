#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thue/engine.hpp"
#include "thue/lists.hpp"
#include "thue/plane_graph.hpp"
#include "thue/repetition.hpp"

namespace thue {

using Json = nlohmann::json;

// Every from_json variant throws Error(BadInput) on malformed documents and
// lets graph validation errors through unchanged.

/// {"n", "rotation", "labels"?, "family"?}
Json graph_to_json(const PlaneGraph& g, const std::optional<std::string>& family = std::nullopt);
PlaneGraph graph_from_json(const Json& j);
std::optional<std::string> family_from_json(const Json& j);

/// {"colours": [...]}, 0 for uncoloured.
Json colouring_to_json(const PartialColouring& c);
PartialColouring colouring_from_json(const Json& j);

/// {"T", "entries": ["E" | [h, q, o], ...]}
Json record_to_json(const Record& r);
Record record_from_json(const Json& j);

/// {"l", "lists": [[...], ...]}
Json lists_to_json(const ListAssignment& l);
ListAssignment lists_from_json(const Json& j);

/// {"status", "colours", "record", "steps", "seed", "draws"}
Json outcome_to_json(const RunOutcome& o);
RunOutcome outcome_from_json(const Json& j);

/// {"choices": [...]}
Json choices_to_json(const std::vector<std::size_t>& draws);
std::vector<std::size_t> choices_from_json(const Json& j);

/// {"face", "start", "length", "path", "block"}
Json violation_to_json(const Violation& v);
Violation violation_from_json(const Json& j);

/// Reads and parses a JSON file; Error(BadInput) when unreadable.
Json read_json_file(const std::string& path);
/// Writes `j` (indented) to a temporary file and renames it over `path`.
void write_json_file(const std::string& path, const Json& j);

}  // namespace thue

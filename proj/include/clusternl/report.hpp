#pragma once

#include <string>

#include <json.hpp>

#include "clusternl/bell.hpp"
#include "clusternl/checks.hpp"
#include "clusternl/graph.hpp"
#include "clusternl/lhv.hpp"

namespace clusternl {

inline constexpr const char* kLibraryVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// Canonical "-ZYXY"-style rendering of a signed element.
std::string element_str(const StabilizerElement& e);

Json graph_json(const Graph& g);
Json argument_json(const GhzArgument& arg, bool verified);
Json bound_report_json(const BoundReport& r);

// Human-readable rendering of a report tree: indented "key: value" lines
// with arrays expanded one entry per line. Key order is preserved.
std::string render_tree(const Json& j);

}  // namespace clusternl

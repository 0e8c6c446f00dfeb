#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rooted/graph.hpp"

namespace rooted {

// {"n": <int>, "edges": [[i, j], ...]}; extra keys are ignored.
Graph graph_from_json(std::string_view text);
std::string graph_to_json(const Graph& g);
// First line n, then one "i j" pair per line.  Blank lines and lines
// starting with '#' are skipped.
Graph graph_from_text(std::string_view text);
// Dispatches on the first non-blank character: '{' means JSON.
Graph parse_graph(std::string_view text);
Graph load_graph_file(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace rooted

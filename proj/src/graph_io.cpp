#include "rooted/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rooted/error.hpp"

namespace rooted {

namespace {

Graph build(long long n, const std::vector<std::pair<long long, long long>>& edges) {
  if (n < 0 || n > 4096) throw Error(ErrorKind::Parse, "vertex count out of range");
  Graph g(static_cast<int>(n));
  for (auto [i, j] : edges) {
    if (i < 1 || j < 1 || i > n || j > n) {
      throw Error(ErrorKind::Parse,
                  "edge {" + std::to_string(i) + "," + std::to_string(j) + "} outside 1.." +
                      std::to_string(n));
    }
    if (i == j) throw Error(ErrorKind::Parse, "loop at vertex " + std::to_string(i));
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return g;
}

}  // namespace

Graph graph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error(ErrorKind::Parse, "graph JSON needs an integer field \"n\"");
  }
  std::vector<std::pair<long long, long long>> edges;
  if (doc.contains("edges")) {
    const auto& list = doc["edges"];
    if (!list.is_array()) throw Error(ErrorKind::Parse, "\"edges\" must be an array");
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw Error(ErrorKind::Parse, "each edge must be a pair of integers");
      }
      edges.emplace_back(e[0].get<long long>(), e[1].get<long long>());
    }
  }
  return build(doc["n"].get<long long>(), edges);
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.universe();
  doc["edges"] = nlohmann::json::array();
  for (auto [i, j] : g.edges()) doc["edges"].push_back({i, j});
  return doc.dump();
}

Graph graph_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long long n = -1;
  std::vector<std::pair<long long, long long>> edges;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n)) throw Error(ErrorKind::Parse, "first line must hold the vertex count");
    } else {
      long long i = 0, j = 0;
      if (!(fields >> i >> j)) throw Error(ErrorKind::Parse, "bad edge line: " + line);
      edges.emplace_back(i, j);
    }
    std::string trailing;
    if (fields >> trailing) throw Error(ErrorKind::Parse, "trailing input: " + line);
  }
  if (n < 0) throw Error(ErrorKind::Parse, "empty graph file");
  return build(n, edges);
}

Graph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return graph_from_json(text);
  return graph_from_text(text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph_file(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

}  // namespace rooted

#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "rooted/error.hpp"
#include "rooted/graph.hpp"
#include "rooted/graph_io.hpp"
#include <json.hpp>
#include "support.hpp"

using namespace rooted;
using V = std::vector<Vertex>;

TEST_CASE("path") {
  const auto p4 = Graph::path(4);
  CHECK(p4.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(p4.vertices() == V{1, 2, 3, 4});
  CHECK_FALSE(Graph::path(1).has_edges());
  CHECK(Graph::path(1).vertex_count() == 1);
  CHECK(Graph::path(2).edges() == std::vector<Edge>{{1, 2}});
  CHECK_THROWS_AS(Graph::path(0), Error);
}

TEST_CASE("edges") {
  Graph g(3);
  g.add_edge(2, 1);
  g.add_edge(1, 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 1));
  CHECK_THROWS_AS(g.add_edge(2, 2), Error);
  CHECK_THROWS_AS(g.add_edge(1, 4), Error);
  CHECK_THROWS_AS(g.add_edge(0, 1), Error);
}

TEST_CASE("simplicial vertices") {
  CHECK(simplicial_vertices(Graph::diamond()) == V{1, 4});
  CHECK(simplicial_vertices(Graph::path(4)) == V{1, 4});
  CHECK(simplicial_vertices(Graph::complete(3)) == V{1, 2, 3});
  CHECK(simplicial_vertices(Graph(2)) == V{1, 2});
  CHECK(simplicial_vertices(Graph::cycle(4)).empty());
}

TEST_CASE("is_chordal") {
  for (int n = 1; n <= 12; ++n) CHECK(is_chordal(Graph::path(n)));
  CHECK_FALSE(is_chordal(Graph::cycle(4)));
  CHECK_FALSE(is_chordal(Graph::cycle(6)));
  CHECK(is_chordal(Graph::cycle(3)));
  CHECK(is_chordal(Graph::diamond()));
  CHECK(is_chordal(Graph::complete(6)));
  CHECK(is_chordal(Graph(0)));
}

TEST_CASE("delete_vertices keeps labels") {
  const V n1{1, 2, 3};
  const auto rest = delete_vertices(Graph::diamond(), n1);
  CHECK(rest.vertices() == V{4});
  CHECK(rest.universe() == 4);
  CHECK_FALSE(rest.has_edges());

  const V tail{5, 6};
  const auto p = delete_vertices(Graph::path(6), tail);
  CHECK(p.vertices() == V{1, 2, 3, 4});
  CHECK(p.edges() == Graph::path(4).edges());

  const auto g = Graph::diamond();
  CHECK(delete_vertices(g, V{}) == g);
  CHECK_THROWS_AS(delete_vertices(g, V{5}), Error);
}

TEST_CASE("neighborhood") {
  CHECK(neighborhood(Graph::diamond(), 1, true) == V{1, 2, 3});
  CHECK(neighborhood(Graph::diamond(), 1, false) == V{2, 3});
  CHECK(neighborhood(Graph::path(5), 3, false) == V{2, 4});
  CHECK(neighborhood(Graph(1), 1, false).empty());
  CHECK_THROWS_AS(neighborhood(Graph::path(3), 4, false), Error);
  const auto g = delete_vertices(Graph::path(3), V{2});
  CHECK_THROWS_AS(neighborhood(g, 2, false), Error);
}

namespace {

// Chordal iff no induced cycle of length >= 4; found by trying every vertex
// subset of size >= 4 whose induced subgraph is a single cycle.
bool has_induced_long_cycle(const Graph& g) {
  const int n = g.universe();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> vs;
    for (int v = 1; v <= n; ++v)
      if (mask & (1u << (v - 1))) vs.push_back(v);
    if (vs.size() < 4) continue;
    bool two_regular = true;
    for (Vertex v : vs) {
      int deg = 0;
      for (Vertex w : vs) deg += g.adjacent(v, w);
      if (deg != 2) two_regular = false;
    }
    if (!two_regular) continue;
    // A 2-regular graph is one cycle iff it is connected.
    std::vector<Vertex> stack{vs.front()}, seen{vs.front()};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : vs) {
        if (g.adjacent(v, w) && std::find(seen.begin(), seen.end(), w) == seen.end()) {
          seen.push_back(w);
          stack.push_back(w);
        }
      }
    }
    if (seen.size() == vs.size()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("property: chordality agrees with induced-cycle search") {
  test::Gen gen(21);
  int chordal = 0, not_chordal = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = gen.uniform(1, 8);
    const auto g = gen.graph(n, gen.uniform(10, 80));
    const bool expected = !has_induced_long_cycle(g);
    CHECK(is_chordal(g) == expected);
    (expected ? chordal : not_chordal)++;
    if (expected && g.vertex_count() > 0) CHECK_FALSE(simplicial_vertices(g).empty());
  }
  CHECK(chordal > 50);
  CHECK(not_chordal > 50);
}

TEST_CASE("property: deletion restricts edges") {
  test::Gen gen(22);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.uniform(1, 9);
    const auto g = gen.graph(n, 50);
    std::vector<Vertex> removed;
    for (int v = 1; v <= n; ++v)
      if (gen.uniform(0, 2) == 0) removed.push_back(v);
    const auto h = delete_vertices(g, removed);
    CHECK(h.universe() == n);
    for (int i = 1; i <= n; ++i) {
      const bool gone = std::find(removed.begin(), removed.end(), i) != removed.end();
      CHECK(h.is_present(i) == !gone);
      for (int j = i + 1; j <= n; ++j) {
        const bool keep = !gone && std::find(removed.begin(), removed.end(), j) == removed.end();
        CHECK(h.adjacent(i, j) == (keep && g.adjacent(i, j)));
      }
    }
  }
}

TEST_CASE("random chordal graphs") {
  for (std::uint32_t seed = 0; seed < 200; ++seed) {
    const auto g = random_chordal_graph(static_cast<int>(seed % 9) + 1, seed);
    CHECK(is_chordal(g));
    CHECK(g == random_chordal_graph(static_cast<int>(seed % 9) + 1, seed));
  }
}

TEST_CASE("fixtures regenerate from their recorded seed") {
  for (const char* name : {"random_chordal_7a.json", "random_chordal_7b.json"}) {
    CAPTURE(name);
    const auto text = read_file(std::filesystem::path(FIXTURE_DIR) / name);
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc.at("generator") == "random_chordal_graph");
    const auto seed = doc.at("seed").get<std::uint32_t>();
    CHECK(graph_from_json(text) == random_chordal_graph(doc.at("n").get<int>(), seed));
  }
}

TEST_CASE("graph file formats") {
  const auto g = graph_from_json(R"({"n": 4, "edges": [[1,2],[3,2]], "name": "x"})");
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(graph_from_json(graph_to_json(Graph::diamond())) == Graph::diamond());
  CHECK(graph_from_text("# c\n3\n\n1 2\n2 3\n") == Graph::path(3));
  CHECK(parse_graph("  {\"n\":2,\"edges\":[[1,2]]}") == Graph::path(2));
  CHECK(parse_graph("2\n1 2\n") == Graph::path(2));
  CHECK(load_graph_file(std::filesystem::path(FIXTURE_DIR) / "cycle_4.txt") == Graph::cycle(4));
  for (const char* bad : {"{", R"({"edges": []})", R"({"n": 2, "edges": [[1,3]]})",
                          R"({"n": 2, "edges": [[1,1]]})", R"({"n": -1, "edges": []})",
                          R"({"n": 2, "edges": [[1]]})", R"({"n": 2, "edges": [["a",2]]})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(graph_from_json(bad), Error);
  }
  for (const char* bad : {"", "x\n", "3\n1\n", "3\n1 4\n", "3\n1 2 3\n"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(graph_from_text(bad), Error);
  }
  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.json"), Error);
}

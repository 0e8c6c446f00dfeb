#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rooted {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on the label universe 1..n.  Deleting vertices
// never relabels the survivors, so monomials built from any subgraph live in
// the same variable universe as the original graph.
class Graph {
 public:
  Graph() = default;
  // n isolated vertices labelled 1..n.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  static Graph path(int n);
  static Graph complete(int n);
  static Graph cycle(int n);
  // The 4-vertex graph K_4 minus the edge {1,4}.
  static Graph diamond();

  // Size of the label universe, including deleted labels.
  int universe() const noexcept { return n_; }
  bool is_present(Vertex v) const noexcept;
  std::vector<Vertex> vertices() const;
  int vertex_count() const noexcept;

  void add_edge(Vertex i, Vertex j);
  bool adjacent(Vertex i, Vertex j) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  std::vector<Edge> edges() const;  // i < j, sorted
  std::size_t edge_count() const noexcept;
  bool has_edges() const noexcept { return edge_count() > 0; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph delete_vertices(const Graph& g, std::span<const Vertex> removed);
  void check_label(Vertex v) const;

  int n_ = 0;
  std::vector<bool> present_;
  std::vector<std::vector<Vertex>> adj_;  // sorted, index v-1
};

// N(v), or N[v] = N(v) + {v} when closed; ascending.
std::vector<Vertex> neighborhood(const Graph& g, Vertex v, bool closed);
bool is_clique(const Graph& g, std::span<const Vertex> vs);
// Present vertices whose neighbourhood is a clique; isolated vertices count.
std::vector<Vertex> simplicial_vertices(const Graph& g);
bool is_chordal(const Graph& g);
// Induced subgraph on the survivors, labels unchanged.
Graph delete_vertices(const Graph& g, std::span<const Vertex> removed);

// Chordal graph on n vertices grown by gluing each new vertex to a random
// subclique of a previously created clique.  Uses raw mt19937 output so the
// result depends only on the seed.
Graph random_chordal_graph(int n, std::uint32_t seed);

}  // namespace rooted

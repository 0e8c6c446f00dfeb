#include "rooted/graph.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "rooted/error.hpp"

namespace rooted {

Graph::Graph(int n) : n_(n), present_(static_cast<std::size_t>(n), true), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [i, j] : edges) add_edge(i, j);
}

Graph Graph::path(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "path needs at least one vertex");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least three vertices");
  Graph g = path(n);
  g.add_edge(n, 1);
  return g;
}

Graph Graph::diamond() {
  const Edge edges[] = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}};
  return Graph(4, edges);
}

void Graph::check_label(Vertex v) const {
  if (v < 1 || v > n_) {
    throw Error(ErrorKind::InvalidArgument,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

bool Graph::is_present(Vertex v) const noexcept {
  return v >= 1 && v <= n_ && present_[static_cast<std::size_t>(v - 1)];
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n_; ++v)
    if (present_[static_cast<std::size_t>(v - 1)]) out.push_back(v);
  return out;
}

int Graph::vertex_count() const noexcept {
  return static_cast<int>(std::count(present_.begin(), present_.end(), true));
}

void Graph::add_edge(Vertex i, Vertex j) {
  check_label(i);
  check_label(j);
  if (i == j) throw Error(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(i));
  if (!is_present(i) || !is_present(j)) {
    throw Error(ErrorKind::InvalidArgument, "edge touches a deleted vertex");
  }
  auto insert = [](std::vector<Vertex>& list, Vertex v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
  };
  insert(adj_[static_cast<std::size_t>(i - 1)], j);
  insert(adj_[static_cast<std::size_t>(j - 1)], i);
}

bool Graph::adjacent(Vertex i, Vertex j) const {
  check_label(i);
  check_label(j);
  const auto& list = adj_[static_cast<std::size_t>(i - 1)];
  return std::binary_search(list.begin(), list.end(), j);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_label(v);
  return adj_[static_cast<std::size_t>(v - 1)];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex i = 1; i <= n_; ++i)
    for (Vertex j : adj_[static_cast<std::size_t>(i - 1)])
      if (i < j) out.emplace_back(i, j);
  return out;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& list : adj_) total += list.size();
  return total / 2;
}

std::vector<Vertex> neighborhood(const Graph& g, Vertex v, bool closed) {
  std::vector<Vertex> out = g.neighbors(v);
  if (!g.is_present(v)) throw Error(ErrorKind::InvalidArgument, "vertex was deleted");
  if (closed) out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.adjacent(vs[a], vs[b])) return false;
  return true;
}

std::vector<Vertex> simplicial_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v : g.vertices())
    if (is_clique(g, g.neighbors(v))) out.push_back(v);
  return out;
}

bool is_chordal(const Graph& g) {
  Graph h = g;
  while (h.vertex_count() > 0) {
    auto simp = simplicial_vertices(h);
    if (simp.empty()) return false;
    const Vertex v[] = {simp.front()};
    h = delete_vertices(h, v);
  }
  return true;
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  Graph h = g;
  for (Vertex v : removed) {
    g.check_label(v);
    h.present_[static_cast<std::size_t>(v - 1)] = false;
  }
  for (Vertex v = 1; v <= h.n_; ++v) {
    auto& list = h.adj_[static_cast<std::size_t>(v - 1)];
    if (!h.is_present(v)) {
      list.clear();
      continue;
    }
    std::erase_if(list, [&](Vertex w) { return !h.is_present(w); });
  }
  return h;
}

Graph random_chordal_graph(int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  Graph g(n);
  if (n == 0) return g;
  std::vector<std::vector<Vertex>> cliques{{1}};
  for (Vertex v = 2; v <= n; ++v) {
    std::vector<Vertex> base = cliques[rng() % cliques.size()];
    for (std::size_t i = base.size(); i > 1; --i) std::swap(base[i - 1], base[rng() % i]);
    base.resize(1 + rng() % base.size());
    std::sort(base.begin(), base.end());
    for (Vertex w : base) g.add_edge(v, w);
    base.push_back(v);
    cliques.push_back(std::move(base));
  }
  return g;
}

}  // namespace rooted

#include "rooted/cover_ideal.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "rooted/error.hpp"

namespace rooted {

MonomialSet minimal_vertex_covers(const Graph& g, const Budget& budget) {
  const auto nvars = static_cast<std::size_t>(g.universe());
  if (g.vertex_count() > budget.max_cover_vertices) {
    throw Error(ErrorKind::SizeLimit, "cover enumeration refuses " +
                                          std::to_string(g.vertex_count()) + " vertices (cap " +
                                          std::to_string(budget.max_cover_vertices) + ")");
  }
  if (!g.has_edges()) return MonomialSet({Monomial(nvars)});

  // Isolated vertices never occur in a minimal cover; enumerate over the rest.
  std::vector<Vertex> active;
  for (Vertex v : g.vertices())
    if (!g.neighbors(v).empty()) active.push_back(v);
  const int k = static_cast<int>(active.size());
  if (k > 30) throw Error(ErrorKind::SizeLimit, "cover enumeration supports at most 30 vertices");
  std::vector<std::uint32_t> nbr_mask(active.size(), 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (g.adjacent(active[a], active[b])) nbr_mask[a] |= 1u << b;

  auto covers = [&](std::uint32_t mask) {
    // Every edge {a,b} with a outside the mask needs b inside.
    for (int a = 0; a < k; ++a)
      if (!(mask >> a & 1u) && (nbr_mask[a] & ~mask) != 0) return false;
    return true;
  };

  std::vector<Monomial> gens;
  const std::uint32_t full = k == 32 ? ~0u : (1u << k) - 1;
  for (std::uint32_t mask = 0;; ++mask) {
    if (covers(mask)) {
      // Covers are closed upwards, so minimality is local.
      bool minimal = true;
      for (std::uint32_t rest = mask; rest != 0 && minimal; rest &= rest - 1) {
        if (covers(mask & ~(rest & -rest))) minimal = false;
      }
      if (minimal) {
        std::vector<int> support;
        for (int a = 0; a < k; ++a)
          if (mask >> a & 1u) support.push_back(active[a]);
        gens.push_back(Monomial::from_support(nvars, support));
      }
    }
    if (mask == full) break;
  }
  return MonomialSet(std::move(gens));
}

CoverIdeal cover_ideal(const Graph& g, const Budget& budget) {
  return CoverIdeal{g, minimal_vertex_covers(g, budget)};
}

bool is_cover(const Graph& g, const Monomial& m) {
  if (m.nvars() != static_cast<std::size_t>(g.universe())) {
    throw Error(ErrorKind::UniverseMismatch, "monomial universe differs from graph universe");
  }
  if (!m.is_squarefree()) {
    throw Error(ErrorKind::InvalidArgument, "is_cover needs a squarefree monomial, got " + to_string(m));
  }
  for (auto [i, j] : g.edges())
    if (m.exponent(static_cast<std::size_t>(i)) == 0 && m.exponent(static_cast<std::size_t>(j)) == 0)
      return false;
  return true;
}

}  // namespace rooted

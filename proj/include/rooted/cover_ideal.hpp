#pragma once

#include "rooted/budget.hpp"
#include "rooted/graph.hpp"
#include "rooted/monomial.hpp"

namespace rooted {

struct CoverIdeal {
  Graph graph;
  MonomialSet gens;  // one squarefree monomial per minimal vertex cover
};

// All inclusion-minimal vertex covers, as squarefree monomials over
// x_1..x_universe.  An edgeless graph yields {1}.  Throws SizeLimit when the
// graph has more than budget.max_cover_vertices present vertices.
MonomialSet minimal_vertex_covers(const Graph& g, const Budget& budget = {});
CoverIdeal cover_ideal(const Graph& g, const Budget& budget = {});

// True iff the support of m meets every edge.  m must be squarefree.
bool is_cover(const Graph& g, const Monomial& m);

}  // namespace rooted

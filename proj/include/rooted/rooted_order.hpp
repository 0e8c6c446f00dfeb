#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "rooted/graph.hpp"
#include "rooted/monomial.hpp"

namespace rooted {

enum class Provenance { PathRooted, ChordalRooted, Custom };

const char* to_string(Provenance p) noexcept;

// Ordered list u_1 > u_2 > ... > u_q of distinct monomials over one universe.
class GeneratorList {
 public:
  GeneratorList() = default;
  // Throws ConstructionIntegrity on duplicates, UniverseMismatch on mixed
  // universes.
  GeneratorList(std::vector<Monomial> gens, Provenance provenance, int path_n = 0);

  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }
  const Monomial& operator[](std::size_t i) const { return gens_[i]; }
  std::span<const Monomial> gens() const noexcept { return gens_; }
  auto begin() const noexcept { return gens_.begin(); }
  auto end() const noexcept { return gens_.end(); }
  std::size_t nvars() const noexcept { return gens_.empty() ? 0 : gens_.front().nvars(); }

  Provenance provenance() const noexcept { return provenance_; }
  // Number of path vertices when provenance is PathRooted, otherwise 0.
  int path_n() const noexcept { return path_n_; }

  MonomialSet as_set() const { return MonomialSet(gens_); }
  GeneratorList reversed() const;

  friend bool operator==(const GeneratorList& a, const GeneratorList& b) {
    return a.gens_ == b.gens_;
  }

 private:
  std::vector<Monomial> gens_;
  Provenance provenance_ = Provenance::Custom;
  int path_n_ = 0;
};

// Exponents (a_1, ..., a_q) of one factorisation u_1^{a_1} ... u_q^{a_q}.
struct Expression {
  std::vector<unsigned> counts;
  unsigned s = 0;

  // Lexicographic on counts, which is the rooted order on expressions.
  friend std::strong_ordering operator<=>(const Expression& a, const Expression& b) {
    return a.counts <=> b.counts;
  }
  friend bool operator==(const Expression&, const Expression&) = default;
};

Expression expression_from_indices(std::span<const std::size_t> indices, std::size_t q);
Monomial evaluate(const Expression& e, const GeneratorList& list);

// Rooted list of the path P_n.  n = 0 and n = 1 give the single unit term.
// The second overload embeds the list into x_1..x_nvars (nvars >= n).
GeneratorList rooted_list_path(int n);
GeneratorList rooted_list_path(int n, std::size_t nvars);

// One step of a chooser script: the simplicial vertex to expand and the block
// order of its neighbours.  An empty order means ascending labels.
struct ChooserStep {
  Vertex pick = 0;
  std::vector<Vertex> order;

  friend bool operator==(const ChooserStep&, const ChooserStep&) = default;
};

// Resolves the simplicial vertex (and block order) at every recursion call.
// Script steps are consumed in pre-order over the calls on graphs that still
// have edges: a call takes one step, then recurses into its blocks in order.
struct ChordalChooser {
  enum class Strategy { Canonical, LargestLabel, Script };

  Strategy strategy = Strategy::Canonical;
  std::vector<ChooserStep> script;

  static ChordalChooser canonical() { return {}; }
  static ChordalChooser largest_label() { return {Strategy::LargestLabel, {}}; }
  static ChordalChooser from_script(std::vector<ChooserStep> steps) {
    return {Strategy::Script, std::move(steps)};
  }
};

// Product of the neighbours of v in g, as a squarefree monomial.
Monomial neighborhood_monomial(const Graph& g, Vertex v);

// Rooted list of a chordal graph: for the picked simplicial vertex x with
// N[x] = {x, y_2, ..., y_m}, the concatenation of R(G \ N[w]) * N(w) over
// w = x, y_2, ..., y_m.  Throws NotChordal, InvalidArgument on a bad script,
// ConstructionIntegrity if the result repeats a monomial.
GeneratorList rooted_list_chordal(const Graph& g, const ChordalChooser& chooser = {});

// Lex-greatest count vector with sum s whose product over list is m, or
// nullopt when m is not an s-fold product.
std::optional<Expression> maximal_expression(const Monomial& m, const GeneratorList& list,
                                             unsigned s);

// Rooted order on F(I^s).  Throws NotInPowerSet when either side is not an
// s-fold product.
std::strong_ordering compare_rooted(const Monomial& m, const Monomial& n,
                                    const GeneratorList& list, unsigned s);

struct RootedEntry {
  Monomial monomial;
  Expression expression;  // maximal expression
};

// Elements of elems in strictly decreasing rooted order, each with its
// maximal expression.
std::vector<RootedEntry> rooted_entries(std::span<const Monomial> elems, const GeneratorList& list,
                                        unsigned s);
GeneratorList sort_rooted(const MonomialSet& elems, const GeneratorList& list, unsigned s);

}  // namespace rooted

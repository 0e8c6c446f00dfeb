#include "rooted/rooted_order.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "rooted/error.hpp"

namespace rooted {

const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::PathRooted: return "path-rooted";
    case Provenance::ChordalRooted: return "chordal-rooted";
    case Provenance::Custom: return "custom";
  }
  return "custom";
}

GeneratorList::GeneratorList(std::vector<Monomial> gens, Provenance provenance, int path_n)
    : gens_(std::move(gens)), provenance_(provenance), path_n_(path_n) {
  std::unordered_set<Monomial, MonomialHash> seen;
  for (const auto& g : gens_) {
    if (g.nvars() != gens_.front().nvars()) {
      throw Error(ErrorKind::UniverseMismatch, "generator list mixes variable universes");
    }
    if (!seen.insert(g).second) {
      throw Error(ErrorKind::ConstructionIntegrity, "generator " + to_string(g) + " repeats");
    }
  }
}

GeneratorList GeneratorList::reversed() const {
  return GeneratorList(std::vector<Monomial>(gens_.rbegin(), gens_.rend()), Provenance::Custom);
}

Expression expression_from_indices(std::span<const std::size_t> indices, std::size_t q) {
  Expression e{std::vector<unsigned>(q, 0), static_cast<unsigned>(indices.size())};
  for (auto i : indices) ++e.counts.at(i);
  return e;
}

Monomial evaluate(const Expression& e, const GeneratorList& list) {
  Monomial out(list.nvars());
  for (std::size_t i = 0; i < e.counts.size(); ++i) {
    if (e.counts[i] > 0) out *= list[i].pow(e.counts[i]);
  }
  return out;
}

GeneratorList rooted_list_path(int n) { return rooted_list_path(n, static_cast<std::size_t>(std::max(n, 0))); }

GeneratorList rooted_list_path(int n, std::size_t nvars) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "path length must be non-negative");
  if (static_cast<std::size_t>(n) > nvars) {
    throw Error(ErrorKind::InvalidArgument, "path P_" + std::to_string(n) + " does not fit in " +
                                                std::to_string(nvars) + " variables");
  }
  auto x = [&](int i) { return Monomial::variable(nvars, static_cast<std::size_t>(i)); };

  // lists[k] = R(P_k), built bottom-up.
  std::vector<std::vector<Monomial>> lists;
  lists.push_back({Monomial(nvars)});
  lists.push_back({Monomial(nvars)});
  if (n >= 2) lists.push_back({x(1), x(2)});
  if (n >= 3) lists.push_back({x(2), x(1) * x(3)});
  for (int k = 4; k <= n; ++k) {
    std::vector<Monomial> next;
    const Monomial head = x(k - 1);
    const Monomial tail = x(k) * x(k - 2);
    for (const auto& u : lists[static_cast<std::size_t>(k - 2)]) next.push_back(head * u);
    for (const auto& v : lists[static_cast<std::size_t>(k - 3)]) next.push_back(tail * v);
    lists.push_back(std::move(next));
  }
  return GeneratorList(lists[static_cast<std::size_t>(n)], Provenance::PathRooted, n);
}

Monomial neighborhood_monomial(const Graph& g, Vertex v) {
  return Monomial::from_support(static_cast<std::size_t>(g.universe()), g.neighbors(v));
}

namespace {

class ChordalBuilder {
 public:
  explicit ChordalBuilder(const ChordalChooser& chooser) : chooser_(chooser) {}

  std::vector<Monomial> build(const Graph& g) {
    const auto nvars = static_cast<std::size_t>(g.universe());
    if (!g.has_edges()) return {Monomial(nvars)};

    const ChooserStep step = next_step(g);
    std::vector<Vertex> blocks{step.pick};
    blocks.insert(blocks.end(), step.order.begin(), step.order.end());

    std::vector<Monomial> out;
    for (Vertex w : blocks) {
      const auto closed = neighborhood(g, w, true);
      const Monomial factor = neighborhood_monomial(g, w);
      for (auto& m : build(delete_vertices(g, closed))) out.push_back(m * factor);
    }
    return out;
  }

  void finish() const {
    if (chooser_.strategy == ChordalChooser::Strategy::Script && cursor_ != chooser_.script.size()) {
      throw Error(ErrorKind::InvalidArgument,
                  "chooser script has " + std::to_string(chooser_.script.size() - cursor_) +
                      " unused steps");
    }
  }

 private:
  ChooserStep next_step(const Graph& g) {
    std::vector<Vertex> candidates;
    for (Vertex v : simplicial_vertices(g))
      if (!g.neighbors(v).empty()) candidates.push_back(v);
    if (candidates.empty()) throw Error(ErrorKind::NotChordal, "no simplicial vertex left");

    ChooserStep step;
    switch (chooser_.strategy) {
      case ChordalChooser::Strategy::Canonical:
        step.pick = candidates.front();
        break;
      case ChordalChooser::Strategy::LargestLabel:
        step.pick = candidates.back();
        break;
      case ChordalChooser::Strategy::Script:
        if (cursor_ >= chooser_.script.size()) {
          throw Error(ErrorKind::InvalidArgument, "chooser script ran out of steps");
        }
        step = chooser_.script[cursor_++];
        if (std::find(candidates.begin(), candidates.end(), step.pick) == candidates.end()) {
          throw Error(ErrorKind::InvalidArgument,
                      "chooser script step " + std::to_string(cursor_) + ": vertex " +
                          std::to_string(step.pick) + " is not a simplicial vertex with neighbours");
        }
        break;
    }
    const auto& nbrs = g.neighbors(step.pick);
    if (step.order.empty()) {
      step.order = nbrs;
    } else {
      auto sorted = step.order;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != nbrs) {
        throw Error(ErrorKind::InvalidArgument,
                    "chooser block order for vertex " + std::to_string(step.pick) +
                        " is not a permutation of its neighbours");
      }
    }
    return step;
  }

  const ChordalChooser& chooser_;
  std::size_t cursor_ = 0;
};

}  // namespace

GeneratorList rooted_list_chordal(const Graph& g, const ChordalChooser& chooser) {
  if (!is_chordal(g)) throw Error(ErrorKind::NotChordal, "rooted lists need a chordal graph");
  ChordalBuilder builder(chooser);
  auto gens = builder.build(g);
  builder.finish();
  return GeneratorList(std::move(gens), Provenance::ChordalRooted);
}

namespace {

// Depth-first greedy search for the lex-greatest factorisation.  Feasibility
// of (residual, start, remaining) is memoised for the lifetime of one search.
class MaxExpressionSearch {
 public:
  explicit MaxExpressionSearch(const GeneratorList& list) : list_(list) {}

  std::optional<Expression> run(const Monomial& m, unsigned s) {
    std::vector<Monomial::Exponent> residual(m.exponents().begin(), m.exponents().end());
    if (!feasible(residual, 0, s)) return std::nullopt;
    Expression e{std::vector<unsigned>(list_.size(), 0), s};
    unsigned remaining = s;
    for (std::size_t i = 0; i < list_.size() && remaining > 0; ++i) {
      for (unsigned a = max_power(residual, i, remaining) + 1; a-- > 0;) {
        auto next = subtract(residual, i, a);
        if (feasible(next, i + 1, remaining - a)) {
          e.counts[i] = a;
          residual = std::move(next);
          remaining -= a;
          break;
        }
      }
    }
    return e;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (auto v : k) {
        h ^= v;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  unsigned max_power(const std::vector<Monomial::Exponent>& residual, std::size_t i,
                     unsigned remaining) const {
    unsigned best = remaining;
    auto u = list_[i].exponents();
    for (std::size_t v = 0; v < u.size(); ++v) {
      if (u[v] > 0) best = std::min<unsigned>(best, residual[v] / u[v]);
    }
    return best;
  }

  std::vector<Monomial::Exponent> subtract(const std::vector<Monomial::Exponent>& residual,
                                           std::size_t i, unsigned a) const {
    auto out = residual;
    auto u = list_[i].exponents();
    for (std::size_t v = 0; v < u.size(); ++v) out[v] -= u[v] * a;
    return out;
  }

  bool feasible(const std::vector<Monomial::Exponent>& residual, std::size_t start,
                unsigned remaining) {
    if (remaining == 0) {
      return std::all_of(residual.begin(), residual.end(), [](auto e) { return e == 0; });
    }
    if (start == list_.size()) return false;

    std::vector<std::uint32_t> key(residual.begin(), residual.end());
    key.push_back(static_cast<std::uint32_t>(start));
    key.push_back(remaining);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool ok = false;
    for (unsigned a = max_power(residual, start, remaining) + 1; a-- > 0 && !ok;) {
      ok = feasible(subtract(residual, start, a), start + 1, remaining - a);
    }
    memo_.emplace(std::move(key), ok);
    return ok;
  }

  const GeneratorList& list_;
  std::unordered_map<std::vector<std::uint32_t>, bool, KeyHash> memo_;
};

}  // namespace

std::optional<Expression> maximal_expression(const Monomial& m, const GeneratorList& list,
                                             unsigned s) {
  if (!list.empty() && m.nvars() != list.nvars()) {
    throw Error(ErrorKind::UniverseMismatch, "monomial and generator list use different universes");
  }
  return MaxExpressionSearch(list).run(m, s);
}

std::strong_ordering compare_rooted(const Monomial& m, const Monomial& n,
                                    const GeneratorList& list, unsigned s) {
  auto em = maximal_expression(m, list, s);
  auto en = maximal_expression(n, list, s);
  if (!em) throw Error(ErrorKind::NotInPowerSet, to_string(m) + " is not an s-fold product");
  if (!en) throw Error(ErrorKind::NotInPowerSet, to_string(n) + " is not an s-fold product");
  return *em <=> *en;
}

std::vector<RootedEntry> rooted_entries(std::span<const Monomial> elems, const GeneratorList& list,
                                        unsigned s) {
  std::vector<RootedEntry> out;
  out.reserve(elems.size());
  for (const auto& m : elems) {
    auto e = maximal_expression(m, list, s);
    if (!e) throw Error(ErrorKind::NotInPowerSet, to_string(m) + " is not an s-fold product");
    out.push_back({m, std::move(*e)});
  }
  std::sort(out.begin(), out.end(),
            [](const RootedEntry& a, const RootedEntry& b) { return a.expression > b.expression; });
  return out;
}

GeneratorList sort_rooted(const MonomialSet& elems, const GeneratorList& list, unsigned s) {
  std::vector<Monomial> ordered;
  for (auto& entry : rooted_entries(elems.elements(), list, s)) ordered.push_back(std::move(entry.monomial));
  return GeneratorList(std::move(ordered), Provenance::Custom);
}

}  // namespace rooted

#pragma once

#include <random>
#include <string>
#include <vector>

#include "rooted/graph.hpp"
#include "rooted/monomial.hpp"
#include "rooted/rooted_order.hpp"

namespace test {

inline rooted::Monomial mono(const std::string& text, std::size_t nvars) {
  return rooted::parse_monomial(text, nvars);
}

inline rooted::MonomialSet mono_set(const std::vector<std::string>& texts, std::size_t nvars) {
  std::vector<rooted::Monomial> out;
  for (const auto& t : texts) out.push_back(mono(t, nvars));
  return rooted::MonomialSet(std::move(out));
}

inline std::vector<std::string> strings(const rooted::GeneratorList& list) {
  return rooted::to_strings(list.gens());
}

inline std::vector<std::string> strings(const rooted::MonomialSet& set) {
  return rooted::to_strings(set.elements());
}

// Hand-rolled generators for property tests; fixed seeds keep runs reproducible.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  rooted::Monomial monomial(std::size_t nvars, unsigned max_exp) {
    std::vector<rooted::Monomial::Exponent> e(nvars);
    for (auto& x : e) x = static_cast<rooted::Monomial::Exponent>(uniform(0, static_cast<int>(max_exp)));
    return rooted::Monomial(std::move(e));
  }

  std::vector<rooted::Monomial> monomials(std::size_t count, std::size_t nvars, unsigned max_exp) {
    std::vector<rooted::Monomial> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(monomial(nvars, max_exp));
    return out;
  }

  // Erdos-Renyi graph with edge probability p_percent / 100.
  rooted::Graph graph(int n, int p_percent) {
    rooted::Graph g(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (uniform(0, 99) < p_percent) g.add_edge(i, j);
    return g;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace test

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rooted/budget.hpp"
#include "rooted/monomial.hpp"
#include "rooted/rooted_order.hpp"

namespace rooted {

enum class PowerMethod { Brute, Pairs };

const char* to_string(PowerMethod m) noexcept;

struct ProductInfo {
  Expression maximal;          // lex-greatest multiset producing the monomial
  std::size_t multiplicity = 0;  // number of multisets producing it
};

// All s-fold products of a generator list, deduplicated by exponent vector.
// Each distinct monomial carries its maximal expression as a certificate.
struct FoldProducts {
  MonomialSet monomials;
  std::unordered_map<Monomial, ProductInfo, MonomialHash> info;
  std::size_t multiset_count = 0;

  const Expression& maximal(const Monomial& m) const { return info.at(m).maximal; }
};

struct PowerGens {
  GeneratorList base;
  unsigned s = 0;
  MonomialSet all_products;  // F(I^s)
  MonomialSet minimal;       // G(I^s)
  PowerMethod method = PowerMethod::Brute;
  std::size_t multiset_count = 0;
  // Multisets whose product is not a minimal generator.
  std::size_t excluded_multiset_count = 0;
};

// Throws BudgetExceeded when C(q+s-1, s) exceeds budget.max_multisets.
void check_multiset_budget(std::size_t q, unsigned s, const Budget& budget);

FoldProducts enumerate_s_fold_products(const GeneratorList& list, unsigned s,
                                       const Budget& budget = {});
MonomialSet s_fold_products(const GeneratorList& list, unsigned s, const Budget& budget = {});

// minimal = minimalize(F(I^s)).
PowerGens min_gens_power_brute(const GeneratorList& list, unsigned s, const Budget& budget = {});

// Index pairs p <= q (0-based) with u_p u_q strictly divisible by another
// 2-fold product.
class BadPairTable {
 public:
  BadPairTable() = default;
  explicit BadPairTable(std::size_t q) : q_(q), bad_(q * q, false) {}

  std::size_t generator_count() const noexcept { return q_; }
  bool is_bad(std::size_t p, std::size_t q) const { return bad_[p * q_ + q]; }
  void mark(std::size_t p, std::size_t q);
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;  // p <= q, sorted
  bool empty() const noexcept { return count_ == 0; }

  // True iff two distinct positions of the sorted multiset form a bad pair;
  // the first such pair is stored in witness.
  bool multiset_has_bad_pair(const std::vector<std::size_t>& indices,
                             std::pair<std::size_t, std::size_t>* witness = nullptr) const;

 private:
  std::size_t q_ = 0;
  std::vector<bool> bad_;
  std::size_t count_ = 0;
};

BadPairTable bad_pair_table(const GeneratorList& list);

// G(I^s) from the pairwise characterisation: the products of s-multisets none
// of whose pairs is bad.  Only valid for path-rooted lists; other inputs
// throw CharacterizationScope.
PowerGens min_gens_power_pairs(const GeneratorList& list, unsigned s, const Budget& budget = {});

struct ClauseResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;

  explicit ClauseResult(std::string clause_name) : name(std::move(clause_name)) {}

  void fail(std::string why) {
    if (passed) counterexample = std::move(why);
    passed = false;
  }
};

struct StructureReport {
  int n = 0;
  unsigned s = 0;
  std::vector<ClauseResult> clauses;
  std::size_t excluded_multiset_count = 0;
  // 1-based bad pairs found inside non-minimal multisets.
  std::vector<std::pair<std::size_t, std::size_t>> reduction_witnesses;

  bool passed() const;
};

// Exhaustively checks, for R(P_n) and power s:
//  (a) the x_{n-1}^s block mirrors F, G and the rooted order of P_{n-2};
//  (b) the x_n^s x_{n-2}^s block mirrors P_{n-3};
//  (c) mixed products project to maximal expressions, and minimal ones to
//      minimal generators, of P_{n-2} and P_{n-3};
//  (d) every non-minimal U has a minimal divisor V that is greater in the
//      rooted order;
//  (e) every non-minimal multiset contains a bad pair.
// Requires n <= 10 and s <= 4, otherwise BudgetExceeded.
StructureReport check_structure_lemmas(int n, unsigned s, const Budget& budget = {});

}  // namespace rooted

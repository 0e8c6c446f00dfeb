#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rooted/budget.hpp"
#include "rooted/monomial.hpp"
#include "rooted/power_gens.hpp"
#include "rooted/rooted_order.hpp"

namespace rooted {

struct LqStep {
  std::size_t r = 0;             // 1-based position of u_r
  MonomialSet colon;             // minimalize({u_i : u_r, i < r})
  std::size_t raw_colon_count = 0;  // distinct elementwise colons before minimalizing
  bool linear = true;
};

struct LqReport {
  GeneratorList ordered;
  bool verdict = true;
  std::optional<std::size_t> failure_index;  // first r whose colon is not variable-generated
  std::vector<LqStep> steps;                 // empty unless colons are retained
};

// Checks that (u_1, ..., u_{r-1}) : (u_r) is generated by variables for every
// r >= 2.  The colon ideal of a monomial ideal by a monomial is generated by
// the elementwise colons, so each step minimalizes {u_i : u_r}.
LqReport has_linear_quotients(const GeneratorList& list, bool retain_colons = true);

// G(J(P_n)^s) via the pairwise characterisation, sorted by the rooted order,
// then checked for linear quotients.
LqReport verify_main_theorem(int n, unsigned s, const Budget& budget = {});

struct ColonPropositionReport {
  int n = 0;
  unsigned s = 0;
  std::vector<ClauseResult> clauses;
  struct PairWitness {
    std::size_t i = 0, j = 0;  // 1-based, 1 < i < j
    int variable = 0;          // a colon variable of u_i dividing u_j
    bool not_minimal = false;
    bool not_maximal = false;
  };
  // Every (i, j) where u_j contains a colon variable of u_i.
  std::vector<PairWitness> pair_witnesses;

  bool passed() const;
};

// (a) x_{n-1} lies in every colon of a Y_r divisible by x_n;
// (b) each colon generator of (u_1..u_{i-1}):(u_i) for a factor u_i of Y_r's
//     maximal expression lies in Y_r's colon;
// (c) if u_j contains a variable of (u_1..u_{i-1}):(u_i), then u_i u_j is not
//     a minimal generator of J^2 or not a maximal expression.
ColonPropositionReport check_colon_propositions(int n, unsigned s, const Budget& budget = {});

// 2ks for n = 3k or 3k+1, 2ks + s for n = 3k+2.  n >= 2.
unsigned reg_formula(int n, unsigned s);

struct RegularityCheck {
  unsigned formula = 0;
  unsigned max_degree = 0;
  bool match = false;
  // The comparison uses reg = max generator degree, which holds for ideals
  // with linear quotients (componentwise linear); it is assumed, not proven here.
  static constexpr const char* assumption = "linear-quotients-implies-reg-equals-max-degree";
};

RegularityCheck verify_regularity(int n, unsigned s, const Budget& budget = {});

}  // namespace rooted

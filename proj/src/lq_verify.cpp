#include "rooted/lq_verify.hpp"

#include <algorithm>

#include "rooted/error.hpp"

namespace rooted {

LqReport has_linear_quotients(const GeneratorList& list, bool retain_colons) {
  LqReport report;
  report.ordered = list;
  std::vector<Monomial> colons;
  for (std::size_t r = 1; r < list.size(); ++r) {
    colons.clear();
    for (std::size_t i = 0; i < r; ++i) colons.push_back(colon(list[i], list[r]));
    MonomialSet raw(std::move(colons));
    colons = {};
    auto mins = minimalize(raw);
    const bool linear =
        std::all_of(mins.begin(), mins.end(), [](const Monomial& m) { return m.degree() == 1; });
    if (!linear && report.verdict) {
      report.verdict = false;
      report.failure_index = r + 1;
    }
    if (retain_colons) report.steps.push_back({r + 1, std::move(mins), raw.size(), linear});
  }
  return report;
}

LqReport verify_main_theorem(int n, unsigned s, const Budget& budget) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "path needs at least one vertex");
  const auto list = rooted_list_path(n);
  const auto gens = min_gens_power_pairs(list, s, budget);
  return has_linear_quotients(sort_rooted(gens.minimal, list, s));
}

bool ColonPropositionReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
}

namespace {

// Membership of a monomial in the ideal generated by gens.
bool in_ideal(const Monomial& m, const MonomialSet& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

}  // namespace

ColonPropositionReport check_colon_propositions(int n, unsigned s, const Budget& budget) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "path needs at least one vertex");
  const auto nv = static_cast<std::size_t>(n);
  ColonPropositionReport report;
  report.n = n;
  report.s = s;
  ClauseResult last_var{"a:x_{n-1}-in-colon"}, inherited{"b:inherited-colons"},
      pair_condition{"c:non-minimal-or-non-maximal"};

  const auto list = rooted_list_path(n);
  const auto base = has_linear_quotients(list);
  const auto gens = min_gens_power_brute(list, s, budget);
  const auto entries = rooted_entries(gens.minimal.elements(), list, s);
  std::vector<Monomial> ordered;
  for (const auto& e : entries) ordered.push_back(e.monomial);
  const auto power = has_linear_quotients(GeneratorList(ordered, Provenance::Custom));

  for (std::size_t r = 1; r < entries.size(); ++r) {
    const auto& colon_r = power.steps[r - 1].colon;
    const auto& y = entries[r];
    if (n >= 2 && y.monomial.exponent(nv) > 0) {
      ++last_var.checked;
      if (!in_ideal(Monomial::variable(nv, nv - 1), colon_r)) {
        last_var.fail("x" + std::to_string(n - 1) + " not in the colon of Y_" +
                      std::to_string(r + 1) + " = " + to_string(y.monomial));
      }
    }
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (y.expression.counts[i] == 0) continue;
      for (const auto& g : base.steps[i - 1].colon) {
        ++inherited.checked;
        if (!in_ideal(g, colon_r)) {
          inherited.fail(to_string(g) + " from the colon of u_" + std::to_string(i + 1) +
                         " missing from the colon of Y_" + std::to_string(r + 1));
        }
      }
    }
  }

  const auto second = min_gens_power_brute(list, 2, budget);
  for (std::size_t i = 1; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      int variable = 0;
      for (const auto& g : base.steps[i - 1].colon) {
        if (g.degree() == 1 && divides(g, list[j])) {
          variable = g.support().front();
          break;
        }
      }
      if (variable == 0) continue;
      ++pair_condition.checked;
      const Monomial product = list[i] * list[j];
      const std::size_t idx[] = {i, j};
      ColonPropositionReport::PairWitness w{i + 1, j + 1, variable,
                                            !second.minimal.contains(product),
                                            maximal_expression(product, list, 2) !=
                                                expression_from_indices(idx, list.size())};
      if (!w.not_minimal && !w.not_maximal) {
        pair_condition.fail("u_" + std::to_string(i + 1) + "u_" + std::to_string(j + 1) +
                            " is minimal and maximal although x" + std::to_string(variable) +
                            " lies in the colon of u_" + std::to_string(i + 1));
      }
      report.pair_witnesses.push_back(w);
    }
  }

  report.clauses = {last_var, inherited, pair_condition};
  return report;
}

unsigned reg_formula(int n, unsigned s) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "regularity formula needs n >= 2");
  const auto k = static_cast<unsigned>(n / 3);
  return n % 3 == 2 ? 2 * k * s + s : 2 * k * s;
}

RegularityCheck verify_regularity(int n, unsigned s, const Budget& budget) {
  RegularityCheck check;
  check.formula = reg_formula(n, s);
  check.max_degree = min_gens_power_pairs(rooted_list_path(n), s, budget).minimal.max_degree();
  check.match = check.formula == check.max_degree;
  return check;
}

}  // namespace rooted

#include "rooted/power_gens.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rooted/error.hpp"
#include "rooted/multiset.hpp"

namespace rooted {

const char* to_string(PowerMethod m) noexcept {
  return m == PowerMethod::Brute ? "brute" : "pairs";
}

void check_multiset_budget(std::size_t q, unsigned s, const Budget& budget) {
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "power must be at least 1");
  const auto count = multiset_count(q, s);
  if (count > budget.max_multisets) {
    throw Error(ErrorKind::BudgetExceeded,
                "C(" + std::to_string(q + s - 1) + "," + std::to_string(s) + ") = " +
                    std::to_string(count) + " multisets exceeds cap " +
                    std::to_string(budget.max_multisets));
  }
}

namespace {

Monomial product_of(const GeneratorList& list, const std::vector<std::size_t>& idx) {
  Monomial m(list.nvars());
  for (auto i : idx) m *= list[i];
  return m;
}

}  // namespace

FoldProducts enumerate_s_fold_products(const GeneratorList& list, unsigned s, const Budget& budget) {
  check_multiset_budget(list.size(), s, budget);
  FoldProducts out;
  std::vector<Monomial> distinct;
  for_each_multiset(list.size(), s, [&](const std::vector<std::size_t>& idx) {
    ++out.multiset_count;
    Monomial m = product_of(list, idx);
    Expression e = expression_from_indices(idx, list.size());
    auto [it, inserted] = out.info.try_emplace(m, ProductInfo{e, 0});
    if (inserted) {
      distinct.push_back(std::move(m));
    } else if (e > it->second.maximal) {
      it->second.maximal = std::move(e);
    }
    ++it->second.multiplicity;
  });
  out.monomials = MonomialSet(std::move(distinct));
  return out;
}

MonomialSet s_fold_products(const GeneratorList& list, unsigned s, const Budget& budget) {
  return enumerate_s_fold_products(list, s, budget).monomials;
}

PowerGens min_gens_power_brute(const GeneratorList& list, unsigned s, const Budget& budget) {
  auto products = enumerate_s_fold_products(list, s, budget);
  PowerGens out{list, s, products.monomials, minimalize(products.monomials), PowerMethod::Brute,
                products.multiset_count, 0};
  for (const auto& [m, info] : products.info) {
    if (!out.minimal.contains(m)) out.excluded_multiset_count += info.multiplicity;
  }
  return out;
}

void BadPairTable::mark(std::size_t p, std::size_t q) {
  if (!bad_[p * q_ + q]) ++count_;
  bad_[p * q_ + q] = true;
  bad_[q * q_ + p] = true;
}

std::vector<std::pair<std::size_t, std::size_t>> BadPairTable::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < q_; ++p)
    for (std::size_t q = p; q < q_; ++q)
      if (is_bad(p, q)) out.emplace_back(p, q);
  return out;
}

bool BadPairTable::multiset_has_bad_pair(const std::vector<std::size_t>& indices,
                                         std::pair<std::size_t, std::size_t>* witness) const {
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      if (is_bad(indices[a], indices[b])) {
        if (witness) *witness = {indices[a], indices[b]};
        return true;
      }
    }
  }
  return false;
}

BadPairTable bad_pair_table(const GeneratorList& list) {
  const auto q = list.size();
  BadPairTable table(q);
  if (q == 0) return table;
  const auto twofold = s_fold_products(list, 2, Budget{multiset_count(q, 2), 0});
  for (std::size_t p = 0; p < q; ++p) {
    for (std::size_t r = p; r < q; ++r) {
      const Monomial m = list[p] * list[r];
      const bool bad = std::any_of(twofold.begin(), twofold.end(),
                                   [&](const Monomial& f) { return strictly_divides(f, m); });
      if (bad) table.mark(p, r);
    }
  }
  return table;
}

PowerGens min_gens_power_pairs(const GeneratorList& list, unsigned s, const Budget& budget) {
  if (list.provenance() != Provenance::PathRooted) {
    throw Error(ErrorKind::CharacterizationScope,
                std::string("pairwise characterisation only covers path rooted lists, got ") +
                    to_string(list.provenance()));
  }
  check_multiset_budget(list.size(), s, budget);
  const auto table = bad_pair_table(list);
  PowerGens out;
  out.base = list;
  out.s = s;
  out.method = PowerMethod::Pairs;
  std::vector<Monomial> all;
  std::vector<Monomial> kept;
  for_each_multiset(list.size(), s, [&](const std::vector<std::size_t>& idx) {
    ++out.multiset_count;
    Monomial m = product_of(list, idx);
    if (table.multiset_has_bad_pair(idx)) {
      ++out.excluded_multiset_count;
    } else {
      kept.push_back(m);
    }
    all.push_back(std::move(m));
  });
  out.all_products = MonomialSet(std::move(all));
  out.minimal = MonomialSet(std::move(kept));
  return out;
}

bool StructureReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
}

namespace {

struct PowerData {
  FoldProducts products;
  MonomialSet minimal;
};

PowerData power_data(const GeneratorList& list, unsigned s, const Budget& budget) {
  auto products = enumerate_s_fold_products(list, s, budget);
  auto minimal = minimalize(products.monomials);
  return {std::move(products), std::move(minimal)};
}

std::string counts_text(const Expression& e) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < e.counts.size(); ++i) out << (i ? "," : "") << e.counts[i];
  out << ')';
  return out.str();
}

Expression slice(const Expression& e, std::size_t from, std::size_t to) {
  Expression out{std::vector<unsigned>(e.counts.begin() + static_cast<std::ptrdiff_t>(from),
                                       e.counts.begin() + static_cast<std::ptrdiff_t>(to)),
                 0};
  for (auto c : out.counts) out.s += c;
  return out;
}

// Pure block of R(P_n): sub is R(P_{n-2}) or R(P_{n-3}) embedded in x_1..x_n,
// its terms appear in R(P_n) multiplied by factor starting at offset.
void check_pure_block(ClauseResult& clause, const PowerData& whole, const GeneratorList& sub,
                      const Monomial& factor, std::size_t offset, std::size_t factor_var,
                      unsigned s, const Budget& budget) {
  const auto part = power_data(sub, s, budget);
  const Monomial lift = factor.pow(s);

  std::size_t in_block = 0;
  for (const auto& w : whole.products.monomials)
    if (w.exponent(factor_var) == s) ++in_block;
  if (in_block != part.products.monomials.size()) {
    clause.fail("block has " + std::to_string(in_block) + " products, sub-path has " +
                std::to_string(part.products.monomials.size()));
  }

  std::vector<const Monomial*> subs;
  std::vector<Monomial> lifted;
  for (const auto& u : part.products.monomials) {
    ++clause.checked;
    Monomial w = u * lift;
    if (!whole.products.monomials.contains(w)) {
      clause.fail(to_string(w) + " missing from F");
      continue;
    }
    if (part.minimal.contains(u) != whole.minimal.contains(w)) {
      clause.fail("minimality of " + to_string(u) + " not preserved by the lift");
    }
    // The maximal expression of the lift lives in the block and equals the
    // sub-path expression.
    const auto& ew = whole.products.maximal(w);
    Expression expected{std::vector<unsigned>(ew.counts.size(), 0), s};
    const auto& eu = part.products.maximal(u);
    std::copy(eu.counts.begin(), eu.counts.end(), expected.counts.begin() + static_cast<std::ptrdiff_t>(offset));
    if (ew != expected) {
      clause.fail("maximal expression of " + to_string(w) + " is " + counts_text(ew) +
                  ", expected " + counts_text(expected));
    }
    subs.push_back(&u);
    lifted.push_back(std::move(w));
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      auto before = part.products.maximal(*subs[i]) <=> part.products.maximal(*subs[j]);
      auto after = whole.products.maximal(lifted[i]) <=> whole.products.maximal(lifted[j]);
      if (before != after) {
        clause.fail("rooted order of " + to_string(*subs[i]) + " and " + to_string(*subs[j]) +
                    " flips under the lift");
      }
    }
  }
}

}  // namespace

StructureReport check_structure_lemmas(int n, unsigned s, const Budget& budget) {
  if (n < 1 || s < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1 and s >= 1");
  if (n > 10 || s > 4) {
    throw Error(ErrorKind::BudgetExceeded, "structure checks are limited to n <= 10, s <= 4");
  }
  const auto nv = static_cast<std::size_t>(n);
  StructureReport report;
  report.n = n;
  report.s = s;
  ClauseResult first{"a:first-block"}, second{"b:second-block"}, mixed{"c:mixed-products"},
      greater{"d:greater-minimal-divisor"}, reduction{"e:bad-pair-reduction"};

  const auto list = rooted_list_path(n);
  const auto whole = power_data(list, s, budget);

  if (n >= 3) {
    const auto sub = rooted_list_path(n - 2, nv);
    check_pure_block(first, whole, sub, Monomial::variable(nv, nv - 1), 0, nv - 1, s, budget);
  }
  if (n >= 4) {
    const auto sub_a = rooted_list_path(n - 2, nv);
    const auto sub_b = rooted_list_path(n - 3, nv);
    const Monomial tail = Monomial::variable(nv, nv) * Monomial::variable(nv, nv - 2);
    check_pure_block(second, whole, sub_b, tail, sub_a.size(), nv, s, budget);

    // Minimal generators of the sub-path powers, by power.
    std::map<unsigned, MonomialSet> min_a, min_b;
    for (unsigned k = 1; k < s; ++k) {
      min_a[k] = power_data(sub_a, k, budget).minimal;
      min_b[k] = power_data(sub_b, k, budget).minimal;
    }
    const std::size_t a = sub_a.size();
    for (const auto& w : whole.products.monomials) {
      const auto& e = whole.products.maximal(w);
      const auto ea = slice(e, 0, a);
      const auto eb = slice(e, a, e.counts.size());
      if (ea.s == 0 || eb.s == 0) continue;
      ++mixed.checked;
      const Monomial u = evaluate(ea, sub_a);
      const Monomial v = evaluate(eb, sub_b);
      if (maximal_expression(u, sub_a, ea.s) != ea) {
        mixed.fail("first-block projection of " + to_string(w) + " is not a maximal expression");
      }
      if (maximal_expression(v, sub_b, eb.s) != eb) {
        mixed.fail("second-block projection of " + to_string(w) + " is not a maximal expression");
      }
      if (whole.minimal.contains(w) && (!min_a[ea.s].contains(u) || !min_b[eb.s].contains(v))) {
        mixed.fail("minimal " + to_string(w) + " projects to a non-minimal factor");
      }
    }
  }

  for (const auto& u : whole.products.monomials) {
    if (whole.minimal.contains(u)) continue;
    ++greater.checked;
    const auto& eu = whole.products.maximal(u);
    bool found = std::any_of(whole.minimal.begin(), whole.minimal.end(), [&](const Monomial& v) {
      return strictly_divides(v, u) && whole.products.maximal(v) > eu;
    });
    if (!found) greater.fail(to_string(u) + " has no greater minimal divisor");
  }

  const auto table = bad_pair_table(list);
  std::set<std::pair<std::size_t, std::size_t>> witnesses;
  for_each_multiset(list.size(), s, [&](const std::vector<std::size_t>& idx) {
    Monomial m(nv);
    for (auto i : idx) m *= list[i];
    if (whole.minimal.contains(m)) return;
    ++report.excluded_multiset_count;
    ++reduction.checked;
    std::pair<std::size_t, std::size_t> w;
    if (table.multiset_has_bad_pair(idx, &w)) {
      witnesses.emplace(w.first + 1, w.second + 1);
    } else {
      reduction.fail("non-minimal " + to_string(m) + " contains no bad pair");
    }
  });
  report.reduction_witnesses.assign(witnesses.begin(), witnesses.end());
  report.clauses = {first, second, mixed, greater, reduction};
  return report;
}

}  // namespace rooted

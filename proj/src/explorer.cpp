#include "rooted/explorer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rooted/error.hpp"
#include "rooted/lq_verify.hpp"
#include "rooted/multiset.hpp"
#include "rooted/power_gens.hpp"

namespace rooted {

const char* to_string(ExploreSummary s) noexcept {
  switch (s) {
    case ExploreSummary::AllPass: return "all-pass";
    case ExploreSummary::FoundOrderPassingAllS: return "found-order-passing-all-s";
    case ExploreSummary::CounterexampleCandidate: return "counterexample-candidate";
    case ExploreSummary::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

struct Partial {
  std::vector<Monomial> gens;
  std::vector<ChooserStep> script;
};

struct PartialSet {
  std::vector<Partial> items;
  bool truncated = false;
};

class ListEnumerator {
 public:
  explicit ListEnumerator(std::size_t cap) : cap_(cap) {}

  const PartialSet& enumerate(const Graph& g) {
    std::vector<bool> key;
    for (Vertex v = 1; v <= g.universe(); ++v) key.push_back(g.is_present(v));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    PartialSet result = compute(g);
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  PartialSet compute(const Graph& g) {
    PartialSet out;
    if (!g.has_edges()) {
      out.items.push_back({{Monomial(static_cast<std::size_t>(g.universe()))}, {}});
      return out;
    }
    std::set<std::vector<Monomial>> seen;
    for (Vertex v : simplicial_vertices(g)) {
      if (g.neighbors(v).empty()) continue;
      std::vector<Vertex> order = g.neighbors(v);
      do {
        std::vector<Vertex> blocks{v};
        blocks.insert(blocks.end(), order.begin(), order.end());

        // Each block's alternatives, already multiplied by N(w).
        std::vector<std::vector<Partial>> choices;
        for (Vertex w : blocks) {
          const Monomial factor = neighborhood_monomial(g, w);
          const auto& sub = enumerate(delete_vertices(g, neighborhood(g, w, true)));
          if (sub.truncated) out.truncated = true;
          std::vector<Partial> lifted;
          for (const auto& p : sub.items) {
            Partial q{{}, p.script};
            for (const auto& m : p.gens) q.gens.push_back(m * factor);
            lifted.push_back(std::move(q));
          }
          choices.push_back(std::move(lifted));
        }

        // Odometer over the cartesian product, last block fastest.
        std::vector<std::size_t> pos(choices.size(), 0);
        while (true) {
          if (out.items.size() == cap_) {
            out.truncated = true;
            return out;
          }
          Partial combined{{}, {ChooserStep{v, order}}};
          for (std::size_t b = 0; b < choices.size(); ++b) {
            const auto& part = choices[b][pos[b]];
            combined.gens.insert(combined.gens.end(), part.gens.begin(), part.gens.end());
            combined.script.insert(combined.script.end(), part.script.begin(), part.script.end());
          }
          if (seen.insert(combined.gens).second) out.items.push_back(std::move(combined));

          std::size_t b = choices.size();
          while (b > 0 && ++pos[b - 1] == choices[b - 1].size()) pos[--b] = 0;
          if (b == 0) break;
        }
      } while (std::next_permutation(order.begin(), order.end()));
    }
    return out;
  }

  std::size_t cap_;
  std::map<std::vector<bool>, PartialSet> memo_;
};

}  // namespace

RootedListEnumeration enumerate_rooted_lists(const Graph& g, std::size_t cap) {
  if (!is_chordal(g)) throw Error(ErrorKind::NotChordal, "rooted lists need a chordal graph");
  if (cap == 0) throw Error(ErrorKind::InvalidArgument, "enumeration cap must be positive");
  ListEnumerator enumerator(cap);
  const auto& found = enumerator.enumerate(g);
  RootedListEnumeration out;
  out.truncated = found.truncated;
  for (const auto& p : found.items) {
    out.lists.push_back({GeneratorList(p.gens, Provenance::ChordalRooted), p.script});
  }
  return out;
}

namespace {

TrialOutcome run_trial(const GeneratorList& list, unsigned s, const Budget& budget) {
  TrialOutcome outcome;
  const auto gens = min_gens_power_brute(list, s, budget);
  outcome.f_equals_g = gens.all_products == gens.minimal;
  outcome.gens_count = gens.minimal.size();
  const auto lq = has_linear_quotients(sort_rooted(gens.minimal, list, s));
  outcome.lq_verdict = lq.verdict;
  if (lq.failure_index) {
    const auto r = *lq.failure_index;
    outcome.failure_index = r;
    std::string colon_text;
    for (const auto& m : lq.steps[r - 2].colon) {
      colon_text += (colon_text.empty() ? "" : ",") + to_string(m);
    }
    outcome.failure_witness = "Y_" + std::to_string(r) + " = " + to_string(lq.ordered[r - 1]) +
                              " has colon (" + colon_text + ")";
  }
  return outcome;
}

}  // namespace

ExploreReport explore(const Graph& g, unsigned max_s, std::size_t cap, const Budget& budget) {
  if (max_s == 0) throw Error(ErrorKind::InvalidArgument, "max power must be at least 1");
  ExploreReport report;
  report.graph = g;
  report.max_s = max_s;
  report.cap = cap;
  report.enumeration = enumerate_rooted_lists(g, cap);

  bool any_complete_pass = false;
  bool every_list_fails = true;
  bool everything_passes = true;
  for (std::size_t li = 0; li < report.enumeration.lists.size(); ++li) {
    const auto& list = report.enumeration.lists[li].list;
    bool complete = true;
    bool passes = true;
    bool fails = false;
    for (unsigned s = 1; s <= max_s; ++s) {
      TrialCell cell{li, s, std::nullopt, {}};
      if (multiset_count(list.size(), s) > budget.max_multisets) {
        cell.skip_reason = "multiset budget exceeded";
        complete = false;
      } else {
        cell.outcome = run_trial(list, s, budget);
        if (!cell.outcome->lq_verdict) {
          passes = false;
          fails = true;
        }
      }
      report.trials.push_back(std::move(cell));
    }
    if (complete && passes) any_complete_pass = true;
    if (!fails) every_list_fails = false;
    if (!complete || !passes) everything_passes = false;
  }

  if (everything_passes) {
    report.summary = ExploreSummary::AllPass;
  } else if (any_complete_pass) {
    report.summary = ExploreSummary::FoundOrderPassingAllS;
  } else if (every_list_fails) {
    report.summary = ExploreSummary::CounterexampleCandidate;
  } else {
    report.summary = ExploreSummary::Inconclusive;
  }
  return report;
}

int exit_status(const ExploreReport& report) noexcept {
  switch (report.summary) {
    case ExploreSummary::AllPass:
    case ExploreSummary::FoundOrderPassingAllS: return 0;
    case ExploreSummary::CounterexampleCandidate: return 2;
    case ExploreSummary::Inconclusive: return 3;
  }
  return 3;
}

}  // namespace rooted

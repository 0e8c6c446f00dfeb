#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rooted/budget.hpp"
#include "rooted/graph.hpp"
#include "rooted/rooted_order.hpp"

namespace rooted {

// A rooted list together with the chooser script that reproduces it through
// rooted_list_chordal.
struct EnumeratedList {
  GeneratorList list;
  std::vector<ChooserStep> script;
};

struct RootedListEnumeration {
  std::vector<EnumeratedList> lists;
  bool truncated = false;  // the cap stopped the enumeration early
};

// Distinct rooted lists over every simplicial pick and every block order of
// the picked vertex's neighbours, at every recursion level.  Order is
// deterministic: picks ascending, block orders lexicographic, earlier blocks
// varying slowest.  Throws NotChordal.
RootedListEnumeration enumerate_rooted_lists(const Graph& g, std::size_t cap);

struct TrialOutcome {
  bool f_equals_g = false;  // F(J^s) = G(J^s)
  bool lq_verdict = false;  // rooted order on G(J^s) has linear quotients
  std::size_t gens_count = 0;
  std::optional<std::size_t> failure_index;
  std::optional<std::string> failure_witness;
};

struct TrialCell {
  std::size_t list_index = 0;
  unsigned s = 0;
  // Empty when the cell exceeded the budget and was skipped.
  std::optional<TrialOutcome> outcome;
  std::string skip_reason;
};

enum class ExploreSummary { AllPass, FoundOrderPassingAllS, CounterexampleCandidate, Inconclusive };

const char* to_string(ExploreSummary s) noexcept;

struct ExploreReport {
  Graph graph;
  unsigned max_s = 0;
  std::size_t cap = 0;
  RootedListEnumeration enumeration;
  std::vector<TrialCell> trials;  // sorted by (list index, s)
  ExploreSummary summary = ExploreSummary::AllPass;
};

ExploreReport explore(const Graph& g, unsigned max_s, std::size_t cap, const Budget& budget = {});

// 0 when some rooted list passes every power, 2 for a counterexample
// candidate, 3 when the budget left the search inconclusive.
int exit_status(const ExploreReport& report) noexcept;

}  // namespace rooted

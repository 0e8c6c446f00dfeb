// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rooted/cover_ideal.hpp"
#include "rooted/graph_io.hpp"
#include "rooted/lq_verify.hpp"
#include "rooted/multiset.hpp"
#include "rooted/power_gens.hpp"
#include "rooted/rooted_order.hpp"

using namespace rooted;

namespace {

// Collects the first few mismatches of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  std::size_t checked() const { return checked_; }
  std::string summary() const {
    std::string out = std::to_string(failed_) + " of " + std::to_string(checked_) + " failed";
    for (const auto& f : failures_) out += "; " + f;
    return out;
  }

 private:
  std::size_t checked_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string name;
  std::optional<double> limit_s;
  std::function<void(Check&)> body;
};

std::string ns(int n, unsigned s) { return "(" + std::to_string(n) + "," + std::to_string(s) + ")"; }

std::vector<std::filesystem::path> fixture_graphs() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(FIXTURE_DIR)) {
    if (entry.path().extension() == ".json") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, unsigned>> main_theorem_grid() {
  std::vector<std::pair<int, unsigned>> grid;
  for (int n = 2; n <= 9; ++n)
    for (unsigned s = 1; s <= 3; ++s) grid.emplace_back(n, s);
  for (int n = 10; n <= 12; ++n) grid.emplace_back(n, 2u);
  return grid;
}

Monomial product(const GeneratorList& list, std::vector<std::size_t> one_based) {
  Monomial m(list.nvars());
  for (auto i : one_based) m *= list[i - 1];
  return m;
}

// Runs the CLI and captures stdout and the exit status.
std::pair<int, std::string> run_cli_process(const std::string& args) {
  const std::string command = std::string(CLI_PATH) + " " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

void rooted_lists_are_covers(Check& c) {
  for (int n = 1; n <= 14; ++n) {
    c.expect(rooted_list_path(n).as_set() == minimal_vertex_covers(Graph::path(n)), "n=" + std::to_string(n));
  }
}

void base_lists_have_linear_quotients(Check& c) {
  for (int n = 2; n <= 14; ++n) c.expect(has_linear_quotients(rooted_list_path(n)).verdict, "P_" + std::to_string(n));
  for (const auto& path : fixture_graphs()) {
    const auto g = load_graph_file(path);
    if (g.universe() > 10) continue;
    c.expect(has_linear_quotients(rooted_list_chordal(g)).verdict, path.filename().string());
  }
}

void main_theorem_instances(Check& c) {
  for (auto [n, s] : main_theorem_grid()) c.expect(verify_main_theorem(n, s).verdict, ns(n, s));
}

void pairs_match_brute(Check& c) {
  for (int n = 2; n <= 9; ++n) {
    const auto list = rooted_list_path(n);
    for (unsigned s = 2; s <= 4; ++s) {
      c.expect(min_gens_power_pairs(list, s).minimal == min_gens_power_brute(list, s).minimal, ns(n, s));
    }
  }
}

void small_path_counts(Check& c) {
  for (int n = 2; n <= 4; ++n) {
    const auto list = rooted_list_path(n);
    for (unsigned s = 1; s <= 6; ++s) {
      const auto gens = min_gens_power_brute(list, s);
      c.expect(gens.minimal.size() == binomial(list.size() + s - 1, s), ns(n, s));
    }
  }
}

void second_power_examples(Check& c) {
  const auto p5 = rooted_list_path(5);
  const auto g5 = min_gens_power_brute(p5, 2);
  c.expect(g5.minimal.size() == 9, "mu(J(P_5)^2) = 9");
  std::vector<Monomial> excluded;
  for (const auto& m : g5.all_products)
    if (!g5.minimal.contains(m)) excluded.push_back(m);
  c.expect(excluded == std::vector<Monomial>{product(p5, {2, 4})}, "only u2u4 excluded");
  c.expect(bad_pair_table(p5).pairs() == std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}}, "bad pairs of P_5");

  const auto p7 = rooted_list_path(7);
  const auto f7 = enumerate_s_fold_products(p7, 2);
  const auto collided = product(p7, {3, 6});
  c.expect(collided == product(p7, {4, 5}), "u3u6 = u4u5");
  c.expect(f7.info.at(collided).multiplicity == 2, "collision detected");
  c.expect(f7.monomials.size() + 1 == f7.multiset_count, "exactly one collision");
  const auto e = maximal_expression(collided, p7, 2);
  c.expect(e && *e == expression_from_indices(std::vector<std::size_t>{2, 5}, p7.size()),
           "maximal expression is u3u6");
}

// The formula split by residue, written out independently of the library.
unsigned reg_by_residue(int n, unsigned s) {
  const unsigned k = static_cast<unsigned>(n / 3);
  return n % 3 == 2 ? 2 * k * s + s : 2 * k * s;
}

void regularity(Check& c) {
  for (auto [n, s] : main_theorem_grid()) c.expect(verify_regularity(n, s).match, ns(n, s));
  for (int n = 2; n <= 15; ++n) {
    const auto base = minimal_vertex_covers(Graph::path(n)).max_degree();
    for (unsigned s = 1; s <= 5; ++s) {
      c.expect(reg_formula(n, s) == reg_by_residue(n, s), "residue table " + ns(n, s));
      c.expect(reg_formula(n, s) == s * base, "cover degree " + ns(n, s));
    }
  }
}

void structure_lemmas(Check& c) {
  for (int n = 4; n <= 9; ++n) {
    for (unsigned s = 2; s <= 3; ++s) {
      const auto structure = check_structure_lemmas(n, s);
      c.expect(structure.passed() && structure.clauses.size() == 5, "structure " + ns(n, s));
      c.expect(check_colon_propositions(n, s).passed(), "colons " + ns(n, s));
    }
  }
}

void diamond_end_to_end(Check& c) {
  const auto list = rooted_list_chordal(Graph::diamond());
  c.expect(to_strings(list.gens()) == std::vector<std::string>{"x2*x3", "x1*x3*x4", "x1*x2*x4"}, "rooted list");
  for (unsigned s = 1; s <= 4; ++s) {
    const auto gens = min_gens_power_brute(list, s);
    c.expect(gens.minimal == gens.all_products, "F = G at s=" + std::to_string(s));
    const auto entries = rooted_entries(gens.minimal.elements(), list, s);
    const auto report = has_linear_quotients(sort_rooted(gens.minimal, list, s));
    c.expect(report.verdict, "linear quotients at s=" + std::to_string(s));
    for (const auto& step : report.steps) {
      const auto& a = entries[step.r - 1].expression.counts;
      const std::vector<std::string> expected =
          a[1] && a[2] ? std::vector<std::string>{"x2", "x3"}
                       : a[2] ? std::vector<std::string>{"x3"} : std::vector<std::string>{"x2"};
      c.expect(to_strings(step.colon.elements()) == expected,
               "colon at s=" + std::to_string(s) + " r=" + std::to_string(step.r));
    }
  }
}

void explorer_evidence(Check& c) {
  for (const auto& path : fixture_graphs()) {
    const std::string args = "explore --graph '" + path.string() + "' --max-power 3";
    const auto first = run_cli_process(args);
    const auto second = run_cli_process(args);
    const auto name = path.filename().string();
    c.expect(first.first == 0, name + " exit " + std::to_string(first.first));
    c.expect(second.first == 0, name + " second exit " + std::to_string(second.first));
    c.expect(!first.second.empty() && first.second == second.second, name + " byte-identical");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "rooted list equals minimal covers, n=1..14", 10.0, rooted_lists_are_covers},
      {2, "linear quotients of base rooted lists", 10.0, base_lists_have_linear_quotients},
      {3, "rooted-sorted path powers have linear quotients", 120.0, main_theorem_instances},
      {4, "pairwise characterization equals brute force", 120.0, pairs_match_brute},
      {5, "small-path generator counts", 5.0, small_path_counts},
      {6, "P_5 second power and P_7 collision", std::nullopt, second_power_examples},
      {7, "regularity formula", std::nullopt, regularity},
      {8, "structure and colon checks", 120.0, structure_lemmas},
      {9, "diamond end-to-end", std::nullopt, diamond_end_to_end},
      {10, "explorer evidence run over fixtures", std::nullopt, explorer_evidence},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Check check;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = !criterion.limit_s || elapsed < *criterion.limit_s;
    const bool ok = error.empty() && check.passed() && in_time && check.checked() > 0;
    if (!ok) ++failures;

    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (ok ? "PASS" : "FAIL") << " [" << criterion.id << "] " << criterion.name << " (" << check.checked()
         << " checks, " << elapsed << " s";
    if (criterion.limit_s) line << " of " << *criterion.limit_s << " s";
    line << ")";
    if (!error.empty()) line << " error: " << error;
    if (!check.passed()) line << " " << check.summary();
    if (!in_time) line << " time limit exceeded";
    std::cout << line.str() << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}

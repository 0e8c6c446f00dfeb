#include "rooted/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rooted/cover_ideal.hpp"
#include "rooted/error.hpp"
#include "rooted/explorer.hpp"
#include "rooted/graph_io.hpp"
#include "rooted/lq_verify.hpp"
#include "rooted/power_gens.hpp"
#include "rooted/report_json.hpp"

namespace rooted {

namespace {

struct Source {
  std::optional<int> path;
  std::string graph_file;

  bool is_path() const { return path.has_value(); }
};

void add_source(CLI::App* cmd, Source& src, bool graph_only = false) {
  if (graph_only) {
    cmd->add_option("--graph", src.graph_file, "graph file (JSON or text)")
        ->required()
        ->check(CLI::ExistingFile);
    return;
  }
  auto* group = cmd->add_option_group("source", "exactly one of --path or --graph");
  group->add_option("--path", src.path, "use the path P_N")->check(CLI::Range(0, 4096));
  group->add_option("--graph", src.graph_file, "graph file (JSON or text)")
      ->check(CLI::ExistingFile);
  group->require_option(1);
}

// Rooted list for the chosen source; graphs use the canonical chooser unless
// one is given.
GeneratorList source_list(const Source& src, const ChordalChooser& chooser = {}) {
  if (src.is_path()) return rooted_list_path(*src.path);
  return rooted_list_chordal(load_graph_file(src.graph_file), chooser);
}

int source_n(const Source& src) {
  return src.is_path() ? *src.path : load_graph_file(src.graph_file).universe();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rooted orders, powers and linear quotients of cover ideals"};
  app.require_subcommand(1);
  Budget budget;
  std::string output_file;
  app.add_option("--max-multisets", budget.max_multisets,
                 "cap on C(q+s-1,s) for power enumeration")
      ->capture_default_str();
  app.add_option("--max-cover-vertices", budget.max_cover_vertices,
                 "cap on graph size for cover enumeration")
      ->capture_default_str();
  app.add_option("-o,--output", output_file, "write the report here instead of stdout");

  Source src;
  std::string chooser_file;
  unsigned power = 1;
  std::string method;
  bool timing = false;
  std::size_t cap = 64;

  auto* rooted_list = app.add_subcommand("rooted-list", "print the rooted list of a path or chordal graph");
  add_source(rooted_list, src);
  rooted_list->add_option("--chooser", chooser_file, "chooser script (JSON)")
      ->check(CLI::ExistingFile);

  auto* gens = app.add_subcommand("gens", "minimal generators of a power of the cover ideal");
  add_source(gens, src);
  gens->add_option("--power", power, "power s")->required()->check(CLI::PositiveNumber);
  gens->add_option("--method", method, "pairs or brute")
      ->required()
      ->check(CLI::IsMember({"pairs", "brute"}));
  gens->add_flag("--timing", timing, "add elapsed_ms to the record");

  auto* check_lq = app.add_subcommand("check-lq", "linear quotients of the rooted-sorted power");
  add_source(check_lq, src);
  check_lq->add_option("--power", power, "power s")->required()->check(CLI::PositiveNumber);

  int reg_n = 0;
  auto* reg = app.add_subcommand("reg", "compare the regularity formula with the max degree");
  reg->add_option("--path", reg_n, "path length N")->required()->check(CLI::Range(2, 4096));
  reg->add_option("--power", power, "power s")->required()->check(CLI::PositiveNumber);

  auto* explore_cmd = app.add_subcommand("explore", "search rooted lists of a chordal graph");
  add_source(explore_cmd, src, true);
  explore_cmd->add_option("--max-power", power, "largest power s")
      ->required()
      ->check(CLI::PositiveNumber);
  explore_cmd->add_option("--cap", cap, "cap on enumerated rooted lists")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  int lemma_n = 0;
  auto* lemmas = app.add_subcommand("check-lemmas", "exhaustive structure and colon checks");
  lemmas->add_option("--path", lemma_n, "path length N")->required()->check(CLI::Range(1, 10));
  lemmas->add_option("--power", power, "power s")->required()->check(CLI::Range(1, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream report;
  int status = kExitOk;
  try {
    if (rooted_list->parsed()) {
      ChordalChooser chooser;
      if (!chooser_file.empty()) {
        if (src.is_path()) throw Error(ErrorKind::InvalidArgument, "--chooser needs --graph");
        chooser = chooser_from_json(read_file(chooser_file));
      }
      report << to_json(source_list(src, chooser)).dump() << '\n';
    } else if (gens->parsed()) {
      GeneratorList list;
      if (src.is_path()) {
        list = rooted_list_path(*src.path);
      } else {
        // Non-chordal graphs still have cover ideals; brute force needs no order.
        const Graph g = load_graph_file(src.graph_file);
        if (is_chordal(g)) {
          list = rooted_list_chordal(g);
        } else {
          const auto covers = minimal_vertex_covers(g, budget);
          list = GeneratorList(std::vector<Monomial>(covers.begin(), covers.end()), Provenance::Custom);
        }
      }
      const auto start = std::chrono::steady_clock::now();
      const auto result = method == "pairs" ? min_gens_power_pairs(list, power, budget)
                                            : min_gens_power_brute(list, power, budget);
      std::optional<double> elapsed;
      if (timing) {
        elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
      report << gens_record(result, source_n(src), src.is_path(), elapsed).dump() << '\n';
    } else if (check_lq->parsed()) {
      LqReport lq;
      if (src.is_path()) {
        lq = verify_main_theorem(*src.path, power, budget);
      } else {
        const auto list = source_list(src);
        lq = has_linear_quotients(sort_rooted(min_gens_power_brute(list, power, budget).minimal, list, power));
      }
      report << to_json(lq).dump() << '\n';
      if (!lq.verdict) status = kExitPropertyFailure;
    } else if (reg->parsed()) {
      const auto check = verify_regularity(reg_n, power, budget);
      report << to_json(check).dump() << '\n';
      if (!check.match) status = kExitPropertyFailure;
    } else if (explore_cmd->parsed()) {
      const auto result = explore(load_graph_file(src.graph_file), power, cap, budget);
      report << to_json(result).dump() << '\n';
      status = exit_status(result);
    } else if (lemmas->parsed()) {
      const auto structure = check_structure_lemmas(lemma_n, power, budget);
      const auto colons = check_colon_propositions(lemma_n, power, budget);
      report << to_json(structure).dump() << '\n' << to_json(colons).dump() << '\n';
      if (!structure.passed() || !colons.passed()) status = kExitPropertyFailure;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::SizeLimit) {
      Json skip;
      skip["skipped"] = true;
      skip["reason"] = e.what();
      report.str("");
      report << skip.dump() << '\n';
      status = kExitBudget;
    } else {
      err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
      return kExitUsage;
    }
  }

  if (output_file.empty()) {
    out << report.str();
  } else {
    std::ofstream file(output_file, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << output_file << '\n';
      return kExitUsage;
    }
    file << report.str();
  }
  return status;
}

}  // namespace rooted

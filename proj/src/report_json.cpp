#include "rooted/report_json.hpp"

#include "rooted/error.hpp"

namespace rooted {

Json to_json(const GeneratorList& list) {
  Json out = Json::array();
  for (const auto& m : list) out.push_back(to_string(m));
  return out;
}

Json to_json(const MonomialSet& set) {
  Json out = Json::array();
  for (const auto& m : set) out.push_back(to_string(m));
  return out;
}

Json to_json(const std::vector<ChooserStep>& script) {
  Json out = Json::array();
  for (const auto& step : script) {
    Json entry = Json::array({step.pick});
    for (Vertex v : step.order) entry.push_back(v);
    out.push_back(std::move(entry));
  }
  return out;
}

Json to_json(const LqReport& report) {
  Json out;
  out["verdict"] = report.verdict;
  if (report.failure_index) out["failure_index"] = *report.failure_index;
  out["length"] = report.ordered.size();
  Json steps = Json::array();
  for (const auto& step : report.steps) {
    Json s;
    s["r"] = step.r;
    s["colon_vars"] = to_json(step.colon);
    s["raw_colon_count"] = step.raw_colon_count;
    steps.push_back(std::move(s));
  }
  out["steps"] = std::move(steps);
  return out;
}

namespace {

Json clauses_json(const std::vector<ClauseResult>& clauses) {
  Json out = Json::array();
  for (const auto& c : clauses) {
    Json j;
    j["clause"] = c.name;
    j["passed"] = c.passed;
    j["checked"] = c.checked;
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

Json to_json(const StructureReport& report) {
  Json out;
  out["report"] = "structure-lemmas";
  out["n"] = report.n;
  out["s"] = report.s;
  out["passed"] = report.passed();
  out["clauses"] = clauses_json(report.clauses);
  out["excluded_multiset_count"] = report.excluded_multiset_count;
  Json pairs = Json::array();
  for (auto [p, q] : report.reduction_witnesses) pairs.push_back({p, q});
  out["bad_pair_witnesses"] = std::move(pairs);
  return out;
}

Json to_json(const ColonPropositionReport& report) {
  Json out;
  out["report"] = "colon-propositions";
  out["n"] = report.n;
  out["s"] = report.s;
  out["passed"] = report.passed();
  out["clauses"] = clauses_json(report.clauses);
  Json pairs = Json::array();
  for (const auto& w : report.pair_witnesses) {
    Json j;
    j["i"] = w.i;
    j["j"] = w.j;
    j["variable"] = "x" + std::to_string(w.variable);
    j["not_minimal"] = w.not_minimal;
    j["not_maximal"] = w.not_maximal;
    pairs.push_back(std::move(j));
  }
  out["pair_witnesses"] = std::move(pairs);
  return out;
}

Json to_json(const RegularityCheck& check) {
  Json out;
  out["formula"] = check.formula;
  out["max_degree"] = check.max_degree;
  out["match"] = check.match;
  out["assumption"] = RegularityCheck::assumption;
  return out;
}

Json to_json(const ExploreReport& report) {
  Json out;
  Json graph;
  graph["n"] = report.graph.universe();
  graph["edges"] = Json::array();
  for (auto [i, j] : report.graph.edges()) graph["edges"].push_back({i, j});
  out["graph"] = std::move(graph);
  out["max_power"] = report.max_s;
  out["cap"] = report.cap;
  out["lists_enumerated"] = report.enumeration.lists.size();
  out["truncated"] = report.enumeration.truncated;
  Json lists = Json::array();
  for (const auto& e : report.enumeration.lists) {
    Json j;
    j["chooser_script"] = to_json(e.script);
    j["rooted_list"] = to_json(e.list);
    lists.push_back(std::move(j));
  }
  out["lists"] = std::move(lists);
  Json trials = Json::array();
  for (const auto& cell : report.trials) {
    Json j;
    j["list_index"] = cell.list_index;
    j["s"] = cell.s;
    if (cell.outcome) {
      j["status"] = "evaluated";
      // F_equals_G always precedes lq_verdict.
      j["F_equals_G"] = cell.outcome->f_equals_g;
      j["lq_verdict"] = cell.outcome->lq_verdict;
      j["gens_count"] = cell.outcome->gens_count;
      if (cell.outcome->failure_index) j["failure_index"] = *cell.outcome->failure_index;
      if (cell.outcome->failure_witness) j["failure_witness"] = *cell.outcome->failure_witness;
    } else {
      j["status"] = "skipped";
      j["reason"] = cell.skip_reason;
    }
    trials.push_back(std::move(j));
  }
  out["trials"] = std::move(trials);
  out["summary"] = to_string(report.summary);
  return out;
}

Json gens_record(const PowerGens& gens, int n, bool is_path, std::optional<double> elapsed_ms) {
  Json out;
  out["source"] = is_path ? "path" : "graph";
  out["n"] = n;
  out["s"] = gens.s;
  out["method"] = to_string(gens.method);
  out["count"] = gens.minimal.size();
  out["max_degree"] = gens.minimal.max_degree();
  out["excluded_multiset_count"] = gens.excluded_multiset_count;
  if (elapsed_ms) out["elapsed_ms"] = *elapsed_ms;
  out["gens"] = to_json(gens.minimal);
  return out;
}

namespace {

ChooserStep step_from_json(const nlohmann::json& j) {
  auto label = [](const nlohmann::json& v) {
    if (!v.is_number_integer()) throw Error(ErrorKind::Parse, "chooser labels must be integers");
    return v.get<Vertex>();
  };
  if (j.is_number_integer()) return {label(j), {}};
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorKind::Parse, "chooser step must be a label or a non-empty array");
  }
  ChooserStep step{label(j[0]), {}};
  for (std::size_t i = 1; i < j.size(); ++i) step.order.push_back(label(j[i]));
  return step;
}

std::vector<ChooserStep> script_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "chooser script must be an array");
  std::vector<ChooserStep> steps;
  for (const auto& s : j) steps.push_back(step_from_json(s));
  return steps;
}

}  // namespace

ChordalChooser chooser_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("chooser JSON: ") + e.what());
  }
  if (doc.is_array()) return ChordalChooser::from_script(script_from_json(doc));
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "chooser must be an array or an object");
  const std::string strategy = doc.value("strategy", std::string("script"));
  if (strategy == "canonical") return ChordalChooser::canonical();
  if (strategy == "largest") return ChordalChooser::largest_label();
  if (strategy == "script") {
    if (!doc.contains("script")) throw Error(ErrorKind::Parse, "chooser object lacks \"script\"");
    return ChordalChooser::from_script(script_from_json(doc["script"]));
  }
  throw Error(ErrorKind::Parse, "unknown chooser strategy '" + strategy + "'");
}

}  // namespace rooted

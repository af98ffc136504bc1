#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "diffgame/characterizations.hpp"
#include "diffgame/diffusion.hpp"
#include "diffgame/equilibrium.hpp"
#include "diffgame/error.hpp"
#include "diffgame/graph.hpp"
#include "diffgame/hardness.hpp"
#include "diffgame/random_experiments.hpp"
#include "diffgame/welfare.hpp"

namespace diffgame {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "diffgame.report/1";

/// Envelope shared by every report: {"schema", "command", "config", "result"}.
inline Json make_report(const std::string& command, Json config, Json result) {
  Json out;
  out["schema"] = kReportSchema;
  out["command"] = command;
  out["config"] = std::move(config);
  out["result"] = std::move(result);
  return out;
}

/// Throws Error unless @p report has the envelope shape with the current schema tag.
inline void validate_report(const Json& report) {
  if (!report.is_object()) throw Error("report must be a JSON object");
  for (const char* key : {"schema", "command", "config", "result"})
    if (!report.contains(key)) throw Error(std::string("report lacks '") + key + "'");
  if (report["schema"] != kReportSchema) throw Error("unknown report schema");
  if (!report["command"].is_string()) throw Error("report command must be a string");
  if (!report["config"].is_object() || !report["result"].is_object())
    throw Error("report config and result must be objects");
}

inline Json graph_summary(const Graph& g) {
  return Json{{"nodes", g.node_count()}, {"edges", g.edge_count()}};
}

inline Json states_json(std::span<const NodeState> states) {
  Json out = Json::array();
  for (NodeState s : states) out.push_back(s.to_string());
  return out;
}

inline Json to_json(const DiffusionOutcome& o) {
  Json out;
  out["utilities"] = o.utilities;
  out["steps"] = o.steps;
  out["gray"] = o.gray_count();
  out["white"] = o.white_count();
  out["final"] = states_json(o.final);
  if (!o.trace.empty()) {
    Json trace = Json::array();
    for (const auto& round : o.trace) trace.push_back(states_json(round));
    out["trace"] = std::move(trace);
  }
  return out;
}

inline Json to_json(const OrderedProfile& p) {
  return Json{{"a", p.a}, {"b", p.b}, {"utility_a", p.utility_a}, {"utility_b", p.utility_b}};
}

inline Json to_json(const EquilibriumReport& r) {
  Json eq = Json::array();
  for (const auto& p : r.equilibria) eq.push_back(to_json(p));
  return Json{{"equilibria", std::move(eq)},
              {"count", r.equilibria.size()},
              {"candidates_examined", r.candidates_examined},
              {"pruned_by_block", r.pruned_by_block},
              {"pruned_by_degree_bound", r.pruned_by_degree_bound},
              {"filters_applied", r.filters_applied}};
}

inline Json pairs_json(const std::vector<OrderedPair>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

inline Json to_json(const CharacterizationVerdict& v) {
  return Json{{"family", v.family},
              {"passed", v.passed()},
              {"asserted", v.asserted},
              {"predicted", pairs_json(v.predicted)},
              {"enumerated", pairs_json(v.enumerated)},
              {"missing", pairs_json(v.missing)},
              {"extra", pairs_json(v.extra)}};
}

inline Json to_json(const CoreReport& r) {
  Json out{{"d", r.d},
           {"passed", r.passed()},
           {"sole_player_ok", r.sole_player_ok},
           {"no_equilibrium_ok", r.no_equilibrium_ok},
           {"deviation_4d_ok", r.deviation_4d_ok},
           {"entrant_cap_ok", r.entrant_cap_ok},
           {"entrant_guarantee", r.entrant_guarantee},
           {"incumbent_position", r.incumbent_position}};
  if (r.sole_player_witness) out["sole_player_witness"] = *r.sole_player_witness;
  if (r.equilibrium_witness) out["equilibrium_witness"] = to_json(*r.equilibrium_witness);
  if (r.deviation_witness) out["deviation_witness"] = Json::array({r.deviation_witness->first, r.deviation_witness->second});
  return out;
}

inline Json region_counts(std::span<const Region> regions) {
  std::size_t left = 0, middle = 0, right = 0, original = 0, extension = 0;
  for (const Region& r : regions) {
    switch (r.kind) {
      case Region::Kind::Left: ++left; break;
      case Region::Kind::Middle: ++middle; break;
      case Region::Kind::RightCore: ++right; break;
      case Region::Kind::Original: ++original; break;
      case Region::Kind::Extension: ++extension; break;
    }
  }
  Json out;
  if (left + middle + right) out = Json{{"left", left}, {"middle", middle}, {"right_core", right}};
  if (original + extension) {
    out["original"] = original;
    out["extension"] = extension;
  }
  return out;
}

inline Json to_json(const GadgetGraph& g) {
  return Json{{"graph", graph_summary(g.graph)},
              {"regions", region_counts(g.regions)},
              {"params", {{"c", g.params.c}, {"d", g.params.d}, {"n_ext", g.params.n_ext}}},
              {"T_size", g.T.size()},
              {"core", g.core_name},
              {"right_optimum", g.right_optimum()},
              {"core_report", to_json(g.core_report)}};
}

inline Json triples_json(const std::vector<Triple>& parts) {
  Json out = Json::array();
  for (const Triple& t : parts) out.push_back(Json::array({t[0], t[1], t[2]}));
  return out;
}

inline Json to_json(const ReductionReport& r) {
  Json out;
  out["solvable"] = r.partition.has_value();
  out["partition"] = r.partition ? triples_json(*r.partition) : Json(nullptr);
  out["partition_profile"] = r.partition_profile ? Json(*r.partition_profile) : Json(nullptr);
  out["partition_utilities"] = r.partition_utilities;
  out["partition_profile_certified"] = r.partition_profile_certified;
  if (r.partition_profile_deviation) {
    const auto& d = *r.partition_profile_deviation;
    out["partition_profile_deviation"] = Json{{"player", d.player}, {"node", d.node}, {"gain", d.gain}};
  }
  out["sweep_found_equilibrium"] = r.sweep_found_equilibrium;
  out["sweep_witness"] = r.sweep_witness ? Json(*r.sweep_witness) : Json(nullptr);
  out["sweep_profiles_examined"] = r.sweep_profiles_examined;
  out["consistent"] = r.consistent();
  return out;
}

inline Json to_json(const SummaryStats& s) {
  return Json{{"mean", s.mean}, {"stddev", s.stddev}, {"stderr", s.stderr_}};
}

/// Summary only; per-trial rows go to CSV.
inline Json to_json(const TrialBatchResult& b) {
  return Json{{"n", b.n},
              {"p", b.p},
              {"trials", b.trials},
              {"seed_policy", b.seed_policy},
              {"master_seed", b.master_seed},
              {"utility_a", to_json(b.utility_a)},
              {"utility_b", to_json(b.utility_b)},
              {"reference_bound", b.reference_bound()},
              {"mean_gray_fraction", b.mean_gray_fraction},
              {"ratio_quantiles",
               {{"q10", b.ratio_q10}, {"q25", b.ratio_q25}, {"q50", b.ratio_q50}, {"q75", b.ratio_q75}, {"q90", b.ratio_q90}}},
              {"ratio_iqr", b.ratio_iqr()},
              {"sandwich_violations", b.total_sandwich_violations}};
}

inline constexpr const char* kTrialCsvHeader = "trial,seed_a,seed_b,utility_a,utility_b,gray,edges,sandwich_violations";

inline std::string trials_csv(const TrialBatchResult& b) {
  std::string out = "# diffgame.er-trials.csv/1 n=" + std::to_string(b.n) + " p=" + Json(b.p).dump() +
                    " trials=" + std::to_string(b.trials) + " policy=" + b.seed_policy +
                    " master_seed=" + std::to_string(b.master_seed) + "\n";
  out += kTrialCsvHeader;
  out += '\n';
  for (const auto& r : b.records)
    out += std::to_string(r.index) + "," + std::to_string(r.seed_a) + "," + std::to_string(r.seed_b) + "," +
           std::to_string(r.utility_a) + "," + std::to_string(r.utility_b) + "," + std::to_string(r.gray) + "," +
           std::to_string(r.edges) + "," + std::to_string(r.sandwich_violations) + "\n";
  return out;
}

inline Json to_json(const TailStats& s) {
  return Json{{"n", s.n},
              {"p", s.p},
              {"lambda", s.lambda},
              {"samples", s.samples},
              {"events", s.events},
              {"empirical", s.empirical},
              {"analytic_bound", s.analytic_bound},
              {"vacuous", s.vacuous},
              {"lower_99", s.lower_99},
              {"consistent", s.consistent}};
}

inline Json to_json(const WelfareBoundReport& r) {
  Json out{{"bound", to_string(r.bound)}, {"bound_value", to_double(r.bound)}};
  if (r.optimum) {
    out["optimum"] = *r.optimum;
    out["witness"] = Json::array({r.witness->first, r.witness->second});
    out["bound_holds"] = r.bound_holds();
  }
  return out;
}

inline Json to_json(const SubmodularityViolation& v) {
  return Json{{"small", v.small},
              {"large", v.large},
              {"x", v.x},
              {"marginal_small", v.marginal_small},
              {"marginal_large", v.marginal_large}};
}

}  // namespace diffgame

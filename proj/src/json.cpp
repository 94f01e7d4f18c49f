#include "scs/json.hpp"

#include <stdexcept>

namespace scs {
namespace {

Json symbol_or_null(const std::optional<Sym>& s) {
  return s ? Json(std::string(1, *s)) : Json(nullptr);
}

Json edge_json(const EdgeRef& e) { return Json{{"tail", e.tail}, {"head", e.head}, {"weight", e.weight}}; }

Json check_json(const PropertyCheck& c) {
  return Json{{"holds", c.holds}, {"witness", c.holds ? Json(nullptr) : Json(c.witness)}};
}

}  // namespace

std::string_view metric_name(Metric m) { return m == Metric::length ? "length" : "uniform"; }

std::string_view algorithm_name(Algorithm a) {
  return a == Algorithm::greedy ? "greedy" : "locally-greedy";
}

Json to_json(const Instance& inst) { return Json(inst.strings()); }

Json to_json(const MergeStep& step) {
  return Json{{"left", step.left}, {"right", step.right}, {"overlap", step.overlap}};
}

Json to_json(const Solution& s) {
  Json per_symbol = Json::object();
  for (const auto& [sym, count] : s.per_symbol) per_symbol[std::string(1, sym)] = count;
  Json log = Json::array();
  for (const auto& step : s.merge_log) log.push_back(to_json(step));
  return Json{{"perm", s.perm},
              {"superstring", s.superstring},
              {"length", s.length},
              {"compression", s.compression},
              {"per_symbol", per_symbol},
              {"merge_log", log}};
}

Json to_json(const PropertyReport& r) {
  return Json{{"p1", check_json(r.p1)},
              {"p2", check_json(r.p2)},
              {"p3", check_json(r.p3)},
              {"p4", check_json(r.p4)},
              {"p4_strict", r.p4_strict},
              {"p4_tight_witness", r.p4_strict ? Json(nullptr) : Json(r.p4_tight_witness)},
              {"pseudo_overlap", r.all_hold()}};
}

Json to_json(const DiagnosticsReport& r) {
  return Json{{"w_bc", r.w_bc},
              {"cm_length", r.cm_length},
              {"shp_length", r.shp_length},
              {"path_length", r.path_length},
              {"laminar_ok", r.laminar_ok},
              {"placement_ok", r.placement_ok},
              {"main2_ok", r.main2_ok}};
}

Json to_json(const PathTrace& t) {
  Json included = Json::array();
  for (const auto& e : t.included) included.push_back(edge_json(e));
  Json rejected = Json::array();
  for (const auto& r : t.rejected) {
    Json e = edge_json(r.edge);
    e["reason"] = r.reason == Rejection::dominated ? "R1" : "R2";
    rejected.push_back(e);
  }
  auto back_edges = [](const std::vector<BackEdge>& edges) {
    Json out = Json::array();
    for (const auto& b : edges) {
      Json e = edge_json(b.edge);
      e["span"] = {b.span.first, b.span.last};
      out.push_back(e);
    }
    return out;
  };
  Json weak = Json::array();
  for (const auto& e : t.weak_links) weak.push_back(edge_json(e));
  Json blocks = Json::array();
  for (const auto& b : t.blocks) blocks.push_back({b.first, b.last});
  Json roles = Json::array();
  for (auto r : t.roles) {
    roles.push_back(r == NodeRole::left ? "left" : r == NodeRole::middle ? "middle" : "right");
  }
  return Json{{"included", included},     {"rejected", rejected},
              {"bad_back_edges", back_edges(t.bad_back_edges)},
              {"culprits", back_edges(t.culprits)},
              {"weak_links", weak},       {"blocks", blocks},
              {"roles", roles}};
}

Json to_json(const SentinelParams& p) {
  return Json{{"m", p.m},
              {"alphas", p.alphas},
              {"betas", p.betas},
              {"sentinel", std::string(1, p.sentinel)}};
}

Json to_json(const RatioReport& r) {
  return Json{{"best_ratio", to_string(r.best_ratio)},
              {"metric", metric_name(r.metric)},
              {"symbol", symbol_or_null(r.symbol)},
              {"witness_instance", r.witness_instance ? to_json(*r.witness_instance) : Json(nullptr)},
              {"witness_solution", r.witness_solution ? to_json(*r.witness_solution) : Json(nullptr)},
              {"witness_index", r.witness_index ? Json(*r.witness_index) : Json(nullptr)},
              {"instances_scanned", r.instances_scanned},
              {"exhausted", r.exhausted},
              {"zero_optimum",
               r.zero_optimum_instance
                   ? Json{{"instance", to_json(*r.zero_optimum_instance)},
                          {"symbol", symbol_or_null(r.zero_optimum_symbol)}}
                   : Json(nullptr)}};
}

Json to_json(const BoundVerdict& v) {
  return Json{{"pass", v.pass},
              {"instances_scanned", v.instances_scanned},
              {"ratio", v.pass ? Json(nullptr) : Json(to_string(v.ratio))},
              {"symbol", symbol_or_null(v.symbol)},
              {"zero_optimum", v.zero_optimum},
              {"counterexample", v.counterexample ? to_json(*v.counterexample) : Json(nullptr)},
              {"counterexample_solution",
               v.counterexample_solution ? to_json(*v.counterexample_solution) : Json(nullptr)},
              {"counterexample_index",
               v.counterexample_index ? Json(*v.counterexample_index) : Json(nullptr)}};
}

Instance instance_from_json(const Json& j) {
  return Instance::from_strings(j.get<std::vector<std::string>>(), {.allow_sentinel = true});
}

MergeStep merge_step_from_json(const Json& j) {
  return MergeStep{j.at("left").get<std::vector<std::size_t>>(),
                   j.at("right").get<std::vector<std::size_t>>(),
                   j.at("overlap").get<std::size_t>()};
}

std::vector<MergeStep> merge_log_from_json(const Json& j) {
  const Json& arr = j.is_object() ? j.at("merge_log") : j;
  if (!arr.is_array()) throw std::invalid_argument("merge log must be an array");
  std::vector<MergeStep> log;
  for (const auto& step : arr) log.push_back(merge_step_from_json(step));
  return log;
}

Solution solution_from_json(const Json& j) {
  Solution s;
  s.perm = j.at("perm").get<std::vector<std::size_t>>();
  s.superstring = j.at("superstring").get<std::string>();
  s.length = j.at("length").get<std::size_t>();
  s.compression = j.at("compression").get<std::size_t>();
  for (const auto& [key, value] : j.at("per_symbol").items()) {
    if (key.size() != 1) throw std::invalid_argument("per_symbol keys are single symbols");
    s.per_symbol[key[0]] = value.get<std::size_t>();
  }
  s.merge_log = merge_log_from_json(j.at("merge_log"));
  return s;
}

}  // namespace scs

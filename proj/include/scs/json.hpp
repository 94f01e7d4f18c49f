#pragma once

#include <json.hpp>

#include "scs/graph.hpp"
#include "scs/instances.hpp"
#include "scs/search.hpp"
#include "scs/solvers.hpp"

namespace scs {

using Json = nlohmann::ordered_json;

Json to_json(const Instance& inst);
Json to_json(const MergeStep& step);
Json to_json(const Solution& s);
Json to_json(const PropertyReport& r);
Json to_json(const DiagnosticsReport& r);
Json to_json(const PathTrace& t);
Json to_json(const SentinelParams& p);
Json to_json(const RatioReport& r);
Json to_json(const BoundVerdict& v);

Instance instance_from_json(const Json& j);
MergeStep merge_step_from_json(const Json& j);
std::vector<MergeStep> merge_log_from_json(const Json& j);  // array or {"merge_log": [...]}
Solution solution_from_json(const Json& j);

std::string_view metric_name(Metric m);
std::string_view algorithm_name(Algorithm a);

}  // namespace scs

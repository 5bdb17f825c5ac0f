#pragma once

// Internal JSON encoders shared by stats, the pipeline descriptor and the
// service. Not installed.

#include "json.hpp"
#include "ocelkit/pipeline.hpp"
#include "ocelkit/stats.hpp"

namespace ocelkit::detail {

using json = nlohmann::ordered_json;

json encode(const Ratio& r);
json encode(const LogSummary& s);
json encode(const RelationMatrix& m);
json encode(const StepDiff& d);
json encode(const DiffReport& d);
json encode(const FilterStep& s);
json encode(const FilterPipeline& p);

/// Throws InvalidArgument describing the first malformed step.
FilterPipeline decode_pipeline(const json& j);

}  // namespace ocelkit::detail

#include "ocelkit/pipeline.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "json_codec.hpp"
#include "ocelkit/errors.hpp"
#include "ocelkit/filters.hpp"
#include "ocelkit/model.hpp"

namespace ocelkit {

namespace {

constexpr std::array<std::string_view, 13> kKindNames{
    "OTF1",        "OTF2",       "OTF3",       "OE1",         "OE2",
    "OE3",         "OA_RATIO",   "OA_EXPLICIT", "OT_EXPLICIT", "E_EXPLICIT",
    "O_EXPLICIT",  "DROP_EMPTY_EVENTS",        "DROP_ORPHAN_OBJECTS"};

bool uses_n(StepKind k) { return k == StepKind::OTF1 || k == StepKind::OTF2 || k == StepKind::OE1 || k == StepKind::OE3; }
bool uses_r(StepKind k) { return k == StepKind::OTF3 || k == StepKind::OA_RATIO; }
bool uses_ids(StepKind k) {
  return k == StepKind::OT_EXPLICIT || k == StepKind::E_EXPLICIT || k == StepKind::O_EXPLICIT;
}

}  // namespace

std::string_view to_string(StepKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<StepKind> step_kind_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == s) return static_cast<StepKind>(i);
  return std::nullopt;
}

std::string FilterStep::label() const {
  std::ostringstream os;
  os << to_string(kind);
  if (uses_n(kind)) os << " n=" << n;
  if (uses_r(kind)) os << " r=" << r;
  if (uses_ids(kind)) os << " (" << ids.size() << " ids)";
  if (kind == StepKind::OA_EXPLICIT) os << " (" << pairs.size() << " pairs)";
  return os.str();
}

void check_step(const FilterStep& step) {
  if (uses_r(step.kind) && !(step.r >= 0.0 && step.r <= 1.0)) {
    std::ostringstream os;
    os << to_string(step.kind) << ": ratio out of range [0, 1]: " << step.r;
    throw InvalidArgument(os.str());
  }
}

OcelLog apply_step(const OcelLog& log, const FilterStep& step) {
  check_step(step);
  switch (step.kind) {
    case StepKind::OTF1: return project_object_types(log, select_types_min_objects(log, step.n));
    case StepKind::OTF2: return project_object_types(log, select_types_min_events(log, step.n));
    case StepKind::OTF3: return project_object_types(log, select_types_min_activity_ratio(log, step.r));
    case StepKind::OE1: return project_events(log, select_events_min_activity_count(log, step.n));
    case StepKind::OE2: return project_events(log, select_events_essential(log));
    case StepKind::OE3: return project_events(log, select_events_essential_or_frequent(log, step.n));
    case StepKind::OA_RATIO: return restrict_relations(log, select_relations_min_unique_ratio(log, step.r));
    case StepKind::OA_EXPLICIT: return restrict_relations(log, resolve_relations(log, step.pairs));
    case StepKind::OT_EXPLICIT: return project_object_types(log, resolve_object_types(log, step.ids));
    case StepKind::E_EXPLICIT: return project_events(log, resolve_events(log, step.ids));
    case StepKind::O_EXPLICIT: return project_objects(log, resolve_objects(log, step.ids));
    case StepKind::DROP_EMPTY_EVENTS: return drop_empty_events(log);
    case StepKind::DROP_ORPHAN_OBJECTS: return drop_orphan_objects(log);
  }
  throw InvalidArgument("unknown step kind");
}

PipelineResult apply_pipeline(const OcelLog& log, const FilterPipeline& pipeline) {
  for (const auto& step : pipeline.steps) check_step(step);
  PipelineResult result{log, {}};
  LogSummary before = summarize(log);
  for (const auto& step : pipeline.steps) {
    result.log = apply_step(result.log, step);
    LogSummary after = summarize(result.log);
    result.diff.steps.push_back(diff(before, after, step.label()));
    before = std::move(after);
  }
  return result;
}

// ---------------------------------------------------------------------------

FilterPipeline parse_pipeline(std::string_view text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw InvalidArgument(std::string("pipeline descriptor: ") + e.what());
  }
  return detail::decode_pipeline(j);
}

std::string write_pipeline(const FilterPipeline& p) { return detail::encode(p).dump(2) + "\n"; }

namespace detail {

json encode(const FilterStep& s) {
  json j = {{"kind", std::string(to_string(s.kind))}};
  if (uses_n(s.kind)) j["n"] = s.n;
  if (uses_r(s.kind)) j["r"] = s.r;
  if (uses_ids(s.kind)) j["ids"] = s.ids;
  if (s.kind == StepKind::OA_EXPLICIT) {
    json pairs = json::array();
    for (const auto& [t, a] : s.pairs) pairs.push_back(json::array({t, a}));
    j["pairs"] = std::move(pairs);
  }
  return j;
}

json encode(const FilterPipeline& p) {
  json steps = json::array();
  for (const auto& s : p.steps) steps.push_back(encode(s));
  return {{"schema", std::string(kPipelineSchema)}, {"steps", std::move(steps)}};
}

FilterPipeline decode_pipeline(const json& j) {
  const json* steps = &j;
  if (j.is_object()) {
    if (auto it = j.find("schema"); it != j.end() && (!it->is_string() || it->get<std::string>() != kPipelineSchema))
      throw InvalidArgument("pipeline descriptor: unsupported schema " + it->dump());
    auto it = j.find("steps");
    if (it == j.end()) throw InvalidArgument("pipeline descriptor: missing \"steps\"");
    steps = &*it;
  }
  if (!steps->is_array()) throw InvalidArgument("pipeline descriptor: \"steps\" must be an array");

  FilterPipeline out;
  for (std::size_t i = 0; i < steps->size(); ++i) {
    const json& s = (*steps)[i];
    const std::string where = "step " + std::to_string(i) + ": ";
    if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string())
      throw InvalidArgument(where + "expected an object with a string \"kind\"");
    const auto kind = step_kind_from_string(s["kind"].get<std::string>());
    if (!kind) throw InvalidArgument(where + "unknown kind " + s["kind"].dump());

    FilterStep step;
    step.kind = *kind;
    if (uses_n(*kind)) {
      auto it = s.find("n");
      if (it == s.end() || !it->is_number_integer() || (!it->is_number_unsigned() && it->get<std::int64_t>() < 0))
        throw InvalidArgument(where + "\"n\" must be a non-negative integer");
      step.n = it->get<std::uint64_t>();
    }
    if (uses_r(*kind)) {
      auto it = s.find("r");
      if (it == s.end() || !it->is_number()) throw InvalidArgument(where + "\"r\" must be a number");
      step.r = it->get<double>();
    }
    if (uses_ids(*kind)) {
      auto it = s.find("ids");
      if (it == s.end() || !it->is_array()) throw InvalidArgument(where + "\"ids\" must be an array of strings");
      for (const auto& id : *it) {
        if (!id.is_string()) throw InvalidArgument(where + "\"ids\" must be an array of strings");
        step.ids.push_back(id.get<std::string>());
      }
    }
    if (*kind == StepKind::OA_EXPLICIT) {
      auto it = s.find("pairs");
      if (it == s.end() || !it->is_array()) throw InvalidArgument(where + "\"pairs\" must be an array");
      for (const auto& p : *it) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
          throw InvalidArgument(where + "each pair must be [type, activity]");
        step.pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
    }
    try {
      check_step(step);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(where + e.what());
    }
    out.steps.push_back(std::move(step));
  }
  return out;
}

}  // namespace detail
}  // namespace ocelkit

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ocelkit/log.hpp"
#include "ocelkit/stats.hpp"

namespace ocelkit {

enum class StepKind : std::uint8_t {
  OTF1,              // types with >= n objects
  OTF2,              // types with >= n related events
  OTF3,              // types with unique-activity ratio >= r
  OE1,               // events whose activity occurs >= n times
  OE2,               // essential events
  OE3,               // OE1(n) or OE2
  OA_RATIO,          // (type, activity) relations with unique-object ratio >= r
  OA_EXPLICIT,       // explicit allowed (type, activity) pairs
  OT_EXPLICIT,       // explicit object types
  E_EXPLICIT,        // explicit events
  O_EXPLICIT,        // explicit objects
  DROP_EMPTY_EVENTS,
  DROP_ORPHAN_OBJECTS,
};

std::string_view to_string(StepKind k);
std::optional<StepKind> step_kind_from_string(std::string_view s);

struct FilterStep {
  StepKind kind = StepKind::OE2;
  std::uint64_t n = 0;
  double r = 0.0;
  /// Type, event or object names for the *_EXPLICIT kinds.
  std::vector<std::string> ids;
  /// (type, activity) names for OA_EXPLICIT.
  std::vector<std::pair<std::string, std::string>> pairs;

  /// Short human label, e.g. "OTF1 n=2".
  std::string label() const;

  friend bool operator==(const FilterStep&, const FilterStep&) = default;
};

struct FilterPipeline {
  std::vector<FilterStep> steps;

  friend bool operator==(const FilterPipeline&, const FilterPipeline&) = default;
};

inline constexpr std::string_view kPipelineSchema = "ocelkit.pipeline/1";

/// Descriptor format:
///   {"schema": "ocelkit.pipeline/1",
///    "steps": [{"kind": "OTF1", "n": 2}, {"kind": "OA_RATIO", "r": 0.5},
///              {"kind": "OA_EXPLICIT", "pairs": [["Orders", "Create Order"]]},
///              {"kind": "OT_EXPLICIT", "ids": ["Orders"]}, ...]}
/// A bare array of steps is accepted as well. Throws InvalidArgument.
FilterPipeline parse_pipeline(std::string_view text);
std::string write_pipeline(const FilterPipeline& p);

/// Range checks that do not need a log (r in [0, 1]). Throws InvalidArgument.
void check_step(const FilterStep& step);

/// Applies one step: the selector feeds the matching projection.
OcelLog apply_step(const OcelLog& log, const FilterStep& step);

struct PipelineResult {
  OcelLog log;
  DiffReport diff;
};

/// Steps run in list order; the diff has one entry per step.
PipelineResult apply_pipeline(const OcelLog& log, const FilterPipeline& pipeline);

}  // namespace ocelkit

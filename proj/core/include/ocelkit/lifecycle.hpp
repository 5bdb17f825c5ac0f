#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ocelkit/log.hpp"

namespace ocelkit {

/// Per-object lifecycles and the interaction lifecycle of every object pair
/// that shares at least one event. Sequences are event positions in the
/// log's order. Pairs that never co-occur are not stored.
class LifecycleIndex {
 public:
  struct PairEntry {
    ObjectId first;   // first < second
    ObjectId second;
    std::uint32_t offset;
    std::uint32_t size;
  };

  explicit LifecycleIndex(const OcelLog& log);

  const OcelLog& log() const noexcept { return *log_; }

  std::span<const std::uint32_t> lifecycle(ObjectId o) const { return log_->positions_of_object(o); }
  /// Empty when the pair never co-occurs (or a == b).
  std::span<const std::uint32_t> interaction(ObjectId a, ObjectId b) const;

  std::span<const PairEntry> pairs() const noexcept { return pairs_; }
  std::span<const std::uint32_t> interaction(const PairEntry& p) const {
    return std::span(positions_).subspan(p.offset, p.size);
  }

 private:
  const OcelLog* log_;
  std::vector<PairEntry> pairs_;  // sorted by (first, second)
  std::vector<std::uint32_t> positions_;
};

/// lif(o). Throws InvalidArgument when `o` is not an object of the log.
std::vector<EventId> lifecycle(const OcelLog& log, ObjectId o);

/// intlif(a, b). Throws InvalidArgument when a == b or either is unknown.
std::vector<EventId> interaction_lifecycle(const OcelLog& log, ObjectId a, ObjectId b);

enum class EssentialRule : std::uint8_t {
  StartsLifecycle = 0,    // EE1
  EndsLifecycle = 1,      // EE2
  StartsInteraction = 2,  // EE3
  EndsInteraction = 3,    // EE4
  Synchronizes = 4,       // EE5
};

inline constexpr std::size_t kEssentialRuleCount = 5;

/// Objects that make a rule fire. `second` equals `first` for the
/// single-lifecycle rules.
struct Witness {
  ObjectId first;
  ObjectId second;
};

struct EssentialTag {
  EventId event;
  std::uint32_t position = 0;
  std::uint8_t rules = 0;  // bit i set <=> EssentialRule(i) fired
  std::array<Witness, kEssentialRuleCount> witnesses{};

  bool has(EssentialRule r) const noexcept { return (rules >> static_cast<unsigned>(r)) & 1u; }
  const Witness& witness(EssentialRule r) const noexcept { return witnesses[static_cast<std::size_t>(r)]; }
};

/// Tags every event that starts or ends a lifecycle, starts or ends an
/// interaction, or lies strictly inside an interaction of two objects while
/// belonging to one of their lifecycles but not to the interaction itself.
/// Result is ordered by position.
std::vector<EssentialTag> essential_events(const OcelLog& log);
std::vector<EssentialTag> essential_events(const LifecycleIndex& index);

}  // namespace ocelkit

#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "ocelkit/log.hpp"

namespace ocelkit {

/// The generator behind every seeded sampler: the standard 64-bit Mersenne
/// Twister, whose output sequence is fixed by the C++ standard. Bounded
/// draws are derived from its raw output (see uniform_below), never through
/// std::uniform_int_distribution, so a seed picks the same sample on every
/// toolchain.
using SampleRng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection on the raw generator output.
std::uint64_t uniform_below(SampleRng& rng, std::uint64_t bound);

/// k distinct indices of [0, population), chosen uniformly (partial
/// Fisher-Yates). Returned in draw order.
std::vector<std::uint32_t> choose_indices(std::uint32_t population, std::uint32_t k, std::uint64_t seed);

/// Uniform sample of k events (SS1). Throws InvalidArgument when k > |E|.
OcelLog sample_events(const OcelLog& log, std::uint64_t k, std::uint64_t seed);

/// Uniform sample of k objects (SS2). Throws InvalidArgument when k > |O|.
OcelLog sample_objects(const OcelLog& log, std::uint64_t k, std::uint64_t seed);

/// Uniform sample of k object types (SS3). Throws InvalidArgument when k > |OT|.
OcelLog sample_object_types(const OcelLog& log, std::uint64_t k, std::uint64_t seed);

/// Partition of the events into classes of the transitive closure of the
/// shared-object relation. Events without objects form singleton blocks.
class SamplePartition {
 public:
  SamplePartition(std::shared_ptr<const OcelLog> log, std::vector<std::vector<EventId>> blocks);

  /// Blocks ordered by their first event; events inside a block in log order.
  std::span<const std::vector<EventId>> blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  std::vector<std::size_t> block_sizes() const;

  /// Sub-log of block `i`, built on demand via project_events.
  OcelLog block_log(std::size_t i) const;

 private:
  std::shared_ptr<const OcelLog> log_;
  std::vector<std::vector<EventId>> blocks_;
};

/// Connected-event sampling (SS4), by union-find over consecutive events of
/// every object lifecycle.
SamplePartition connected_event_samples(std::shared_ptr<const OcelLog> log);
inline SamplePartition connected_event_samples(const OcelLog& log) {
  return connected_event_samples(std::make_shared<const OcelLog>(log));
}

enum class SampleStrategy : std::uint8_t { Events, Objects, ObjectTypes, Connected };

struct SampleSpec {
  SampleStrategy strategy = SampleStrategy::Connected;
  std::uint64_t k = 0;
  std::uint64_t seed = 0;
};

}  // namespace ocelkit

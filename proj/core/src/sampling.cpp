#include "ocelkit/sampling.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "ocelkit/errors.hpp"
#include "ocelkit/model.hpp"

namespace ocelkit {

std::uint64_t uniform_below(SampleRng& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below: empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::uint32_t> choose_indices(std::uint32_t population, std::uint32_t k, std::uint64_t seed) {
  if (k > population)
    throw InvalidArgument("sample size " + std::to_string(k) + " exceeds population " + std::to_string(population));
  std::vector<std::uint32_t> pool(population);
  std::iota(pool.begin(), pool.end(), 0u);
  SampleRng rng(seed);
  for (std::uint32_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::uint32_t>(uniform_below(rng, population - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

namespace {

std::uint32_t checked_k(std::uint64_t k, std::size_t population, const char* what) {
  if (k > population)
    throw InvalidArgument(std::string("k=") + std::to_string(k) + " exceeds the number of " + what + " (" +
                          std::to_string(population) + ")");
  return static_cast<std::uint32_t>(k);
}

}  // namespace

OcelLog sample_events(const OcelLog& log, std::uint64_t k, std::uint64_t seed) {
  const auto n = static_cast<std::uint32_t>(log.event_count());
  std::vector<EventId> kept;
  for (auto i : choose_indices(n, checked_k(k, n, "events"), seed)) kept.push_back(log.events()[i].id);
  return project_events(log, kept);
}

OcelLog sample_objects(const OcelLog& log, std::uint64_t k, std::uint64_t seed) {
  const auto n = static_cast<std::uint32_t>(log.object_count());
  std::vector<ObjectId> kept;
  for (auto i : choose_indices(n, checked_k(k, n, "objects"), seed)) kept.push_back(log.objects()[i].id);
  return project_objects(log, kept);
}

OcelLog sample_object_types(const OcelLog& log, std::uint64_t k, std::uint64_t seed) {
  const auto n = static_cast<std::uint32_t>(log.object_types().size());
  std::vector<ObjectTypeId> kept;
  for (auto i : choose_indices(n, checked_k(k, n, "object types"), seed)) kept.push_back(log.object_types()[i]);
  return project_object_types(log, kept);
}

// ---------------------------------------------------------------------------

SamplePartition::SamplePartition(std::shared_ptr<const OcelLog> log, std::vector<std::vector<EventId>> blocks)
    : log_(std::move(log)), blocks_(std::move(blocks)) {}

std::vector<std::size_t> SamplePartition::block_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.size());
  return out;
}

OcelLog SamplePartition::block_log(std::size_t i) const { return project_events(*log_, blocks_.at(i)); }

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace

SamplePartition connected_event_samples(std::shared_ptr<const OcelLog> log) {
  const auto events = log->events();
  DisjointSets sets(events.size());
  // Joining consecutive events of each lifecycle links every pair that
  // shares the object without materialising the relation.
  for (const ObjectRecord& o : log->objects()) {
    const auto lif = log->positions_of_object(o.id);
    for (std::size_t i = 1; i < lif.size(); ++i) sets.unite(lif[i - 1], lif[i]);
  }

  std::vector<std::uint32_t> block_of_root(events.size(), OcelLog::npos);
  std::vector<std::vector<EventId>> blocks;
  for (std::uint32_t p = 0; p < events.size(); ++p) {
    const auto root = sets.find(p);
    if (block_of_root[root] == OcelLog::npos) {
      block_of_root[root] = static_cast<std::uint32_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of_root[root]].push_back(events[p].id);
  }
  return SamplePartition(std::move(log), std::move(blocks));
}

}  // namespace ocelkit

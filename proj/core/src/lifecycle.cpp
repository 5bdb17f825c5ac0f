#include "ocelkit/lifecycle.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "ocelkit/errors.hpp"

namespace ocelkit {

namespace {

constexpr std::uint64_t pair_key(ObjectId a, ObjectId b) {
  return (static_cast<std::uint64_t>(a.value) << 32) | b.value;
}

std::vector<EventId> to_ids(const OcelLog& log, std::span<const std::uint32_t> positions) {
  std::vector<EventId> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(log.events()[p].id);
  return out;
}

void require_object(const OcelLog& log, ObjectId o) {
  if (!log.has_object(o))
    throw InvalidArgument("unknown object '" +
                          (o.value < log.dict().objects.size() ? log.name(o) : std::to_string(o.value)) + "'");
}

}  // namespace

LifecycleIndex::LifecycleIndex(const OcelLog& log) : log_(&log) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> incidences;
  const auto events = log.events();
  std::vector<ObjectId> present;
  for (std::uint32_t p = 0; p < events.size(); ++p) {
    present.clear();
    for (ObjectId o : events[p].omap)
      if (log.has_object(o)) present.push_back(o);
    for (std::size_t i = 0; i < present.size(); ++i)
      for (std::size_t j = i + 1; j < present.size(); ++j) incidences.emplace_back(pair_key(present[i], present[j]), p);
  }
  std::sort(incidences.begin(), incidences.end());

  positions_.reserve(incidences.size());
  for (std::size_t i = 0; i < incidences.size();) {
    const auto key = incidences[i].first;
    const auto offset = static_cast<std::uint32_t>(positions_.size());
    for (; i < incidences.size() && incidences[i].first == key; ++i) positions_.push_back(incidences[i].second);
    pairs_.push_back({ObjectId{static_cast<std::uint32_t>(key >> 32)}, ObjectId{static_cast<std::uint32_t>(key)}, offset,
                      static_cast<std::uint32_t>(positions_.size()) - offset});
  }
}

std::span<const std::uint32_t> LifecycleIndex::interaction(ObjectId a, ObjectId b) const {
  if (a == b) return {};
  if (b < a) std::swap(a, b);
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), pair_key(a, b),
                             [](const PairEntry& e, std::uint64_t k) { return pair_key(e.first, e.second) < k; });
  if (it == pairs_.end() || it->first != a || it->second != b) return {};
  return interaction(*it);
}

std::vector<EventId> lifecycle(const OcelLog& log, ObjectId o) {
  require_object(log, o);
  return to_ids(log, log.positions_of_object(o));
}

std::vector<EventId> interaction_lifecycle(const OcelLog& log, ObjectId a, ObjectId b) {
  if (a == b) throw InvalidArgument("interaction lifecycle needs two distinct objects");
  require_object(log, a);
  require_object(log, b);
  // Intersection of two sorted position lists.
  const auto la = log.positions_of_object(a);
  const auto lb = log.positions_of_object(b);
  std::vector<std::uint32_t> common;
  std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(common));
  return to_ids(log, common);
}

std::vector<EssentialTag> essential_events(const OcelLog& log) { return essential_events(LifecycleIndex(log)); }

std::vector<EssentialTag> essential_events(const LifecycleIndex& index) {
  const OcelLog& log = index.log();
  const auto events = log.events();
  std::vector<EssentialTag> tags(events.size());

  const auto mark = [&](std::uint32_t pos, EssentialRule rule, ObjectId a, ObjectId b) {
    EssentialTag& t = tags[pos];
    const auto bit = static_cast<std::uint8_t>(1u << static_cast<unsigned>(rule));
    if (t.rules & bit) return;
    t.rules |= bit;
    t.witnesses[static_cast<std::size_t>(rule)] = {a, b};
  };

  for (const ObjectRecord& o : log.objects()) {
    const auto lif = log.positions_of_object(o.id);
    if (lif.empty()) continue;
    mark(lif.front(), EssentialRule::StartsLifecycle, o.id, o.id);
    mark(lif.back(), EssentialRule::EndsLifecycle, o.id, o.id);
  }

  // Intervals (first, last) of interactions with at least two events, keyed
  // by the object whose lifecycle is scanned ("host").
  struct Interval {
    ObjectId host;
    std::uint32_t first;
    std::uint32_t last;
    ObjectId partner;
  };
  std::vector<Interval> intervals;
  for (const auto& pair : index.pairs()) {
    const auto shared = index.interaction(pair);
    mark(shared.front(), EssentialRule::StartsInteraction, pair.first, pair.second);
    mark(shared.back(), EssentialRule::EndsInteraction, pair.first, pair.second);
    if (shared.size() >= 2) {
      intervals.push_back({pair.first, shared.front(), shared.back(), pair.second});
      intervals.push_back({pair.second, shared.front(), shared.back(), pair.first});
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return std::tie(a.host, a.first) < std::tie(b.host, b.first); });

  // Sweep each host lifecycle. An event at position p fires the
  // synchronization rule if some active interval (first < p < last) has a
  // partner missing from the event's omap; such an event then belongs to
  // lif(host) but not to intlif(host, partner). Every rejected candidate is a
  // distinct partner present in the omap, so the scan per event is bounded
  // by |omap| + 1.
  std::set<std::pair<std::uint32_t, ObjectId>> active;  // (last, partner)
  for (std::size_t i = 0; i < intervals.size();) {
    const ObjectId host = intervals[i].host;
    std::size_t end = i;
    while (end < intervals.size() && intervals[end].host == host) ++end;

    active.clear();
    std::size_t next = i;
    for (const auto p : log.positions_of_object(host)) {
      for (; next < end && intervals[next].first < p; ++next) active.emplace(intervals[next].last, intervals[next].partner);
      while (!active.empty() && active.begin()->first <= p) active.erase(active.begin());
      const auto& omap = events[p].omap;
      for (const auto& [last, partner] : active) {
        if (!std::binary_search(omap.begin(), omap.end(), partner)) {
          mark(p, EssentialRule::Synchronizes, host, partner);
          break;
        }
      }
    }
    i = end;
  }

  std::vector<EssentialTag> out;
  for (std::uint32_t p = 0; p < tags.size(); ++p) {
    if (tags[p].rules == 0) continue;
    tags[p].event = events[p].id;
    tags[p].position = p;
    out.push_back(tags[p]);
  }
  return out;
}

}  // namespace ocelkit

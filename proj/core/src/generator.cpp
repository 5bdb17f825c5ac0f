#include "ocelkit/generator.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

#include "ocelkit/errors.hpp"
#include "ocelkit/sampling.hpp"

namespace ocelkit {

namespace {

using std::chrono::minutes;

struct RawEvent {
  Timestamp time;
  std::uint64_t seq;
  std::uint8_t activity;
  std::vector<std::uint32_t> objects;  // indices into the name table
  AttributeMap vmap;
};

constexpr std::array<std::string_view, 6> kActivities{"Create Order",        "Pick Item", "Pack Item",
                                                      "Delivery Successful", "Pay Order", "Record Goods Issue"};
enum Act : std::uint8_t { Create, Pick, Pack, Deliver, Pay, GoodsIssue };

bool chance(SampleRng& rng, double rate) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < rate; }

std::uint32_t in_range(SampleRng& rng, std::uint32_t lo, std::uint32_t hi) {
  return lo + static_cast<std::uint32_t>(uniform_below(rng, std::uint64_t{hi} - lo + 1));
}

}  // namespace

void check(const GenParams& p) {
  if (p.items_min == 0 || p.items_min > p.items_max) throw InvalidArgument("items range must be non-empty and start at 1 or more");
  if (p.deliveries_min == 0 || p.deliveries_min > p.deliveries_max)
    throw InvalidArgument("deliveries range must be non-empty and start at 1 or more");
  if (!(p.global_object_rate >= 0.0 && p.global_object_rate <= 1.0))
    throw InvalidArgument("global object rate out of range [0, 1]");
  if (!(p.goods_issue_rate >= 0.0 && p.goods_issue_rate <= 1.0))
    throw InvalidArgument("goods issue rate out of range [0, 1]");
}

OcelLog generate_o2c(const GenParams& p) {
  check(p);
  if (p.orders == 0) return OcelLog();
  SampleRng rng(p.seed);
  LogBuilder b;
  const AttributeId channel = b.attribute("channel", AttributeType::String);
  const AttributeId amount = b.attribute("amount", AttributeType::Float);
  const AttributeId weight = b.attribute("weight", AttributeType::Float);
  constexpr std::array<std::string_view, 3> kChannels{"web", "store", "phone"};

  std::deque<std::string> names;
  const auto object = [&](std::string name, std::string_view type, AttributeMap ovmap = {}) {
    b.add_object(name, type, std::move(ovmap));
    names.push_back(std::move(name));
    return static_cast<std::uint32_t>(names.size() - 1);
  };

  std::vector<RawEvent> raw;
  const bool any_global = p.global_object_rate > 0.0;
  const std::uint32_t normal = any_global ? object("Normal", "Weight Classes") : 0;
  const auto emit = [&](Timestamp t, Act a, std::vector<std::uint32_t> objs, AttributeMap vmap = {}) {
    if (any_global && chance(rng, p.global_object_rate)) objs.push_back(normal);
    raw.push_back({t, raw.size(), a, std::move(objs), std::move(vmap)});
  };
  const auto step = [&](Timestamp t) { return t + minutes(1 + uniform_below(rng, 600)); };

  const Timestamp base = std::chrono::sys_days{std::chrono::year{2007} / 4 / 1} + std::chrono::hours(7);
  std::uint64_t item_no = 0, delivery_no = 0, issue_no = 0;
  for (std::uint64_t i = 0; i < p.orders; ++i) {
    Timestamp t = base + minutes(i * 90 + uniform_below(rng, 60));
    const std::uint32_t order = object("o" + std::to_string(i + 1), "Orders");
    const std::uint32_t n_items = in_range(rng, p.items_min, p.items_max);
    const std::uint32_t n_deliveries = std::min(n_items, in_range(rng, p.deliveries_min, p.deliveries_max));

    std::vector<std::uint32_t> items, deliveries;
    for (std::uint32_t k = 0; k < n_items; ++k) {
      const double w = static_cast<double>(1 + uniform_below(rng, 2000)) / 100.0;
      items.push_back(object("i" + std::to_string(++item_no), "Items", {{weight, w}}));
    }
    for (std::uint32_t k = 0; k < n_deliveries; ++k)
      deliveries.push_back(object("d" + std::to_string(++delivery_no), "Deliveries"));

    std::vector<std::uint32_t> created{order};
    created.insert(created.end(), items.begin(), items.end());
    emit(t, Create, std::move(created), {{channel, std::string(kChannels[uniform_below(rng, kChannels.size())])}});

    std::vector<Timestamp> delivery_ready(n_deliveries, t);
    for (std::uint32_t k = 0; k < n_items; ++k) {
      t = step(t);
      emit(t, Pick, {order, items[k]});
      if (chance(rng, p.goods_issue_rate)) {
        t = step(t);
        emit(t, GoodsIssue, {items[k], object("r" + std::to_string(++issue_no), "Goods Issues")});
      }
      t = step(t);
      const std::uint32_t d = k % n_deliveries;
      emit(t, Pack, {items[k], deliveries[d]});
      delivery_ready[d] = t;
    }
    Timestamp last = t;
    for (std::uint32_t d = 0; d < n_deliveries; ++d) {
      const Timestamp td = step(delivery_ready[d]);
      emit(td, Deliver, {deliveries[d]});
      last = std::max(last, td);
    }
    const double total = static_cast<double>(10 + uniform_below(rng, 99000)) / 100.0;
    emit(step(last), Pay, {order}, {{amount, total}});
  }

  std::sort(raw.begin(), raw.end(), [](const RawEvent& a, const RawEvent& c) {
    return a.time != c.time ? a.time < c.time : a.seq < c.seq;
  });
  std::vector<std::string_view> objs;
  for (std::size_t n = 0; n < raw.size(); ++n) {
    objs.clear();
    for (auto o : raw[n].objects) objs.push_back(names[o]);
    b.add_event("e" + std::to_string(n + 1), kActivities[raw[n].activity], raw[n].time, objs, std::move(raw[n].vmap));
  }
  return std::move(b).build();
}

}  // namespace ocelkit

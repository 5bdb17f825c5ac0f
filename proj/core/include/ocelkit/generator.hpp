#pragma once

#include <cstdint>

#include "ocelkit/log.hpp"

namespace ocelkit {

/// Shape of a synthetic order-to-cash log. Every order is created with its
/// item list (convergence), each item is picked with the order attached
/// (divergence), packed into one of the order's deliveries and delivered;
/// the order is paid last.
struct GenParams {
  std::uint64_t orders = 100;
  std::uint32_t items_min = 1;
  std::uint32_t items_max = 4;
  std::uint32_t deliveries_min = 1;
  std::uint32_t deliveries_max = 2;
  /// Probability that an event also refers to the log-wide "Normal" object
  /// of type "Weight Classes".
  double global_object_rate = 1.0;
  /// Probability that an item gets a "Record Goods Issue" event with its own
  /// single-event "Goods Issues" object.
  double goods_issue_rate = 0.05;
  std::uint64_t seed = 1;
};

/// Throws InvalidArgument on empty ranges or rates outside [0, 1].
void check(const GenParams& p);

/// Deterministic for a given parameter set. The output passes validate().
OcelLog generate_o2c(const GenParams& p);

}  // namespace ocelkit

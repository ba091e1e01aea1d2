#pragma once

#include "crosscap/curve.hpp"
#include "crosscap/schema.hpp"

#include <string>
#include <utility>
#include <vector>

namespace testing {

using crosscap::Curve;
using crosscap::Rational;

/// Curve on face `face` whose chords join the given occurrence indices, every
/// endpoint at the midpoint of its edge.
inline Curve midpoint_curve(const std::string& id, const std::vector<std::pair<std::size_t, std::size_t>>& hops,
                            std::size_t face = 0) {
  Curve c{id, {}};
  const Rational half(1, 2);
  for (const auto& [from, to] : hops) {
    c.chords.push_back({face, {{face, from}, half}, {{face, to}, half}});
  }
  return c;
}

/// Standard N_g(,b) word puts cross-cap j (0-based) on occurrences 2j, 2j+1.
/// The curve below enters cross-cap order[0] at its second occurrence, and so
/// on around, passing each listed cross-cap exactly once.
inline Curve through_crosscaps(const std::string& id, const std::vector<std::size_t>& order) {
  std::vector<std::pair<std::size_t, std::size_t>> hops;
  for (std::size_t i = 0; i < order.size(); ++i) {
    hops.emplace_back(2 * order[i] + 1, 2 * order[(i + 1) % order.size()]);
  }
  return midpoint_curve(id, hops);
}

}  // namespace testing

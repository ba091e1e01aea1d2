#pragma once

#include "crosscap/curve.hpp"
#include "crosscap/schema.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crosscap {

enum class Role { Base, Shift, Gamma, GammaCore, Tilde, Meridian };

std::string to_string(Role r);
Role parse_role(const std::string& text);

/// Construction bookkeeping for one curve. `level` is the horizontal band the
/// curve occupies in the disc face; meridians use the handle index instead.
struct LevelTag {
  Role role = Role::Base;
  std::optional<int> slope;     ///< 0..2m; absent for cores and meridians
  int level = 0;
  std::optional<int> crosscap;  ///< cross-cap step (gamma, gamma_core, tilde)
  std::optional<int> handle;    ///< meridians

  bool operator==(const LevelTag&) const = default;
};

struct CurveFamily {
  SurfaceSchema schema;
  std::vector<Curve> curves;
  std::vector<std::optional<LevelTag>> tags;  ///< parallel to `curves` (may be empty)

  std::size_t size() const { return curves.size(); }
  const Curve* find(const std::string& id) const;
};

/// Every curve valid on the schema and no two curves sharing an edge point.
ValidityReport validate_family(const CurveFamily& fam);

}  // namespace crosscap

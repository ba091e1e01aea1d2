#pragma once

#include "crosscap/family.hpp"
#include "crosscap/rational.hpp"
#include "crosscap/schema.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace crosscap {

/// Parameters of a Theorem A style build: 2k of the g cross-caps become k
/// handles; m = floor(k/2) slope pairs in the base, n = k - m glued handles.
struct ConstructionParams {
  int g = 0;
  int b = 0;
  int k = 0;

  int m() const { return k / 2; }
  int n() const { return k - k / 2; }
};

enum class LevelKind { Base, Shift, Gamma, Tilde };

/// One horizontal band of parallel lines in the disc face.
struct LevelSpec {
  LevelKind kind = LevelKind::Base;
  int step = 0;            ///< shift count or cross-cap step (1-based)
  bool in_family = true;   ///< Theorem B keeps the base lines out of the family
};

/// Everything the schema and the curves are generated from. The disc is the
/// rectangle [-1,1] x [-(m+1), m+1]; level L has its lines through (0, L/(8*levels))
/// with integer slopes -m..m. Holes sit halfway between consecutive levels;
/// each gamma level carries a cross-cap centred on its common point.
struct Layout {
  int half = 1;                                ///< m; 2m+1 slopes
  std::vector<LevelSpec> levels;
  std::vector<int> holes;                      ///< hole j lies between levels holes[j]-1 and holes[j]
  std::vector<std::pair<int, int>> handles;    ///< pairs of hole indices joined by a cylinder
};

/// The distinguished face where every crossing happens.
struct DiscRegion {
  std::string face_id;
  int slopes = 0;
  /// (slope, level) -> entry position on the left sector, exit position on the right sector.
  std::map<std::pair<int, int>, std::pair<Rational, Rational>> slots;
  Rational slit_slope;
};

struct ConstructionState {
  Layout layout;
  SurfaceSchema schema;
  CurveFamily family;
  DiscRegion disc;
  int next_level = 0;

  /// Set by the build_* entry points for verify_construction().
  std::optional<std::size_t> expected_size;
  std::optional<SurfaceType> expected_type;
};

/// Regenerates schema, disc and family from a layout.
ConstructionState materialize(const Layout& layout);

ConstructionState mrt_base(int m);
ConstructionState mrt_shift_step(const ConstructionState& st);
ConstructionState glue_handles_with_meridians(const ConstructionState& st, int n_pairs);
/// Adds a gamma level (cross-cap + core) and, when `with_tilde`, a 2-sided
/// shifted copy above it.
ConstructionState crosscap_step(const ConstructionState& st, bool with_tilde = true);

ConstructionState build_mrt(int k, int b);
ConstructionState build_theorem_a(int g, int b, std::optional<int> k = std::nullopt);
ConstructionState build_theorem_b(int g, std::optional<int> k = std::nullopt);

int default_k_theorem_a(int g);
int default_k_theorem_b(int g);

/// (2m+1)(2n+b+1)+n
long long size_c(int k, int b);
/// |C| + (g-2k)(4 floor(k/2) + 3)
long long size_gamma(int g, int b, int k);
/// (g-2k)(2k+2)
long long size_omega(int g, int k);
/// g^2/3 + 5g/18 - 1 + b(g-2)/3
Rational bound_theorem_a(int g, int b);
/// (g^2 + 3g + 2)/4
Rational bound_theorem_b(int g);

struct PredictedSizes {
  int k_a = 0;
  int k_b = 0;
  long long size_c = 0;
  long long size_gamma = 0;
  long long size_omega = 0;
  Rational bound_a;
  Rational bound_b;
  std::optional<int> optimal_k_a;
  std::optional<int> optimal_k_b;
};

/// Formula evaluation; optimal k by exhaustive search over legal k (ties prefer the
/// paper's floor(g/3) or floor(g/4), then the smallest k).
PredictedSizes predicted_sizes(int g, int b, std::optional<int> k_a = std::nullopt,
                               std::optional<int> k_b = std::nullopt);

}  // namespace crosscap

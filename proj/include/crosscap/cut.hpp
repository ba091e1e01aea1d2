#pragma once

#include "crosscap/curve.hpp"
#include "crosscap/schema.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crosscap {

/// Which curve, and which side of it, a new boundary circle came from.
struct CircleSource {
  std::string curve_id;
  int side = 0;  ///< 0 for the copy containing side 0 of the first chord.
};

struct CutResult {
  SurfaceSchema schema;                            ///< possibly disconnected
  std::vector<BoundaryCycle> circles;              ///< all boundary circles of `schema`
  std::vector<std::optional<CircleSource>> source; ///< per circle; nullopt = original boundary
  std::vector<std::size_t> circle_component;       ///< per circle, index into `types`
  std::vector<std::vector<std::size_t>> component_faces;
  std::vector<SurfaceType> types;                  ///< per connected component

  /// Circles of component `c` split by origin.
  std::vector<std::size_t> circles_of(std::size_t component) const;
  std::size_t new_circle_count(const std::string& curve_id) const;
};

/// Prefix of the labels minted for the two copies of each chord.
inline constexpr const char* kCutLabelPrefix = "~cut:";

/// Cuts along pairwise disjoint simple curves. Chords subdivide faces; each
/// chord becomes two boundary edges; edges carrying curve points are split
/// into "label#i" pieces indexed along the label's own direction.
CutResult cut_along(const SurfaceSchema& s, const std::vector<Curve>& curves);

std::vector<SurfaceType> cut_classification(const SurfaceSchema& s, const Curve& c);

enum class EssentialReason {
  SingleCrosscapPass,  ///< passes some cross-cap exactly once
  OneSided,            ///< 1-sided curves are never trivial or Möbius boundaries
  CutComplement,       ///< no complementary disc or Möbius band
  BoundsDisc,
  BoundsMobius,
};

std::string to_string(EssentialReason r);

struct EssentialityCertificate {
  bool essential = false;
  EssentialReason reason = EssentialReason::CutComplement;
};

/// Fast path first (single cross-cap pass), then sidedness, then cutting.
EssentialityCertificate is_essential(const SurfaceSchema& s, const Curve& c);

/// Never uses the cross-cap fast path.
EssentialityCertificate is_essential_by_cut(const SurfaceSchema& s, const Curve& c);

bool is_peripheral(const SurfaceSchema& s, const Curve& c);

enum class AnnulusVerdict { CoboundAnnulus, NoAnnulus, Unknown };

std::string to_string(AnnulusVerdict v);

struct AnnulusCertificate {
  AnnulusVerdict verdict = AnnulusVerdict::Unknown;
  std::optional<SurfaceType> witness;  ///< type of the component cobounded by both curves
};

/// Disjoint simple curves are homotopic only if they cobound an embedded
/// annulus, so `NoAnnulus` certifies distinct homotopy classes. Pairs with a
/// positive even crossing count get `Unknown`; odd counts are rejected.
AnnulusCertificate annulus_certificate(const SurfaceSchema& s, const Curve& a, const Curve& b);

bool orientable_after_cut(const SurfaceSchema& s, const Curve& c);

}  // namespace crosscap

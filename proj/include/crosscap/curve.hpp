#pragma once

#include "crosscap/rational.hpp"
#include "crosscap/schema.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crosscap {

/// A transverse passage through an edge occurrence. `pos` is measured along
/// the occurrence's direction and lies strictly inside (0,1).
struct CurvePoint {
  OccurrenceRef occurrence;
  Rational pos;

  bool operator==(const CurvePoint&) const = default;
};

/// Arc across one face. The curve runs from `from` to `to`.
struct Chord {
  std::size_t face = 0;
  CurvePoint from;
  CurvePoint to;
};

/// Closed curve: chord i leaves through `to`, which is glued to the `from`
/// of chord i+1 (cyclically).
struct Curve {
  std::string id;
  std::vector<Chord> chords;
};

enum class Sidedness { OneSided, TwoSided };

std::string to_string(Sidedness s);

ValidityReport validate_curve(const SurfaceSchema& s, const Curve& c);
void require_valid_curve(const SurfaceSchema& s, const Curve& c);

/// Position of a point on its face's boundary cycle.
struct BoundaryKey {
  std::size_t index;
  Rational pos;
  bool operator==(const BoundaryKey&) const = default;
  bool operator<(const BoundaryKey& o) const { return index != o.index ? index < o.index : pos < o.pos; }
};

inline BoundaryKey key_of(const CurvePoint& p) { return {p.occurrence.index, p.pos}; }

/// True iff the endpoints of two chords of one face alternate around it.
/// Throws InvalidInput if the chords share an endpoint.
bool chords_interleave(const Chord& a, const Chord& b);

bool is_simple(const SurfaceSchema& s, const Curve& c);

/// Realised transverse crossings of the two representatives (an upper bound
/// for the geometric intersection number).
int crossings(const SurfaceSchema& s, const Curve& a, const Curve& b);

int mod2_intersection(const SurfaceSchema& s, const Curve& a, const Curve& b);

/// Checks that no two of the given curves touch an edge occurrence at the
/// same position. Throws InvalidInput naming the first collision.
void require_jointly_generic(const std::vector<const Curve*>& curves);

/// Parity of orientation-reversing gluings crossed.
Sidedness sidedness(const SurfaceSchema& s, const Curve& c);

/// Per cross-cap label, the number of passes (endpoints on it / 2).
std::map<std::string, int> crosscap_passes(const SurfaceSchema& s, const Curve& c);

}  // namespace crosscap

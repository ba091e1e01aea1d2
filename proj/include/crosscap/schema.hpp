#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crosscap {

/// Thrown when an operation receives a schema (or curve) that violates its
/// preconditions. Validation functions report instead of throwing.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a computed result contradicts the classification theorem;
/// always signals a bug in the input builder or in this library.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Dir : std::int8_t { Forward = 1, Backward = -1 };

inline Dir flip(Dir d) { return d == Dir::Forward ? Dir::Backward : Dir::Forward; }

/// How the open parameter t along the first occurrence maps onto the second.
enum class Flag { Same, Reversed };

struct Occurrence {
  std::string edge;
  Dir dir = Dir::Forward;

  bool operator==(const Occurrence&) const = default;
};

struct Face {
  std::string id;
  std::vector<Occurrence> word;
};

/// Identity of one edge occurrence: face index plus position in the word.
struct OccurrenceRef {
  std::size_t face = 0;
  std::size_t index = 0;

  auto operator<=>(const OccurrenceRef&) const = default;
};

/// A compact surface given as polygons with cyclic boundary words. Labels
/// occurring once are boundary edges; labels occurring twice are glued.
///
/// The object never throws on construction: malformed inputs are kept so that
/// validate_schema() can report every violation. Topological operations call
/// require_valid() first.
class SurfaceSchema {
 public:
  SurfaceSchema() = default;

  /// Flags are derived from the directions (opposite dirs -> Reversed).
  explicit SurfaceSchema(std::vector<Face> faces);

  /// Explicit flags, e.g. as read from a file; inconsistencies are reported
  /// by validate_schema().
  SurfaceSchema(std::vector<Face> faces, std::map<std::string, Flag> declared_flags);

  const std::vector<Face>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  const Face& face(std::size_t i) const { return faces_.at(i); }
  std::optional<std::size_t> face_index(const std::string& id) const;

  const Occurrence& at(OccurrenceRef r) const { return faces_.at(r.face).word.at(r.index); }

  /// Labels in order of first appearance.
  const std::vector<std::string>& labels() const { return labels_; }

  /// All occurrences of a label (empty for unknown labels).
  const std::vector<OccurrenceRef>& occurrences(const std::string& label) const;

  bool is_free(OccurrenceRef r) const { return occurrences(at(r).edge).size() == 1; }

  /// The other occurrence of a paired label.
  std::optional<OccurrenceRef> partner(OccurrenceRef r) const;

  /// Gluing flag: the declared one if present, otherwise derived.
  Flag flag(const std::string& label) const;

  /// True when both occurrences run the same way (orientation-reversing).
  bool reverses_orientation(const std::string& label) const;

  /// Same-direction self-pairing of two cyclically adjacent occurrences in
  /// one face ("x x"): the cross-cap convention.
  bool is_crosscap(const std::string& label) const;

  /// Parameter map from an occurrence to its partner.
  template <class T>
  T map_position(const std::string& label, const T& t) const {
    return flag(label) == Flag::Same ? t : T(1) - t;
  }

  const std::map<std::string, Flag>& declared_flags() const { return declared_; }

 private:
  void index();

  std::vector<Face> faces_;
  std::map<std::string, Flag> declared_;
  std::vector<std::string> labels_;
  std::map<std::string, std::vector<OccurrenceRef>> occ_;
  std::map<std::string, std::size_t> face_ids_;
};

struct ValidityReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct SurfaceType {
  bool orientable = true;
  int genus = 0;
  int boundary = 0;

  int euler_characteristic() const {
    return orientable ? 2 - 2 * genus - boundary : 2 - genus - boundary;
  }
  auto operator<=>(const SurfaceType&) const = default;

  static SurfaceType orientable_surface(int k, int b) { return {true, k, b}; }
  static SurfaceType nonorientable_surface(int g, int b) { return {false, g, b}; }
};

/// "orientable k=1 b=0" / "non-orientable g=3 b=1".
std::string describe(const SurfaceType& t);

/// One free occurrence on a boundary circle, with the walking direction
/// relative to the occurrence's own direction.
struct BoundaryStep {
  OccurrenceRef occurrence;
  bool forward = true;
};
using BoundaryCycle = std::vector<BoundaryStep>;

ValidityReport validate_schema(const SurfaceSchema& s, bool require_connected = true);
void require_valid(const SurfaceSchema& s, bool require_connected = true);

int euler_characteristic(const SurfaceSchema& s);
std::vector<BoundaryCycle> boundary_cycles(const SurfaceSchema& s);
bool is_orientable(const SurfaceSchema& s);
SurfaceType classify_surface(const SurfaceSchema& s);
std::vector<SurfaceSchema> connected_components(const SurfaceSchema& s);

/// Face indices grouped by gluing reachability, in order of first face.
std::vector<std::vector<std::size_t>> component_faces(const SurfaceSchema& s);

/// Single-face canonical word: handles a_i b_i a_i^- b_i^-, cross-caps x_j x_j,
/// then one c_l e_l c_l^- block per boundary circle (e_l free).
SurfaceSchema standard_schema(const SurfaceType& t);

/// Compact word notation used in tests and diagnostics, e.g. "a b a- b-".
/// Each whitespace-separated token is a label, optionally suffixed by '-'.
SurfaceSchema schema_from_words(const std::vector<std::string>& face_words);

}  // namespace crosscap

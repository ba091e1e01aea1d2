#pragma once

#include "crosscap/construct.hpp"
#include "crosscap/cut.hpp"
#include "crosscap/family.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crosscap {

/// Crossing count the construction promises for two of its curves.
int expected_crossings(const LevelTag& u, const LevelTag& v);

enum class CertificateKind { OddCrossing, SidednessMismatch, NoAnnulus, Unknown };

std::string to_string(CertificateKind k);

struct DistinctnessCertificate {
  CertificateKind kind = CertificateKind::Unknown;
  int crossings = 0;
  std::optional<std::pair<Sidedness, Sidedness>> sidedness;
  std::optional<SurfaceType> cobounded;  ///< annulus check: type of the shared component
  std::string note;                      ///< why the certificate is unknown, if it is
};

struct CurveResult {
  std::string id;
  bool simple = false;
  bool essential = false;
  std::optional<EssentialReason> essential_reason;
  bool peripheral = false;
  std::optional<Sidedness> sidedness;
};

struct PairResult {
  std::size_t a = 0;
  std::size_t b = 0;
  int crossings = 0;
  DistinctnessCertificate certificate;
  std::optional<int> expected;  ///< filled by verify_construction
};

struct VerificationSummary {
  bool is_1_system = false;
  int max_crossings = 0;
  std::size_t count = 0;
  std::size_t unknown_certificates = 0;
};

struct VerificationReport {
  std::vector<CurveResult> curves;
  std::vector<PairResult> pairs;
  VerificationSummary summary;
  /// Construction checks; empty when produced by verify_one_system.
  std::optional<bool> matrix_matches;
  std::optional<bool> size_matches;
  std::optional<bool> type_matches;
  std::optional<SurfaceType> actual_type;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Per-curve and per-pair checks. Pairs run on `workers` threads (0 = hardware
/// concurrency); the report is identical for any worker count.
VerificationReport verify_one_system(const CurveFamily& fam, unsigned workers = 1);

/// verify_one_system plus crossing-matrix, size and surface-type checks.
VerificationReport verify_construction(const ConstructionState& st, unsigned workers = 1);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  /// Upper bound on chord endpoints per edge label (both occurrences share it).
  std::optional<int> max_points_per_label;
  /// Search nodes visited before giving up with BudgetExceeded.
  std::size_t node_budget = 20'000'000;
};

/// Simple closed curves with at most `max_chords` chords, in normal position
/// (no chord returns to the side it left), one per position-order class.
std::vector<Curve> enumerate_small_curves(const SurfaceSchema& s, int max_chords,
                                          const EnumerationOptions& options = {});

}  // namespace crosscap

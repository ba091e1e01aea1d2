#include "crosscap/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

namespace crosscap {

int expected_crossings(const LevelTag& u, const LevelTag& v) {
  if (u.role == Role::Meridian || v.role == Role::Meridian) {
    return 0;
  }
  if (u.role == Role::GammaCore || v.role == Role::GammaCore) {
    const auto& core = u.role == Role::GammaCore ? u : v;
    const auto& other = u.role == Role::GammaCore ? v : u;
    // The core meets every line routed through its own cross-cap once.
    return other.role == Role::Gamma && other.crosscap == core.crosscap ? 1 : 0;
  }
  if (!u.slope || !v.slope) {
    throw InvalidInput("expected_crossings: line tag without a slope");
  }
  if (*u.slope == *v.slope) {
    return 0;
  }
  if (u.role == Role::Gamma && v.role == Role::Gamma && u.crosscap == v.crosscap) {
    return 0;
  }
  return 1;
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::OddCrossing: return "odd_crossing";
    case CertificateKind::SidednessMismatch: return "sidedness_mismatch";
    case CertificateKind::NoAnnulus: return "no_annulus";
    case CertificateKind::Unknown: return "unknown";
  }
  return "?";
}

namespace {

/// Runs task(i) for i in [0, n) on up to `workers` threads.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& task) {
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      task(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
        }
      }
    });
  }
  pool.clear();
  if (error) {
    std::rethrow_exception(error);
  }
}

DistinctnessCertificate certify_pair(const SurfaceSchema& s, const Curve& a, const Curve& b, int x,
                                     const std::optional<Sidedness>& sa, const std::optional<Sidedness>& sb) {
  DistinctnessCertificate cert;
  cert.crossings = x;
  if (x % 2 == 1) {
    cert.kind = CertificateKind::OddCrossing;
    return cert;
  }
  if (sa && sb && *sa != *sb) {
    cert.kind = CertificateKind::SidednessMismatch;
    cert.sidedness = std::make_pair(*sa, *sb);
    return cert;
  }
  if (x > 0) {
    cert.note = "even positive crossing count";
    return cert;
  }
  if (!sa || !sb) {
    cert.note = "curve is not simple";
    return cert;
  }
  const auto ann = annulus_certificate(s, a, b);
  cert.cobounded = ann.witness;
  if (ann.verdict == AnnulusVerdict::NoAnnulus) {
    cert.kind = CertificateKind::NoAnnulus;
  } else {
    cert.note = to_string(ann.verdict);
  }
  return cert;
}

}  // namespace

VerificationReport verify_one_system(const CurveFamily& fam, unsigned workers) {
  require_valid(fam.schema, false);
  std::vector<const Curve*> ptrs;
  for (const auto& c : fam.curves) {
    require_valid_curve(fam.schema, c);
    ptrs.push_back(&c);
  }
  require_jointly_generic(ptrs);

  const auto& s = fam.schema;
  const std::size_t n = fam.curves.size();
  VerificationReport report;
  report.curves.resize(n);
  parallel_for(n, workers, [&](std::size_t i) {
    const auto& c = fam.curves[i];
    auto& r = report.curves[i];
    r.id = c.id;
    r.simple = is_simple(s, c);
    if (!r.simple) {
      return;
    }
    r.sidedness = sidedness(s, c);
    const auto ess = is_essential(s, c);
    r.essential = ess.essential;
    r.essential_reason = ess.reason;
    r.peripheral = is_peripheral(s, c);
  });

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      report.pairs.push_back({i, j, 0, {}, std::nullopt});
    }
  }
  parallel_for(report.pairs.size(), workers, [&](std::size_t p) {
    auto& pr = report.pairs[p];
    const auto& a = fam.curves[pr.a];
    const auto& b = fam.curves[pr.b];
    pr.crossings = crossings(s, a, b);
    pr.certificate = certify_pair(s, a, b, pr.crossings, report.curves[pr.a].sidedness, report.curves[pr.b].sidedness);
  });

  auto& sum = report.summary;
  sum.count = n;
  for (const auto& r : report.curves) {
    if (!r.simple) {
      report.failures.push_back(r.id + ": not simple");
    } else if (!r.essential) {
      report.failures.push_back(r.id + ": inessential (" + to_string(*r.essential_reason) + ")");
    } else if (r.peripheral) {
      report.failures.push_back(r.id + ": peripheral");
    }
  }
  for (const auto& pr : report.pairs) {
    sum.max_crossings = std::max(sum.max_crossings, pr.crossings);
    const auto label = fam.curves[pr.a].id + " / " + fam.curves[pr.b].id;
    if (pr.crossings > 1) {
      report.failures.push_back(label + ": " + std::to_string(pr.crossings) + " crossings");
    }
    if (pr.certificate.kind == CertificateKind::Unknown) {
      ++sum.unknown_certificates;
      report.failures.push_back(label + ": no distinctness certificate (" + pr.certificate.note + ")");
    }
  }
  sum.is_1_system = report.failures.empty();
  return report;
}

VerificationReport verify_construction(const ConstructionState& st, unsigned workers) {
  const auto& fam = st.family;
  auto report = verify_one_system(fam, workers);

  bool tags_complete = fam.tags.size() == fam.size() &&
                       std::all_of(fam.tags.begin(), fam.tags.end(), [](const auto& t) { return t.has_value(); });
  if (!tags_complete) {
    report.failures.push_back("family lacks construction tags");
    report.matrix_matches = false;
  } else {
    bool match = true;
    for (auto& pr : report.pairs) {
      pr.expected = expected_crossings(*fam.tags[pr.a], *fam.tags[pr.b]);
      if (*pr.expected != pr.crossings) {
        match = false;
        report.failures.push_back(fam.curves[pr.a].id + " / " + fam.curves[pr.b].id + ": " +
                                  std::to_string(pr.crossings) + " crossings, expected " +
                                  std::to_string(*pr.expected));
      }
    }
    report.matrix_matches = match;
  }

  // Every crossing must sit in the disc face.
  const auto disc = fam.schema.face_index(st.disc.face_id);
  if (!disc) {
    report.failures.push_back("disc face '" + st.disc.face_id + "' not found");
  }
  for (const auto& pr : disc ? report.pairs : std::vector<PairResult>{}) {
    const auto& a = fam.curves[pr.a];
    const auto& b = fam.curves[pr.b];
    int outside = 0;
    for (const auto& ca : a.chords) {
      for (const auto& cb : b.chords) {
        if (ca.face == cb.face && ca.face != *disc && chords_interleave(ca, cb)) {
          ++outside;
        }
      }
    }
    if (outside > 0) {
      report.failures.push_back(a.id + " / " + b.id + ": crossing outside the disc face");
    }
  }

  if (st.expected_size) {
    report.size_matches = fam.size() == *st.expected_size;
    if (!*report.size_matches) {
      report.failures.push_back("family has " + std::to_string(fam.size()) + " curves, formula gives " +
                                std::to_string(*st.expected_size));
    }
  }
  report.actual_type = classify_surface(fam.schema);
  if (st.expected_type) {
    report.type_matches = *report.actual_type == *st.expected_type;
    if (!*report.type_matches) {
      report.failures.push_back("surface is " + describe(*report.actual_type) + ", expected " +
                                describe(*st.expected_type));
    }
  }
  report.summary.is_1_system = report.summary.is_1_system && report.failures.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Enumeration in normal coordinates: per face, a count of parallel arcs for
// every pair of distinct glued sides. Non-crossing supports with balanced
// counts on both occurrences of each label determine a unique multicurve; the
// connected ones are kept.

namespace {

struct ArcSlot {
  std::size_t face;
  std::size_t i;
  std::size_t j;
};

bool slots_cross(const ArcSlot& a, const ArcSlot& b) {
  if (a.face != b.face) {
    return false;
  }
  if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) {
    return false;
  }
  const bool in_i = a.i < b.i && b.i < a.j;
  const bool in_j = a.i < b.j && b.j < a.j;
  return in_i != in_j;
}

class Enumerator {
 public:
  Enumerator(const SurfaceSchema& s, int max_chords, const EnumerationOptions& opts)
      : s_(s), max_chords_(max_chords), opts_(opts) {
    for (std::size_t f = 0; f < s.face_count(); ++f) {
      const auto& w = s.face(f).word;
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          if (!s.is_free({f, i}) && !s.is_free({f, j})) {
            slots_.push_back({f, i, j});
          }
        }
      }
    }
    counts_.assign(slots_.size(), 0);
    // A label is final once every slot touching either occurrence is decided.
    std::map<std::string, std::size_t> last;
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      const auto& w = s.face(slots_[k].face).word;
      last[w[slots_[k].i].edge] = k;
      last[w[slots_[k].j].edge] = k;
    }
    check_after_.resize(slots_.size());
    for (const auto& [label, k] : last) {
      check_after_[k].push_back(label);
    }
  }

  std::vector<Curve> run() {
    dfs(0, 0);
    return std::move(found_);
  }

 private:
  int points_on(const OccurrenceRef& ref) const {
    int total = 0;
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      if (counts_[k] > 0 && slots_[k].face == ref.face && (slots_[k].i == ref.index || slots_[k].j == ref.index)) {
        total += counts_[k];
      }
    }
    return total;
  }

  bool balanced(const std::string& label) const {
    const auto& occ = s_.occurrences(label);
    const int a = points_on(occ[0]);
    if (a != points_on(occ[1])) {
      return false;
    }
    return !opts_.max_points_per_label || a <= *opts_.max_points_per_label;
  }

  void dfs(std::size_t k, int used) {
    if (++nodes_ > opts_.node_budget) {
      throw BudgetExceeded("enumeration exceeded its budget of " + std::to_string(opts_.node_budget) + " nodes");
    }
    if (k == slots_.size()) {
      if (used > 0) {
        emit();
      }
      return;
    }
    bool blocked = false;
    for (std::size_t q = 0; q < k && !blocked; ++q) {
      blocked = counts_[q] > 0 && slots_cross(slots_[q], slots_[k]);
    }
    const int top = blocked ? 0 : max_chords_ - used;
    for (int c = 0; c <= top; ++c) {
      counts_[k] = c;
      const bool ok = std::all_of(check_after_[k].begin(), check_after_[k].end(),
                                  [&](const std::string& label) { return balanced(label); });
      if (ok) {
        dfs(k + 1, used + c);
      }
    }
    counts_[k] = 0;
  }

  void emit() {
    // Endpoint positions on every occurrence, following normal-arc nesting.
    struct End {
      std::size_t slot;
      int copy;
      int which;  // 0 at side i, 1 at side j
    };
    std::map<OccurrenceRef, std::vector<End>> on_side;
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      if (counts_[k] == 0) {
        continue;
      }
      const auto& sl = slots_[k];
      for (int c = 0; c < counts_[k]; ++c) {
        on_side[{sl.face, sl.i}].push_back({k, c, 0});
        on_side[{sl.face, sl.j}].push_back({k, c, 1});
      }
    }
    std::map<std::tuple<std::size_t, int, int>, CurvePoint> point_of;
    for (auto& [ref, ends] : on_side) {
      const auto m = s_.face(ref.face).word.size();
      auto far_distance = [&](const End& e) {
        const auto other = e.which == 0 ? slots_[e.slot].j : slots_[e.slot].i;
        return (other + m - ref.index) % m;
      };
      // Arcs to sides further ahead leave earlier; parallel copies nest, so
      // copy order is reversed at the far end.
      std::sort(ends.begin(), ends.end(), [&](const End& a, const End& b) {
        const auto da = far_distance(a);
        const auto db = far_distance(b);
        if (da != db) {
          return da > db;
        }
        return a.which == 0 ? a.copy < b.copy : a.copy > b.copy;
      });
      const auto total = static_cast<std::int64_t>(ends.size());
      for (std::size_t p = 0; p < ends.size(); ++p) {
        point_of[{ends[p].slot, ends[p].copy, ends[p].which}] = {ref, Rational(static_cast<std::int64_t>(p) + 1, total + 1)};
      }
    }
    std::map<std::pair<OccurrenceRef, Rational>, std::pair<std::size_t, int>> arc_at;  // -> (arc, end)
    std::vector<std::pair<CurvePoint, CurvePoint>> arcs;
    std::vector<std::size_t> arc_face;
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      for (int c = 0; c < counts_[k]; ++c) {
        const auto p0 = point_of.at({k, c, 0});
        const auto p1 = point_of.at({k, c, 1});
        arc_at[{p0.occurrence, p0.pos}] = {arcs.size(), 0};
        arc_at[{p1.occurrence, p1.pos}] = {arcs.size(), 1};
        arcs.emplace_back(p0, p1);
        arc_face.push_back(slots_[k].face);
      }
    }
    // Trace from arc 0; keep the result only if it uses every arc.
    Curve curve;
    std::size_t arc = 0;
    int entry = 0;
    for (std::size_t guard = 0; guard <= arcs.size(); ++guard) {
      const auto& a = arcs[arc];
      const auto& from = entry == 0 ? a.first : a.second;
      const auto& to = entry == 0 ? a.second : a.first;
      curve.chords.push_back({arc_face[arc], from, to});
      const auto& label = s_.at(to.occurrence).edge;
      const auto partner = *s_.partner(to.occurrence);
      const auto next = arc_at.at({partner, s_.map_position(label, to.pos)});
      arc = next.first;
      entry = next.second;
      if (arc == 0 && entry == 0) {
        break;
      }
    }
    if (curve.chords.size() != arcs.size()) {
      return;
    }
    curve.id = "e" + std::to_string(found_.size() + 1);
    found_.push_back(std::move(curve));
  }

  const SurfaceSchema& s_;
  int max_chords_;
  EnumerationOptions opts_;
  std::vector<ArcSlot> slots_;
  std::vector<int> counts_;
  std::vector<std::vector<std::string>> check_after_;
  std::vector<Curve> found_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<Curve> enumerate_small_curves(const SurfaceSchema& s, int max_chords, const EnumerationOptions& options) {
  require_valid(s, false);
  if (s.face_count() > 2 || s.labels().size() > 12) {
    throw InvalidInput("enumeration supports at most 2 faces and 12 edge labels");
  }
  if (max_chords < 1 || max_chords > 8) {
    throw InvalidInput("max_chords must lie in 1..8");
  }
  return Enumerator(s, max_chords, options).run();
}

}  // namespace crosscap

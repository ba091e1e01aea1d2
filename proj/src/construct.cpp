#include "crosscap/construct.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace crosscap {

namespace {

enum class FeatureKind { Hole, Crosscap };

struct Feature {
  FeatureKind kind;
  int index;        // hole index or cross-cap step
  int level;        // gamma level for cross-caps, upper level for holes
  Rational cy;      // centre height (centre x is 0)
  std::string edge; // "e<j>" or "x<i>"
  std::string slit;
};

struct Line {
  int level;
  int slope;  // 0..2m
  int sigma;  // slope - m
  Rational c;
};

struct SlitCrossing {
  Rational x;
  std::size_t feature;
};

// Slopes tried for the slits, all strictly between 0 and 1 so that every slit
// foot lands in the gap between the sectors of slopes 0 and 1.
constexpr std::array<std::pair<int, int>, 8> kSlitSlopes{
    {{1, 2}, {5, 11}, {6, 11}, {7, 15}, {8, 15}, {9, 19}, {10, 19}, {11, 23}}};

std::string level_curve_id(const LevelSpec& spec, int level, int slope) {
  switch (spec.kind) {
    case LevelKind::Base:
    case LevelKind::Shift:
      return "C" + std::to_string(level + 1) + ".s" + std::to_string(slope);
    case LevelKind::Gamma:
      return "G" + std::to_string(spec.step) + ".s" + std::to_string(slope);
    case LevelKind::Tilde:
      return "T" + std::to_string(spec.step) + ".s" + std::to_string(slope);
  }
  return "?";
}

Role level_role(LevelKind kind) {
  switch (kind) {
    case LevelKind::Base: return Role::Base;
    case LevelKind::Shift: return Role::Shift;
    case LevelKind::Gamma: return Role::Gamma;
    case LevelKind::Tilde: return Role::Tilde;
  }
  return Role::Base;
}

bool is_mrt_level(LevelKind kind) { return kind == LevelKind::Base || kind == LevelKind::Shift; }

}  // namespace

ConstructionState materialize(const Layout& layout) {
  const int m = layout.half;
  const int slopes = 2 * m + 1;
  const int level_count = static_cast<int>(layout.levels.size());
  if (m < 0 || level_count < 1) {
    throw InvalidInput("layout needs m >= 0 and at least one level");
  }
  const Rational delta(1, 8 * level_count);
  const Rational rho = delta / Rational(8 * (m + 1));
  const Rational half_height = rho * Rational(m + 1);
  const Rational one(1);

  std::vector<Feature> features;
  for (std::size_t j = 0; j < layout.holes.size(); ++j) {
    const int upper = layout.holes[j];
    if (upper < 1 || upper >= level_count) {
      throw InvalidInput("hole placed outside the level range");
    }
    features.push_back({FeatureKind::Hole, static_cast<int>(j), upper,
                        (Rational(upper) - Rational(1, 2)) * delta, "e" + std::to_string(j), ""});
  }
  for (int L = 0; L < level_count; ++L) {
    if (layout.levels[L].kind == LevelKind::Gamma) {
      const int step = layout.levels[L].step;
      features.push_back({FeatureKind::Crosscap, step, L, Rational(L) * delta, "x" + std::to_string(step), ""});
    }
  }
  std::sort(features.begin(), features.end(), [](const Feature& a, const Feature& b) { return a.cy < b.cy; });
  for (auto& f : features) {
    f.slit = "h." + f.edge;
  }

  std::vector<Line> lines;
  for (int L = 0; L < level_count; ++L) {
    if (!layout.levels[L].in_family) {
      continue;
    }
    for (int s = 0; s < slopes; ++s) {
      lines.push_back({L, s, s - m, Rational(L) * delta});
    }
  }

  // Pick a slit slope for which no two lines meet a slit at the same point.
  Rational zeta;
  std::vector<std::vector<SlitCrossing>> crossings_of_line;
  bool found = false;
  // Fixed early candidates keep small builds stable; larger layouts fall back
  // to slopes just either side of 1/2 with growing odd denominators.
  std::vector<std::pair<int, int>> candidates(kSlitSlopes.begin(), kSlitSlopes.end());
  for (int den = 25; den <= 1001; den += 2) {
    candidates.push_back({den / 2, den});
    candidates.push_back({den / 2 + 1, den});
  }
  for (const auto& [num, den] : candidates) {
    zeta = Rational(num, den);
    crossings_of_line.assign(lines.size(), {});
    std::vector<std::set<Rational>> seen(features.size());
    bool generic = true;
    for (std::size_t li = 0; li < lines.size() && generic; ++li) {
      for (std::size_t fi = 0; fi < features.size(); ++fi) {
        const auto x = (lines[li].c - features[fi].cy) / (zeta - Rational(lines[li].sigma));
        if (x < rho || x > one) {
          continue;
        }
        if (x == rho || x == one || !seen[fi].insert(x).second) {
          generic = false;
          break;
        }
        crossings_of_line[li].push_back({x, fi});
      }
    }
    if (generic) {
      found = true;
      break;
    }
  }
  if (!found) {
    throw InternalConsistencyError("no generic slit slope for this layout");
  }

  // Disc face word, counter-clockwise from the bottom-right corner.
  Face disc{"D", {}};
  std::map<std::string, std::vector<std::size_t>> disc_index;
  auto push = [&](const std::string& label, Dir dir) {
    disc_index[label].push_back(disc.word.size());
    disc.word.push_back({label, dir});
  };
  auto push_feet = [&](const std::string& gap) {
    push(gap + ".0", Dir::Forward);
    for (std::size_t fi = 0; fi < features.size(); ++fi) {
      const auto& f = features[fi];
      push(f.slit, Dir::Forward);
      push(f.edge, Dir::Forward);
      if (f.kind == FeatureKind::Crosscap) {
        push(f.edge, Dir::Forward);
      }
      push(f.slit, Dir::Backward);
      push(gap + "." + std::to_string(fi + 1), Dir::Forward);
    }
  };
  for (int s = 0; s < slopes; ++s) {
    const auto gap = "gR" + std::to_string(s);
    if (s == m + 1 && !features.empty()) {
      push_feet(gap);
    } else {
      push(gap, Dir::Forward);
    }
    push("sR" + std::to_string(s), Dir::Forward);
  }
  if (m + 1 == slopes && !features.empty()) {
    push_feet("gT");
  } else {
    push("gT", Dir::Forward);
  }
  for (int s = 0; s < slopes; ++s) {
    push("sL" + std::to_string(s), Dir::Forward);
    push("gL" + std::to_string(s), Dir::Forward);
  }

  // Sector positions: right sector of slope sigma spans y in [sigma-1/8, sigma+1/4]
  // upwards, left sector spans [-sigma-1/8, -sigma+1/4] downwards.
  const Rational sector_len(3, 8);
  auto right_pos = [&](const Rational& c) { return (c + Rational(1, 8)) / sector_len; };
  auto left_pos = [&](const Rational& c) { return (Rational(1, 4) - c) / sector_len; };

  // Cross-cap boundary: clockwise arc length from the slit attachment point
  // F = centre + (rho, zeta*rho); the first x-occurrence runs from F to -F.
  const Rational perimeter = Rational(4) * rho + Rational(4) * half_height;
  const Rational half_perimeter = perimeter / Rational(2);
  auto cap_point = [&](const Feature& f, bool right_side, const Rational& dy) -> CurvePoint {
    const auto& idx = disc_index.at(f.edge);
    Rational arc;
    if (right_side) {
      arc = dy <= zeta * rho ? zeta * rho - dy
                             : (zeta * rho + half_height) + Rational(4) * rho + Rational(2) * half_height +
                                   (half_height - dy);
    } else {
      arc = (zeta * rho + half_height) + Rational(2) * rho + (dy + half_height);
    }
    const bool second = arc >= half_perimeter;
    const auto t = (second ? arc - half_perimeter : arc) / half_perimeter;
    return {{0, idx[second ? 1 : 0]}, t};
  };

  std::vector<Face> faces;
  faces.push_back(disc);
  for (int s = 0; s < slopes; ++s) {
    faces.push_back({"ribbon" + std::to_string(s),
                     {{"sR" + std::to_string(s), Dir::Backward},
                      {"ru" + std::to_string(s), Dir::Forward},
                      {"sL" + std::to_string(s), Dir::Backward},
                      {"rv" + std::to_string(s), Dir::Forward}}});
  }
  const std::size_t first_handle_face = faces.size();
  for (std::size_t h = 0; h < layout.handles.size(); ++h) {
    const auto [a, b] = layout.handles[h];
    const auto seam = "t" + std::to_string(h);
    faces.push_back({"handle" + std::to_string(h),
                     {{"e" + std::to_string(a), Dir::Backward},
                      {seam, Dir::Forward},
                      {"e" + std::to_string(b), Dir::Backward},
                      {seam, Dir::Backward}}});
  }

  // Close the ribbon graph's two boundary circles with plug discs.
  {
    SurfaceSchema partial(faces);
    int plug = 0;
    for (auto cycle : boundary_cycles(partial)) {
      const bool hole = std::any_of(cycle.begin(), cycle.end(), [&](const BoundaryStep& st) {
        return partial.at(st.occurrence).edge.front() == 'e';
      });
      if (hole) {
        continue;
      }
      if (!cycle.front().forward) {
        std::reverse(cycle.begin(), cycle.end());
        for (auto& st : cycle) {
          st.forward = !st.forward;
        }
      }
      Face face{"plug" + std::to_string(plug++), {}};
      for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) {
        const auto& occ = partial.at(it->occurrence);
        face.word.push_back({occ.edge, flip(occ.dir)});
      }
      faces.push_back(std::move(face));
    }
    if (plug != 2) {
      throw InternalConsistencyError("ribbon graph has " + std::to_string(plug) + " boundary circles, expected 2");
    }
  }

  ConstructionState st;
  st.layout = layout;
  st.next_level = level_count;
  st.schema = SurfaceSchema(faces);
  st.disc.face_id = "D";
  st.disc.slopes = slopes;
  st.disc.slit_slope = zeta;

  auto& fam = st.family;
  fam.schema = st.schema;
  std::map<int, std::vector<Rational>> cap_positions;  // step -> t of every gamma endpoint
  std::map<int, std::size_t> core_slot;                // step -> index in fam.curves after its gammas

  auto add_line = [&](std::size_t li) {
    const auto& line = lines[li];
    const auto& spec = layout.levels[line.level];
    const auto tl = left_pos(line.c);
    const auto tr = right_pos(line.c);
    st.disc.slots[{line.slope, line.level}] = {tl, tr};

    auto events = crossings_of_line[li];
    std::optional<std::size_t> cap_feature;
    if (spec.kind == LevelKind::Gamma) {
      for (std::size_t fi = 0; fi < features.size(); ++fi) {
        if (features[fi].kind == FeatureKind::Crosscap && features[fi].level == line.level) {
          cap_feature = fi;
          events.push_back({Rational(0), fi});
        }
      }
    }
    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) { return a.x < b.x; });

    Curve curve{level_curve_id(spec, line.level, line.slope), {}};
    CurvePoint from{{0, disc_index.at("sL" + std::to_string(line.slope)).front()}, tl};
    for (const auto& ev : events) {
      const auto& f = features[ev.feature];
      CurvePoint in;
      CurvePoint out;
      if (cap_feature && ev.feature == *cap_feature) {
        const Rational sigma(line.sigma);
        in = cap_point(f, false, -sigma * rho);
        out = cap_point(f, true, sigma * rho);
        cap_positions[f.index].push_back(in.pos);
      } else {
        const auto foot = (one - ev.x) / (one - rho);
        const auto& idx = disc_index.at(f.slit);
        const CurvePoint lower{{0, idx[0]}, foot};
        const CurvePoint upper{{0, idx[1]}, one - foot};
        const bool from_below = Rational(line.sigma) > st.disc.slit_slope;
        in = from_below ? lower : upper;
        out = from_below ? upper : lower;
      }
      curve.chords.push_back({0, from, in});
      from = out;
    }
    const CurvePoint exit{{0, disc_index.at("sR" + std::to_string(line.slope)).front()}, tr};
    curve.chords.push_back({0, from, exit});
    const std::size_t ribbon = 1 + static_cast<std::size_t>(line.slope);
    curve.chords.push_back({ribbon, {{ribbon, 0}, one - tr}, {{ribbon, 2}, one - tl}});

    fam.curves.push_back(std::move(curve));
    fam.tags.push_back(LevelTag{level_role(spec.kind), line.slope, line.level,
                                spec.kind == LevelKind::Gamma || spec.kind == LevelKind::Tilde
                                    ? std::optional<int>(spec.step)
                                    : std::nullopt,
                                std::nullopt});
  };

  auto add_meridians = [&] {
    for (std::size_t h = 0; h < layout.handles.size(); ++h) {
      const auto face = first_handle_face + h;
      const Rational mid(1, 2);
      fam.curves.push_back({"M" + std::to_string(h + 1), {{face, {{face, 1}, mid}, {{face, 3}, mid}}}});
      fam.tags.push_back(LevelTag{Role::Meridian, std::nullopt, static_cast<int>(h), std::nullopt,
                                  static_cast<int>(h + 1)});
    }
  };

  bool meridians_added = false;
  std::size_t li = 0;
  for (int L = 0; L < level_count; ++L) {
    const auto& spec = layout.levels[L];
    if (!meridians_added && !is_mrt_level(spec.kind)) {
      add_meridians();
      meridians_added = true;
    }
    while (li < lines.size() && lines[li].level == L) {
      add_line(li++);
    }
    if (spec.kind == LevelKind::Gamma) {
      core_slot[spec.step] = fam.curves.size();
      const auto& idx = disc_index.at("x" + std::to_string(spec.step));
      fam.curves.push_back({"G" + std::to_string(spec.step) + ".core", {}});
      fam.tags.push_back(LevelTag{Role::GammaCore, std::nullopt, L, spec.step, std::nullopt});
      (void)idx;
    }
  }
  if (!meridians_added) {
    add_meridians();
  }

  // The core hugs the cross-cap: it starts on the first occurrence before
  // every gamma endpoint and leaves through the antipodal point.
  for (const auto& [step, slot] : core_slot) {
    const auto& idx = disc_index.at("x" + std::to_string(step));
    Rational smallest(1, 2);
    for (const auto& t : cap_positions[step]) {
      smallest = std::min(smallest, t);
    }
    const auto t0 = smallest / Rational(2);
    fam.curves[slot].chords.push_back({0, {{0, idx[0]}, t0}, {{0, idx[1]}, t0}});
  }
  return st;
}

ConstructionState mrt_base(int m) {
  if (m < 1) {
    throw InvalidInput("mrt_base requires m >= 1");
  }
  Layout layout;
  layout.half = m;
  layout.levels.push_back({LevelKind::Base, 0, true});
  return materialize(layout);
}

ConstructionState mrt_shift_step(const ConstructionState& st) {
  auto layout = st.layout;
  int shifts = 0;
  for (const auto& lv : layout.levels) {
    shifts += lv.kind == LevelKind::Shift ? 1 : 0;
  }
  layout.levels.push_back({LevelKind::Shift, shifts + 1, true});
  layout.holes.push_back(static_cast<int>(layout.levels.size()) - 1);
  return materialize(layout);
}

ConstructionState glue_handles_with_meridians(const ConstructionState& st, int n_pairs) {
  if (n_pairs < 0) {
    throw InvalidInput("negative handle count");
  }
  auto layout = st.layout;
  std::set<int> used;
  for (const auto& [a, b] : layout.handles) {
    used.insert(a);
    used.insert(b);
  }
  std::vector<int> free_holes;
  for (int j = 0; j < static_cast<int>(layout.holes.size()); ++j) {
    if (!used.contains(j)) {
      free_holes.push_back(j);
    }
  }
  if (static_cast<int>(free_holes.size()) < 2 * n_pairs) {
    throw InvalidInput("glue_handles_with_meridians: " + std::to_string(free_holes.size()) +
                       " free holes, need " + std::to_string(2 * n_pairs));
  }
  for (int p = 0; p < n_pairs; ++p) {
    layout.handles.emplace_back(free_holes[2 * p], free_holes[2 * p + 1]);
  }
  return materialize(layout);
}

ConstructionState crosscap_step(const ConstructionState& st, bool with_tilde) {
  auto layout = st.layout;
  int steps = 0;
  for (const auto& lv : layout.levels) {
    steps += lv.kind == LevelKind::Gamma ? 1 : 0;
  }
  layout.levels.push_back({LevelKind::Gamma, steps + 1, true});
  if (with_tilde) {
    layout.levels.push_back({LevelKind::Tilde, steps + 1, true});
  }
  return materialize(layout);
}

long long size_c(int k, int b) {
  const long long m = k / 2;
  const long long n = k - m;
  return (2 * m + 1) * (2 * n + b + 1) + n;
}

long long size_gamma(int g, int b, int k) {
  return size_c(k, b) + static_cast<long long>(g - 2 * k) * (4 * (k / 2) + 3);
}

long long size_omega(int g, int k) { return static_cast<long long>(g - 2 * k) * (2 * k + 2); }

Rational bound_theorem_a(int g, int b) {
  return Rational(g * g, 3) + Rational(5 * g, 18) - Rational(1) + Rational(b * (g - 2), 3);
}

Rational bound_theorem_b(int g) { return Rational(g * g + 3 * g + 2, 4); }

int default_k_theorem_a(int g) {
  if (g < 5) {
    throw InvalidInput("Theorem A builds need g >= 5: smaller g forces k <= 1, whose base (m = 0) is a "
                       "sphere family containing a null-homotopic curve");
  }
  int k = std::max(2, g / 3);
  while (g - 2 * k < 1) {
    --k;
  }
  return k;
}

int default_k_theorem_b(int g) {
  if (g < 3) {
    throw InvalidInput("Theorem B builds need g >= 3 (k >= 1 with at least one cross-cap left)");
  }
  int k = std::max(1, g / 4);
  while (g - 2 * k < 1) {
    --k;
  }
  return k;
}

ConstructionState build_mrt(int k, int b) {
  if (k < 2 || b < 0) {
    throw InvalidInput("build_mrt requires k >= 2 and b >= 0");
  }
  const int m = k / 2;
  const int n = k - m;
  auto st = mrt_base(m);
  // Levels and holes are pure layout; materialise once at the end.
  auto layout = st.layout;
  for (int i = 1; i <= 2 * n + b; ++i) {
    layout.levels.push_back({LevelKind::Shift, i, true});
    layout.holes.push_back(i);
  }
  for (int p = 0; p < n; ++p) {
    layout.handles.emplace_back(2 * p, 2 * p + 1);
  }
  st = materialize(layout);
  st.expected_size = static_cast<std::size_t>(size_c(k, b));
  st.expected_type = SurfaceType::orientable_surface(k, b);
  return st;
}

ConstructionState build_theorem_a(int g, int b, std::optional<int> k) {
  const int kk = k ? *k : default_k_theorem_a(g);
  if (kk < 2 || g - 2 * kk < 1 || b < 0) {
    throw InvalidInput("Theorem A needs k >= 2, g - 2k >= 1 and b >= 0 (got g=" + std::to_string(g) +
                       " b=" + std::to_string(b) + " k=" + std::to_string(kk) + ")");
  }
  auto layout = build_mrt(kk, b).layout;
  for (int i = 1; i <= g - 2 * kk; ++i) {
    layout.levels.push_back({LevelKind::Gamma, i, true});
    layout.levels.push_back({LevelKind::Tilde, i, true});
  }
  auto st = materialize(layout);
  st.expected_size = static_cast<std::size_t>(size_gamma(g, b, kk));
  st.expected_type = SurfaceType::nonorientable_surface(g, b);
  return st;
}

ConstructionState build_theorem_b(int g, std::optional<int> k) {
  const int kk = k ? *k : default_k_theorem_b(g);
  if (kk < 1 || g - 2 * kk < 1) {
    throw InvalidInput("Theorem B needs k >= 1 and g - 2k >= 1 (got g=" + std::to_string(g) +
                       " k=" + std::to_string(kk) + ")");
  }
  Layout layout;
  layout.half = kk;
  layout.levels.push_back({LevelKind::Base, 0, false});
  for (int i = 1; i <= g - 2 * kk; ++i) {
    layout.levels.push_back({LevelKind::Gamma, i, true});
  }
  auto st = materialize(layout);
  st.expected_size = static_cast<std::size_t>(size_omega(g, kk));
  st.expected_type = SurfaceType::nonorientable_surface(g, 0);
  return st;
}

PredictedSizes predicted_sizes(int g, int b, std::optional<int> k_a, std::optional<int> k_b) {
  PredictedSizes out;
  out.bound_a = bound_theorem_a(g, b);
  out.bound_b = bound_theorem_b(g);
  // Ties go to the paper's choice of k, then to the smallest k.
  long long best_a = -1;
  for (int k = 2; g - 2 * k >= 1; ++k) {
    if (const auto v = size_gamma(g, b, k); v > best_a || (v == best_a && k == g / 3)) {
      best_a = v;
      out.optimal_k_a = k;
    }
  }
  long long best_b = -1;
  for (int k = 1; g - 2 * k >= 1; ++k) {
    if (const auto v = size_omega(g, k); v > best_b || (v == best_b && k == g / 4)) {
      best_b = v;
      out.optimal_k_b = k;
    }
  }
  if (k_a || g >= 5) {
    out.k_a = k_a ? *k_a : default_k_theorem_a(g);
    out.size_c = size_c(out.k_a, b);
    out.size_gamma = size_gamma(g, b, out.k_a);
  }
  if (k_b || g >= 3) {
    out.k_b = k_b ? *k_b : default_k_theorem_b(g);
    out.size_omega = size_omega(g, out.k_b);
  }
  return out;
}

}  // namespace crosscap

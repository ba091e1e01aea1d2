// Acceptance run: one PASS/FAIL line per criterion, with indented detail lines
// underneath. Exits non-zero when any criterion fails.

#include "crosscap/construct.hpp"
#include "crosscap/cut.hpp"
#include "crosscap/verify.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace crosscap;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void fail(const std::string& why) {
    pass = false;
    details.push_back(why);
  }
  void note(const std::string& what) { details.push_back(what); }
};

std::vector<std::string> crosscap_labels(const SurfaceSchema& s) {
  std::vector<std::string> out;
  for (const auto& label : s.labels()) {
    if (s.occurrences(label).size() == 2 && s.flag(label) == Flag::Same) {
      out.push_back(label);
    }
  }
  return out;
}

int passes_of(const std::map<std::string, int>& passes, const std::string& label) {
  const auto it = passes.find(label);
  return it == passes.end() ? 0 : it->second;
}

int chi_sum(const std::vector<SurfaceType>& types) {
  int total = 0;
  for (const auto& t : types) {
    total += t.euler_characteristic();
  }
  return total;
}

std::string types_text(const std::vector<SurfaceType>& types) {
  std::string out;
  for (const auto& t : types) {
    out += (out.empty() ? "[" : " + [") + describe(t) + "]";
  }
  return out;
}

Outcome sizes() {
  Outcome o;
  double slowest = 0;
  auto timed = [&](const std::function<ConstructionState()>& make) {
    const auto t0 = Clock::now();
    auto st = make();
    slowest = std::max(slowest, seconds_since(t0));
    return st;
  };
  int builds = 0;
  for (int k = 2; k <= 5; ++k) {
    for (int b = 0; b <= 3; ++b) {
      const auto st = timed([&] { return build_mrt(k, b); });
      ++builds;
      if (static_cast<long long>(st.family.size()) != oracle::size_c(k, b)) {
        o.fail("mrt k=" + std::to_string(k) + " b=" + std::to_string(b) + ": built " +
               std::to_string(st.family.size()) + ", formula " + std::to_string(oracle::size_c(k, b)));
      }
    }
  }
  for (int g = 5; g <= 15; ++g) {
    for (int b = 0; b <= 3; ++b) {
      const auto st = timed([&] { return build_theorem_a(g, b); });
      ++builds;
      const auto want = oracle::size_gamma(g, b, std::max(2, g / 3));
      if (static_cast<long long>(st.family.size()) != want) {
        o.fail("A g=" + std::to_string(g) + " b=" + std::to_string(b) + ": built " +
               std::to_string(st.family.size()) + ", formula " + std::to_string(want));
      }
    }
  }
  for (int g = 3; g <= 15; ++g) {
    const auto st = timed([&] { return build_theorem_b(g); });
    ++builds;
    const auto want = oracle::size_omega(g, std::max(1, g / 4));
    if (static_cast<long long>(st.family.size()) != want) {
      o.fail("B g=" + std::to_string(g) + ": built " + std::to_string(st.family.size()) + ", formula " +
             std::to_string(want));
    }
  }
  if (slowest >= 1.0) {
    o.fail("slowest build took " + std::to_string(slowest) + " s");
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d builds, slowest %.3f s", builds, slowest);
  o.note(buf);
  return o;
}

Outcome bound_a() {
  Outcome o;
  const auto t0 = Clock::now();
  int checked = 0;
  for (int g = 6; g <= 30; ++g) {
    for (int b = 0; b <= 3; ++b) {
      const auto st = build_theorem_a(g, b);
      const Rational bound = Rational(g * g, 3) + Rational(5 * g, 18) - 1 + Rational(b * (g - 2), 3);
      ++checked;
      if (Rational(static_cast<long long>(st.family.size())) < bound) {
        o.fail("g=" + std::to_string(g) + " b=" + std::to_string(b) + ": " + std::to_string(st.family.size()) +
               " < " + to_string(bound));
      }
    }
  }
  const double t = seconds_since(t0);
  if (t >= 10) {
    o.fail("took " + std::to_string(t) + " s");
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d (g, b) pairs, %.2f s", checked, t);
  o.note(buf);
  return o;
}

Outcome one_systems() {
  Outcome o;
  auto run = [&](const std::string& name, const ConstructionState& st) {
    const auto t0 = Clock::now();
    const auto r = verify_construction(st, 0);
    const double t = seconds_since(t0);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: %zu curves, %zu pairs, max crossings %d, %.2f s", name.c_str(),
                  st.family.size(), r.pairs.size(), r.summary.max_crossings, t);
    if (r.passed() && t < 60) {
      o.note(std::string(buf) + ", pass");
      return;
    }
    o.fail(std::string(buf) + ", " + std::to_string(r.failures.size()) + " failures");
    for (std::size_t i = 0; i < r.failures.size() && i < 4; ++i) {
      o.details.push_back("    " + r.failures[i]);
    }
  };
  for (int g : {6, 9, 12}) {
    for (int b : {0, 2}) {
      run("A g=" + std::to_string(g) + " b=" + std::to_string(b) + " k=" + std::to_string(std::max(2, g / 3)),
          build_theorem_a(g, b));
    }
  }
  for (int g : {5, 8, 12}) {
    run("B g=" + std::to_string(g), build_theorem_b(g));
  }
  return o;
}

Outcome omega_sidedness() {
  Outcome o;
  int curves = 0;
  for (int g = 3; g <= 15; ++g) {
    const auto st = build_theorem_b(g);
    for (const auto& c : st.family.curves) {
      ++curves;
      const bool parity = sidedness(st.schema, c) == Sidedness::OneSided;
      const bool by_cut = cut_along(st.schema, {c}).new_circle_count(c.id) == 1;
      if (!parity || !by_cut) {
        o.fail("g=" + std::to_string(g) + " " + c.id + ": parity " + (parity ? "one" : "two") + "-sided, cut " +
               (by_cut ? "one" : "two") + "-sided");
      }
    }
  }
  o.note(std::to_string(curves) + " curves over g=3..15, both methods one_sided");
  return o;
}

Outcome crosscap_propositions() {
  Outcome o;
  int one_sided = 0;
  int two_sided = 0;
  for (int g = 3; g <= 6; ++g) {
    const auto s = standard_schema(SurfaceType::nonorientable_surface(g, 0));
    const auto caps = crosscap_labels(s);
    std::vector<Curve> pool = enumerate_small_curves(s, 4);
    for (std::size_t i = 0; i < caps.size(); ++i) {
      pool.push_back(testing::through_crosscaps("core" + std::to_string(i), {i}));
      if (i + 1 < caps.size()) {
        pool.push_back(testing::through_crosscaps("pair" + std::to_string(i), {i, i + 1}));
      }
    }
    for (const auto& c : pool) {
      const auto passes = crosscap_passes(s, c);
      const bool misses = std::any_of(caps.begin(), caps.end(), [&](const auto& x) { return passes_of(passes, x) == 0; });
      if (!misses || !is_simple(s, c) || !is_essential(s, c).essential) {
        continue;
      }
      const auto types = cut_classification(s, c);
      const auto where = "g=" + std::to_string(g) + " " + c.id + ": " + types_text(types);
      if (sidedness(s, c) == Sidedness::OneSided) {
        ++one_sided;
        if (types != std::vector{SurfaceType::nonorientable_surface(g - 1, 1)}) {
          o.fail("(a) 1-sided " + where);
        }
      } else if (types.size() == 1) {
        ++two_sided;
        if (types != std::vector{SurfaceType::nonorientable_surface(g - 2, 2)}) {
          o.fail("(a) 2-sided " + where);
        }
      }
    }
  }
  o.note("(a) " + std::to_string(one_sided) + " 1-sided and " + std::to_string(two_sided) +
         " 2-sided non-separating curves missing a cross-cap");

  int all_once = 0;
  for (int g = 2; g <= 6; ++g) {
    const auto s = standard_schema(SurfaceType::nonorientable_surface(g, 0));
    const auto caps = crosscap_labels(s);
    std::vector<std::size_t> order(static_cast<std::size_t>(g));
    std::iota(order.begin(), order.end(), 0);
    int found = 0;
    do {
      const auto c = testing::through_crosscaps("c", order);
      if (!validate_curve(s, c).ok() || !is_simple(s, c)) {
        continue;
      }
      const auto passes = crosscap_passes(s, c);
      if (!std::all_of(caps.begin(), caps.end(), [&](const auto& x) { return passes_of(passes, x) == 1; })) {
        continue;
      }
      ++found;
      const auto types = cut_classification(s, c);
      const bool orientable = std::all_of(types.begin(), types.end(), [](const auto& t) { return t.orientable; });
      if (!orientable || chi_sum(types) != 2 - g) {
        o.fail("(b) g=" + std::to_string(g) + " order " + c.id + ": " + types_text(types));
      }
    } while (std::next_permutation(order.begin(), order.end()));
    if (found == 0) {
      o.fail("(b) g=" + std::to_string(g) + ": no curve through every cross-cap once");
    }
    all_once += found;
  }
  o.note("(b) " + std::to_string(all_once) + " curves through every cross-cap once, g=2..6, all cuts orientable");
  return o;
}

Outcome klein() {
  Outcome o;
  const auto k0 = standard_schema(SurfaceType::nonorientable_surface(2, 0));
  const auto alpha = testing::through_crosscaps("alpha", {0, 1});
  const auto beta = testing::through_crosscaps("beta", {0});
  const auto ta = cut_classification(k0, alpha);
  const auto tb = cut_classification(k0, beta);
  if (ta != std::vector{SurfaceType::orientable_surface(0, 2)}) {
    o.fail("closed: alpha -> " + types_text(ta));
  }
  // On the closed Klein bottle beta's complement is a Möbius band, i.e. N_{1,1};
  // the spec's N_{1,2} and pants are the one-boundary versions below.
  if (tb != std::vector{SurfaceType::nonorientable_surface(1, 1)}) {
    o.fail("closed: beta -> " + types_text(tb));
  }
  const auto k1 = standard_schema(SurfaceType::nonorientable_surface(2, 1));
  const auto a1 = cut_classification(k1, alpha);
  const auto b1 = cut_classification(k1, beta);
  if (a1 != std::vector{SurfaceType::orientable_surface(0, 3)}) {
    o.fail("alpha -> " + types_text(a1));
  }
  if (b1 != std::vector{SurfaceType::nonorientable_surface(1, 2)}) {
    o.fail("beta -> " + types_text(b1));
  }
  o.note("with one boundary: alpha -> " + types_text(a1) + ", beta -> " + types_text(b1));
  return o;
}

Outcome figure_six() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto s = standard_schema(SurfaceType::nonorientable_surface(4, 0));
  const auto caps = crosscap_labels(s);
  std::vector<Curve> curves;
  try {
    curves = enumerate_small_curves(s, 8);
  } catch (const BudgetExceeded& e) {
    o.fail(e.what());
    return o;
  }
  const Curve* orientable = nullptr;
  const Curve* nonorientable = nullptr;
  int candidates = 0;
  for (const auto& c : curves) {
    const auto passes = crosscap_passes(s, c);
    if (sidedness(s, c) != Sidedness::TwoSided ||
        !std::all_of(caps.begin(), caps.end(), [&](const auto& x) { return passes_of(passes, x) >= 1; })) {
      continue;
    }
    ++candidates;
    (orientable_after_cut(s, c) ? orientable : nonorientable) = &c;
  }
  const double t = seconds_since(t0);
  if (!orientable || !nonorientable || t >= 300) {
    o.fail("orientable witness " + std::string(orientable ? "found" : "missing") + ", non-orientable witness " +
           (nonorientable ? "found" : "missing"));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu curves enumerated, %d 2-sided through all 4 cross-caps, %.2f s", curves.size(),
                candidates, t);
  o.note(buf);
  if (orientable && nonorientable) {
    o.note(orientable->id + " -> " + types_text(cut_classification(s, *orientable)) + "; " + nonorientable->id +
           " -> " + types_text(cut_classification(s, *nonorientable)));
  }
  return o;
}

Outcome crossing_kernel() {
  Outcome o;
  std::mt19937 rng(20260);
  int pairs = 0;
  int positive = 0;
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(3, 12)(rng);
    const auto poly = oracle::polygon(n);
    std::uniform_int_distribution<std::size_t> side(0, n - 1);
    std::uniform_int_distribution<int> num(1, 255);
    std::set<std::pair<std::size_t, Rational>> used;
    auto fresh = [&] {
      while (true) {
        CurvePoint p{{0, side(rng)}, Rational(num(rng), 256)};
        if (used.insert({p.occurrence.index, p.pos}).second) {
          return p;
        }
      }
    };
    std::vector<Chord> chords;
    while (chords.size() < 12) {
      const auto a = fresh();
      const auto b = fresh();
      if (a.occurrence.index != b.occurrence.index) {
        chords.push_back({0, a, b});
      }
    }
    auto geo = [&](const CurvePoint& p) {
      return oracle::on_side(poly, p.occurrence.index, oracle::Q(p.pos.numerator()) / p.pos.denominator());
    };
    for (std::size_t i = 0; i < chords.size(); ++i) {
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        const bool kernel = chords_interleave(chords[i], chords[j]);
        const bool exact =
            oracle::segments_cross(geo(chords[i].from), geo(chords[i].to), geo(chords[j].from), geo(chords[j].to));
        ++pairs;
        positive += exact ? 1 : 0;
        mismatches += kernel != exact ? 1 : 0;
      }
    }
  }
  if (mismatches > 0) {
    o.fail(std::to_string(mismatches) + " mismatches");
  }
  o.note(std::to_string(pairs) + " chord pairs in 3..12-gons, " + std::to_string(positive) + " crossing");
  return o;
}

/// Random schema with 1 or 2 faces, 2..5 paired labels and up to 2 free edges.
std::optional<SurfaceSchema> random_schema(std::mt19937& rng) {
  const int paired = std::uniform_int_distribution<int>(2, 5)(rng);
  const int free = std::uniform_int_distribution<int>(0, 2)(rng);
  std::vector<std::string> letters;
  for (int i = 0; i < paired; ++i) {
    letters.push_back(std::string(1, static_cast<char>('a' + i)));
    letters.push_back(letters.back());
  }
  for (int i = 0; i < free; ++i) {
    letters.push_back(std::string(1, static_cast<char>('p' + i)));
  }
  std::shuffle(letters.begin(), letters.end(), rng);
  const bool two_faces = letters.size() >= 4 && std::bernoulli_distribution(0.4)(rng);
  const auto cut = two_faces ? std::uniform_int_distribution<std::size_t>(1, letters.size() - 1)(rng) : letters.size();
  std::vector<std::string> words(two_faces ? 2 : 1);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    auto& w = words[i < cut ? 0 : 1];
    w += (w.empty() ? "" : " ") + letters[i] + (std::bernoulli_distribution(0.5)(rng) ? "-" : "");
  }
  try {
    auto s = schema_from_words(words);
    if (!validate_schema(s).ok()) {
      return std::nullopt;
    }
    return s;
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

Outcome chi_preservation() {
  Outcome o;
  std::mt19937 rng(9090);
  int instances = 0;
  int schemas = 0;
  int one_sided = 0;
  while (instances < 600) {
    const auto s = random_schema(rng);
    if (!s) {
      continue;
    }
    std::vector<Curve> curves;
    try {
      EnumerationOptions opts;
      opts.node_budget = 200000;
      curves = enumerate_small_curves(*s, 3, opts);
    } catch (const BudgetExceeded&) {
      continue;
    }
    if (curves.empty()) {
      continue;
    }
    ++schemas;
    const int chi = oracle::euler_characteristic(*s);
    const auto original_boundary = classify_surface(*s).boundary;
    std::shuffle(curves.begin(), curves.end(), rng);
    for (std::size_t i = 0; i < curves.size() && i < 3; ++i) {
      const auto& c = curves[i];
      const auto cut = cut_along(*s, {c});
      ++instances;
      const bool is_one = sidedness(*s, c) == Sidedness::OneSided;
      one_sided += is_one ? 1 : 0;
      const auto expected_new = is_one ? 1u : 2u;
      int boundary = 0;
      for (const auto& t : cut.types) {
        boundary += t.boundary;
      }
      std::string problem;
      if (chi_sum(cut.types) != chi) {
        problem = "chi sum " + std::to_string(chi_sum(cut.types)) + " != " + std::to_string(chi);
      } else if (oracle::euler_characteristic(cut.schema) != chi) {
        problem = "oracle chi of cut schema differs";
      } else if (cut.new_circle_count(c.id) != expected_new) {
        problem = std::to_string(cut.new_circle_count(c.id)) + " new circles for a " +
                  (is_one ? "1" : "2") + "-sided curve";
      } else if (boundary != original_boundary + static_cast<int>(expected_new)) {
        problem = "boundary count " + std::to_string(boundary);
      }
      if (!problem.empty()) {
        std::ostringstream where;
        for (const auto& f : s->faces()) {
          where << f.id << ' ';
        }
        o.fail(problem + " (" + c.id + " on faces " + where.str() + ")");
      }
    }
  }
  o.note(std::to_string(instances) + " cuts on " + std::to_string(schemas) + " random schemas, " +
         std::to_string(one_sided) + " along 1-sided curves");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"size formulas", sizes},
      {"Theorem A lower bound, g=6..30", bound_a},
      {"full 1-system verification", one_systems},
      {"Theorem B curves are one-sided", omega_sidedness},
      {"cross-cap cut propositions", crosscap_propositions},
      {"Klein bottle cuts", klein},
      {"N_4 curves through all cross-caps with both cut types", figure_six},
      {"crossing kernel vs exact geometry", crossing_kernel},
      {"Euler characteristic preserved by cutting", chi_preservation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << '\n';
    for (const auto& d : o.details) {
      std::cout << "  " << d << '\n';
    }
    std::cout.flush();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

#include "crosscap/curve.hpp"

#include <set>

namespace crosscap {

std::string to_string(Sidedness s) { return s == Sidedness::OneSided ? "one_sided" : "two_sided"; }

namespace {

std::string describe_point(const SurfaceSchema& s, const CurvePoint& p) {
  std::string out = "(" + std::to_string(p.occurrence.face) + "," + std::to_string(p.occurrence.index);
  if (p.occurrence.face < s.face_count() && p.occurrence.index < s.face(p.occurrence.face).word.size()) {
    out += ":" + s.at(p.occurrence).edge;
  }
  return out + " @" + to_string(p.pos) + ")";
}

bool occurrence_exists(const SurfaceSchema& s, OccurrenceRef r) {
  return r.face < s.face_count() && r.index < s.face(r.face).word.size();
}

}  // namespace

ValidityReport validate_curve(const SurfaceSchema& s, const Curve& c) {
  ValidityReport report;
  auto& v = report.violations;
  if (c.chords.empty()) {
    v.push_back("curve '" + c.id + "' has no chords");
    return report;
  }
  bool structural = true;
  for (std::size_t i = 0; i < c.chords.size(); ++i) {
    const auto& ch = c.chords[i];
    for (const auto* p : {&ch.from, &ch.to}) {
      if (!occurrence_exists(s, p->occurrence)) {
        v.push_back("chord " + std::to_string(i) + " references a missing occurrence");
        structural = false;
        continue;
      }
      if (p->occurrence.face != ch.face) {
        v.push_back("chord " + std::to_string(i) + " endpoint " + describe_point(s, *p) +
                    " is not on its face");
      }
      if (p->pos <= 0 || p->pos >= 1) {
        v.push_back("chord " + std::to_string(i) + " endpoint " + describe_point(s, *p) +
                    " is not strictly inside its edge (corner contact)");
      }
      if (s.is_free(p->occurrence)) {
        v.push_back("chord " + std::to_string(i) + " endpoint " + describe_point(s, *p) +
                    " lies on a boundary edge");
        structural = false;
      }
    }
    if (ch.from == ch.to) {
      v.push_back("chord " + std::to_string(i) + " has coincident endpoints");
    }
  }
  if (!structural) {
    return report;
  }
  for (std::size_t i = 0; i < c.chords.size(); ++i) {
    const auto& exit = c.chords[i].to;
    const auto& entry = c.chords[(i + 1) % c.chords.size()].from;
    const auto& label = s.at(exit.occurrence).edge;
    const auto partner = s.partner(exit.occurrence);
    if (!partner || *partner != entry.occurrence || s.map_position(label, exit.pos) != entry.pos) {
      v.push_back("chord " + std::to_string(i) + " exit " + describe_point(s, exit) +
                  " is not glued to the next entry " + describe_point(s, entry) + " (not closed)");
    }
  }
  std::set<std::pair<OccurrenceRef, Rational>> seen;
  for (const auto& ch : c.chords) {
    for (const auto* p : {&ch.from, &ch.to}) {
      if (!seen.insert({p->occurrence, p->pos}).second) {
        v.push_back("curve passes " + describe_point(s, *p) + " twice (genericity)");
      }
    }
  }
  return report;
}

void require_valid_curve(const SurfaceSchema& s, const Curve& c) {
  auto report = validate_curve(s, c);
  if (!report.ok()) {
    throw InvalidInput("invalid curve '" + c.id + "': " + report.violations.front());
  }
}

bool chords_interleave(const Chord& a, const Chord& b) {
  auto a0 = key_of(a.from);
  auto a1 = key_of(a.to);
  if (a1 < a0) {
    std::swap(a0, a1);
  }
  const auto b0 = key_of(b.from);
  const auto b1 = key_of(b.to);
  if (b0 == a0 || b0 == a1 || b1 == a0 || b1 == a1) {
    throw InvalidInput("genericity violation: chords share an endpoint");
  }
  const bool in0 = a0 < b0 && b0 < a1;
  const bool in1 = a0 < b1 && b1 < a1;
  return in0 != in1;
}

bool is_simple(const SurfaceSchema& s, const Curve& c) {
  require_valid_curve(s, c);
  for (std::size_t i = 0; i < c.chords.size(); ++i) {
    for (std::size_t j = i + 1; j < c.chords.size(); ++j) {
      if (c.chords[i].face == c.chords[j].face && chords_interleave(c.chords[i], c.chords[j])) {
        return false;
      }
    }
  }
  return true;
}

int crossings(const SurfaceSchema& s, const Curve& a, const Curve& b) {
  (void)s;
  int count = 0;
  for (const auto& ca : a.chords) {
    for (const auto& cb : b.chords) {
      if (ca.face == cb.face && chords_interleave(ca, cb)) {
        ++count;
      }
    }
  }
  return count;
}

int mod2_intersection(const SurfaceSchema& s, const Curve& a, const Curve& b) {
  return crossings(s, a, b) % 2;
}

void require_jointly_generic(const std::vector<const Curve*>& curves) {
  std::map<std::pair<OccurrenceRef, Rational>, const Curve*> owner;
  for (const auto* c : curves) {
    for (const auto& ch : c->chords) {
      for (const auto* p : {&ch.from, &ch.to}) {
        auto [it, inserted] = owner.emplace(std::make_pair(p->occurrence, p->pos), c);
        if (!inserted && it->second != c) {
          throw InvalidInput("genericity violation: curves '" + it->second->id + "' and '" + c->id +
                             "' share a point on an edge");
        }
      }
    }
  }
}

Sidedness sidedness(const SurfaceSchema& s, const Curve& c) {
  if (!is_simple(s, c)) {
    throw InvalidInput("sidedness requires a simple curve ('" + c.id + "')");
  }
  int flips = 0;
  for (const auto& ch : c.chords) {
    if (s.reverses_orientation(s.at(ch.to.occurrence).edge)) {
      ++flips;
    }
  }
  return flips % 2 == 1 ? Sidedness::OneSided : Sidedness::TwoSided;
}

std::map<std::string, int> crosscap_passes(const SurfaceSchema& s, const Curve& c) {
  std::map<std::string, int> endpoints;
  for (const auto& label : s.labels()) {
    if (s.is_crosscap(label)) {
      endpoints[label] = 0;
    }
  }
  for (const auto& ch : c.chords) {
    for (const auto* p : {&ch.from, &ch.to}) {
      const auto& label = s.at(p->occurrence).edge;
      if (auto it = endpoints.find(label); it != endpoints.end()) {
        ++it->second;
      }
    }
  }
  for (auto& [label, n] : endpoints) {
    n /= 2;
  }
  return endpoints;
}

}  // namespace crosscap

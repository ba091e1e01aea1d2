#include "crosscap/schema.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace crosscap {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

const std::vector<OccurrenceRef> kNoOccurrences;

}  // namespace

SurfaceSchema::SurfaceSchema(std::vector<Face> faces) : faces_(std::move(faces)) { index(); }

SurfaceSchema::SurfaceSchema(std::vector<Face> faces, std::map<std::string, Flag> declared_flags)
    : faces_(std::move(faces)), declared_(std::move(declared_flags)) {
  index();
}

void SurfaceSchema::index() {
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    face_ids_.emplace(faces_[f].id, f);
    for (std::size_t i = 0; i < faces_[f].word.size(); ++i) {
      const auto& label = faces_[f].word[i].edge;
      auto& list = occ_[label];
      if (list.empty()) {
        labels_.push_back(label);
      }
      list.push_back({f, i});
    }
  }
}

std::optional<std::size_t> SurfaceSchema::face_index(const std::string& id) const {
  auto it = face_ids_.find(id);
  if (it == face_ids_.end()) {
    return std::nullopt;
  }
  return it->second;
}

const std::vector<OccurrenceRef>& SurfaceSchema::occurrences(const std::string& label) const {
  auto it = occ_.find(label);
  return it == occ_.end() ? kNoOccurrences : it->second;
}

std::optional<OccurrenceRef> SurfaceSchema::partner(OccurrenceRef r) const {
  const auto& list = occurrences(at(r).edge);
  if (list.size() != 2) {
    return std::nullopt;
  }
  return list[0] == r ? list[1] : list[0];
}

bool SurfaceSchema::reverses_orientation(const std::string& label) const {
  const auto& list = occurrences(label);
  return list.size() == 2 && at(list[0]).dir == at(list[1]).dir;
}

Flag SurfaceSchema::flag(const std::string& label) const {
  if (auto it = declared_.find(label); it != declared_.end()) {
    return it->second;
  }
  return reverses_orientation(label) ? Flag::Same : Flag::Reversed;
}

bool SurfaceSchema::is_crosscap(const std::string& label) const {
  const auto& list = occurrences(label);
  if (list.size() != 2 || list[0].face != list[1].face || !reverses_orientation(label)) {
    return false;
  }
  const auto len = faces_[list[0].face].word.size();
  const auto a = list[0].index;
  const auto b = list[1].index;
  return (a + 1) % len == b || (b + 1) % len == a;
}

std::string describe(const SurfaceType& t) {
  std::ostringstream out;
  if (t.orientable) {
    out << "orientable k=" << t.genus << " b=" << t.boundary;
  } else {
    out << "non-orientable g=" << t.genus << " b=" << t.boundary;
  }
  return out.str();
}

std::vector<std::vector<std::size_t>> component_faces(const SurfaceSchema& s) {
  DisjointSets sets(s.face_count());
  for (const auto& label : s.labels()) {
    const auto& occ = s.occurrences(label);
    for (std::size_t i = 1; i < occ.size(); ++i) {
      sets.unite(occ[0].face, occ[i].face);
    }
  }
  std::map<std::size_t, std::size_t> slot;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t f = 0; f < s.face_count(); ++f) {
    auto root = sets.find(f);
    auto [it, inserted] = slot.emplace(root, out.size());
    if (inserted) {
      out.emplace_back();
    }
    out[it->second].push_back(f);
  }
  return out;
}

ValidityReport validate_schema(const SurfaceSchema& s, bool require_connected) {
  ValidityReport report;
  std::set<std::string> ids;
  for (const auto& face : s.faces()) {
    if (!ids.insert(face.id).second) {
      report.violations.push_back("duplicate face id '" + face.id + "'");
    }
    if (face.word.empty()) {
      report.violations.push_back("face '" + face.id + "' has an empty word");
    }
  }
  for (const auto& label : s.labels()) {
    const auto n = s.occurrences(label).size();
    if (n > 2) {
      report.violations.push_back("label '" + label + "' occurs " + std::to_string(n) +
                                  " times (multiplicity violation)");
    }
  }
  for (const auto& [label, flag] : s.declared_flags()) {
    const auto n = s.occurrences(label).size();
    if (n != 2) {
      report.violations.push_back("pairing declared for '" + label + "' which occurs " +
                                  std::to_string(n) + " times");
      continue;
    }
    const auto expected = s.reverses_orientation(label) ? Flag::Same : Flag::Reversed;
    if (flag != expected) {
      report.violations.push_back("pairing flag of '" + label +
                                  "' is inconsistent with the occurrence directions");
    }
  }
  if (!s.declared_flags().empty()) {
    for (const auto& label : s.labels()) {
      if (s.occurrences(label).size() == 2 && !s.declared_flags().contains(label)) {
        report.violations.push_back("label '" + label + "' occurs twice but has no pairing");
      }
    }
  }
  if (require_connected && component_faces(s).size() > 1) {
    report.violations.push_back("schema is not connected");
  }
  return report;
}

void require_valid(const SurfaceSchema& s, bool require_connected) {
  auto report = validate_schema(s, require_connected);
  if (!report.ok()) {
    throw InvalidInput("invalid schema: " + report.violations.front());
  }
}

int euler_characteristic(const SurfaceSchema& s) {
  require_valid(s, false);
  // Node 2*l is the tail of label l, 2*l+1 its head.
  std::map<std::string, std::size_t> label_id;
  for (const auto& label : s.labels()) {
    label_id.emplace(label, label_id.size());
  }
  DisjointSets sets(2 * label_id.size());
  auto start_node = [&](const Occurrence& o) {
    return 2 * label_id.at(o.edge) + (o.dir == Dir::Forward ? 0 : 1);
  };
  auto end_node = [&](const Occurrence& o) {
    return 2 * label_id.at(o.edge) + (o.dir == Dir::Forward ? 1 : 0);
  };
  for (const auto& face : s.faces()) {
    const auto n = face.word.size();
    for (std::size_t i = 0; i < n; ++i) {
      sets.unite(end_node(face.word[i]), start_node(face.word[(i + 1) % n]));
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < 2 * label_id.size(); ++i) {
    roots.insert(sets.find(i));
  }
  return static_cast<int>(roots.size()) - static_cast<int>(label_id.size()) +
         static_cast<int>(s.face_count());
}

std::vector<BoundaryCycle> boundary_cycles(const SurfaceSchema& s) {
  require_valid(s, false);
  std::size_t total = 0;
  for (const auto& face : s.faces()) {
    total += face.word.size();
  }
  std::set<OccurrenceRef> visited;
  std::vector<BoundaryCycle> cycles;

  auto next_in_face = [&](OccurrenceRef r) {
    return OccurrenceRef{r.face, (r.index + 1) % s.face(r.face).word.size()};
  };
  auto prev_in_face = [&](OccurrenceRef r) {
    const auto n = s.face(r.face).word.size();
    return OccurrenceRef{r.face, (r.index + n - 1) % n};
  };

  for (std::size_t f = 0; f < s.face_count(); ++f) {
    for (std::size_t i = 0; i < s.face(f).word.size(); ++i) {
      const OccurrenceRef origin{f, i};
      if (!s.is_free(origin) || visited.contains(origin)) {
        continue;
      }
      BoundaryCycle cycle;
      // State: standing at the start (at_start) or end of `q`, about to cross it.
      OccurrenceRef q = origin;
      bool at_start = true;
      for (std::size_t guard = 0;; ++guard) {
        if (guard > 4 * total + 8) {
          throw InternalConsistencyError("boundary walk did not close");
        }
        if (s.is_free(q)) {
          if (q == origin && !cycle.empty()) {
            break;
          }
          cycle.push_back({q, at_start});
          visited.insert(q);
          if (at_start) {
            q = next_in_face(q);
            at_start = true;
          } else {
            q = prev_in_face(q);
            at_start = false;
          }
          continue;
        }
        const auto p = *s.partner(q);
        const bool same = s.at(p).dir == s.at(q).dir;
        const bool p_start = same ? at_start : !at_start;
        if (p_start) {
          q = prev_in_face(p);
          at_start = false;
        } else {
          q = next_in_face(p);
          at_start = true;
        }
      }
      cycles.push_back(std::move(cycle));
    }
  }
  return cycles;
}

bool is_orientable(const SurfaceSchema& s) {
  require_valid(s, false);
  std::vector<int> sign(s.face_count(), 0);
  std::vector<std::vector<std::string>> labels_of_face(s.face_count());
  for (const auto& label : s.labels()) {
    for (const auto& r : s.occurrences(label)) {
      labels_of_face[r.face].push_back(label);
    }
  }
  for (std::size_t root = 0; root < s.face_count(); ++root) {
    if (sign[root] != 0) {
      continue;
    }
    sign[root] = 1;
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      const auto f = todo.front();
      todo.pop();
      for (const auto& label : labels_of_face[f]) {
        const auto& occ = s.occurrences(label);
        if (occ.size() != 2) {
          continue;
        }
        const int d0 = static_cast<int>(s.at(occ[0]).dir);
        const int d1 = static_cast<int>(s.at(occ[1]).dir);
        // Consistent orientation: sign0*d0 == -sign1*d1.
        const auto f0 = occ[0].face;
        const auto f1 = occ[1].face;
        if (sign[f0] != 0 && sign[f1] != 0) {
          if (sign[f0] * d0 != -sign[f1] * d1) {
            return false;
          }
          continue;
        }
        if (sign[f0] == 0) {
          sign[f0] = -sign[f1] * d1 * d0;
          todo.push(f0);
        } else {
          sign[f1] = -sign[f0] * d0 * d1;
          todo.push(f1);
        }
      }
    }
  }
  return true;
}

SurfaceType classify_surface(const SurfaceSchema& s) {
  require_valid(s, true);
  const int chi = euler_characteristic(s);
  const int b = static_cast<int>(boundary_cycles(s).size());
  const bool orientable = is_orientable(s);
  const int defect = 2 - chi - b;
  if (orientable) {
    if (defect < 0 || defect % 2 != 0) {
      throw InternalConsistencyError("orientable schema with chi=" + std::to_string(chi) +
                                     " b=" + std::to_string(b) + " has non-integer genus");
    }
    return SurfaceType::orientable_surface(defect / 2, b);
  }
  if (defect <= 0) {
    throw InternalConsistencyError("non-orientable schema with chi=" + std::to_string(chi) +
                                   " b=" + std::to_string(b) + " has genus <= 0");
  }
  return SurfaceType::nonorientable_surface(defect, b);
}

std::vector<SurfaceSchema> connected_components(const SurfaceSchema& s) {
  require_valid(s, false);
  std::vector<SurfaceSchema> out;
  for (const auto& group : component_faces(s)) {
    std::vector<Face> faces;
    std::set<std::string> used;
    for (auto f : group) {
      faces.push_back(s.face(f));
      for (const auto& o : s.face(f).word) {
        used.insert(o.edge);
      }
    }
    std::map<std::string, Flag> flags;
    for (const auto& [label, flag] : s.declared_flags()) {
      if (used.contains(label)) {
        flags.emplace(label, flag);
      }
    }
    out.emplace_back(std::move(faces), std::move(flags));
  }
  return out;
}

SurfaceSchema standard_schema(const SurfaceType& t) {
  if (t.genus < 0 || t.boundary < 0 || (!t.orientable && t.genus < 1)) {
    throw InvalidInput("illegal surface type: " + describe(t));
  }
  Face face{"F", {}};
  auto push = [&](const std::string& label, Dir dir) { face.word.push_back({label, dir}); };
  if (t.orientable) {
    for (int i = 1; i <= t.genus; ++i) {
      const auto a = "a" + std::to_string(i);
      const auto b = "b" + std::to_string(i);
      push(a, Dir::Forward);
      push(b, Dir::Forward);
      push(a, Dir::Backward);
      push(b, Dir::Backward);
    }
  } else {
    for (int j = 1; j <= t.genus; ++j) {
      const auto x = "x" + std::to_string(j);
      push(x, Dir::Forward);
      push(x, Dir::Forward);
    }
  }
  for (int l = 1; l <= t.boundary; ++l) {
    const auto c = "c" + std::to_string(l);
    push(c, Dir::Forward);
    push("e" + std::to_string(l), Dir::Forward);
    push(c, Dir::Backward);
  }
  if (face.word.empty()) {
    push("a", Dir::Forward);
    push("a", Dir::Backward);
  }
  return SurfaceSchema({std::move(face)});
}

SurfaceSchema schema_from_words(const std::vector<std::string>& face_words) {
  std::vector<Face> faces;
  for (std::size_t f = 0; f < face_words.size(); ++f) {
    Face face{"f" + std::to_string(f), {}};
    std::istringstream in(face_words[f]);
    std::string token;
    while (in >> token) {
      if (token.size() > 1 && token.back() == '-') {
        face.word.push_back({token.substr(0, token.size() - 1), Dir::Backward});
      } else {
        face.word.push_back({token, Dir::Forward});
      }
    }
    faces.push_back(std::move(face));
  }
  return SurfaceSchema(std::move(faces));
}

}  // namespace crosscap

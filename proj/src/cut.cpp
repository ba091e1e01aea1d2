#include "crosscap/cut.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace crosscap {

std::string to_string(EssentialReason r) {
  switch (r) {
    case EssentialReason::SingleCrosscapPass: return "single_crosscap_pass";
    case EssentialReason::OneSided: return "one_sided";
    case EssentialReason::CutComplement: return "cut_complement";
    case EssentialReason::BoundsDisc: return "bounds_disc";
    case EssentialReason::BoundsMobius: return "bounds_mobius";
  }
  return "?";
}

std::string to_string(AnnulusVerdict v) {
  switch (v) {
    case AnnulusVerdict::CoboundAnnulus: return "cobound_annulus";
    case AnnulusVerdict::NoAnnulus: return "no_annulus";
    case AnnulusVerdict::Unknown: return "unknown";
  }
  return "?";
}

std::vector<std::size_t> CutResult::circles_of(std::size_t component) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    if (circle_component[i] == component) {
      out.push_back(i);
    }
  }
  return out;
}

std::size_t CutResult::new_circle_count(const std::string& curve_id) const {
  return static_cast<std::size_t>(std::count_if(source.begin(), source.end(), [&](const auto& src) {
    return src && src->curve_id == curve_id;
  }));
}

namespace {

struct EndpointRef {
  std::size_t curve;
  std::size_t chord;
  int which;  // 0 = from, 1 = to
};

struct PointOnEdge {
  Rational pos;
  EndpointRef ref;
};

struct Segment {
  Occurrence item;
  std::optional<EndpointRef> ends_at;  // nullopt: ends at a corner
};

struct ChordSide {
  std::size_t curve;
  std::size_t chord;
  int side;
};

std::string piece_label(const std::string& label, std::size_t piece) {
  return label + "#" + std::to_string(piece);
}

}  // namespace

CutResult cut_along(const SurfaceSchema& s, const std::vector<Curve>& curves) {
  require_valid(s, false);
  std::vector<const Curve*> ptrs;
  for (const auto& c : curves) {
    if (!is_simple(s, c)) {
      throw InvalidInput("cannot cut along non-simple curve '" + c.id + "'");
    }
    ptrs.push_back(&c);
  }
  require_jointly_generic(ptrs);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      if (crossings(s, curves[i], curves[j]) != 0) {
        throw InvalidInput("cannot cut along crossing curves '" + curves[i].id + "' and '" +
                           curves[j].id + "'");
      }
    }
  }

  // Points per occurrence, plus the number of cut points per label.
  std::map<OccurrenceRef, std::vector<PointOnEdge>> on_edge;
  std::map<std::string, std::size_t> label_cuts;
  for (std::size_t k = 0; k < curves.size(); ++k) {
    for (std::size_t j = 0; j < curves[k].chords.size(); ++j) {
      const auto& ch = curves[k].chords[j];
      on_edge[ch.from.occurrence].push_back({ch.from.pos, {k, j, 0}});
      on_edge[ch.to.occurrence].push_back({ch.to.pos, {k, j, 1}});
    }
  }
  for (auto& [occ, pts] : on_edge) {
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.pos < b.pos; });
    label_cuts[s.at(occ).edge] = pts.size();
  }

  std::vector<Face> new_faces;
  std::map<std::string, ChordSide> side_labels;
  for (std::size_t f = 0; f < s.face_count(); ++f) {
    const auto& face = s.face(f);
    std::vector<Segment> segs;
    std::map<std::tuple<std::size_t, std::size_t, int>, std::size_t> seg_ending_at;
    for (std::size_t i = 0; i < face.word.size(); ++i) {
      const auto& occ = face.word[i];
      auto it = on_edge.find({f, i});
      if (it == on_edge.end()) {
        if (auto cut = label_cuts.find(occ.edge); cut != label_cuts.end()) {
          throw InvalidInput("curve points on '" + occ.edge + "' are not mirrored on both occurrences");
        }
        segs.push_back({occ, std::nullopt});
        continue;
      }
      const auto& pts = it->second;
      const auto r = pts.size();
      if (label_cuts.at(occ.edge) != r) {
        throw InvalidInput("curve points on '" + occ.edge + "' are not mirrored on both occurrences");
      }
      for (std::size_t p = 0; p <= r; ++p) {
        // Piece p in traversal order is piece p (forward) or r-p (backward) along the label.
        const auto piece = occ.dir == Dir::Forward ? p : r - p;
        Segment seg{{piece_label(occ.edge, piece), occ.dir}, std::nullopt};
        if (p < r) {
          seg.ends_at = pts[p].ref;
          seg_ending_at[{pts[p].ref.curve, pts[p].ref.chord, pts[p].ref.which}] = segs.size();
        }
        segs.push_back(std::move(seg));
      }
    }
    if (seg_ending_at.empty()) {
      new_faces.push_back(face);
      continue;
    }
    std::vector<bool> used(segs.size(), false);
    std::size_t sub = 0;
    for (std::size_t start = 0; start < segs.size(); ++start) {
      if (used[start]) {
        continue;
      }
      Face out{face.id + "/" + std::to_string(sub++), {}};
      std::size_t cur = start;
      for (std::size_t guard = 0;; ++guard) {
        if (guard > 4 * segs.size() + 4) {
          throw InternalConsistencyError("face tracing did not close while cutting");
        }
        used[cur] = true;
        out.word.push_back(segs[cur].item);
        if (!segs[cur].ends_at) {
          cur = (cur + 1) % segs.size();
        } else {
          const auto ref = *segs[cur].ends_at;
          const auto& curve = curves[ref.curve];
          const int side = ref.which == 0 ? 0 : 1;  // travelling from -> to is side 0
          const auto label = std::string(kCutLabelPrefix) + curve.id + ":" + std::to_string(ref.chord) +
                             ":" + std::to_string(side);
          out.word.push_back({label, Dir::Forward});
          side_labels.emplace(label, ChordSide{ref.curve, ref.chord, side});
          const EndpointRef other{ref.curve, ref.chord, 1 - ref.which};
          cur = (seg_ending_at.at({other.curve, other.chord, other.which}) + 1) % segs.size();
        }
        if (cur == start) {
          break;
        }
      }
      new_faces.push_back(std::move(out));
    }
  }

  CutResult result;
  result.schema = SurfaceSchema(std::move(new_faces));
  result.circles = boundary_cycles(result.schema);
  result.component_faces = component_faces(result.schema);
  std::vector<std::size_t> comp_of_face(result.schema.face_count());
  for (std::size_t c = 0; c < result.component_faces.size(); ++c) {
    for (auto f : result.component_faces[c]) {
      comp_of_face[f] = c;
    }
  }
  for (const auto& cycle : result.circles) {
    std::optional<CircleSource> src;
    bool has_first_side0 = false;
    for (const auto& step : cycle) {
      auto it = side_labels.find(result.schema.at(step.occurrence).edge);
      if (it == side_labels.end()) {
        continue;
      }
      if (!src) {
        src = CircleSource{curves[it->second.curve].id, 1};
      }
      if (it->second.chord == 0 && it->second.side == 0) {
        has_first_side0 = true;
      }
    }
    if (src && has_first_side0) {
      src->side = 0;
    }
    result.source.push_back(src);
    result.circle_component.push_back(comp_of_face[cycle.front().occurrence.face]);
  }
  for (const auto& comp : connected_components(result.schema)) {
    result.types.push_back(classify_surface(comp));
  }
  return result;
}

std::vector<SurfaceType> cut_classification(const SurfaceSchema& s, const Curve& c) {
  return cut_along(s, {c}).types;
}

namespace {

/// Components whose only boundary circle is one copy of `c`.
std::optional<EssentialReason> trivial_complement(const CutResult& cut, const std::string& id) {
  for (std::size_t comp = 0; comp < cut.types.size(); ++comp) {
    const auto circles = cut.circles_of(comp);
    if (circles.size() != 1 || !cut.source[circles[0]] || cut.source[circles[0]]->curve_id != id) {
      continue;
    }
    if (cut.types[comp] == SurfaceType::orientable_surface(0, 1)) {
      return EssentialReason::BoundsDisc;
    }
    if (cut.types[comp] == SurfaceType::nonorientable_surface(1, 1)) {
      return EssentialReason::BoundsMobius;
    }
  }
  return std::nullopt;
}

}  // namespace

EssentialityCertificate is_essential_by_cut(const SurfaceSchema& s, const Curve& c) {
  if (sidedness(s, c) == Sidedness::OneSided) {
    return {true, EssentialReason::OneSided};
  }
  const auto cut = cut_along(s, {c});
  if (auto reason = trivial_complement(cut, c.id)) {
    return {false, *reason};
  }
  return {true, EssentialReason::CutComplement};
}

EssentialityCertificate is_essential(const SurfaceSchema& s, const Curve& c) {
  if (!is_simple(s, c)) {
    throw InvalidInput("is_essential requires a simple curve ('" + c.id + "')");
  }
  for (const auto& [label, passes] : crosscap_passes(s, c)) {
    if (passes == 1) {
      return {true, EssentialReason::SingleCrosscapPass};
    }
  }
  return is_essential_by_cut(s, c);
}

bool is_peripheral(const SurfaceSchema& s, const Curve& c) {
  if (sidedness(s, c) == Sidedness::OneSided) {
    return false;
  }
  const auto cut = cut_along(s, {c});
  for (std::size_t comp = 0; comp < cut.types.size(); ++comp) {
    if (cut.types[comp] != SurfaceType::orientable_surface(0, 2)) {
      continue;
    }
    const auto circles = cut.circles_of(comp);
    int from_curve = 0;
    int original = 0;
    for (auto i : circles) {
      if (!cut.source[i]) {
        ++original;
      } else if (cut.source[i]->curve_id == c.id) {
        ++from_curve;
      }
    }
    if (from_curve == 1 && original == 1) {
      return true;
    }
  }
  return false;
}

AnnulusCertificate annulus_certificate(const SurfaceSchema& s, const Curve& a, const Curve& b) {
  const int x = crossings(s, a, b);
  if (x % 2 == 1) {
    throw InvalidInput("annulus_certificate requires disjoint curves ('" + a.id + "', '" + b.id + "')");
  }
  if (x > 0) {
    return {AnnulusVerdict::Unknown, std::nullopt};
  }
  const auto cut = cut_along(s, {a, b});
  AnnulusCertificate out{AnnulusVerdict::NoAnnulus, std::nullopt};
  for (std::size_t comp = 0; comp < cut.types.size(); ++comp) {
    int from_a = 0;
    int from_b = 0;
    int other = 0;
    for (auto i : cut.circles_of(comp)) {
      if (cut.source[i] && cut.source[i]->curve_id == a.id) {
        ++from_a;
      } else if (cut.source[i] && cut.source[i]->curve_id == b.id) {
        ++from_b;
      } else {
        ++other;
      }
    }
    if (from_a == 0 || from_b == 0) {
      continue;
    }
    if (from_a == 1 && from_b == 1 && other == 0 && cut.types[comp] == SurfaceType::orientable_surface(0, 2)) {
      return {AnnulusVerdict::CoboundAnnulus, cut.types[comp]};
    }
    if (!out.witness) {
      out.witness = cut.types[comp];
    }
  }
  return out;
}

bool orientable_after_cut(const SurfaceSchema& s, const Curve& c) {
  const auto types = cut_classification(s, c);
  return std::all_of(types.begin(), types.end(), [](const SurfaceType& t) { return t.orientable; });
}

}  // namespace crosscap

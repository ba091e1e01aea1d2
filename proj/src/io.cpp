#include "crosscap/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace crosscap {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("field '") + key + "': " + e.what());
  }
}

Json point_json(const CurvePoint& p) {
  return Json{{"occurrence", p.occurrence.index}, {"pos", to_string(p.pos)}};
}

CurvePoint point_from_json(std::size_t face, const Json& j) {
  try {
    return {{face, field<std::size_t>(j, "occurrence")}, parse_rational(field<std::string>(j, "pos"))};
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

}  // namespace

Json to_json(const SurfaceSchema& s) {
  Json faces = Json::array();
  for (const auto& f : s.faces()) {
    Json word = Json::array();
    for (const auto& o : f.word) {
      word.push_back({{"edge", o.edge}, {"dir", o.dir == Dir::Forward ? "+" : "-"}});
    }
    faces.push_back({{"id", f.id}, {"word", word}});
  }
  Json pairs = Json::array();
  for (const auto& label : s.labels()) {
    if (s.occurrences(label).size() == 2) {
      pairs.push_back({{"edge", label}, {"flag", s.flag(label) == Flag::Same ? "same" : "reversed"}});
    }
  }
  return {{"faces", faces}, {"pairs", pairs}};
}

SurfaceSchema schema_from_json(const Json& j) {
  std::vector<Face> faces;
  const auto jf = field<Json>(j, "faces");
  if (!jf.is_array()) {
    throw InvalidInput("'faces' must be an array");
  }
  for (const auto& f : jf) {
    Face face{field<std::string>(f, "id"), {}};
    for (const auto& o : field<Json>(f, "word")) {
      const auto dir = field<std::string>(o, "dir");
      if (dir != "+" && dir != "-") {
        throw InvalidInput("dir must be '+' or '-', got '" + dir + "'");
      }
      face.word.push_back({field<std::string>(o, "edge"), dir == "+" ? Dir::Forward : Dir::Backward});
    }
    faces.push_back(std::move(face));
  }
  if (!j.contains("pairs")) {
    return SurfaceSchema(std::move(faces));
  }
  std::map<std::string, Flag> flags;
  for (const auto& p : field<Json>(j, "pairs")) {
    const auto flag = field<std::string>(p, "flag");
    if (flag != "same" && flag != "reversed") {
      throw InvalidInput("flag must be 'same' or 'reversed', got '" + flag + "'");
    }
    flags[field<std::string>(p, "edge")] = flag == "same" ? Flag::Same : Flag::Reversed;
  }
  return SurfaceSchema(std::move(faces), std::move(flags));
}

Json to_json(const SurfaceSchema& s, const Curve& c) {
  Json chords = Json::array();
  for (const auto& ch : c.chords) {
    chords.push_back({{"face", s.face(ch.face).id}, {"from", point_json(ch.from)}, {"to", point_json(ch.to)}});
  }
  return {{"id", c.id}, {"chords", chords}};
}

Curve curve_from_json(const SurfaceSchema& s, const Json& j) {
  Curve c{field<std::string>(j, "id"), {}};
  for (const auto& ch : field<Json>(j, "chords")) {
    const auto face_id = field<std::string>(ch, "face");
    const auto found = s.face_index(face_id);
    if (!found) {
      throw InvalidInput("curve '" + c.id + "' names unknown face '" + face_id + "'");
    }
    const auto face = *found;
    c.chords.push_back({face, point_from_json(face, field<Json>(ch, "from")), point_from_json(face, field<Json>(ch, "to"))});
  }
  return c;
}

Json to_json(const LevelTag& t) {
  Json j{{"role", to_string(t.role)}};
  if (t.slope) {
    j["slope"] = *t.slope;
  }
  j["level"] = t.level;
  if (t.crosscap) {
    j["crosscap"] = *t.crosscap;
  }
  if (t.handle) {
    j["handle"] = *t.handle;
  }
  return j;
}

LevelTag tag_from_json(const Json& j) {
  LevelTag t;
  try {
    t.role = parse_role(field<std::string>(j, "role"));
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  t.level = field<int>(j, "level");
  if (j.contains("slope")) {
    t.slope = field<int>(j, "slope");
  }
  if (j.contains("crosscap")) {
    t.crosscap = field<int>(j, "crosscap");
  }
  if (j.contains("handle")) {
    t.handle = field<int>(j, "handle");
  }
  return t;
}

Json to_json(const SurfaceType& t) {
  return {{"orientable", t.orientable}, {"genus", t.genus}, {"boundary", t.boundary}};
}

SurfaceType surface_type_from_json(const Json& j) {
  return {field<bool>(j, "orientable"), field<int>(j, "genus"), field<int>(j, "boundary")};
}

Json to_json(const CurveFamily& fam, const std::optional<BuildInfo>& build) {
  Json j{{"schema", to_json(fam.schema)}};
  if (build) {
    j["construction"] = {{"theorem", build->theorem},
                         {"g", build->g},
                         {"b", build->b},
                         {"k", build->k},
                         {"disc_face", build->disc_face},
                         {"expected_size", build->expected_size},
                         {"expected_type", to_json(build->expected_type)}};
  }
  Json curves = Json::array();
  for (std::size_t i = 0; i < fam.curves.size(); ++i) {
    auto c = to_json(fam.schema, fam.curves[i]);
    if (i < fam.tags.size() && fam.tags[i]) {
      c["tag"] = to_json(*fam.tags[i]);
    }
    curves.push_back(std::move(c));
  }
  j["curves"] = curves;
  return j;
}

FamilyFile family_from_json(const Json& j) {
  FamilyFile out;
  out.family.schema = schema_from_json(field<Json>(j, "schema"));
  bool any_tag = false;
  if (j.contains("curves")) {
    for (const auto& c : field<Json>(j, "curves")) {
      out.family.curves.push_back(curve_from_json(out.family.schema, c));
      if (c.contains("tag")) {
        out.family.tags.push_back(tag_from_json(c.at("tag")));
        any_tag = true;
      } else {
        out.family.tags.push_back(std::nullopt);
      }
    }
  }
  if (!any_tag) {
    out.family.tags.clear();
  }
  if (j.contains("construction")) {
    const auto& c = j.at("construction");
    out.build = BuildInfo{field<std::string>(c, "theorem"),
                          field<int>(c, "g"),
                          field<int>(c, "b"),
                          field<int>(c, "k"),
                          field<std::string>(c, "disc_face"),
                          field<std::size_t>(c, "expected_size"),
                          surface_type_from_json(field<Json>(c, "expected_type"))};
  }
  return out;
}

ConstructionState state_from_file(const FamilyFile& file) {
  if (!file.build) {
    throw InvalidInput("family file has no construction block");
  }
  ConstructionState st;
  st.schema = file.family.schema;
  st.family = file.family;
  st.disc.face_id = file.build->disc_face;
  st.expected_size = file.build->expected_size;
  st.expected_type = file.build->expected_type;
  return st;
}

Json to_json(const CutResult& cut) {
  Json circles = Json::array();
  for (std::size_t i = 0; i < cut.circles.size(); ++i) {
    Json c{{"component", cut.circle_component[i]}};
    if (cut.source[i]) {
      c["curve"] = cut.source[i]->curve_id;
      c["side"] = cut.source[i]->side;
    } else {
      c["curve"] = nullptr;
    }
    Json edges = Json::array();
    for (const auto& step : cut.circles[i]) {
      edges.push_back(cut.schema.at(step.occurrence).edge);
    }
    c["edges"] = edges;
    circles.push_back(std::move(c));
  }
  Json components = Json::array();
  for (std::size_t k = 0; k < cut.types.size(); ++k) {
    Json faces = Json::array();
    for (auto f : cut.component_faces[k]) {
      faces.push_back(cut.schema.face(f).id);
    }
    components.push_back({{"type", to_json(cut.types[k])}, {"description", describe(cut.types[k])}, {"faces", faces}});
  }
  return {{"schema", to_json(cut.schema)}, {"components", components}, {"provenance", circles}};
}

Json to_json(const VerificationReport& r, const CurveFamily& fam) {
  Json curves = Json::array();
  for (const auto& c : r.curves) {
    Json j{{"id", c.id}, {"simple", c.simple}, {"essential", c.essential}};
    j["essential_reason"] = c.essential_reason ? Json(to_string(*c.essential_reason)) : Json(nullptr);
    j["peripheral"] = c.peripheral;
    j["sidedness"] = c.sidedness ? Json(to_string(*c.sidedness)) : Json(nullptr);
    curves.push_back(std::move(j));
  }
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json cert{{"kind", to_string(p.certificate.kind)}, {"crossings", p.certificate.crossings}};
    if (p.certificate.sidedness) {
      cert["sidedness"] = {to_string(p.certificate.sidedness->first), to_string(p.certificate.sidedness->second)};
    }
    if (p.certificate.cobounded) {
      cert["cobounded"] = describe(*p.certificate.cobounded);
    }
    if (!p.certificate.note.empty()) {
      cert["note"] = p.certificate.note;
    }
    Json j{{"a", fam.curves[p.a].id}, {"b", fam.curves[p.b].id}, {"crossings", p.crossings}};
    if (p.expected) {
      j["expected"] = *p.expected;
    }
    j["certificate"] = cert;
    pairs.push_back(std::move(j));
  }
  Json summary{{"is_1_system", r.summary.is_1_system},
               {"max_crossings", r.summary.max_crossings},
               {"count", r.summary.count},
               {"unknown_certificates", r.summary.unknown_certificates}};
  Json construction = Json::object();
  if (r.matrix_matches) {
    construction["matrix_matches"] = *r.matrix_matches;
  }
  if (r.size_matches) {
    construction["size_matches"] = *r.size_matches;
  }
  if (r.type_matches) {
    construction["type_matches"] = *r.type_matches;
  }
  if (r.actual_type) {
    construction["surface"] = describe(*r.actual_type);
  }
  Json j{{"summary", summary}, {"passed", r.passed()}};
  if (!construction.empty()) {
    j["construction"] = construction;
  }
  j["failures"] = r.failures;
  j["curves"] = curves;
  j["pairs"] = pairs;
  return j;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw InternalConsistencyError("SHA-256 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

std::string json_hash(const Json& j) { return sha256_hex(j.dump()); }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot read '" + path.string() + "'");
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InvalidInput("cannot write '" + path.string() + "'");
  }
  out << text;
}

}  // namespace crosscap

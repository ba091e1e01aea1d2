#pragma once

#include "crosscap/construct.hpp"
#include "crosscap/cut.hpp"
#include "crosscap/family.hpp"
#include "crosscap/verify.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace crosscap {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

Json to_json(const SurfaceSchema& s);
SurfaceSchema schema_from_json(const Json& j);

Json to_json(const SurfaceSchema& s, const Curve& c);
Curve curve_from_json(const SurfaceSchema& s, const Json& j);

Json to_json(const LevelTag& t);
LevelTag tag_from_json(const Json& j);

Json to_json(const SurfaceType& t);
SurfaceType surface_type_from_json(const Json& j);

/// Construction metadata stored next to a built family so that `verify` can
/// run the construction checks on the file alone.
struct BuildInfo {
  std::string theorem;  ///< "a", "b" or "mrt"
  int g = 0;
  int b = 0;
  int k = 0;
  std::string disc_face;
  std::size_t expected_size = 0;
  SurfaceType expected_type;
};

struct FamilyFile {
  CurveFamily family;
  std::optional<BuildInfo> build;
};

Json to_json(const CurveFamily& fam, const std::optional<BuildInfo>& build = std::nullopt);
FamilyFile family_from_json(const Json& j);

/// A state carrying the file's family and expectations (layout is left empty).
ConstructionState state_from_file(const FamilyFile& file);

Json to_json(const CutResult& cut);
Json to_json(const VerificationReport& r, const CurveFamily& fam);

std::string sha256_hex(const std::string& data);
/// Hash of the compact serialisation.
std::string json_hash(const Json& j);

/// Parses a JSON file; throws InvalidInput on I/O or syntax errors.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace crosscap

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace crosscap {

/// Exit codes shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

/// Prints the surface type. With `max_chords`, also lists the simple curves
/// found by enumeration with their sidedness, essentiality and cut type.
int cmd_classify(const std::filesystem::path& schema_path, std::optional<int> max_chords, std::ostream& out,
                 std::ostream& err);

struct BuildRequest {
  std::string theorem = "a";  ///< "a", "b" or "mrt"
  int g = 0;
  int b = 0;
  std::optional<int> k;
  std::filesystem::path out;  ///< family file; the manifest goes next to it
  unsigned workers = 0;
};

int cmd_build(const BuildRequest& req, std::ostream& out, std::ostream& err);

/// Verifies a family file (with construction checks when the file carries a
/// construction block). The JSON report goes to `report_path` or `out`.
int cmd_verify(const std::filesystem::path& family_path, unsigned workers,
               const std::optional<std::filesystem::path>& report_path, std::ostream& out, std::ostream& err);

int cmd_cut(const std::filesystem::path& family_path, const std::string& curve_id,
            const std::optional<std::filesystem::path>& json_path, std::ostream& out, std::ostream& err);

struct TableRequest {
  std::string theorem = "a";
  int g_min = 0;
  int g_max = -1;
  int b = 0;
  bool counts_only = false;
  unsigned workers = 0;
};

int cmd_table(const TableRequest& req, std::ostream& out, std::ostream& err);

int cmd_export_svg(const std::filesystem::path& family_path, const std::filesystem::path& svg_path,
                   std::ostream& out, std::ostream& err);

}  // namespace crosscap

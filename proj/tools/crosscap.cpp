#include "crosscap/commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <thread>

namespace {

/// "6..12" or "6".
bool parse_range(const std::string& text, int& lo, int& hi) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curve systems on non-orientable surfaces"};
  app.require_subcommand(1);
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());

  std::string path;
  std::optional<int> max_chords;
  auto* classify = app.add_subcommand("classify", "classify a schema file");
  classify->add_option("schema", path, "schema or family JSON")->required();
  classify->add_option("--max-chords", max_chords, "also enumerate simple curves with up to this many chords");

  crosscap::BuildRequest breq;
  std::string out_path;
  auto* build = app.add_subcommand("build", "build a Theorem A/B family and its manifest");
  build->add_option("--theorem", breq.theorem, "a, b or mrt")->check(CLI::IsMember({"a", "b", "mrt"}));
  build->add_option("--g", breq.g, "non-orientable genus");
  build->add_option("--b", breq.b, "boundary components");
  build->add_option("--k", breq.k, "handles traded for cross-caps");
  build->add_option("--out", out_path, "family JSON path")->required();
  build->add_option("--workers", workers, "verification threads");

  std::optional<std::string> report;
  auto* verify = app.add_subcommand("verify", "verify a family file");
  verify->add_option("family", path, "family JSON")->required();
  verify->add_option("--out", report, "write the JSON report here instead of stdout");
  verify->add_option("--workers", workers, "verification threads");

  std::string curve_id;
  auto* cut = app.add_subcommand("cut", "cut a family's schema along one of its curves");
  cut->add_option("family", path, "family JSON")->required();
  cut->add_option("curve", curve_id, "curve id")->required();
  cut->add_option("--out", report, "write the cut schema and provenance as JSON");

  crosscap::TableRequest treq;
  std::string g_range;
  auto* table = app.add_subcommand("table", "predicted vs built sizes over a genus range");
  table->add_option("--theorem", treq.theorem, "a or b")->check(CLI::IsMember({"a", "b"}));
  table->add_option("--g", g_range, "genus or range lo..hi")->required();
  table->add_option("--b", treq.b, "boundary components");
  table->add_flag("--counts-only", treq.counts_only, "skip verification");
  table->add_option("--workers", workers, "verification threads");

  std::string svg_out;
  auto* svg = app.add_subcommand("export-svg", "draw a family");
  svg->add_option("family", path, "family JSON")->required();
  svg->add_option("--out", svg_out, "SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? crosscap::kExitPass : crosscap::kExitInput;
  }

  if (*classify) {
    return crosscap::cmd_classify(path, max_chords, std::cout, std::cerr);
  }
  if (*build) {
    breq.out = out_path;
    breq.workers = workers;
    return crosscap::cmd_build(breq, std::cout, std::cerr);
  }
  if (*verify) {
    std::optional<std::filesystem::path> rp;
    if (report) {
      rp = *report;
    }
    return crosscap::cmd_verify(path, workers, rp, std::cout, std::cerr);
  }
  if (*cut) {
    std::optional<std::filesystem::path> rp;
    if (report) {
      rp = *report;
    }
    return crosscap::cmd_cut(path, curve_id, rp, std::cout, std::cerr);
  }
  if (*table) {
    if (!parse_range(g_range, treq.g_min, treq.g_max)) {
      std::cerr << "error: --g expects N or LO..HI\n";
      return crosscap::kExitInput;
    }
    treq.workers = workers;
    return crosscap::cmd_table(treq, std::cout, std::cerr);
  }
  return crosscap::cmd_export_svg(path, svg_out, std::cout, std::cerr);
}

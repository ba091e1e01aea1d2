#include "crosscap/commands.hpp"

#include "crosscap/io.hpp"
#include "crosscap/svg.hpp"

#include <functional>
#include <iomanip>
#include <sstream>

namespace crosscap {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
}

struct Built {
  ConstructionState state;
  BuildInfo info;
};

Built build(const std::string& theorem, int g, int b, std::optional<int> k) {
  Built out;
  if (theorem == "a") {
    const int kk = k ? *k : default_k_theorem_a(g);
    out.state = build_theorem_a(g, b, kk);
    out.info = {"a", g, b, kk, "", 0, {}};
  } else if (theorem == "b") {
    if (b != 0) {
      throw InvalidInput("Theorem B builds closed surfaces only (b must be 0)");
    }
    const int kk = k ? *k : default_k_theorem_b(g);
    out.state = build_theorem_b(g, kk);
    out.info = {"b", g, 0, kk, "", 0, {}};
  } else if (theorem == "mrt") {
    if (!k) {
      throw InvalidInput("mrt builds need --k");
    }
    out.state = build_mrt(*k, b);
    out.info = {"mrt", 0, b, *k, "", 0, {}};
  } else {
    throw InvalidInput("unknown theorem '" + theorem + "' (use a, b or mrt)");
  }
  out.info.disc_face = out.state.disc.face_id;
  out.info.expected_size = *out.state.expected_size;
  out.info.expected_type = *out.state.expected_type;
  return out;
}

Json summary_json(const VerificationReport& r) {
  return {{"is_1_system", r.summary.is_1_system},
          {"max_crossings", r.summary.max_crossings},
          {"count", r.summary.count},
          {"unknown_certificates", r.summary.unknown_certificates},
          {"passed", r.passed()},
          {"failures", r.failures.size()}};
}

std::string short_text(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator()) : to_string(r);
}

std::filesystem::path manifest_path(const std::filesystem::path& family) {
  auto p = family;
  p.replace_extension(".manifest.json");
  return p;
}

}  // namespace

int cmd_classify(const std::filesystem::path& schema_path, std::optional<int> max_chords, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const auto j = read_json_file(schema_path);
    const auto schema = schema_from_json(j.contains("schema") ? j.at("schema") : j);
    out << describe(classify_surface(schema)) << '\n';
    if (!max_chords) {
      return kExitPass;
    }
    const auto curves = enumerate_small_curves(schema, *max_chords);
    out << curves.size() << " simple curves with at most " << *max_chords << " chords\n";
    for (const auto& c : curves) {
      out << c.id << "  chords=" << c.chords.size() << "  " << to_string(sidedness(schema, c));
      const auto ess = is_essential(schema, c);
      out << "  " << (ess.essential ? "essential" : "inessential") << '(' << to_string(ess.reason) << ')';
      out << "  passes=";
      bool first = true;
      for (const auto& [label, n] : crosscap_passes(schema, c)) {
        out << (first ? "" : ",") << label << ':' << n;
        first = false;
      }
      if (first) {
        out << '-';
      }
      out << "  cut=";
      first = true;
      for (const auto& t : cut_classification(schema, c)) {
        out << (first ? "" : " + ") << '[' << describe(t) << ']';
        first = false;
      }
      out << '\n';
    }
    return kExitPass;
  });
}

int cmd_build(const BuildRequest& req, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (req.out.empty()) {
      throw InvalidInput("build needs --out");
    }
    const auto built = build(req.theorem, req.g, req.b, req.k);
    const auto& st = built.state;
    const auto family_json = to_json(st.family, built.info);
    write_text_file(req.out, family_json.dump(2) + "\n");

    const auto report = verify_construction(st, req.workers);
    Json predicted{{"size", st.expected_size ? Json(*st.expected_size) : Json(nullptr)}};
    if (req.theorem == "a") {
      predicted["bound"] = to_string(bound_theorem_a(req.g, req.b));
    } else if (req.theorem == "b") {
      predicted["bound"] = to_string(bound_theorem_b(req.g));
    }
    Json manifest{{"command", "build"},
                  {"params", {{"theorem", req.theorem}, {"g", built.info.g}, {"b", built.info.b}, {"k", built.info.k}}},
                  {"schema_hash", json_hash(to_json(st.schema))},
                  {"family_hash", json_hash(family_json)},
                  {"predicted", predicted},
                  {"actual", {{"count", st.family.size()}, {"surface", describe(classify_surface(st.schema))}}},
                  {"verification", summary_json(report)},
                  {"tool_version", kToolVersion}};
    write_text_file(manifest_path(req.out), manifest.dump(2) + "\n");
    out << "built " << st.family.size() << " curves on " << describe(classify_surface(st.schema)) << " -> "
        << req.out.string() << '\n';
    out << "verification: " << (report.passed() ? "pass" : "FAIL") << " (" << report.failures.size()
        << " failures)\n";
    return kExitPass;
  });
}

int cmd_verify(const std::filesystem::path& family_path, unsigned workers,
               const std::optional<std::filesystem::path>& report_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto file = family_from_json(read_json_file(family_path));
    const auto report = file.build ? verify_construction(state_from_file(file), workers)
                                   : verify_one_system(file.family, workers);
    const auto text = to_json(report, file.family).dump(2) + "\n";
    if (report_path) {
      write_text_file(*report_path, text);
      out << (report.passed() ? "pass" : "FAIL") << ": " << report.summary.count << " curves, max crossings "
          << report.summary.max_crossings << ", " << report.failures.size() << " failures\n";
    } else {
      out << text;
    }
    for (std::size_t i = 0; i < report.failures.size() && i < 20; ++i) {
      err << "  " << report.failures[i] << '\n';
    }
    return report.passed() ? kExitPass : kExitFail;
  });
}

int cmd_cut(const std::filesystem::path& family_path, const std::string& curve_id,
            const std::optional<std::filesystem::path>& json_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto file = family_from_json(read_json_file(family_path));
    const auto* c = file.family.find(curve_id);
    if (!c) {
      throw InvalidInput("no curve '" + curve_id + "' in " + family_path.string());
    }
    const auto cut = cut_along(file.family.schema, {*c});
    for (std::size_t k = 0; k < cut.types.size(); ++k) {
      out << describe(cut.types[k]) << '\n';
      for (auto i : cut.circles_of(k)) {
        out << "  boundary " << i << ": ";
        if (cut.source[i]) {
          out << cut.source[i]->curve_id << " side " << cut.source[i]->side;
        } else {
          out << "original";
        }
        out << '\n';
      }
    }
    if (json_path) {
      write_text_file(*json_path, to_json(cut).dump(2) + "\n");
    }
    return kExitPass;
  });
}

int cmd_table(const TableRequest& req, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (req.theorem != "a" && req.theorem != "b") {
      throw InvalidInput("table supports theorem a or b");
    }
    out << std::setw(4) << "g" << std::setw(4) << "k" << std::setw(11) << "predicted" << std::setw(8) << "built"
        << std::setw(10) << "bound" << std::setw(10) << "verified" << '\n';
    bool all_pass = true;
    for (int g = req.g_min; g <= req.g_max; ++g) {
      out << std::setw(4) << g;
      std::optional<Built> built;
      try {
        built = build(req.theorem, g, req.b, std::nullopt);
      } catch (const InvalidInput&) {
        out << std::setw(4) << "-" << std::setw(11) << "-" << std::setw(8) << "refused" << '\n';
        continue;
      }
      const auto& st = built->state;
      const auto bound = req.theorem == "a" ? bound_theorem_a(g, req.b) : bound_theorem_b(g);
      std::string verified = "-";
      if (!req.counts_only) {
        const bool ok = verify_construction(st, req.workers).passed();
        all_pass = all_pass && ok;
        verified = ok ? "yes" : "NO";
      }
      out << std::setw(4) << built->info.k << std::setw(11) << *st.expected_size << std::setw(8) << st.family.size()
          << std::setw(10) << short_text(bound) << std::setw(10) << verified << '\n';
    }
    return all_pass ? kExitPass : kExitFail;
  });
}

int cmd_export_svg(const std::filesystem::path& family_path, const std::filesystem::path& svg_path,
                   std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto file = family_from_json(read_json_file(family_path));
    write_text_file(svg_path, render_svg(file.family));
    out << "wrote " << svg_path.string() << " (" << file.family.size() << " curves)\n";
    return kExitPass;
  });
}

}  // namespace crosscap

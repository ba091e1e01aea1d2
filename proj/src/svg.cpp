#include "crosscap/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace crosscap {

namespace {

constexpr double kRadius = 140.0;
constexpr double kCell = 340.0;
constexpr int kColumns = 3;

struct Pt {
  double x;
  double y;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

class FaceFrame {
 public:
  FaceFrame(std::size_t face, std::size_t sides)
      : sides_(sides),
        cx_(kCell / 2 + kCell * static_cast<double>(face % kColumns)),
        cy_(kCell / 2 + kCell * static_cast<double>(face / kColumns)) {}

  Pt vertex(std::size_t i) const { return on_circle(static_cast<double>(i)); }

  /// Point at parameter t along side i in traversal order.
  Pt at(std::size_t side, double t) const {
    if (sides_ < 3) {
      return on_circle(static_cast<double>(side) + t);
    }
    const auto a = vertex(side);
    const auto b = vertex((side + 1) % sides_);
    return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
  }

  Pt centre() const { return {cx_, cy_}; }
  bool round() const { return sides_ < 3; }

 private:
  Pt on_circle(double turns) const {
    const double angle = 2 * std::numbers::pi * turns / static_cast<double>(sides_) - std::numbers::pi / 2;
    return {cx_ + kRadius * std::cos(angle), cy_ + kRadius * std::sin(angle)};
  }

  std::size_t sides_;
  double cx_;
  double cy_;
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

}  // namespace

std::string render_svg(const CurveFamily& fam) {
  const auto& s = fam.schema;
  const std::size_t faces = s.face_count();
  const std::size_t rows = (faces + kColumns - 1) / kColumns;
  const double width = kCell * static_cast<double>(std::min<std::size_t>(faces, kColumns));
  const double height = kCell * static_cast<double>(std::max<std::size_t>(rows, 1));

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::vector<FaceFrame> frames;
  for (std::size_t f = 0; f < faces; ++f) {
    const auto& face = s.face(f);
    frames.emplace_back(f, face.word.size());
    const auto& fr = frames.back();
    out << "<g class=\"face\" id=\"face-" << face.id << "\">\n";
    if (fr.round()) {
      out << "<circle cx=\"" << fmt(fr.centre().x) << "\" cy=\"" << fmt(fr.centre().y) << "\" r=\"" << fmt(kRadius)
          << "\" fill=\"none\" stroke=\"black\"/>\n";
    } else {
      out << "<polygon fill=\"none\" stroke=\"black\" points=\"";
      for (std::size_t i = 0; i < face.word.size(); ++i) {
        const auto v = fr.vertex(i);
        out << (i ? " " : "") << fmt(v.x) << ',' << fmt(v.y);
      }
      out << "\"/>\n";
    }
    for (std::size_t i = 0; i < face.word.size(); ++i) {
      const auto& occ = face.word[i];
      const auto mid = fr.at(i, 0.5);
      const Pt label{fr.centre().x + (mid.x - fr.centre().x) * 1.12, fr.centre().y + (mid.y - fr.centre().y) * 1.12};
      out << "<text x=\"" << fmt(label.x) << "\" y=\"" << fmt(label.y)
          << "\" font-size=\"8\" text-anchor=\"middle\">" << occ.edge << (occ.dir == Dir::Forward ? "" : "⁻")
          << "</text>\n";
      if (s.is_free({f, i})) {
        out << "<circle cx=\"" << fmt(mid.x) << "\" cy=\"" << fmt(mid.y) << "\" r=\"4\" fill=\"none\" stroke=\"gray\"/>\n";
      } else if (s.is_crosscap(occ.edge) && s.occurrences(occ.edge).front() == OccurrenceRef{f, i}) {
        const auto end = fr.at(i, 1.0);
        out << "<text x=\"" << fmt(end.x) << "\" y=\"" << fmt(end.y + 5)
            << "\" font-size=\"16\" text-anchor=\"middle\">⊗</text>\n";
      }
    }
    out << "<text x=\"" << fmt(fr.centre().x) << "\" y=\"" << fmt(fr.centre().y + kRadius + 28)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << face.id << "</text>\n";
    out << "</g>\n";
  }

  for (std::size_t c = 0; c < fam.curves.size(); ++c) {
    const auto& curve = fam.curves[c];
    out << "<g class=\"curve\" id=\"curve-" << curve.id << "\" stroke=\"" << kPalette[c % std::size(kPalette)]
        << "\" stroke-width=\"1\">\n";
    for (const auto& ch : curve.chords) {
      const auto& fr = frames[ch.face];
      const auto a = fr.at(ch.from.occurrence.index, boost::rational_cast<double>(ch.from.pos));
      const auto b = fr.at(ch.to.occurrence.index, boost::rational_cast<double>(ch.to.pos));
      out << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y)
          << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace crosscap

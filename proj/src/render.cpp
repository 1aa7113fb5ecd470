#include "linkstar/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <sstream>

namespace linkstar {

namespace {

constexpr std::array<const char*, 16> kPalette = {
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45",
    "#469990", "#9a6324", "#800000", "#808000", "#000075", "#a9a9a9", "#dcbeff", "#ffe119",
};

constexpr double kCanvas = 800.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Frame {
  double min_x = std::numeric_limits<double>::max();
  double max_x = std::numeric_limits<double>::lowest();
  double min_y = std::numeric_limits<double>::max();
  double max_y = std::numeric_limits<double>::lowest();

  void add(const Point& p) {
    min_x = std::min(min_x, p.x.to_double());
    max_x = std::max(max_x, p.x.to_double());
    min_y = std::min(min_y, p.y.to_double());
    max_y = std::max(max_y, p.y.to_double());
  }
  double scale() const {
    const double span = std::max(max_x - min_x, max_y - min_y);
    return span > 0 ? (kCanvas - 2 * kMargin) / span : 1.0;
  }
  // SVG y grows downward.
  std::string x(const Point& p) const { return num(kMargin + (p.x.to_double() - min_x) * scale()); }
  std::string y(const Point& p) const { return num(kMargin + (max_y - p.y.to_double()) * scale()); }
};

}  // namespace

std::string render_svg(const Construction& c) {
  Frame f;
  for (const Point& v : c.polygon.vertices) f.add(v);
  for (const LabeledSegment& s : c.raw) {
    f.add(s.segment.p());
    f.add(s.segment.q());
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
  out << "<title>S(" << c.n << "," << c.k << ")</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g stroke-width=\"2\" stroke-linecap=\"round\">\n";
  for (const LabeledSegment& s : c.raw) {
    const char* color = kPalette[static_cast<std::size_t>(s.feature.index) % kPalette.size()];
    out << "<line class=\"" << s.feature.label() << "\" x1=\"" << f.x(s.segment.p()) << "\" y1=\"" << f.y(s.segment.p())
        << "\" x2=\"" << f.x(s.segment.q()) << "\" y2=\"" << f.y(s.segment.q()) << "\" stroke=\"" << color << "\"/>\n";
  }
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"14\">\n";
  for (std::size_t v = 0; v < c.polygon.vertices.size(); ++v) {
    const Point& p = c.polygon.vertices[v];
    const std::string label = (v % 2 == 0 ? "a" : "b") + std::to_string(v / 2);
    out << "<circle class=\"vertex\" cx=\"" << f.x(p) << "\" cy=\"" << f.y(p) << "\" r=\"4\" fill=\"black\"/>\n";
    out << "<text x=\"" << f.x(p) << "\" y=\"" << f.y(p) << "\" dx=\"6\" dy=\"-6\">" << label << "</text>\n";
  }
  for (std::size_t i = 0; i < c.c.size(); ++i) {
    const Point& p = c.c[i];
    out << "<rect class=\"midpoint\" x=\"" << num(std::stod(f.x(p)) - 3) << "\" y=\"" << num(std::stod(f.y(p)) - 3)
        << "\" width=\"6\" height=\"6\" fill=\"black\"/>\n";
  }
  if (c.n > 2) {
    for (const Point& p : c.e) {
      out << "<circle class=\"endpoint\" cx=\"" << f.x(p) << "\" cy=\"" << f.y(p)
          << "\" r=\"5\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace linkstar

#include "eit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace eit::svg {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 600;
constexpr double kLeft = 80.0, kRight = 770.0, kTop = 60.0, kBottom = 540.0;

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_loglog(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<Series>& series) {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  bool any = false;
  for (const Series& s : series)
    for (const auto& [x, y] : s.points) {
      if (!(x > 0.0) || !(y > 0.0)) continue;
      if (!any) {
        xmin = xmax = x;
        ymin = ymax = y;
        any = true;
      } else {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
  if (!any) {
    xmin = ymin = 0.1;
    xmax = ymax = 10.0;
  }

  const double lx0 = std::floor(std::log10(xmin)), lx1 = std::ceil(std::log10(xmax) + 1e-12);
  const double ly0 = std::floor(std::log10(ymin)), ly1 = std::ceil(std::log10(ymax) + 1e-12);
  const double sx = (kRight - kLeft) / std::max(lx1 - lx0, 1e-9);
  const double sy = (kBottom - kTop) / std::max(ly1 - ly0, 1e-9);
  auto px = [&](double x) { return kLeft + (std::log10(x) - lx0) * sx; };
  auto py = [&](double y) { return kBottom - (std::log10(y) - ly0) * sy; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
         "\" height=\"" + std::to_string(kHeight) + "\" viewBox=\"0 0 800 600\">\n";
  out += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out += "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"18\">" + escape(title) + "</text>\n";

  // Decade gridlines with exponent labels.
  for (int e = static_cast<int>(lx0); e <= static_cast<int>(lx1); ++e) {
    const double x = px(std::pow(10.0, e));
    out += "<line x1=\"" + fmt("%.2f", x) + "\" y1=\"" + fmt("%.2f", kTop) + "\" x2=\"" +
           fmt("%.2f", x) + "\" y2=\"" + fmt("%.2f", kBottom) + "\" stroke=\"#dddddd\"/>\n";
    out += "<text x=\"" + fmt("%.2f", x) + "\" y=\"" + fmt("%.2f", kBottom + 20.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">1e" +
           std::to_string(e) + "</text>\n";
  }
  for (int e = static_cast<int>(ly0); e <= static_cast<int>(ly1); ++e) {
    const double y = py(std::pow(10.0, e));
    out += "<line x1=\"" + fmt("%.2f", kLeft) + "\" y1=\"" + fmt("%.2f", y) + "\" x2=\"" +
           fmt("%.2f", kRight) + "\" y2=\"" + fmt("%.2f", y) + "\" stroke=\"#dddddd\"/>\n";
    out += "<text x=\"" + fmt("%.2f", kLeft - 8.0) + "\" y=\"" + fmt("%.2f", y + 4.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">1e" +
           std::to_string(e) + "</text>\n";
  }
  out += "<rect x=\"" + fmt("%.2f", kLeft) + "\" y=\"" + fmt("%.2f", kTop) + "\" width=\"" +
         fmt("%.2f", kRight - kLeft) + "\" height=\"" + fmt("%.2f", kBottom - kTop) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  out += "<text x=\"425\" y=\"580\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">" + escape(x_label) + "</text>\n";
  out += "<text x=\"20\" y=\"300\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\" transform=\"rotate(-90 20 300)\">" + escape(y_label) + "</text>\n";

  for (const Series& s : series) {
    std::string path;
    for (const auto& [x, y] : s.points) {
      if (!(x > 0.0) || !(y > 0.0)) continue;
      path += (path.empty() ? "M" : " L") + fmt("%.2f", px(x)) + " " + fmt("%.2f", py(y));
    }
    if (!path.empty())
      out += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + s.color +
             "\" stroke-width=\"1.5\"/>\n";
    for (const auto& [x, y] : s.points) {
      if (!(x > 0.0) || !(y > 0.0)) continue;
      out += "<circle cx=\"" + fmt("%.2f", px(x)) + "\" cy=\"" + fmt("%.2f", py(y)) +
             "\" r=\"3\" fill=\"" + s.color + "\"/>\n";
    }
  }

  double ly = kTop + 18.0;
  for (const Series& s : series) {
    const std::string entry = s.annotation.empty() ? s.label : s.label + "  (" + s.annotation + ")";
    out += "<line x1=\"" + fmt("%.2f", kRight - 230.0) + "\" y1=\"" + fmt("%.2f", ly - 4.0) +
           "\" x2=\"" + fmt("%.2f", kRight - 205.0) + "\" y2=\"" + fmt("%.2f", ly - 4.0) +
           "\" stroke=\"" + s.color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fmt("%.2f", kRight - 200.0) + "\" y=\"" + fmt("%.2f", ly) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(entry) + "</text>\n";
    ly += 18.0;
  }

  out += "</svg>\n";
  return out;
}

}  // namespace eit::svg

#pragma once

// SVG 1.1 pictures of realized cheeses: the unit circle plus the deleted discs.

#include <cstdio>
#include <string>

#include "cheese/families.hpp"

namespace cheese {

namespace detail {
inline std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}
}  // namespace detail

/// Deterministic for fixed inputs. The plane window is [-1.05, 1.05]^2 with
/// the imaginary axis pointing up.
inline std::string render_svg(const CheeseSpec& cheese, std::size_t depth, int width_px = 512) {
  if (depth < 1) throw InputError("render_svg: depth must be >= 1");
  if (width_px < 1) throw InputError("render_svg: width must be positive");
  const double w = width_px;
  const double half = 1.05;
  const double px = w / (2.0 * half);
  auto x_of = [&](double x) { return detail::fixed((x + half) * px); };
  auto y_of = [&](double y) { return detail::fixed((half - y) * px); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width_px) +
         "\" height=\"" + std::to_string(width_px) + "\" viewBox=\"0 0 " + detail::fixed(w) + " " + detail::fixed(w) +
         "\">\n";
  if (!cheese.label.empty()) {
    std::string title;
    for (char c : cheese.label) {
      switch (c) {
        case '<': title += "&lt;"; break;
        case '>': title += "&gt;"; break;
        case '&': title += "&amp;"; break;
        default: title += c;
      }
    }
    out += "  <title>" + title + "</title>\n";
  }
  out += "  <circle cx=\"" + x_of(0) + "\" cy=\"" + y_of(0) + "\" r=\"" + detail::fixed(px) +
         "\" fill=\"#f4e3a1\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  for (const auto& d : cheese.family.realize(depth)) {
    out += "  <circle cx=\"" + x_of(d.center.re.to_double()) + "\" cy=\"" + y_of(d.center.im.to_double()) +
           "\" r=\"" + detail::fixed(d.radius.to_double() * px) + "\" fill=\"#ffffff\" stroke=\"#7a5c00\"" +
           " stroke-width=\"0.5\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace cheese

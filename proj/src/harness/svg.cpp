#include "gtra/harness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace gtra::harness {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 460.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 190.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                    "#bcbd22", "#17becf"};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::pair<double, double> padded(double lo, double hi) {
  if (!(lo <= hi)) return {0.0, 1.0};
  if (lo == hi) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
    return {lo - pad, hi + pad};
  }
  return {lo, hi};
}

}  // namespace

std::string render_svg(const PlotSpec& plot) {
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  auto extend = [&](double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) return;
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  };
  for (const auto& s : plot.series)
    for (auto [x, y] : s.points) extend(x, y);
  for (const auto& m : plot.markers) extend(m.x, m.y);
  auto [x0, x1] = plot.x_range ? *plot.x_range : padded(x_lo, x_hi);
  auto [y0, y1] = plot.y_range ? *plot.y_range : padded(y_lo, y_hi);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * plot_w; };
  auto sy = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * plot_h; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"460\" "
         "viewBox=\"0 0 720 460\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"720\" height=\"460\" fill=\"white\"/>\n";
  out += "<text x=\"" + fmt("%.2f", kLeft + plot_w / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">" + escape(plot.title) + "</text>\n";
  out += "<rect x=\"" + fmt("%.2f", kLeft) + "\" y=\"" + fmt("%.2f", kTop) +
         "\" width=\"" + fmt("%.2f", plot_w) + "\" height=\"" + fmt("%.2f", plot_h) +
         "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = x0 + (x1 - x0) * i / kTicks;
    const double fy = y0 + (y1 - y0) * i / kTicks;
    out += "<line x1=\"" + fmt("%.2f", sx(fx)) + "\" y1=\"" + fmt("%.2f", kTop + plot_h) +
           "\" x2=\"" + fmt("%.2f", sx(fx)) + "\" y2=\"" + fmt("%.2f", kTop + plot_h + 5) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt("%.2f", sx(fx)) + "\" y=\"" + fmt("%.2f", kTop + plot_h + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           fmt("%.4g", fx) + "</text>\n";
    out += "<line x1=\"" + fmt("%.2f", kLeft - 5) + "\" y1=\"" + fmt("%.2f", sy(fy)) +
           "\" x2=\"" + fmt("%.2f", kLeft) + "\" y2=\"" + fmt("%.2f", sy(fy)) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt("%.2f", kLeft - 8) + "\" y=\"" + fmt("%.2f", sy(fy) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           fmt("%.4g", fy) + "</text>\n";
  }
  out += "<text x=\"" + fmt("%.2f", kLeft + plot_w / 2) + "\" y=\"" +
         fmt("%.2f", kHeight - 15) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         escape(plot.x_label) + "</text>\n";
  out += "<text x=\"18\" y=\"" + fmt("%.2f", kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 18 " + fmt("%.2f", kTop + plot_h / 2) + ")\">" +
         escape(plot.y_label) + "</text>\n";

  for (std::size_t s = 0; s < plot.series.size(); ++s) {
    const auto& series = plot.series[s];
    const char* color = kPalette[s % std::size(kPalette)];
    std::string points;
    for (auto [x, y] : series.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (!points.empty()) points += ' ';
      points += fmt("%.2f", sx(x)) + "," + fmt("%.2f", sy(y));
    }
    out += "<polyline data-series=\"" + escape(series.name) +
           "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    if (series.points.size() == 1 && !points.empty()) {
      const auto [x, y] = series.points.front();
      out += "<circle cx=\"" + fmt("%.2f", sx(x)) + "\" cy=\"" + fmt("%.2f", sy(y)) +
             "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
    if (plot.legend) {
      const double ly = kTop + 10 + 18.0 * static_cast<double>(s);
      const double lx = kWidth - kRight + 15;
      out += "<line x1=\"" + fmt("%.2f", lx) + "\" y1=\"" + fmt("%.2f", ly) + "\" x2=\"" +
             fmt("%.2f", lx + 20) + "\" y2=\"" + fmt("%.2f", ly) + "\" stroke=\"" + color +
             "\" stroke-width=\"2\"/>\n";
      out += "<text x=\"" + fmt("%.2f", lx + 26) + "\" y=\"" + fmt("%.2f", ly + 4) +
             "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(series.name) +
             "</text>\n";
    }
  }
  for (const auto& m : plot.markers) {
    out += "<circle cx=\"" + fmt("%.2f", sx(m.x)) + "\" cy=\"" + fmt("%.2f", sy(m.y)) +
           "\" r=\"5\" fill=\"black\"/>\n";
    out += "<text x=\"" + fmt("%.2f", sx(m.x) + 8) + "\" y=\"" + fmt("%.2f", sy(m.y) - 8) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(m.label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace gtra::harness

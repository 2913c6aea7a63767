#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gtra::harness {

struct PlotSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;  // non-finite points skipped
};

struct PlotMarker {
  double x = 0.0;
  double y = 0.0;
  std::string label;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  std::vector<PlotMarker> markers;
  std::optional<std::pair<double, double>> x_range;  // default: data extent
  std::optional<std::pair<double, double>> y_range;
  bool legend = true;
};

// Static SVG line chart: axes, ticks, one polyline per series, legend.
// Output depends only on the plot description.
std::string render_svg(const PlotSpec& plot);

}  // namespace gtra::harness

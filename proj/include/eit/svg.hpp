#pragma once

#include <string>
#include <utility>
#include <vector>

namespace eit::svg {

struct Series {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;  // (x, y), positive for log axes
  std::string annotation;                          // appended to the legend entry
};

/// Renders a fixed 800x600 log-log scatter/line plot with decade gridlines and
/// a legend.  Points with nonpositive coordinates are dropped.  The output is
/// deterministic for identical input.
std::string render_loglog(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<Series>& series);

}  // namespace eit::svg

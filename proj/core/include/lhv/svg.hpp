#pragma once

#include <string>
#include <vector>

namespace lhv::svg {

struct Series {
  std::string label;
  std::vector<double> y;
};

/// Minimal static line chart: axes, polylines, legend. x values are shared
/// across series. No timestamps or randomness, so output is reproducible.
std::string line_chart(const std::string& title, const std::vector<double>& x,
                       const std::vector<Series>& series);

}  // namespace lhv::svg

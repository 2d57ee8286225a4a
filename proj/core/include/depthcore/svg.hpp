#pragma once

#include <string>
#include <vector>

#include "depthcore/contour.hpp"

namespace dd::svg {

struct Layer {
  std::vector<Polygon> contours;  // outermost first
  std::string stroke = "#1f6fb2";
  bool dashed = false;
};

// Renders nested contour families plus the data points as dots. Coordinates
// stay exact until serialization.
std::string render(const std::vector<Pt>& points, const std::vector<Layer>& layers,
                   int size_px = 720);

}  // namespace dd::svg

// Minimal SVG rendering of planar polytopes.

#ifndef GROWTHLAB_SVG_HPP
#define GROWTHLAB_SVG_HPP

#include "growthlab/polytope.hpp"

#include <string>
#include <vector>

namespace growthlab {

struct SvgLayer {
  Polytope polytope;
  std::string stroke = "black";
  std::string fill = "none";
  std::string label;
};

/// Draws the layers in order on a common frame. Throws
/// Error(DimensionMismatch) unless every polytope lives in the plane.
std::string render_svg(const std::vector<SvgLayer>& layers, double size = 400);

}  // namespace growthlab

#endif  // GROWTHLAB_SVG_HPP

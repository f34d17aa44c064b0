// Floating-point convex hulls for sampled point clouds in dimensions 1-3.
// Only the Monte-Carlo routes use these; exact geometry lives in polytope.

#ifndef GROWTHLAB_SRC_FLOAT_HULL_HPP
#define GROWTHLAB_SRC_FLOAT_HULL_HPP

#include <cstddef>
#include <vector>

namespace growthlab::fhull {

using Point = std::vector<double>;

/// Reduces a large cloud to candidate hull points: for each of `directions`
/// deterministic directions the maximising sample is kept.
std::vector<Point> extreme_candidates(const std::vector<Point>& cloud, std::size_t directions);

/// Hull vertices of `points` (dimension 1, 2 or 3).
std::vector<Point> hull_vertices(const std::vector<Point>& points);

/// Volume of the convex hull of `points` (dimension 1, 2 or 3).
double hull_volume(const std::vector<Point>& points);

}  // namespace growthlab::fhull

#endif  // GROWTHLAB_SRC_FLOAT_HULL_HPP

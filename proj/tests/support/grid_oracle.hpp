#pragma once

#include <vector>

#include "polyknot/curve.hpp"

namespace polyknot::testing {

// Brute-force double points: samples (s, t) on a grid, keeps cells where
// both divided differences change sign, and bisects those cells in 2-D.
// Only cells with s < t at every corner are scanned.
std::vector<CrossingParams> grid_double_points(const Polynomial& x, const Polynomial& y, int nodes = 2000,
                                               double lo = -3.0, double hi = 3.0);

}  // namespace polyknot::testing

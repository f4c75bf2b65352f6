#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyknot/chebyshev.hpp"
#include "polyknot/polynomial.hpp"

namespace polyknot {

/// t ↦ (x(t), y(t), z(t)). Plane-only work leaves z empty.
struct SpaceCurve {
  Polynomial x;
  Polynomial y;
  std::optional<Polynomial> z;
  std::string label;
};

/// A double point of the plane projection: x(s) = x(t), y(s) = y(t), s < t.
struct CrossingParams {
  double s = 0.0;
  double t = 0.0;
  double u = 0.0;  // s + t

  static CrossingParams from_pair(double a, double b);
};

/// The point of the Lissajous ellipse T3(s) = T3(t) at angle alpha:
/// s = 2cos(α + π/3), t = 2cos(α − π/3), u = 2cos α. DomainError unless
/// 0 < α < π.
CrossingParams ellipse_parametrize(double alpha);

/// Parameters on the ellipse with s + t = u, |u| < 2.
CrossingParams ellipse_point(double u);

/// Crossings of (T3, Q): one per root u of the ellipse divided difference
/// of Q inside (-2, 2), sorted by u. A multiple root there, or a root within
/// 1e-9 of ±2, is a DegenerateCrossing; Q with only multiple-of-3 terms has
/// R ≡ 0 and is degenerate as well.
std::vector<CrossingParams> double_points_cheb3(const ChebSeries& y);

/// Crossings of an arbitrary plane curve, sorted by s. Eliminates e2 from the
/// symmetric divided differences of x and y and recovers (s, t) from the real
/// solutions with e1² − 4e2 > 0.
///
/// DegenerateCrossing: a tangential or near-coincident (s ≈ t) solution.
/// NonRegular: two solutions at one plane point (within 1e-7), or infinitely
/// many double points. DomainError if deg x < 2 or deg y < 2.
std::vector<CrossingParams> double_points_general(const Polynomial& x, const Polynomial& y);

/// True when x is exactly t³ − 3t.
bool is_cheb3(const Polynomial& x);

/// Dispatches to the T3 path when x is exactly T3. Sorted by s either way.
std::vector<CrossingParams> double_points(const Polynomial& x, const Polynomial& y);

/// s_1 < ... < s_n < t_1 < ... < t_n for a list sorted by s.
bool crossing_order_check(const std::vector<CrossingParams>& crossings);

struct ValidationReport {
  bool regular = true;
  std::vector<double> cusps;               // parameters where x' = y' = 0
  std::vector<CrossingParams> tangential;  // double points with parallel tangents
  std::vector<CrossingParams> triple;      // pairs of solutions sharing a plane point
  bool infinitely_many = false;            // the curve retraces a branch
  std::vector<std::string> findings;
};

ValidationReport validate_regular(const Polynomial& x, const Polynomial& y);

/// Largest |x(s) − x(t)| + |y(s) − y(t)| over the crossings.
double crossing_residual(const Polynomial& x, const Polynomial& y, const std::vector<CrossingParams>& crossings);

}  // namespace polyknot

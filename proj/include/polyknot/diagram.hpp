#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyknot/curve.hpp"

namespace polyknot {

struct Crossing {
  int index = 0;  // 1-based, ordered by s
  CrossingParams params;
  double px = 0.0;  // plane point (x, y)
  double py = 0.0;
  bool first_pass_over = false;  // z(s) > z(t), viewer at z = +inf
};

struct Visit {
  int crossing = 0;
  bool over = false;
  double param = 0.0;
};

struct Diagram {
  std::vector<Crossing> crossings;
  std::vector<Visit> gauss;  // 2n visits sorted by parameter
};

/// Crossings of the (x, y) projection with over/under read off z. Uses the
/// T3 path when x is exactly T3. ZCollision when |z(s) − z(t)| < 1e-9 (1 +
/// max |z coefficient|) at some crossing; BadInput when z is missing.
Diagram build_diagram(const SpaceCurve& c);

/// Assembles a diagram from known crossings.
Diagram make_diagram(const SpaceCurve& c, const std::vector<CrossingParams>& crossings);

bool is_alternating(const Diagram& d);

/// n when the diagram is the standard (2, n) torus diagram: n crossings
/// with n odd and at least 3, s_1 < ... < s_n < t_1 < ... < t_n, alternating,
/// and both halves of the Gauss sequence visit the crossings in the same
/// cyclic order. Sound within this family only; it is not a general
/// classifier.
std::optional<int> recognize_torus_2n(const Diagram& d);

/// "O1 U2 O3 U1 O2 U3" in parameter order.
std::string gauss_code(const Diagram& d);

}  // namespace polyknot

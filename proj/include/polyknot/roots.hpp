#pragma once

#include <vector>

#include "polyknot/polynomial.hpp"

namespace polyknot {

struct Root {
  double value = 0.0;
  bool multiple = false;
};

inline constexpr double kDefaultRootTolerance = 1e-12;

/// Every real root of p in [lo, hi], sorted, each within `tol` absolute.
///
/// Isolation recurses on the derivative: between consecutive critical points
/// p is monotone, so each sign change brackets exactly one root, which is
/// then refined by TOMS 748 on compensated evaluations. Critical points where
/// |p| is below the evaluation noise floor are reported as roots themselves.
/// A root is flagged `multiple` when |p'(r)| < 1e-6 max(1, max |p'| on the
/// interval). Nonzero constants yield an empty list; the zero polynomial is a
/// DomainError.
std::vector<Root> real_roots(const Polynomial& p, double lo, double hi, double tol = kDefaultRootTolerance);

/// Cauchy bound: every complex root z satisfies |z| < root_bound(p).
double root_bound(const Polynomial& p);

}  // namespace polyknot

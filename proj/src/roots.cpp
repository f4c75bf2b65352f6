#include "polyknot/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/tools/roots.hpp>

#include "polyknot/errors.hpp"

namespace polyknot {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;
constexpr double kMultipleThreshold = 1e-6;

int sign(double v) { return (v > 0.0) - (v < 0.0); }

// Below this |p(x)| is indistinguishable from zero: the plain Horner error
// scale, which bounds the compensated error with a wide margin.
bool is_noise(const Polynomial& p, double x, double value) {
  return std::abs(value) <= 4.0 * kUnitRoundoff * abs_eval(p, x);
}

double refine(const Polynomial& p, double a, double b, double fa, double fb, double tol) {
  auto f = [&p](double x) { return p(x); };
  auto done = [tol](double lo, double hi) { return std::abs(hi - lo) <= tol; };
  std::uintmax_t iterations = 200;
  const auto bracket = boost::math::tools::toms748_solve(f, a, b, fa, fb, done, iterations);
  return 0.5 * (bracket.first + bracket.second);
}

std::vector<double> isolate(const Polynomial& p, double lo, double hi, double tol) {
  const int deg = p.degree();
  if (deg <= 0) return {};
  if (deg == 1) {
    const double r = -p[0] / p[1];
    if (r >= lo && r <= hi) return {r};
    return {};
  }

  std::vector<double> pts{lo};
  for (double c : isolate(p.derivative(), lo, hi, tol))
    if (c > pts.back() && c < hi) pts.push_back(c);
  pts.push_back(hi);

  std::vector<double> vals(pts.size());
  std::vector<bool> zero(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    vals[i] = p(pts[i]);
    zero[i] = is_noise(p, pts[i], vals[i]);
  }

  std::vector<double> found;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (zero[i]) found.push_back(pts[i]);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (zero[i] || zero[i + 1]) continue;
    if (sign(vals[i]) == sign(vals[i + 1])) continue;
    found.push_back(refine(p, pts[i], pts[i + 1], vals[i], vals[i + 1], tol));
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

double root_bound(const Polynomial& p) {
  if (p.degree() < 1) return 1.0;
  double m = 0.0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, std::abs(p[k] / p.leading()));
  return 1.0 + m;
}

std::vector<Root> real_roots(const Polynomial& p, double lo, double hi, double tol) {
  if (p.is_zero()) fail(ErrorKind::DomainError, "real_roots: zero polynomial has no isolated roots");
  if (!(lo <= hi)) fail(ErrorKind::DomainError, "real_roots: empty interval");
  if (p.degree() == 0) return {};

  const std::vector<double> raw = isolate(p, lo, hi, tol);

  const Polynomial dp = p.derivative();
  double dnorm = 1.0;
  constexpr int kSamples = 256;
  for (int i = 0; i <= kSamples; ++i) {
    const double x = lo + (hi - lo) * i / kSamples;
    dnorm = std::max(dnorm, std::abs(dp(x)));
  }
  for (double r : raw) dnorm = std::max(dnorm, std::abs(dp(r)));

  std::vector<Root> out;
  for (double r : raw) {
    const bool multiple = std::abs(dp(r)) < kMultipleThreshold * dnorm;
    if (!out.empty() && r - out.back().value <= 4.0 * tol) {
      out.back().multiple = true;
      continue;
    }
    out.push_back({r, multiple});
  }
  return out;
}

}  // namespace polyknot

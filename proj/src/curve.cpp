#include "polyknot/curve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "polyknot/errors.hpp"
#include "polyknot/roots.hpp"

namespace polyknot {

namespace {

constexpr double kBoundaryTol = 1e-9;
constexpr double kSamePointTol = 1e-7;
constexpr double kTangentTol = 1e-6;
constexpr double kDiagonalTol = 1e-8;

struct Analysis {
  std::vector<CrossingParams> crossings;
  std::vector<CrossingParams> tangential;
  std::vector<CrossingParams> triple;
  std::vector<double> diagonal;  // s = t solutions, i.e. stationary points
  bool infinitely_many = false;
};

BivariatePolynomial d_e1(const BivariatePolynomial& f) {
  std::vector<Polynomial> parts;
  for (const auto& p : f.by_e2_power()) parts.push_back(p.derivative());
  return BivariatePolynomial(std::move(parts));
}

BivariatePolynomial d_e2(const BivariatePolynomial& f) {
  const auto& in = f.by_e2_power();
  std::vector<Polynomial> parts;
  for (std::size_t j = 1; j < in.size(); ++j) parts.push_back(in[j] * static_cast<double>(j));
  return BivariatePolynomial(std::move(parts));
}

// Sum of |c_ij| |e1|^i |e2|^j: the rounding scale of F(e1, e2).
double abs_value(const BivariatePolynomial& f, double e1, double e2) {
  double acc = 0.0, pw = 1.0;
  for (const auto& p : f.by_e2_power()) {
    acc += abs_eval(p, e1) * pw;
    pw *= std::abs(e2);
  }
  return acc;
}

// Drops leading coefficients that are rounding residue of a cancellation.
Polynomial trim_noise(const Polynomial& p) {
  const double m = max_abs_coeff(p);
  std::vector<double> c = p.coeffs();
  while (!c.empty() && std::abs(c.back()) <= 1e-13 * m) c.pop_back();
  return Polynomial(std::move(c));
}

bool negligible(const Polynomial& p, double scale) {
  return p.is_zero() || max_abs_coeff(p) <= 1e-12 * scale;
}

double poly_scale(const BivariatePolynomial& f) {
  double m = 0.0;
  for (const auto& p : f.by_e2_power()) m = std::max(m, max_abs_coeff(p));
  return m;
}

std::complex<double> eval_complex(const Polynomial& p, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * z + p[k];
  return acc;
}

// Res_{e2}(F, G) as a polynomial in e1, by evaluating the Sylvester
// determinant on a circle and inverting the DFT.
Polynomial resultant_e2(const BivariatePolynomial& f, const BivariatePolynomial& g, int degree_bound) {
  const int m = f.degree_e2();
  const int n = g.degree_e2();
  const int size = m + n;
  const int count = degree_bound + 1;
  std::vector<std::complex<double>> values(count);
  for (int k = 0; k < count; ++k) {
    const std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi * k / count);
    Eigen::MatrixXcd syl = Eigen::MatrixXcd::Zero(size, size);
    for (int row = 0; row < n; ++row)
      for (int j = 0; j <= m; ++j) syl(row, row + (m - j)) = eval_complex(f.by_e2_power()[j], z);
    for (int row = 0; row < m; ++row)
      for (int j = 0; j <= n; ++j) syl(n + row, row + (n - j)) = eval_complex(g.by_e2_power()[j], z);
    values[k] = syl.determinant();
  }
  std::vector<double> c(count);
  for (int j = 0; j < count; ++j) {
    std::complex<double> acc = 0.0;
    for (int k = 0; k < count; ++k) acc += values[k] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / count);
    c[j] = acc.real() / count;
  }
  return Polynomial(std::move(c));
}

struct Candidate {
  double e1;
  double e2;
  bool multiple;
};

// Newton on (F, G) = 0 in (e1, e2).
void polish(const BivariatePolynomial& f, const BivariatePolynomial& g, double& e1, double& e2) {
  const auto f1 = d_e1(f), f2 = d_e2(f), g1 = d_e1(g), g2 = d_e2(g);
  for (int it = 0; it < 12; ++it) {
    const double fv = f(e1, e2), gv = g(e1, e2);
    const double a = f1(e1, e2), b = f2(e1, e2), c = g1(e1, e2), d = g2(e1, e2);
    const double det = a * d - b * c;
    if (det == 0.0 || !std::isfinite(det)) return;
    const double de1 = (fv * d - b * gv) / det;
    const double de2 = (a * gv - c * fv) / det;
    if (!std::isfinite(de1) || !std::isfinite(de2)) return;
    e1 -= de1;
    e2 -= de2;
    if (std::abs(de1) <= 1e-16 * (1 + std::abs(e1)) && std::abs(de2) <= 1e-16 * (1 + std::abs(e2))) return;
  }
}

std::vector<double> real_roots_values(const Polynomial& p) {
  std::vector<double> out;
  if (p.degree() < 1) return out;
  const double b = root_bound(p);
  for (const auto& r : real_roots(p, -b, b)) out.push_back(r.value);
  return out;
}

// Solutions of F = 0 = G with F of degree 0 in e2 (e1 is pinned by F alone).
void solve_pinned(const BivariatePolynomial& f, const BivariatePolynomial& g, std::vector<Candidate>& out,
                  bool& infinite) {
  const Polynomial pin = f.by_e2_power().empty() ? Polynomial{} : f.by_e2_power()[0];
  if (pin.degree() < 1) {
    if (pin.is_zero()) infinite = true;
    return;
  }
  const double b = root_bound(pin);
  const double gscale = poly_scale(g);
  for (const auto& r : real_roots(pin, -b, b)) {
    const Polynomial in_e2 = g.at_e1(r.value);
    if (negligible(in_e2, gscale * (1 + std::pow(std::abs(r.value), g.degree_e1())))) {
      infinite = true;
      continue;
    }
    for (double e2 : real_roots_values(trim_noise(in_e2))) out.push_back({r.value, e2, false});
  }
}

// F linear in e2: F = A + B e2.
void solve_linear(const BivariatePolynomial& f, const BivariatePolynomial& g, std::vector<Candidate>& out,
                  bool& infinite) {
  const Polynomial& a = f.by_e2_power()[0];
  const Polynomial& bcoef = f.by_e2_power()[1];
  const int n = g.degree_e2();
  Polynomial elim;
  if (bcoef.degree() == 0) {
    elim = g.substitute_e2(a * (-1.0 / bcoef[0]));
  } else {
    // sum_j G_j (-A)^j B^(n-j)
    std::vector<Polynomial> bpow{Polynomial{1.0}};
    for (int j = 1; j <= n; ++j) bpow.push_back(bpow.back() * bcoef);
    Polynomial neg_a_pow{1.0};
    for (int j = 0; j <= n; ++j) {
      elim += g.by_e2_power()[j] * neg_a_pow * bpow[n - j];
      neg_a_pow = neg_a_pow * (-a);
    }
  }
  double scale = 0.0;
  for (const auto& p : g.by_e2_power()) scale = std::max(scale, max_abs_coeff(p));
  scale *= std::pow(std::max(1.0, std::max(max_abs_coeff(a), max_abs_coeff(bcoef))), n);
  if (negligible(elim, scale)) {
    infinite = true;
    return;
  }
  elim = trim_noise(elim);
  if (elim.degree() < 1) return;
  const double bound = root_bound(elim);
  const Polynomial delim = elim.derivative();
  for (const auto& r : real_roots(elim, -bound, bound)) {
    // Judged locally: the interval-wide multiplicity flag is meaningless on
    // a root-bound interval.
    const bool multiple = std::abs(delim(r.value)) <= 1e-6 * abs_eval(delim, r.value);
    const double bv = bcoef(r.value);
    const double av = a(r.value);
    if (std::abs(bv) <= 1e-12 * (abs_eval(bcoef, r.value) + 1e-300)) {
      if (std::abs(av) <= 1e-12 * (abs_eval(a, r.value) + 1e-300)) {
        // F vanishes for every e2 on this vertical line.
        for (double e2 : real_roots_values(trim_noise(g.at_e1(r.value)))) out.push_back({r.value, e2, false});
      }
      continue;
    }
    // e2 is a function of e1 here, so a multiple e1 is a genuine tangency.
    out.push_back({r.value, -av / bv, multiple});
  }
}

void solve_resultant(const BivariatePolynomial& f, const BivariatePolynomial& g, int degree_bound,
                     std::vector<Candidate>& out, bool& infinite) {
  const Polynomial res = resultant_e2(f, g, degree_bound);
  double scale = 1.0;
  for (const auto& p : f.by_e2_power()) scale = std::max(scale, max_abs_coeff(p));
  double gs = 1.0;
  for (const auto& p : g.by_e2_power()) gs = std::max(gs, max_abs_coeff(p));
  scale = std::pow(scale, g.degree_e2()) * std::pow(gs, f.degree_e2());
  if (negligible(res, scale)) {
    infinite = true;
    return;
  }
  const Polynomial elim = trim_noise(res);
  if (elim.degree() < 1) return;
  const double bound = root_bound(elim);
  for (const auto& r : real_roots(elim, -bound, bound)) {
    const Polynomial fe2 = trim_noise(f.at_e1(r.value));
    for (double e2 : real_roots_values(fe2)) {
      const double gv = g(r.value, e2);
      if (std::abs(gv) <= 1e-6 * (abs_value(g, r.value, e2) + 1e-300)) out.push_back({r.value, e2, false});
    }
  }
}

Analysis analyze(const Polynomial& x, const Polynomial& y) {
  if (x.degree() < 2 || y.degree() < 2)
    fail(ErrorKind::DomainError, "double points need deg x >= 2 and deg y >= 2");
  BivariatePolynomial f = symmetric_divided_difference(x);
  BivariatePolynomial g = symmetric_divided_difference(y);
  if (g.degree_e2() < f.degree_e2()) std::swap(f, g);

  Analysis out;
  std::vector<Candidate> cands;
  if (f.degree_e2() == 0) {
    solve_pinned(f, g, cands, out.infinitely_many);
  } else if (f.degree_e2() == 1) {
    solve_linear(f, g, cands, out.infinitely_many);
  } else {
    solve_resultant(f, g, (x.degree() - 1) * (y.degree() - 1), cands, out.infinitely_many);
  }

  const Polynomial dx = x.derivative(), dy = y.derivative();
  const double xs = max_abs_coeff(x), ys = max_abs_coeff(y);
  for (auto cand : cands) {
    polish(f, g, cand.e1, cand.e2);
    const double fv = f(cand.e1, cand.e2), gv = g(cand.e1, cand.e2);
    if (std::abs(fv) > 1e-7 * (abs_value(f, cand.e1, cand.e2) + 1.0) ||
        std::abs(gv) > 1e-7 * (abs_value(g, cand.e1, cand.e2) + 1.0))
      continue;
    const double disc = cand.e1 * cand.e1 - 4.0 * cand.e2;
    const double dtol = kDiagonalTol * std::max(1.0, cand.e1 * cand.e1);
    if (disc < -dtol) continue;
    if (disc <= dtol) {
      out.diagonal.push_back(cand.e1 / 2);
      continue;
    }
    const double root = std::sqrt(disc);
    const CrossingParams c = CrossingParams::from_pair((cand.e1 - root) / 2, (cand.e1 + root) / 2);
    bool dup = false;
    for (const auto& prev : out.crossings)
      dup = dup || (std::abs(prev.s - c.s) <= 1e-9 * (1 + std::abs(c.s)) &&
                    std::abs(prev.t - c.t) <= 1e-9 * (1 + std::abs(c.t)));
    if (dup) continue;
    const double xsd = dx(c.s), ysd = dy(c.s), xtd = dx(c.t), ytd = dy(c.t);
    const double cross = xsd * ytd - ysd * xtd;
    const double norms = std::hypot(xsd, ysd) * std::hypot(xtd, ytd);
    if (cand.multiple || std::abs(cross) <= kTangentTol * norms) out.tangential.push_back(c);
    out.crossings.push_back(c);
  }
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const CrossingParams& a, const CrossingParams& b) { return a.s < b.s; });

  for (std::size_t i = 0; i < out.crossings.size(); ++i)
    for (std::size_t j = i + 1; j < out.crossings.size(); ++j) {
      const auto& a = out.crossings[i];
      const auto& b = out.crossings[j];
      if (std::abs(x(a.s) - x(b.s)) < kSamePointTol * (1 + xs) &&
          std::abs(y(a.s) - y(b.s)) < kSamePointTol * (1 + ys)) {
        out.triple.push_back(a);
        out.triple.push_back(b);
      }
    }
  return out;
}

}  // namespace

CrossingParams CrossingParams::from_pair(double a, double b) {
  if (b < a) std::swap(a, b);
  return {a, b, a + b};
}

CrossingParams ellipse_parametrize(double alpha) {
  if (!(alpha > 0.0 && alpha < std::numbers::pi))
    fail(ErrorKind::DomainError, "ellipse_parametrize: alpha must lie in (0, pi)");
  constexpr double third = std::numbers::pi / 3;
  return {2 * std::cos(alpha + third), 2 * std::cos(alpha - third), 2 * std::cos(alpha)};
}

CrossingParams ellipse_point(double u) {
  if (!(std::abs(u) < 2.0)) fail(ErrorKind::DomainError, "ellipse_point: |u| must be below 2");
  const double w = std::sqrt(12.0 - 3.0 * u * u);
  return {(u - w) / 2, (u + w) / 2, u};
}

std::vector<CrossingParams> double_points_cheb3(const ChebSeries& y) {
  const VSeries r = divided_difference_on_ellipse(y);
  if (r.is_zero())
    fail(ErrorKind::DegenerateCrossing, "the y-coordinate has only T_{3k} terms: every ellipse point is a double point");
  const Polynomial p = to_monomial(r);
  std::vector<CrossingParams> out;
  if (p.degree() < 1) return out;
  const double edge = 2.0 + 1e-3;
  for (const auto& root : real_roots(p, -edge, edge)) {
    const double u = root.value;
    if (std::abs(std::abs(u) - 2.0) <= kBoundaryTol)
      fail(ErrorKind::DegenerateCrossing, "a crossing sits at |u| = 2, where s = t");
    if (std::abs(u) > 2.0) continue;
    if (root.multiple) fail(ErrorKind::DegenerateCrossing, "multiple root of R inside (-2, 2): tangential crossing");
    out.push_back(ellipse_point(u));
  }
  return out;
}

std::vector<CrossingParams> double_points_general(const Polynomial& x, const Polynomial& y) {
  const Analysis a = analyze(x, y);
  if (a.infinitely_many) fail(ErrorKind::NonRegular, "the curve has infinitely many double points");
  if (!a.diagonal.empty()) fail(ErrorKind::DegenerateCrossing, "a solution with s = t (stationary point)");
  if (!a.tangential.empty()) fail(ErrorKind::DegenerateCrossing, "tangential double point");
  if (!a.triple.empty()) fail(ErrorKind::NonRegular, "two crossings share a plane point (triple point)");
  const std::size_t cap = static_cast<std::size_t>((x.degree() - 1) * (y.degree() - 1) / 2);
  if (a.crossings.size() > cap) throw std::logic_error("double_points_general: crossing count exceeds the Bezout cap");
  return a.crossings;
}

bool is_cheb3(const Polynomial& x) { return x == Polynomial{0.0, -3.0, 0.0, 1.0}; }

std::vector<CrossingParams> double_points(const Polynomial& x, const Polynomial& y) {
  if (!is_cheb3(x)) return double_points_general(x, y);
  auto out = double_points_cheb3(from_monomial<Basis::T>(y));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.s < b.s; });
  return out;
}

bool crossing_order_check(const std::vector<CrossingParams>& crossings) {
  if (crossings.empty()) return true;
  double max_s = crossings.front().s, min_t = crossings.front().t;
  for (std::size_t i = 1; i < crossings.size(); ++i) {
    if (!(crossings[i].s > crossings[i - 1].s)) return false;
    if (!(crossings[i].t > crossings[i - 1].t)) return false;
    max_s = std::max(max_s, crossings[i].s);
    min_t = std::min(min_t, crossings[i].t);
  }
  return max_s < min_t;
}

ValidationReport validate_regular(const Polynomial& x, const Polynomial& y) {
  ValidationReport rep;
  const Polynomial dx = x.derivative(), dy = y.derivative();
  if (dx.is_zero() && dy.is_zero()) {
    rep.regular = false;
    rep.findings.push_back("constant curve");
    return rep;
  }
  const Polynomial& lead = dx.degree() >= dy.degree() ? dy : dx;
  const Polynomial& other = dx.degree() >= dy.degree() ? dx : dy;
  if (lead.is_zero()) {
    for (double r : real_roots_values(other)) rep.cusps.push_back(r);
  } else {
    for (double r : real_roots_values(lead)) {
      if (std::abs(other(r)) <= 1e-8 * (abs_eval(other, r) + 1e-300)) rep.cusps.push_back(r);
    }
  }
  for (double c : rep.cusps) rep.findings.push_back("cusp at t = " + std::to_string(c));

  if (x.degree() >= 2 && y.degree() >= 2) {
    const Analysis a = analyze(x, y);
    rep.tangential = a.tangential;
    rep.triple = a.triple;
    rep.infinitely_many = a.infinitely_many;
    if (a.infinitely_many) rep.findings.push_back("infinitely many double points");
    for (const auto& c : a.tangential)
      rep.findings.push_back("tangential double point at s = " + std::to_string(c.s) + ", t = " + std::to_string(c.t));
    if (!a.triple.empty()) rep.findings.push_back("triple point");
    for (double d : a.diagonal) {
      bool known = false;
      for (double c : rep.cusps) known = known || std::abs(c - d) < 1e-6;
      if (!known) rep.findings.push_back("stationary solution at t = " + std::to_string(d));
      if (!known) rep.cusps.push_back(d);
    }
  }
  rep.regular = rep.cusps.empty() && rep.tangential.empty() && rep.triple.empty() && !rep.infinitely_many;
  return rep;
}

double crossing_residual(const Polynomial& x, const Polynomial& y, const std::vector<CrossingParams>& crossings) {
  double worst = 0.0;
  for (const auto& c : crossings)
    worst = std::max(worst, std::abs(x(c.s) - x(c.t)) + std::abs(y(c.s) - y(c.t)));
  return worst;
}

}  // namespace polyknot

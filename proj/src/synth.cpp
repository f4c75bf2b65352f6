#include "polyknot/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "polyknot/errors.hpp"
#include "polyknot/roots.hpp"

namespace polyknot {

namespace {

constexpr double kRankTol = 1e-12;        // relative singular-value cutoff
constexpr double kConsistencyTol = 1e-9;  // residual of the interpolation system
constexpr double kNodeTol = 1e-6;         // a root this close to a node is that node

int degree_cap(int n) { return 3 * n + 3; }

// V_0(u) .. V_d(u).
std::vector<double> v_values(double u, int d) {
  std::vector<double> v(static_cast<std::size_t>(d) + 1);
  v[0] = 1.0;
  if (d >= 1) v[1] = u;
  for (int k = 2; k <= d; ++k) v[k] = u * v[k - 1] - v[k - 2];
  return v;
}

std::vector<int> admissible_below(int d) {
  std::vector<int> cols;
  for (int j = 0; j < d; ++j)
    if (admissible(j)) cols.push_back(j);
  return cols;
}

struct LeastSquares {
  Eigen::VectorXd x;     // minimum-norm solution
  Eigen::MatrixXd null;  // orthonormal basis of the numerical null space
  bool consistent = false;
};

LeastSquares solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  LeastSquares out;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  svd.setThreshold(kRankTol);
  out.x = svd.solve(b);
  const auto rank = svd.rank();
  out.null = svd.matrixV().rightCols(a.cols() - rank);
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  out.consistent = (a * out.x - b).cwiseAbs().maxCoeff() <= kConsistencyTol * scale;
  return out;
}

VSeries assemble(const std::vector<int>& cols, const Eigen::VectorXd& x, int lead_degree, double lead) {
  std::vector<double> c(static_cast<std::size_t>(std::max(lead_degree, cols.empty() ? 0 : cols.back())) + 1, 0.0);
  for (std::size_t i = 0; i < cols.size(); ++i) c[cols[i]] = x[static_cast<Eigen::Index>(i)];
  if (lead_degree >= 0) c[lead_degree] = lead;
  return VSeries(std::move(c));
}

// R1 with its node roots divided out; its real roots are the extra ones.
Polynomial deflate(const VSeries& r, const std::vector<double>& nodes) {
  std::vector<double> c = to_monomial(r).coeffs();
  for (double u : nodes) {
    if (c.size() < 2) break;
    std::vector<double> q(c.size() - 1);
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) q[k - 1] = acc = c[k] + acc * u;
    c = std::move(q);
  }
  return Polynomial(std::move(c));
}

bool has_extra_root_inside(const VSeries& r, const std::vector<double>& nodes, double edge) {
  const Polynomial q = deflate(r, nodes);
  return q.degree() >= 1 && !real_roots(q, -edge, edge).empty();
}

ChebSeries cheb_from(std::initializer_list<std::pair<int, double>> terms) {
  int d = 0;
  for (const auto& [k, c] : terms) d = std::max(d, k);
  std::vector<double> v(static_cast<std::size_t>(d) + 1, 0.0);
  for (const auto& [k, c] : terms) v[k] = c;
  return ChebSeries(std::move(v));
}

}  // namespace

bool admissible(int j) { return j >= 0 && j % 3 != 2; }

std::vector<double> nodes_from_cos(const std::vector<double>& cosines) {
  std::vector<double> u;
  u.reserve(cosines.size());
  for (double c : cosines) u.push_back(2.0 * c);
  std::sort(u.begin(), u.end());
  return u;
}

void validate_spec(const SynthSpec& spec) {
  if (spec.n < 1) fail(ErrorKind::BadInput, "synth: n must be positive");
  if (static_cast<int>(spec.nodes.size()) != spec.n)
    fail(ErrorKind::BadInput, "synth: expected " + std::to_string(spec.n) + " nodes");
  for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
    const double u = spec.nodes[i];
    if (!std::isfinite(u) || std::abs(u) >= 2.0) fail(ErrorKind::BadInput, "synth: nodes must lie in (-2, 2)");
    if (i > 0 && !(spec.nodes[i - 1] < u)) fail(ErrorKind::BadInput, "synth: nodes must be strictly increasing");
  }
}

VSeries interpolate_R1(const std::vector<double>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 0) fail(ErrorKind::BadInput, "interpolate_R1: no nodes");
  std::optional<VSeries> fallback;

  for (int d = n; d <= degree_cap(n); ++d) {
    if (!admissible(d)) continue;
    const auto cols = admissible_below(d);
    Eigen::MatrixXd a(n, static_cast<Eigen::Index>(cols.size()));
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) {
      const auto v = v_values(nodes[i], d);
      for (std::size_t k = 0; k < cols.size(); ++k) a(i, static_cast<Eigen::Index>(k)) = v[cols[k]];
      b[i] = -v[d];
    }
    const auto ls = solve(a, b);
    if (!ls.consistent) continue;

    const VSeries base = assemble(cols, ls.x, d, 1.0);
    if (!fallback) fallback = base;
    if (!has_extra_root_inside(base, nodes, 2.0)) return base;
    if (ls.null.cols() == 0) continue;

    // One free direction: the part of the null space that moves the highest
    // coefficient the most.
    Eigen::VectorXd dir = ls.null * ls.null.row(ls.null.rows() - 1).transpose();
    if (std::abs(dir[dir.size() - 1]) < 1e-8) dir = ls.null.col(0);
    const Eigen::Index big = [&] {
      Eigen::Index i = 0;
      dir.cwiseAbs().maxCoeff(&i);
      return std::abs(dir[dir.size() - 1]) >= 1e-8 ? dir.size() - 1 : i;
    }();
    dir /= dir[big];

    for (int k = 0; k < 60; ++k) {
      const double step = 1e-3 * std::pow(1.25, k);
      for (double lambda : {step, -step}) {
        const VSeries cand = assemble(cols, ls.x + lambda * dir, d, 1.0);
        if (!has_extra_root_inside(cand, nodes, 2.0)) return cand;
      }
    }
  }
  if (fallback) return *fallback;
  fail(ErrorKind::SingularSystem, "interpolate_R1: no consistent admissible degree up to " +
                                      std::to_string(degree_cap(n)));
}

VSeries interpolate_R2(const std::vector<double>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 0) fail(ErrorKind::BadInput, "interpolate_R2: no nodes");
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) b[i] = (i % 2 == 0) ? -1.0 : 1.0;  // (-1)^i with i from 1

  for (int d = 0; d <= degree_cap(n); ++d) {
    if (!admissible(d)) continue;
    std::vector<int> cols = admissible_below(d);
    cols.push_back(d);
    Eigen::MatrixXd a(n, static_cast<Eigen::Index>(cols.size()));
    for (int i = 0; i < n; ++i) {
      const auto v = v_values(nodes[i], d);
      for (std::size_t k = 0; k < cols.size(); ++k) a(i, static_cast<Eigen::Index>(k)) = v[cols[k]];
    }
    const auto ls = solve(a, b);
    if (ls.consistent) return assemble(cols, ls.x, -1, 0.0);
  }
  fail(ErrorKind::SingularSystem, "interpolate_R2: no consistent admissible degree up to " +
                                      std::to_string(degree_cap(n)));
}

ChebSeries lift(const VSeries& r) {
  double big = 1.0;
  for (double c : r.coeffs()) big = std::max(big, std::abs(c));
  std::vector<double> q(static_cast<std::size_t>(r.degree()) + 2, 0.0);
  for (int j = 0; j <= r.degree(); ++j) {
    const int e = epsilon(j + 1);
    if (e == 0) {
      if (std::abs(r[j]) > 1e-12 * big)
        fail(ErrorKind::Unliftable, "lift: nonzero coefficient on V_" + std::to_string(j));
      continue;
    }
    q[j + 1] = r[j] / e;
  }
  return ChebSeries(std::move(q));
}

ChebSeries add_shaping(const ChebSeries& q, const std::vector<double>& b) {
  ChebSeries out = q;
  for (std::size_t i = 0; i < b.size(); ++i) out += ChebSeries::single(6 * static_cast<int>(i + 1), b[i]);
  return out;
}

std::vector<double> extra_roots(const VSeries& r, const std::vector<double>& nodes) {
  std::vector<double> out;
  const Polynomial p = to_monomial(r);
  if (p.degree() < 1) return out;
  const double bound = root_bound(p);
  for (const Root& root : real_roots(p, -bound, bound)) {
    const bool at_node =
        std::any_of(nodes.begin(), nodes.end(), [&](double u) { return std::abs(root.value - u) <= kNodeTol; });
    if (!at_node) out.push_back(root.value);
  }
  return out;
}

SynthResult synthesize(const SynthSpec& spec) {
  validate_spec(spec);
  SynthResult res;
  res.r1 = interpolate_R1(spec.nodes);
  res.r2 = interpolate_R2(spec.nodes);
  res.extra_roots = extra_roots(res.r1, spec.nodes);
  for (double u : res.extra_roots)
    if (std::abs(u) < 2.0)
      fail(ErrorKind::ExtraCrossings, "synthesize: R1 has an extra root at u = " + std::to_string(u));

  // Monic y; z scaled to a unit leading coefficient, keeping the sign pattern.
  ChebSeries y = lift(res.r1);
  y *= 1.0 / y[y.degree()];
  res.y = add_shaping(y, spec.shaping);
  res.z = lift(res.r2);
  res.z *= 1.0 / std::abs(res.z[res.z.degree()]);

  res.curve.x = cheb_T(3);
  res.curve.y = to_monomial(res.y);
  res.curve.z = to_monomial(res.z);
  res.curve.label = "K" + std::to_string(spec.n) + " (synthesized)";
  res.diagram = build_diagram(res.curve);

  const auto& cr = res.diagram.crossings;
  if (static_cast<int>(cr.size()) != spec.n) {
    res.failures.push_back("expected " + std::to_string(spec.n) + " crossings, found " + std::to_string(cr.size()));
  } else {
    std::vector<double> us;
    for (const auto& c : cr) us.push_back(c.params.u);
    std::sort(us.begin(), us.end());
    for (int i = 0; i < spec.n; ++i)
      if (std::abs(us[i] - spec.nodes[i]) > 1e-8)
        res.failures.push_back("crossing " + std::to_string(i + 1) + " is off its node");
  }
  std::vector<CrossingParams> params;
  for (const auto& c : cr) params.push_back(c.params);
  if (!crossing_order_check(params)) res.failures.push_back("crossings are not ordered s_1 < ... < s_n < t_1 < ... < t_n");
  if (!is_alternating(res.diagram)) res.failures.push_back("diagram is not alternating");
  const auto knot = recognize_torus_2n(res.diagram);
  if (!knot || *knot != spec.n) res.failures.push_back("diagram is not recognized as K" + std::to_string(spec.n));
  res.verified = res.failures.empty();
  return res;
}

double best_t6_shaping(const ChebSeries& y, int steps) {
  const auto cr = double_points_cheb3(y);
  if (cr.size() < 2 || steps < 2) return 0.0;
  const Polynomial x = cheb_T(3);
  double best_b = 0.0, best_gap = -1.0;
  for (int i = 0; i < steps; ++i) {
    const double b = -5.0 + 10.0 * i / (steps - 1);
    const Polynomial yy = to_monomial(add_shaping(y, {b}));
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < cr.size(); ++p)
      for (std::size_t q = p + 1; q < cr.size(); ++q)
        gap = std::min(gap, std::hypot(eval(x, cr[p].s) - eval(x, cr[q].s), eval(yy, cr[p].s) - eval(yy, cr[q].s)));
    if (gap > best_gap) {
      best_gap = gap;
      best_b = b;
    }
  }
  return best_b;
}

BuiltinSeries builtin_series(std::string_view name) {
  const ChebSeries x = ChebSeries::single(3);
  if (name == "k3") return {x, ChebSeries::single(4), ChebSeries::single(5)};
  if (name == "k5")
    return {x, cheb_from({{8, 1.0}, {6, -2.0}, {4, 2.189}, {2, -2.170}}),
            cheb_from({{7, 1.0}, {5, -0.56}, {1, -0.01348}})};
  if (name == "k7")
    return {x, cheb_from({{10, 1.0}, {8, -2.360}, {6, 4.108}, {4, -6.037}, {2, 7.397}}),
            cheb_from({{11, 1.0}, {7, 3.580}, {5, -3.739}, {1, -1.0}})};
  if (name == "k9")
    return {x,
            cheb_from({{14, 1.0}, {12, -4.516}, {10, 12.16}, {8, -24.46}, {6, 39.92}, {4, -55.30}, {2, 66.60}}),
            cheb_from({{13, 1.0}, {11, -2.389}, {7, -5.161}, {5, 5.161}, {1, 1.397}})};
  fail(ErrorKind::UnknownName, "unknown builtin curve '" + std::string(name) + "'");
}

SpaceCurve builtin(std::string_view name) {
  const auto s = builtin_series(name);
  std::string label(name);
  if (!label.empty()) label[0] = 'K';
  return {to_monomial(s.x), to_monomial(s.y), to_monomial(s.z), label};
}

SynthSpec builtin_spec(std::string_view name) {
  if (name == "k3") return {3, nodes_from_cos({-std::sqrt(0.5), 0.0, std::sqrt(0.5)}), {}};
  if (name == "k5") {
    // No node set is quoted for K5; use the crossings of its published y.
    SynthSpec spec{5, {}, {-2.0}};
    for (const auto& c : double_points_cheb3(builtin_series("k5").y)) spec.nodes.push_back(c.u);
    return spec;
  }
  if (name == "k7") return {7, nodes_from_cos({-0.5, -0.3, -0.2, 0.0, 0.2, 0.3, 0.5}), {4.108}};
  if (name == "k9")
    return {9, nodes_from_cos({-0.5, -0.3, -0.2, -0.1, 0.0, 0.1, 0.2, 0.3, 0.5}), {39.92, -4.516}};
  fail(ErrorKind::UnknownName, "unknown builtin curve '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"k3", "k5", "k7", "k9"}; }

}  // namespace polyknot

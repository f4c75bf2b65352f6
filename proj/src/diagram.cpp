#include "polyknot/diagram.hpp"

#include <algorithm>
#include <cmath>

#include "polyknot/errors.hpp"

namespace polyknot {

namespace {

constexpr double kZTol = 1e-9;

bool same_cyclic_order(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  const std::size_t off = static_cast<std::size_t>(it - b.begin());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(i + off) % b.size()]) return false;
  return true;
}

}  // namespace

Diagram make_diagram(const SpaceCurve& c, const std::vector<CrossingParams>& params) {
  if (!c.z) fail(ErrorKind::BadInput, "a diagram needs the z coordinate");
  const Polynomial& z = *c.z;
  std::vector<CrossingParams> sorted = params;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.s < b.s; });

  const double ztol = kZTol * (1.0 + max_abs_coeff(z));
  Diagram d;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& p = sorted[i];
    const double zs = z(p.s), zt = z(p.t);
    if (std::abs(zs - zt) < ztol)
      fail(ErrorKind::ZCollision, "z(s) = z(t) at crossing " + std::to_string(i + 1) + ": not a diagram");
    Crossing cr;
    cr.index = static_cast<int>(i) + 1;
    cr.params = p;
    cr.px = c.x(p.s);
    cr.py = c.y(p.s);
    cr.first_pass_over = zs > zt;
    d.gauss.push_back({cr.index, cr.first_pass_over, p.s});
    d.gauss.push_back({cr.index, !cr.first_pass_over, p.t});
    d.crossings.push_back(cr);
  }
  std::sort(d.gauss.begin(), d.gauss.end(), [](const Visit& a, const Visit& b) { return a.param < b.param; });
  return d;
}

Diagram build_diagram(const SpaceCurve& c) {
  if (!c.z) fail(ErrorKind::BadInput, "a diagram needs the z coordinate");
  return make_diagram(c, double_points(c.x, c.y));
}

bool is_alternating(const Diagram& d) {
  for (std::size_t i = 1; i < d.gauss.size(); ++i)
    if (d.gauss[i].over == d.gauss[i - 1].over) return false;
  return true;
}

std::optional<int> recognize_torus_2n(const Diagram& d) {
  const int n = static_cast<int>(d.crossings.size());
  if (n < 3 || n % 2 == 0) return std::nullopt;
  std::vector<CrossingParams> params;
  for (const auto& c : d.crossings) params.push_back(c.params);
  if (!crossing_order_check(params)) return std::nullopt;
  if (!is_alternating(d)) return std::nullopt;
  std::vector<int> first, second;
  for (std::size_t i = 0; i < d.gauss.size(); ++i)
    (static_cast<int>(i) < n ? first : second).push_back(d.gauss[i].crossing);
  if (!same_cyclic_order(first, second)) return std::nullopt;
  return n;
}

std::string gauss_code(const Diagram& d) {
  std::string out;
  for (const auto& v : d.gauss) {
    if (!out.empty()) out += ' ';
    out += v.over ? 'O' : 'U';
    out += std::to_string(v.crossing);
  }
  return out;
}

}  // namespace polyknot

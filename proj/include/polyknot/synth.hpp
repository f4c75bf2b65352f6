#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyknot/chebyshev.hpp"
#include "polyknot/curve.hpp"
#include "polyknot/diagram.hpp"

namespace polyknot {

/// Crossing nodes are stored as u = s + t = 2 cos α, the root variable of
/// R. Published node sets are quoted as cos α; use nodes_from_cos for those.
struct SynthSpec {
  int n = 0;
  std::vector<double> nodes;    // strictly increasing, |u| < 2
  std::vector<double> shaping;  // coefficients of T_6, T_12, ...
};

std::vector<double> nodes_from_cos(const std::vector<double>& cosines);

/// BadInput unless nodes has n entries, strictly increasing, inside (-2, 2).
void validate_spec(const SynthSpec& spec);

struct SynthResult {
  SpaceCurve curve;
  ChebSeries y;  // lift(R1), normalized monic, plus shaping
  ChebSeries z;  // lift(R2), scaled to leading magnitude 1
  VSeries r1;
  VSeries r2;
  Diagram diagram;
  bool verified = false;
  std::vector<double> extra_roots;  // real roots of R1 away from the nodes
  std::vector<std::string> failures;
};

/// Is j a degree Lemma A can reach, i.e. j ≢ 2 (mod 3)?
bool admissible(int j);

/// Monic R1 over the admissible V_j with R1(u_i) = 0, of the least degree
/// at which the system is consistent and R1 has no further roots in
/// [-2, 2]; when the solution is not unique, the free direction with the
/// highest coefficient is searched to push extra roots out. Falls back to
/// the least consistent degree if no clean solution exists below the cap.
/// SingularSystem if no degree is consistent.
VSeries interpolate_R1(const std::vector<double>& nodes);

/// R2 over the admissible V_j with R2(u_i) = (-1)^i (i = 1..n in increasing
/// u), of least consistent degree, minimum-norm when not unique.
VSeries interpolate_R2(const std::vector<double>& nodes);

/// Inverse of divided_difference_on_ellipse on admissible series:
/// c_{j+1} = r_j / ε(j + 1). Unliftable if some r_j with j ≡ 2 (mod 3)
/// exceeds 1e-12 max(1, max |r|).
ChebSeries lift(const VSeries& r);

/// q + Σ b_i T_{6i}. Leaves divided_difference_on_ellipse unchanged.
ChebSeries add_shaping(const ChebSeries& q, const std::vector<double>& b);

/// Real roots of r not within 1e-6 of a node, over its whole root bound.
std::vector<double> extra_roots(const VSeries& r, const std::vector<double>& nodes);

/// Builds (T3, lift(R1) + shaping, lift(R2)) and checks it: n crossings at
/// the nodes, Lemma 1 order, alternation and recognition as K_n.
/// ExtraCrossings if R1 has a root in (-2, 2) besides the nodes.
SynthResult synthesize(const SynthSpec& spec);

/// Grid search of the T_6 coefficient over [-5, 5] maximizing the smallest
/// distance between plane crossing points. Cosmetic only.
double best_t6_shaping(const ChebSeries& y, int steps = 201);

/// The published curves: "k3", "k5", "k7", "k9". UnknownName otherwise.
SpaceCurve builtin(std::string_view name);

struct BuiltinSeries {
  ChebSeries x, y, z;
};
BuiltinSeries builtin_series(std::string_view name);

/// Node sets of the published curves ("k3", "k5", "k7", "k9").
SynthSpec builtin_spec(std::string_view name);

std::vector<std::string> builtin_names();

}  // namespace polyknot

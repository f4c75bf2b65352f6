#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "polyknot/obstruction.hpp"
#include "support/samplers.hpp"

using namespace polyknot;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-500, 500), den(1, 37);
  return Rational(num(rng), den(rng));
}

// Power sums from the eigenvalues of the companion matrix.
std::vector<double> eigen_power_sums(const Polynomial& monic, int kmax, std::vector<double>& scale) {
  const int n = monic.degree();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -monic[i];
  const Eigen::VectorXcd roots = comp.eigenvalues();
  std::vector<double> s(kmax + 1, 0.0);
  scale.assign(kmax + 1, 0.0);
  for (int k = 1; k <= kmax; ++k)
    for (int i = 0; i < n; ++i) {
      s[k] += std::pow(roots[i], k).real();
      scale[k] += std::pow(std::abs(roots[i]), k);
    }
  return s;
}

}  // namespace

TEST_CASE("build_R examples") {
  CHECK(build_R<double>(5, std::vector<double>(5, 0.0)).is_zero());
  std::vector<double> a(7, 0.0);
  a[6] = 0.75;
  CHECK(build_R(7, a) == VSeries{0, 0, 0, 0, 0, 0, 0.75, 1.0});
  CHECK_THROWS_AS(build_R<double>(7, std::vector<double>(3, 0.0)), Error);
}

TEST_CASE("build_R agrees with the ellipse divided difference") {
  // K_5's y: T8 - 2T6 + 2.189T4 - 2.170T2, read as n = 7 with a_k the T_k
  // coefficients.
  const ChebSeries y{0, 0, -2.170, 0, 2.189, 0, -2.0, 0, 1.0};
  std::vector<double> a(7, 0.0);
  for (int k = 1; k <= 7; ++k) a[k - 1] = y[k];
  CHECK(build_R(7, a) == divided_difference_on_ellipse(y));

  std::mt19937_64 rng(12);
  for (int n = 3; n <= 25; ++n) {
    std::vector<Rational> ar(n);
    std::vector<Rational> q(n + 2, Rational(0));
    for (int k = 1; k <= n; ++k) q[k] = ar[k - 1] = random_rational(rng);
    q[n + 1] = 1;
    CHECK(build_R(n, ar) == divided_difference_on_ellipse(BasicSeries<Rational, Basis::T>(q)));
  }
}

TEST_CASE("Newton sums: small example and errors") {
  const auto s = newton_sums(VSeries::single(2));  // u^2 - 1
  CHECK(s.S1 == 0.0);
  CHECK(s.S2 == 2.0);
  CHECK(s.S4 == 2.0);
  CHECK(s.sigma2 == -1.0);
  try {
    newton_sums(VSeries::single(2, 2.0));
    FAIL("expected NotMonic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMonic);
  }
}

TEST_CASE("Newton sums agree with power sums of numerically computed roots") {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    std::vector<double> c(n + 1);
    for (auto& v : c) v = u(rng);
    c.back() = 1.0;
    const Polynomial p(c);
    const auto ours = power_sums(p, 6);
    std::vector<double> scale;
    const auto ref = eigen_power_sums(p, 6, scale);
    for (int k = 1; k <= 6; ++k) CHECK(std::abs(ours[k] - ref[k]) <= 1e-6 * scale[k]);
    const auto ns = newton_sums(from_monomial<Basis::V>(p));
    CHECK(std::abs(ns.S2 - ref[2]) <= 1e-6 * scale[2]);
    CHECK(std::abs(ns.S4 - ref[4]) <= 1e-6 * scale[4]);
  }
}

TEST_CASE("S4 reduces to 2 sigma2^2 - 4 sigma4 when sigma1 = 0") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 12)(rng);
    std::vector<Rational> c(n + 1);
    for (auto& v : c) v = random_rational(rng);
    c[n] = 1;
    c[n - 1] = 0;
    const auto ns = newton_sums(from_monomial<Basis::V>(BasicPolynomial<Rational>(c)));
    CHECK(ns.sigma1 == 0);
    CHECK(ns.S2 == -2 * ns.sigma2);
    CHECK(ns.S4 == 2 * ns.sigma2 * ns.sigma2 - 4 * ns.sigma4);
  }
}

TEST_CASE("closed forms of S2 and S4 on the R family") {
  std::mt19937_64 rng(31);
  for (int n = 7; n <= 61; n += 6) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> a(n);
      for (auto& v : a) v = random_rational(rng);
      const auto ns = newton_sums(build_R(n, a));
      CHECK(ns.S2 == a[n - 1] * a[n - 1] + 2 * (n - 1));
    }
  }
  for (int n = 9; n <= 63; n += 6) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> a(n);
      for (auto& v : a) v = random_rational(rng);
      // ε(n+1) = -1 here; negate to make R monic.
      const auto ns = newton_sums(build_R(n, a) * Rational(-1));
      const Rational shifted = a[n - 2] + 2;
      CHECK(ns.S4 == 2 * shifted * shifted + 6 * n - 18);
    }
  }
}

TEST_CASE("Lemma B check") {
  const double cosines[] = {-0.5, -0.3, -0.2, 0.0, 0.2, 0.3, 0.5};
  std::vector<double> u;
  for (double c : cosines) u.push_back(2 * c);
  const auto k7 = lemma_b_check(u);
  CHECK(k7.holds);
  CHECK(k7.S2 == doctest::Approx(3.04));

  const std::vector<double> zeros(9, 0.0);
  CHECK(lemma_b_check(zeros).holds);
  CHECK(lemma_b_check(zeros).S2 == 0.0);

  // S2 = n + 5 with n = 5: five entries of sqrt(2).
  const std::vector<double> over(5, std::sqrt(2.0));
  CHECK_FALSE(lemma_b_check(over).holds);
}

TEST_CASE("Lemma B holds on sampled ordered T3 pairings") {
  std::mt19937_64 rng(99991);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 15)(rng);
    const auto alphas = testing::lemma_b_angles(rng, n);
    REQUIRE(testing::satisfies_pair_window(alphas));
    std::vector<double> u;
    for (double a : alphas) u.push_back(2 * std::cos(a));
    const auto r = lemma_b_check(u);
    INFO("n = " << n << " S2 = " << r.S2 << " S4 = " << r.S4);
    CHECK(r.holds);
  }
}

TEST_CASE("certificates") {
  const auto five = certify_impossible(5);
  CHECK(five.impossible);
  CHECK(five.kind == ObstructionCase::mod3_2_degree_drop);
  CHECK(five.inequality.lhs == 4);
  CHECK(five.inequality.rhs == 5);

  const auto seven = certify_impossible(7);
  CHECK(seven.impossible);
  CHECK(seven.kind == ObstructionCase::mod6_1_S2);
  CHECK(seven.inequality.lhs == 12);
  CHECK(seven.inequality.relation == ">");
  CHECK(seven.inequality.rhs == 11);
  CHECK(seven.expression == "a7^2 + 12");

  const auto nine = certify_impossible(9);
  CHECK(nine.impossible);
  CHECK(nine.kind == ObstructionCase::mod6_3_S4);
  CHECK(nine.inequality.lhs == 36);
  CHECK(nine.inequality.rhs == 31);

  const auto three = certify_impossible(3);
  CHECK_FALSE(three.impossible);
  CHECK(three.kind == ObstructionCase::inconclusive_n3);
  CHECK(three.inequality.relation == "<=");

  for (int n = 5; n <= 99; n += 2) {
    const auto rep = certify_impossible(n);
    CHECK(rep.impossible);
    if (n % 3 == 2) CHECK(rep.kind == ObstructionCase::mod3_2_degree_drop);
    if (n % 6 == 1) CHECK(rep.inequality.lhs == 2 * (n - 1));
    if (n % 6 == 3) CHECK(rep.inequality.lhs == 6 * n - 18);
  }

  CHECK_THROWS_AS(certify_impossible(4), Error);
  CHECK_THROWS_AS(certify_impossible(1), Error);
}

TEST_CASE("exact quadratic minimum") {
  const auto a1 = SymbolicPolynomial::variable(1);
  const auto a2 = SymbolicPolynomial::variable(2);
  CHECK(*quadratic_minimum(a1 * a1 + SymbolicPolynomial(3)) == 3);
  // (a1 + a2)^2 + (a2 - 1)^2 + 1/2
  const auto q = (a1 + a2) * (a1 + a2) + (a2 - SymbolicPolynomial(1)) * (a2 - SymbolicPolynomial(1)) +
                 SymbolicPolynomial(Rational(1, 2));
  CHECK(*quadratic_minimum(q) == Rational(1, 2));
  CHECK_FALSE(quadratic_minimum(a1).has_value());
  CHECK_FALSE(quadratic_minimum(a1 * a2).has_value());
  CHECK_FALSE(quadratic_minimum(-(a1 * a1)).has_value());
  CHECK_FALSE(quadratic_minimum(a1 * a1 * a1).has_value());
  CHECK(to_string(SymbolicPolynomial(2) * a1 * a2 - a1 + SymbolicPolynomial(Rational(-1, 3))) == "2*a1*a2 - a1 - 1/3");
}

TEST_CASE("minimality bounds and labels") {
  CHECK(minimality_bound(5) == std::pair{3, 6});
  CHECK(minimality_bound(3) == std::pair{3, 4});
  CHECK(minimality_bound(7) == std::pair{3, 8});
  CHECK(minimality_label(3, 3, 4, 5) == "minimal");
  CHECK(minimality_label(5, 3, 8, 7) == "minimal");
  CHECK(minimality_label(7, 3, 10, 11) == "minimal");
  CHECK(minimality_label(9, 3, 14, 13) == "minimal-conditional");
  CHECK(minimality_label(9, 3, 16, 17) == "unknown");
}

#include "polyknot/obstruction.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyknot {

namespace {

// R in the monomial basis with symbolic a_1..a_n, normalized so that the
// leading coefficient is 1 (ε(n+1) = ±1 when nonzero).
BasicPolynomial<SymbolicPolynomial> symbolic_R(int n) {
  const auto table = detail::basis_table<Rational, Basis::V>(n);
  std::vector<SymbolicPolynomial> c(static_cast<std::size_t>(n) + 1);
  const int lead = epsilon(n + 1);
  for (int m = 0; m <= n; ++m) {
    SymbolicPolynomial acc(table[n][m] * lead);
    for (int k = 1; k <= n; ++k) {
      const int e = epsilon(k);
      if (e == 0 || m > k - 1) continue;
      const Rational v = table[k - 1][m];
      if (v == 0) continue;
      acc += SymbolicPolynomial::variable(k) * SymbolicPolynomial(v * e);
    }
    // Dividing by ±1 is multiplying by it.
    c[m] = lead == 0 ? acc : acc * SymbolicPolynomial(lead);
  }
  return BasicPolynomial<SymbolicPolynomial>(std::move(c));
}

}  // namespace

LemmaBResult lemma_b_check(std::span<const double> u) {
  LemmaBResult r;
  for (double v : u) {
    const double sq = v * v;
    r.S2 += sq;
    r.S4 += sq * sq;
  }
  const double n = static_cast<double>(u.size());
  r.holds = r.S2 <= n + 4 && r.S4 <= n + 22;
  return r;
}

std::string_view to_string(ObstructionCase c) {
  switch (c) {
    case ObstructionCase::mod3_2_degree_drop: return "mod3_2_degree_drop";
    case ObstructionCase::mod6_1_S2: return "mod6_1_S2";
    case ObstructionCase::mod6_3_S4: return "mod6_3_S4";
    case ObstructionCase::inconclusive_n3: return "inconclusive_n3";
  }
  return "unknown";
}

ObstructionReport certify_impossible(int n) {
  if (n < 3 || n % 2 == 0) fail(ErrorKind::BadInput, "certify_impossible: n must be odd and at least 3");
  ObstructionReport rep;
  rep.n = n;

  const auto r = symbolic_R(n);
  if (r.degree() < n) {
    // ε(n+1) = 0: R has degree at most n - 1 but must vanish at n distinct u_i.
    rep.kind = ObstructionCase::mod3_2_degree_drop;
    rep.newton_sum = "degree";
    rep.expression = "deg R <= " + std::to_string(n - 1);
    rep.inequality = {Rational(n - 1), "<", Rational(n)};
    rep.impossible = true;
    rep.statement = "R(u) has degree at most " + std::to_string(n - 1) + " and cannot have " + std::to_string(n) +
                    " distinct roots";
    return rep;
  }

  // All n roots of R are the real u_i of the crossings, so its Newton sums
  // must obey Lemma B. A lower bound over every choice of a_k that exceeds
  // the Lemma B ceiling is a contradiction.
  const auto s = power_sums(r, 4);
  const std::pair<int, Rational> attempts[] = {{2, Rational(n + 4)}, {4, Rational(n + 22)}};
  for (const auto& [k, ceiling] : attempts) {
    const auto low = quadratic_minimum(s[k]);
    if (!low) continue;
    rep.newton_sum = "S" + std::to_string(k);
    rep.expression = to_string(s[k]);
    if (*low > ceiling) {
      rep.kind = k == 2 ? ObstructionCase::mod6_1_S2 : ObstructionCase::mod6_3_S4;
      rep.inequality = {*low, ">", ceiling};
      rep.impossible = true;
      rep.statement = rep.newton_sum + " >= " + to_string(*low) + " > " + to_string(ceiling) + " >= " + rep.newton_sum;
      return rep;
    }
    if (n == 3 && k == 4) {
      rep.kind = ObstructionCase::inconclusive_n3;
      rep.inequality = {*low, "<=", ceiling};
      rep.impossible = false;
      rep.statement = "no contradiction: " + rep.newton_sum + " >= " + to_string(*low) + " is compatible with " +
                      rep.newton_sum + " <= " + to_string(ceiling);
      return rep;
    }
  }
  throw std::logic_error("certify_impossible: no Newton-sum certificate for n = " + std::to_string(n));
}

std::pair<int, int> minimality_bound(int n) {
  if (n < 3 || n % 2 == 0) fail(ErrorKind::BadInput, "minimality_bound: n must be odd and at least 3");
  return {3, n + 1};
}

std::string minimality_label(int n, int deg_x, int deg_y, int deg_z) {
  struct Known {
    int n, x, y, z;
    const char* label;
  };
  static constexpr Known kKnown[] = {
      {3, 3, 4, 5, "minimal"},
      {5, 3, 7, 8, "minimal"},
      {7, 3, 10, 11, "minimal"},
      {9, 3, 13, 14, "minimal-conditional"},
  };
  // Degree triples are quoted with the last two sorted: K_5 is (3, 7, 8)
  // with deg z = 7 < deg y = 8.
  const int lo = std::min(deg_y, deg_z), hi = std::max(deg_y, deg_z);
  for (const auto& k : kKnown)
    if (k.n == n && k.x == deg_x && k.y == lo && k.z == hi) return k.label;
  return "unknown";
}

}  // namespace polyknot

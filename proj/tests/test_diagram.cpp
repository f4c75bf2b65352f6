#include <cmath>
#include <random>

#include "doctest.h"
#include "polyknot/diagram.hpp"
#include "polyknot/errors.hpp"
#include "polyknot/synth.hpp"

using namespace polyknot;

namespace {

SpaceCurve mirror(SpaceCurve c) {
  *c.z = *c.z * -1.0;
  return c;
}

// Over/under pattern read off the Gauss sequence, e.g. "OUOUOU".
std::string pattern(const Diagram& d) {
  std::string s;
  for (const auto& v : d.gauss) s += v.over ? 'O' : 'U';
  return s;
}

}  // namespace

TEST_CASE("K3 Gauss code") {
  const auto d = build_diagram(builtin("k3"));
  const std::string code = gauss_code(d);
  CHECK((code == "O1 U2 O3 U1 O2 U3" || code == "U1 O2 U3 O1 U2 O3"));
  CHECK(is_alternating(d));
  CHECK(recognize_torus_2n(d) == 3);
  REQUIRE(d.crossings.size() == 3);
  for (const auto& c : d.crossings) {
    CHECK(c.px == doctest::Approx(cheb_T(3)(c.params.t)));
    CHECK(c.py == doctest::Approx(cheb_T(4)(c.params.t)));
  }
}

TEST_CASE("published curves are recognized") {
  const std::pair<const char*, int> cases[] = {{"k3", 3}, {"k5", 5}, {"k7", 7}, {"k9", 9}};
  for (const auto& [name, n] : cases) {
    const auto d = build_diagram(builtin(name));
    INFO(name);
    CHECK(static_cast<int>(d.crossings.size()) == n);
    CHECK(d.gauss.size() == 2 * d.crossings.size());
    CHECK(is_alternating(d));
    CHECK(recognize_torus_2n(d) == n);
  }
}

TEST_CASE("mirror flips every crossing") {
  for (const char* name : {"k3", "k7"}) {
    const auto d = build_diagram(builtin(name));
    const auto m = build_diagram(mirror(builtin(name)));
    REQUIRE(d.crossings.size() == m.crossings.size());
    for (std::size_t i = 0; i < d.crossings.size(); ++i)
      CHECK(d.crossings[i].first_pass_over != m.crossings[i].first_pass_over);
    CHECK(recognize_torus_2n(m) == recognize_torus_2n(d));
  }
}

TEST_CASE("translating the parameter keeps the Gauss code") {
  const SpaceCurve k5 = builtin("k5");
  const std::string code = gauss_code(build_diagram(k5));
  for (double c : {-0.7, 0.25, 1.5}) {
    SpaceCurve moved{k5.x.shifted(c), k5.y.shifted(c), k5.z->shifted(c), "moved"};
    const auto d = build_diagram(moved);
    CHECK(gauss_code(d) == code);
    CHECK(recognize_torus_2n(d) == 5);
    for (const auto& cr : d.crossings) CHECK(std::abs(cr.params.s + c - build_diagram(k5).crossings[cr.index - 1].params.s) < 1e-7);
  }
}

TEST_CASE("hand-built diagrams") {
  // (T3, T4) crossings with z = t: at every crossing the later pass is over,
  // so the code reads U U U O O O and is not alternating.
  SpaceCurve c{cheb_T(3), cheb_T(4), Polynomial{0.0, 1.0}, "up"};
  const auto d = build_diagram(c);
  CHECK(pattern(d) == "UUUOOO");
  CHECK_FALSE(is_alternating(d));
  CHECK_FALSE(recognize_torus_2n(d).has_value());

  const auto empty = make_diagram(c, {});
  CHECK(empty.crossings.empty());
  CHECK(is_alternating(empty));
  CHECK_FALSE(recognize_torus_2n(empty).has_value());
  CHECK(gauss_code(empty).empty());

  const auto one = make_diagram(c, {CrossingParams::from_pair(-1.0, 2.0)});
  CHECK(gauss_code(one) == "U1 O1");
  CHECK(is_alternating(one));
  CHECK_FALSE(recognize_torus_2n(one).has_value());
}

TEST_CASE("diagram errors") {
  SpaceCurve flat{cheb_T(3), cheb_T(4), std::nullopt, "flat"};
  CHECK_THROWS_AS(build_diagram(flat), Error);
  // z = T3 agrees at both ends of every crossing.
  SpaceCurve level{cheb_T(3), cheb_T(4), cheb_T(3), "level"};
  try {
    build_diagram(level);
    FAIL("expected ZCollision");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZCollision);
  }
}

TEST_CASE("(T3, T5) is not a torus diagram") {
  SpaceCurve c{cheb_T(3), cheb_T(5), cheb_T(7), "t5"};
  const auto d = build_diagram(c);
  CHECK(d.crossings.size() == 4);
  CHECK_FALSE(recognize_torus_2n(d).has_value());
}

#include <doctest.h>

#include "wendroff/errors.hpp"
#include "wendroff/sequence.hpp"

using namespace wendroff;

namespace {

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }
Rational q(long p, long d = 1) { return Rational(p, d); }

const UltraParams kLam = UltraParams::make(q(-5, 4));

std::vector<Polynomial> example_five_one() {
  return {
      poly({1}),
      poly({1, 0}),
      poly({1, 0, q(-18, 19)}),
      poly({1, 0, q(-10, 9), 0}),
      poly({1, 0, q(-12, 7), 0, q(4, 7)}),
      poly({1, 0, -3, 0, 2, 0}),
      poly({1, 0, q(-72, 17), 0, q(70, 17), 0, q(-12, 17)}),
      poly({1, 0, q(-89, 17), 0, q(121, 17), 0, q(-46, 17), 0}),
      poly({1, 0, q(-106, 17), 0, q(193, 17), 0, q(-116, 17), 0, q(12, 17)}),
      poly({1, 0, q(-123, 17), 0, q(282, 17), 0, q(-237, 17), 0, q(58, 17), 0}),
      poly({1, 0, q(-140, 17), 0, q(388, 17), 0, q(-430, 17), 0, q(174, 17), 0, q(-12, 17)}),
  };
}

WendroffConfig config(int n, int k, const Rational& l, RadiusRequest req = radius::Auto{},
                      Rational sigma = 2) {
  WendroffConfig c;
  c.n = n;
  c.k = k;
  c.params = UltraParams::make(l);
  c.sigma = sigma;
  c.radius = interval_radius(c.params, req);
  return c;
}

/// Closed forms for D_2 .. D_7 with a = 4(2+λ)/(3(3+2λ)), n = 5, σ = 2.
std::vector<Polynomial> general_lambda(const Rational& l) {
  auto P = [&](std::initializer_list<long> c) {
    Rational r = 0;
    for (long v : c) r = r * l + Rational(v);
    return r;
  };
  const Rational l2 = l * l;
  const Rational quint = P({512, 2944, 5208, 4, -8638, -6429});
  const Rational common = (l + 2) * pow(2 * l + 3, 2) * quint;
  std::vector<Polynomial> out;
  out.push_back(poly({1, 0, -(2 * l2 + 7 * l + 9) / (2 * P({2, 7, 9, 6}))}));
  out.push_back(poly({1, 0, -3 * (2 * l + 5) / (2 * (2 * l2 + 7 * l + 9)), 0}));
  out.push_back(poly({1, 0, -3 / (l + 3), 0, Rational(3) / (4 * (l2 + 5 * l + 6))}));
  out.push_back(poly({1, 0, -(2 * l + 7) / (2 * l + 4), 0, Rational(3) / (2 * l + 4), 0}));
  out.push_back(poly({1, 0,
                      P({-26624, -315136, -1452096, -3030464, -1350544, 6634848, 14325052, 11993936,
                         3814971}) / (18 * common),
                      0,
                      -P({-8192, -55552, -93408, 238480, 1249616, 2167224, 1773274, 577325}) /
                          (6 * common),
                      0,
                      4 * pow(2 * l + 1, 2) * P({80, 426, 753, 442}) /
                          (3 * pow(2 * l + 3, 2) * quint)}));
  out.push_back(poly({1, 0,
                      P({-10240, -121088, -561408, -1198624, -656672, 2255736, 5154212, 4387984,
                         1408809}) / (6 * common),
                      0,
                      P({4096, 78848, 458688, 1074016, 295376, -3734688, -8130836, -7213054,
                         -2452023}) / (18 * common),
                      0,
                      -2 * P({512, 3328, 7048, 828, -19042, -28747, -13742}) /
                          (3 * pow(2 * l + 3, 2) * quint),
                      0}));
  return out;
}

}  // namespace

TEST_CASE("config validation") {
  WendroffConfig c;
  CHECK_NOTHROW(c.validate());
  c.n = 4;
  CHECK_THROWS_AS(c.validate(), ParameterError);
  c.n = 5;
  c.k = 0;
  CHECK_THROWS_AS(c.validate(), ParameterError);
  c.k = 1;
  c.sigma = 1;
  CHECK_THROWS_AS(c.validate(), ParameterError);
  c.sigma = 2;
  c.tol = 0;
  CHECK_THROWS_AS(c.validate(), ParameterError);
  c.tol = q(1, 100);
  c.upward_ells = {q(1, 10), q(1, 10)};
  CHECK_THROWS_AS(c.validate(), ParameterError);
}

TEST_CASE("seed") {
  const auto s = seed(5, kLam);
  CHECK(s.lower == poly({1, 0, q(-12, 7), 0, q(4, 7)}));
  CHECK(s.upper == poly({1, 0, -3, 0, 2, 0}));
  CHECK_THROWS_AS(seed(4, kLam), ParameterError);
  for (const Rational l : {q(-7, 5), q(-3, 4), q(3, 10), q(2)}) {
    const auto params = UltraParams::make(l);
    for (int n : {5, 6, 9}) {
      const auto sn = seed(n, params);
      CHECK(eval(sn.upper, q(1)).is_zero());
      CHECK(eval(sn.upper, q(-1)).is_zero());
      CHECK(sn.upper.is_monic());
      CHECK(sn.lower.is_symmetric());
    }
    const auto s5 = seed(5, params);
    CHECK(s5.upper == poly({1, 0, -(2 * l + 7) / (2 * l + 4), 0, Rational(3) / (2 * l + 4), 0}));
  }
}

TEST_CASE("downward steps") {
  const auto d5 = poly({1, 0, -3, 0, 2, 0});
  const auto d4 = poly({1, 0, q(-12, 7), 0, q(4, 7)});
  const auto s5 = downward_step(d5, d4);
  CHECK(s5.ell == q(9, 7));
  CHECK(s5.poly == poly({1, 0, q(-10, 9), 0}));
  const auto s4 = downward_step(d4, s5.poly);
  CHECK(s4.ell == q(38, 63));
  CHECK(s4.poly == poly({1, 0, q(-18, 19)}));
  const auto s3 = downward_step(s5.poly, s4.poly);
  CHECK(s3.poly == Polynomial::x());
  const auto s2 = downward_step(s4.poly, s3.poly);
  CHECK(s2.ell == q(18, 19));
  CHECK(s2.poly == Polynomial::one());
  // non-positive ell
  CHECK_THROWS_AS(downward_step(poly({1, 0, 1}), Polynomial::x()), ConstructionError);
}

TEST_CASE("first upward step") {
  const auto d5 = poly({1, 0, -3, 0, 2, 0});
  const auto d4 = poly({1, 0, q(-12, 7), 0, q(4, 7)});
  const auto up = upward_first(d5, d4, q(2), q(2));
  CHECK(up.ell == q(21, 17));
  CHECK(up.poly == poly({1, 0, q(-72, 17), 0, q(70, 17), 0, q(-12, 17)}));
  CHECK(eval(up.poly, q(2)) == q(2) * eval(d5, q(2)) * (1 - q(1, 2)));

  Rational previous = up.ell;
  for (const Rational s : {q(3), q(4), q(10)}) {
    const auto e = upward_first(d5, d4, q(2), s).ell;
    CHECK(e < previous);
    CHECK(e == q(2) * eval(d5, q(2)) / (s * eval(d4, q(2))));
    previous = e;
  }
  // a = 1 sits inside the zeros of D_4 here
  CHECK_THROWS_AS(upward_first(d5, d4, q(1), q(2), true), InvalidRadiusError);
  // a on the zero 1 of D_5 in the orthogonal range
  const auto s = seed(5, UltraParams::make(1));
  CHECK_THROWS_AS(upward_first(s.upper, s.lower, q(1), q(2)), InvalidRadiusError);
  const auto degenerate = upward_first(s.upper, s.lower, q(1), q(2), true);
  CHECK(degenerate.ell.is_zero());
  // a inside the zeros: D_5(6/5) < 0
  CHECK_THROWS_AS(upward_first(d5, d4, q(6, 5), q(2), true), InvalidRadiusError);
}

TEST_CASE("later upward steps use a constant ell") {
  const auto d6 = poly({1, 0, q(-72, 17), 0, q(70, 17), 0, q(-12, 17)});
  const auto d5 = poly({1, 0, -3, 0, 2, 0});
  const auto d7 = upward_rest(d6, d5, q(2), q(2));
  CHECK(d7.ell == q(1));
  CHECK(d7.poly == poly({1, 0, q(-89, 17), 0, q(121, 17), 0, q(-46, 17), 0}));
  const auto d8 = upward_rest(d7.poly, d6, q(2), q(2));
  CHECK(d8.poly == poly({1, 0, q(-106, 17), 0, q(193, 17), 0, q(-116, 17), 0, q(12, 17)}));
  CHECK(upward_rest(d6, d5, q(10, 9), q(2)).ell == q(25, 81));
}

TEST_CASE("explicit upward ell must sit inside the admissible interval") {
  const auto d6 = poly({1, 0, q(-72, 17), 0, q(70, 17), 0, q(-12, 17)});
  const auto d5 = poly({1, 0, -3, 0, 2, 0});
  const Rational limit = upward_ell_limit(d6, d5, q(2));
  CHECK(limit == q(2) * eval(d6, q(2)) / eval(d5, q(2)));
  CHECK_NOTHROW(upward_with_ell(d6, d5, q(2), limit / 3));
  CHECK_THROWS_AS(upward_with_ell(d6, d5, q(2), limit), ConstructionError);
  CHECK_THROWS_AS(upward_with_ell(d6, d5, q(2), q(0)), ConstructionError);
}

TEST_CASE("full construction reproduces the eleven polynomials at -5/4") {
  const auto seq = build(config(5, 5, q(-5, 4)));
  CHECK(seq.a == q(2));
  REQUIRE(seq.polys.size() == 11);
  const auto expected = example_five_one();
  for (int m = 0; m <= 10; ++m) {
    CAPTURE(m);
    CHECK(seq.polys[m] == expected[m]);
  }
  CHECK(seq.ells.at(5) == q(9, 7));
  CHECK(seq.ells.at(4) == q(38, 63));
  CHECK(seq.ells.at(6) == q(21, 17));
  for (int m = 7; m <= 10; ++m) CHECK(seq.ells.at(m) == q(1));
  CHECK(seq.ells.size() == 9);
}

TEST_CASE("general-lambda closed forms") {
  // a = 4(2+λ)/(3(3+2λ)) must clear the zeros of D_5, which needs λ ≤ -5/4 roughly;
  // D_2 .. D_5 do not depend on a at all.
  for (const Rational l : {q(-7, 5), q(-5, 4), q(-9, 8), q(-3, 4), q(-1, 4), q(3, 10), q(1), q(11, 10),
                           q(5, 2) + q(1, 7)}) {
    CAPTURE(l.str());
    const auto down = build_downward(5, UltraParams::make(l));
    const auto closed = general_lambda(l);
    for (int m = 2; m <= 5; ++m) CHECK(down.polys[m] == closed[m - 2]);
  }
  for (const Rational l : {q(-7, 5), q(-5, 4), q(-13, 10)}) {
    CAPTURE(l.str());
    const auto seq = build(config(5, 5, l, radius::ForceA2{}));
    const auto closed = general_lambda(l);
    CHECK(seq.polys[6] == closed[4]);
    CHECK(seq.polys[7] == closed[5]);
  }
  // a = 14/15 at λ = -1/4 sits inside the zeros of D_5
  CHECK_THROWS_AS(build(config(5, 5, q(-1, 4), radius::ForceA2{})), InvalidRadiusError);
}

TEST_CASE("D_9 = C_9 for n = 10 at -3/4") {
  const auto seq = build(config(10, 2, q(-3, 4)));
  CHECK(seq.polys[9] == ultraspherical(9, UltraParams::make(q(-3, 4))));
  CHECK(seq.polys[10] == (Polynomial({1, 0, -1}) * ultraspherical(8, UltraParams::make(q(-3, 4)))));
}

TEST_CASE("downward positivity and exact termination across a lambda grid") {
  for (const Rational l : {q(-7, 5), q(-6, 5), q(-9, 10), q(-3, 5), q(3, 10), q(1), q(11, 10)}) {
    for (int n : {5, 7, 10}) {
      CAPTURE(l.str());
      CAPTURE(n);
      const auto d = build_downward(n, UltraParams::make(l));
      CHECK(d.polys[0] == Polynomial::one());
      CHECK(d.polys[1] == Polynomial::x());
      for (int m = 2; m <= n; ++m) CHECK(d.ells.at(m).sign() > 0);
    }
  }
}

TEST_CASE("sequence invariants for valid radii") {
  struct Case {
    Rational lambda;
    RadiusRequest radius;
    Rational sigma;
  };
  const std::vector<Case> cases = {
      {q(-5, 4), radius::Auto{}, 2},
      {q(-7, 5), radius::Auto{}, 3},
      {q(-3, 4), radius::Auto{}, q(3, 2)},
      {q(-3, 5), radius::Auto{}, 2},
      {q(3, 10), radius::TheoremEpsilon{q(1, 10), 7}, 2},
      {q(1), radius::TheoremEpsilon{q(1, 10), 7}, 5},
      {q(11, 10), radius::Explicit{q(3, 2)}, 2},
  };
  for (const auto& c : cases) {
    CAPTURE(c.lambda.str());
    auto cfg = config(7, 6, c.lambda, c.radius, c.sigma);
    const auto seq = build(cfg);
    const Rational a = seq.a;
    const Rational fixed = a * (c.sigma - 1) / c.sigma;
    const Rational ell = (c.sigma - 1) * a * a / (c.sigma * c.sigma);
    for (int m = 0; m <= seq.top_degree(); ++m) {
      CHECK(seq.polys[m].degree() == m);
      CHECK(seq.polys[m].is_monic());
      CHECK(seq.polys[m].is_symmetric());
    }
    for (const auto& [m, e] : seq.ells) CHECK(e.sign() > 0);
    for (int m = cfg.n + 1; m <= seq.top_degree(); ++m) {
      CHECK(eval(seq.polys[m], a) / eval(seq.polys[m - 1], a) == fixed);
      CHECK(seq.ells.at(m) < a * eval(seq.polys[m - 1], a) / eval(seq.polys[m - 2], a));
      if (m >= cfg.n + 2) CHECK(seq.ells.at(m) == ell);
    }
  }
}

TEST_CASE("explicit upward ells") {
  auto cfg = config(5, 3, q(-5, 4));
  cfg.upward_ells = {q(1), q(1, 2), q(1, 2)};
  const auto seq = build(cfg);
  CHECK(seq.ells.at(6) == q(1));
  CHECK(seq.ells.at(8) == q(1, 2));
  cfg.upward_ells = {q(100), q(1), q(1)};
  CHECK_THROWS_AS(build(cfg), ConstructionError);
}

TEST_CASE("unit radius in the orthogonal range is degenerate") {
  auto cfg = config(5, 3, q(1));
  CHECK(cfg.radius.value == q(1));
  try {
    build(cfg);
    FAIL("expected InvalidRadiusError");
  } catch (const InvalidRadiusError& e) {
    CHECK(e.degree() == 6);
  }
  cfg.allow_degenerate = true;
  const auto seq = build(cfg);
  CHECK(seq.ells.at(6).is_zero());
}

TEST_CASE("build is deterministic") {
  const auto a = build(config(6, 4, q(-9, 8)));
  const auto b = build(config(6, 4, q(-9, 8)));
  CHECK(a.polys == b.polys);
  CHECK(a.ells == b.ells);
}

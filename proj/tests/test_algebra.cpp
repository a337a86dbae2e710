#include <random>

#include "doctest.h"
#include "ovdkit/ratfun.hpp"

using namespace ovdkit;

namespace {

std::vector<std::string> V2{"x1", "x2"};
std::vector<std::string> V3{"x1", "x2", "x3"};

RatFun rf(const std::string& s, const std::vector<std::string>& vars = V3) {
  return parse_ratfun(s, vars);
}

// Small random rational function with a denominator bounded away from zero
// on [-1,1]^n (constant 3 dominates the low-degree tail).
RatFun random_ratfun(std::mt19937_64& rng, int nvars, bool with_den = true) {
  auto rnd_poly = [&](int maxterms, bool nonzero_const) {
    Poly p(nvars);
    int nt = 1 + (int)(rng() % maxterms);
    for (int t = 0; t < nt; ++t) {
      Poly::Exponents e(nvars, 0);
      for (int v = 0; v < nvars; ++v) e[v] = (int)(rng() % 3);
      long re = (long)(rng() % 7) - 3;
      long im = (long)(rng() % 7) - 3;
      p.add_term(e, GaussRat(BigRat(re), BigRat(im)));
    }
    if (nonzero_const) p.add_term(Poly::Exponents(nvars, 0), GaussRat(3));
    return p;
  };
  Poly num = rnd_poly(4, false);
  if (!with_den || rng() % 2 == 0) return RatFun(num);
  return RatFun(num, rnd_poly(2, true));
}

}  // namespace

TEST_CASE("gauss rational arithmetic") {
  GaussRat i = GaussRat::I();
  CHECK(i * i == GaussRat(-1));
  GaussRat z(BigRat(1, 2), BigRat(1, 3));
  CHECK(z / z == GaussRat(1));
  CHECK((z * z.conj()).im == 0);
}

TEST_CASE("ratfun add/mul canonical examples") {
  CHECK(rf("x1") + rf("x2") == rf("x1 + x2"));
  // (x/y)*(y/x) = 1
  RatFun x = RatFun::variable(2, 1), y = RatFun::variable(2, 2);
  CHECK((x / y) * (y / x) == RatFun::one(2));
  // 1/(x-1) + 1/(x+1) = 2x/(x^2-1), cross-multiplied by hand
  RatFun lhs = rf("1/(x1 - 1)") + rf("1/(x1 + 1)");
  CHECK(lhs == rf("2 x1/(x1^2 - 1)"));
}

TEST_CASE("derivative") {
  CHECK(rf("x1^2 x2").derivative(1) == rf("2 x1 x2"));
  CHECK(rf("5").derivative(1).is_zero());
  // quotient rule by hand: d/dx (1/x) = -1/x^2
  CHECK(rf("1/(x1)").derivative(1) == rf("-1/(x1^2)"));
  // mixed partials commute on random inputs
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    RatFun f = random_ratfun(rng, 3);
    CHECK(f.derivative(1).derivative(2) == f.derivative(2).derivative(1));
    CHECK(f.derivative(2).derivative(3) == f.derivative(3).derivative(2));
  }
}

TEST_CASE("conjugate") {
  CHECK(rf("(1+i) x1").conj() == rf("(1-i) x1"));
  RatFun real = rf("x1^2 - 3 x2");
  CHECK(real.conj() == real);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    RatFun f = random_ratfun(rng, 3);
    RatFun g = random_ratfun(rng, 3);
    CHECK(f.conj().conj() == f);
    CHECK((f * g).conj() == f.conj() * g.conj());  // ring automorphism
    CHECK((f + g).conj() == f.conj() + g.conj());
  }
}

TEST_CASE("evaluate") {
  double x2[1] = {2.0};
  auto v = parse_ratfun("x1^2 + 1", {"x1"}).evaluate(std::span<const double>(x2, 1));
  CHECK(v.real() == doctest::Approx(5.0));
  CHECK(v.imag() == doctest::Approx(0.0));

  double x0[1] = {0.0};
  CHECK_THROWS_AS(parse_ratfun("1/(x1)", {"x1"}).evaluate(std::span<const double>(x0, 1)),
                  PoleError);

  double x3[1] = {3.0};
  auto w = parse_ratfun("(1/2 + 1/2 i) x1", {"x1"}).evaluate(std::span<const double>(x3, 1));
  CHECK(w.real() == doctest::Approx(1.5));
  CHECK(w.imag() == doctest::Approx(1.5));
}

TEST_CASE("evaluate is a homomorphism away from poles") {
  std::mt19937_64 rng(13);
  auto rnd01 = [&] { return (double)(rng() >> 11) / 9007199254740992.0; };
  for (int t = 0; t < 50; ++t) {
    RatFun f = random_ratfun(rng, 2);
    RatFun g = random_ratfun(rng, 2);
    double pt[2] = {2 * rnd01() - 1, 2 * rnd01() - 1};
    std::span<const double> x(pt, 2);
    auto fg = (f * g).evaluate(x);
    auto fv = f.evaluate(x) * g.evaluate(x);
    double scale = std::abs(fv) + 1.0;
    CHECK(std::abs(fg - fv) <= 1e-12 * scale);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 25; ++t) {
    Poly a = random_ratfun(rng, 2, false).num();
    Poly b = random_ratfun(rng, 2, false).num();
    Poly c = random_ratfun(rng, 2, false).num();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("canonical form matches cross-multiplication equality") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    RatFun f = random_ratfun(rng, 2);
    RatFun g = random_ratfun(rng, 2);
    bool canon_eq = f == g;
    bool cross_eq = f.num() * g.den() == g.num() * f.den();
    CHECK(canon_eq == cross_eq);
    // scaling numerator and denominator by a common factor is invisible
    Poly s = random_ratfun(rng, 2, false).num();
    if (!s.is_zero()) CHECK(RatFun(f.num() * s, f.den() * s) == f);
  }
}

TEST_CASE("parser: grammar examples") {
  Poly p = parse_poly("3/2 x1^2 x2 - i x3", V3);
  Poly expect(3);
  expect.add_term({2, 1, 0}, GaussRat(BigRat(3, 2)));
  expect.add_term({0, 0, 1}, GaussRat(BigRat(0), BigRat(-1)));
  CHECK(p == expect);

  RatFun f = rf("(1+2i)/(x1 - 1)");
  CHECK(f.den() == parse_poly("x1 - 1", V3));
  CHECK(f.num() == parse_poly("(1+2i)", V3));

  CHECK_THROWS_AS(parse_poly("x1^", V3), SyntaxError);
  try {
    parse_poly("x1^", V3);
  } catch (const SyntaxError& e) {
    CHECK(e.offset == 3);
  }
  CHECK_THROWS_AS(parse_poly("z9", V3), UnknownVariable);
  CHECK_THROWS_AS(parse_poly("x1 +", V3), SyntaxError);
}

TEST_CASE("parser: optional '*', whitespace, signs") {
  CHECK(parse_poly("x1*x2", V2) == parse_poly("x1 x2", V2));
  CHECK(parse_poly("-x1", V2) == -parse_poly("x1", V2));
  CHECK(parse_poly("2/3x1", V2) == parse_poly("2/3 x1", V2));
  CHECK(parse_poly("1+2i", V2) == parse_poly("(1+2i)", V2));
  // greedy constant reading: "- 1 + 2i" is one complex coefficient
  CHECK(parse_poly("x1 - 1 + 2i", V2) == parse_poly("x1 - (1+2i)", V2));
  CHECK(rf("x1 + 1/(x2)", V2) ==
        RatFun(parse_poly("x1 + 1", V2), parse_poly("x2", V2)));
}

TEST_CASE("print/parse round trip on canonical forms") {
  std::mt19937_64 rng(29);
  std::vector<std::string> vars = V3;
  for (int t = 0; t < 60; ++t) {
    RatFun f = random_ratfun(rng, 3);
    std::string s = to_string(f, vars);
    CHECK(parse_ratfun(s, vars) == f);
  }
  CHECK(to_string(RatFun::zero(3), V3) == "0");
}

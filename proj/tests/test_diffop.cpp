#include <random>

#include "doctest.h"
#include "ovdkit/diffop.hpp"

using namespace ovdkit;

namespace {

std::vector<std::string> V1{"x1"};
std::vector<std::string> V3{"x1", "x2", "x3"};

RatFun rf3(const std::string& s) { return parse_ratfun(s, V3); }

DiffOp random_op(std::mt19937_64& rng, int n) {
  std::vector<RatFun> a;
  auto rnd_poly = [&] {
    Poly p(n);
    int nt = 1 + (int)(rng() % 3);
    for (int t = 0; t < nt; ++t) {
      Poly::Exponents e(n, 0);
      for (int v = 0; v < n; ++v) e[v] = (int)(rng() % 2);
      p.add_term(e, GaussRat(BigRat((long)(rng() % 5) - 2),
                             BigRat((long)(rng() % 5) - 2)));
    }
    return RatFun(p);
  };
  for (int v = 0; v < n; ++v) a.push_back(rnd_poly());
  return DiffOp(std::move(a), rnd_poly());
}

// The Lewy operator p = 1/2 d1 + i/2 d2 + (x2 - i x1) d3.
DiffOp lewy_op() {
  std::vector<RatFun> a{rf3("1/2"), rf3("1/2 i"), rf3("x2 - i x1")};
  return DiffOp(std::move(a), RatFun::zero(3));
}

}  // namespace

TEST_CASE("apply") {
  DiffOp d1 = DiffOp::partial(3, 1);
  CHECK(apply(d1, rf3("x1^2")) == rf3("2 x1"));

  // (x2 d1 + 1)(x1) = x2 + x1
  DiffOp op(std::vector<RatFun>{rf3("x2"), rf3("0"), rf3("0")}, rf3("1"));
  CHECK(apply(op, rf3("x1")) == rf3("x1 + x2"));

  // Lewy operator applied to x3, by direct substitution
  CHECK(apply(lewy_op(), rf3("x3")) == rf3("x2 - i x1"));
}

TEST_CASE("principal and bar") {
  DiffOp p(std::vector<RatFun>{rf3("1"), rf3("0"), rf3("0")}, rf3("1"));
  CHECK(principal(p) == DiffOp::partial(3, 1));
  DiffOp ip(std::vector<RatFun>{rf3("i"), rf3("0"), rf3("0")}, rf3("0"));
  DiffOp mip(std::vector<RatFun>{rf3("-i"), rf3("0"), rf3("0")}, rf3("0"));
  CHECK(bar(ip) == mip);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 12; ++t) {
    DiffOp q = random_op(rng, 3);
    CHECK(bar(principal(q)) == principal(bar(q)));
  }
}

TEST_CASE("bracket") {
  DiffOp d1 = DiffOp::partial(1, 1);
  std::vector<std::string> v1{"x1"};
  DiffOp x1d1(std::vector<RatFun>{parse_ratfun("x1", v1)}, RatFun::zero(1));
  CHECK(bracket(d1, x1d1) == d1);
  CHECK(bracket(DiffOp::partial(3, 1), DiffOp::partial(3, 2)).is_zero());

  // Lewy: [p, bar p] = 2i d3
  DiffOp p = lewy_op();
  DiffOp expect(std::vector<RatFun>{rf3("0"), rf3("0"), rf3("2i")}, rf3("0"));
  CHECK(bracket(p, bar(p)) == expect);
}

TEST_CASE("bracket antisymmetry and Jacobi identity") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 8; ++t) {
    DiffOp p = random_op(rng, 2);
    DiffOp q = random_op(rng, 2);
    DiffOp r = random_op(rng, 2);
    CHECK(bracket(p, q) == -bracket(q, p));
    DiffOp jac = bracket(p, bracket(q, r)) + bracket(q, bracket(r, p)) +
                 bracket(r, bracket(p, q));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("formal adjoint") {
  CHECK(formal_adjoint(DiffOp::partial(3, 1)) == -DiffOp::partial(3, 1));

  // t(x1 d1) = -x1 d1 - 1, integrate by parts -d1(x1 f)
  std::vector<std::string> v1{"x1"};
  DiffOp x1d1(std::vector<RatFun>{parse_ratfun("x1", v1)}, RatFun::zero(1));
  DiffOp expect(std::vector<RatFun>{parse_ratfun("-x1", v1)},
                parse_ratfun("-1", v1));
  CHECK(formal_adjoint(x1d1) == expect);

  std::mt19937_64 rng(15);
  for (int t = 0; t < 12; ++t) {
    DiffOp p = random_op(rng, 3);
    CHECK(formal_adjoint(formal_adjoint(p)) == p);
  }
}

TEST_CASE("divergence certificate for the formal adjoint") {
  // P(g) conj(f) - g conj(tP(f)) == sum_v d_v(a^v g conj(f)) exactly
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    DiffOp p = random_op(rng, 2);
    RatFun f = RatFun(random_op(rng, 2).a0.num());
    RatFun g = RatFun(random_op(rng, 2).a0.num());
    RatFun lhs = apply(p, g) * f.conj() - g * apply(formal_adjoint(p), f).conj();
    RatFun rhs = RatFun::zero(2);
    for (int v = 1; v <= 2; ++v)
      rhs += (p.a[v - 1] * g * f.conj()).derivative(v);
    CHECK(lhs == rhs);
  }
}

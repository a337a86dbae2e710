#include <random>

#include "doctest.h"
#include "ovdkit/qform.hpp"

using namespace ovdkit;

namespace {

HermMatrix random_hermitian(std::mt19937_64& rng, int r) {
  auto rnd = [&] { return (double)(rng() >> 11) / 9007199254740992.0 * 2 - 1; };
  HermMatrix h(r, std::vector<Cplx>(r, 0.0));
  for (int i = 0; i < r; ++i) {
    h[i][i] = rnd();
    for (int j = i + 1; j < r; ++j) {
      h[i][j] = Cplx(rnd(), rnd());
      h[j][i] = std::conj(h[i][j]);
    }
  }
  return h;
}

}  // namespace

TEST_CASE("eigen_hermitian basic spectra") {
  HermMatrix d{{3, 0, 0}, {0, 1, 0}, {0, 0, 2}};
  auto e = eigen_hermitian(d);
  CHECK(e[0] == doctest::Approx(1));
  CHECK(e[1] == doctest::Approx(2));
  CHECK(e[2] == doctest::Approx(3));

  HermMatrix s{{0, 1}, {1, 0}};
  e = eigen_hermitian(s);
  CHECK(e[0] == doctest::Approx(-1));
  CHECK(e[1] == doctest::Approx(1));

  HermMatrix c{{0, Cplx(0, 1)}, {Cplx(0, -1), 0}};
  e = eigen_hermitian(c);
  CHECK(e[0] == doctest::Approx(-1));
  CHECK(e[1] == doctest::Approx(1));

  HermMatrix bad{{0, 1}, {2, 0}};
  CHECK_THROWS_AS(eigen_hermitian(bad), NotHermitian);
}

TEST_CASE("eigen_hermitian invariants on random matrices") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    int r = 2 + (int)(rng() % 5);
    HermMatrix h = random_hermitian(rng, r);
    auto e = eigen_hermitian(h);
    double tr = 0, fr = 0;
    for (int i = 0; i < r; ++i) {
      tr += h[i][i].real();
      for (int j = 0; j < r; ++j) fr += std::norm(h[i][j]);
    }
    double tre = 0, fre = 0;
    for (double l : e) {
      tre += l;
      fre += l * l;
    }
    CHECK(tre == doctest::Approx(tr).epsilon(1e-10));
    CHECK(fre == doctest::Approx(fr).epsilon(1e-10));
    CHECK(std::is_sorted(e.begin(), e.end()));
  }
}

TEST_CASE("induced_matrix") {
  HermMatrix d{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
  // q=2: eigenvalues are pairwise sums {3,4,5}
  auto e = eigen_hermitian(induced_matrix(d, 2));
  CHECK(e[0] == doctest::Approx(3));
  CHECK(e[1] == doctest::Approx(4));
  CHECK(e[2] == doctest::Approx(5));

  std::mt19937_64 rng(5);
  HermMatrix h = random_hermitian(rng, 4);
  // q=1 returns the matrix itself
  HermMatrix h1 = induced_matrix(h, 1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(h1[i][j] - h[i][j]) < 1e-14);
  // q=r: single entry = trace
  HermMatrix hr = induced_matrix(h, 4);
  double tr = 0;
  for (int i = 0; i < 4; ++i) tr += h[i][i].real();
  CHECK(hr[0][0].real() == doctest::Approx(tr));

  // trace identity: tr(induced q) = binom(r-1,q-1) tr(H)
  HermMatrix g = random_hermitian(rng, 5);
  double trg = 0;
  for (int i = 0; i < 5; ++i) trg += g[i][i].real();
  HermMatrix g2 = induced_matrix(g, 2);
  double trg2 = 0;
  for (std::size_t i = 0; i < g2.size(); ++i) trg2 += g2[i][i].real();
  CHECK(trg2 == doctest::Approx(4 * trg).epsilon(1e-9));
}

TEST_CASE("eigenvalue law") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    int r = 1 + (int)(rng() % 5);
    HermMatrix h = random_hermitian(rng, r);
    for (int q = 1; q <= r; ++q) CHECK(check_eigenvalue_law(h, q, 1e-9).pass);
  }
  HermMatrix z(3, std::vector<Cplx>(3, 0.0));
  Lemma31Report zr = check_eigenvalue_law(z, 2, 1e-12);
  CHECK(zr.pass);
  for (double l : zr.induced_eigs) CHECK(l == 0.0);

  HermMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  Lemma31Report ir = check_eigenvalue_law(id, 2, 1e-12);
  CHECK(ir.pass);
  for (double l : ir.induced_eigs) CHECK(l == doctest::Approx(2.0));
}

TEST_CASE("qform_matrix examples") {
  // dolbeault with phi = |z|^2 gives the identity at every point
  OperatorSystem db = make_dolbeault(2);
  RatFun phi = parse_ratfun("x1^2 + y1^2 + x2^2 + y2^2", db.varnames);
  std::vector<double> x{0.3, -0.2, 0.1, 0.5};
  HermitianSample hs = qform_matrix(db, phi, x);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      CHECK(std::abs(hs.h[j][k] - (j == k ? Cplx(1) : Cplx(0))) < 1e-12);

  // constant weight: zero form
  HermitianSample h0 = qform_matrix(db, RatFun::constant(4, GaussRat(7)), x);
  for (auto& row : h0.h)
    for (auto& v : row) CHECK(std::abs(v) < 1e-14);

  // de Rham with phi = sum x_j^2: twice the identity
  OperatorSystem dr = make_derham(3);
  RatFun phir = parse_ratfun("x1^2 + x2^2 + x3^2", dr.varnames);
  std::vector<double> y{0.1, 0.2, 0.3};
  HermitianSample hr = qform_matrix(dr, phir, y);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      CHECK(std::abs(hr.h[j][k] - (j == k ? Cplx(2) : Cplx(0))) < 1e-12);

  CHECK_THROWS_AS(qform_matrix(dr, parse_ratfun("i x1", dr.varnames), y),
                  InputError);
}

TEST_CASE("use_e and use_d agree after Hermitization") {
  OperatorSystem db = make_dolbeault(2);
  RatFun phi = parse_ratfun("x1^2 + y1^2 + 2 x2^2 + y2^2 + x1 y2", db.varnames);
  std::mt19937_64 rng(11);
  auto rnd = [&] { return (double)(rng() >> 11) / 9007199254740992.0 * 2 - 1; };
  for (int t = 0; t < 25; ++t) {
    std::vector<double> x{rnd(), rnd(), rnd(), rnd()};
    HermitianSample he = qform_matrix(db, phi, x, QFormSource::UseE);
    HermitianSample hd = qform_matrix(db, phi, x, QFormSource::UseD);
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        CHECK(std::abs(he.h[j][k] - hd.h[j][k]) < 1e-9);
  }

  // gauge system with solved d,e tables
  OperatorSystem g = random_involutive(4, 3, 2, 1);
  ensure_a3(g);
  RatFun phig = parse_ratfun("x1^2 + x2^2 + x3^2", g.varnames);
  for (int t = 0; t < 25; ++t) {
    std::vector<double> x{rnd(), rnd(), rnd()};
    HermitianSample he = qform_matrix(g, phig, x, QFormSource::UseE);
    HermitianSample hd = qform_matrix(g, phig, x, QFormSource::UseD);
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        CHECK(std::abs(he.h[j][k] - hd.h[j][k]) < 1e-9);
  }
}

TEST_CASE("pconvexity_scan") {
  OperatorSystem db = make_dolbeault(1);
  RatFun phi = parse_ratfun("x1^2 + y1^2", db.varnames);
  ScanOptions opt;
  opt.per_axis = 6;
  opt.critical_point = std::vector<double>{0.0, 0.0};
  QFormScan scan = pconvexity_scan(db, phi, opt);
  CHECK(scan.min_eigenvalue == doctest::Approx(1.0));
  CHECK(scan.non_psd_points == 0);
  CHECK(scan.rank_ok);
  CHECK(scan.pconvex);
  CHECK(scan.hessian_checked);
  CHECK(scan.hessian_diff < 1e-9);

  // constant weight: zero form, not P-convex
  QFormScan flat = pconvexity_scan(db, RatFun::constant(2, GaussRat(1)), opt);
  CHECK(flat.min_eigenvalue == doctest::Approx(0.0));
  CHECK_FALSE(flat.pconvex);

  // indefinite weight on the de Rham pair: eigenvalues {-2, 2} everywhere
  OperatorSystem dr = make_derham(2);
  ScanOptions opt2;
  opt2.per_axis = 5;
  QFormScan ind =
      pconvexity_scan(dr, parse_ratfun("x1^2 - x2^2", dr.varnames), opt2);
  CHECK(ind.min_eigenvalue == doctest::Approx(-2.0));
  CHECK(ind.non_psd_points == 25);
  CHECK_FALSE(ind.pconvex);
}

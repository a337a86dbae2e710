#include "ovdkit/ratfun.hpp"

namespace ovdkit {

namespace {

// num/den already coprime: only the leading-coefficient normalization of the
// denominator is applied.
Poly unit_normalize(Poly& num, Poly den) {
  GaussRat lc = den.leading_coeff();
  if (!lc.is_one()) {
    GaussRat inv = GaussRat(1) / lc;
    num = inv * num;
    den = inv * den;
  }
  return den;
}

}  // namespace

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(num_.nvars()) {
  den_ = Poly::constant(num_.nvars(), GaussRat(1));
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars())
    throw DimensionMismatch("ratfun num/den nvars mismatch");
  if (den_.is_zero()) throw DivisionByZero("ratfun with zero denominator");
  canonicalize();
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.nvars(), GaussRat(1));
    return;
  }
  if (!den_.is_one()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = poly_div_exact(num_, g);
      den_ = poly_div_exact(den_, g);
    }
  }
  den_ = unit_normalize(num_, std::move(den_));
}

RatFun RatFun::conj() const {
  RatFun r;
  r.num_ = num_.conj();
  r.den_ = unit_normalize(r.num_, den_.conj());
  return r;
}

RatFun RatFun::derivative(int axis) const {
  if (den_.is_one()) return RatFun(num_.derivative(axis));
  // (n/d)' = n'/d - (n/d) * (d'/d); the division operators cross-cancel so
  // every gcd sees the small factor d rather than d^2.
  RatFun t1 = RatFun(num_.derivative(axis)) / RatFun(den_);
  RatFun t2 = *this * (RatFun(den_.derivative(axis)) / RatFun(den_));
  return t1 - t2;
}

std::complex<double> RatFun::evaluate(std::span<const double> x) const {
  std::complex<double> d = den_.evaluate(x);
  double scale = 0.0;
  for (const auto& [e, c] : den_.terms()) scale += abs_approx(c);
  if (std::abs(d) < 1e-14 * (1.0 + scale))
    throw PoleError("rational function evaluated at (near-)pole");
  return num_.evaluate(x) / d;
}

namespace {

Poly div_by(const Poly& a, const Poly& g) {
  return g.is_one() ? a : poly_div_exact(a, g);
}

}  // namespace

// Addition in lowest terms via gcd of the denominators only: with
// g = gcd(d1,d2), the reduced numerator's common factor with the new
// denominator divides g.
RatFun operator+(const RatFun& a, const RatFun& b) {
  RatFun r;
  if (a.den_ == b.den_) {
    Poly num = a.num_ + b.num_;
    if (num.is_zero()) return RatFun::zero(a.nvars());
    Poly g = poly_gcd(num, a.den_);
    r.num_ = div_by(num, g);
    r.den_ = unit_normalize(r.num_, div_by(a.den_, g));
    return r;
  }
  Poly g = poly_gcd(a.den_, b.den_);
  Poly d1r = div_by(a.den_, g);
  Poly d2r = div_by(b.den_, g);
  Poly num = a.num_ * d2r + b.num_ * d1r;
  if (num.is_zero()) return RatFun::zero(a.nvars());
  Poly h = g.is_one() ? g : poly_gcd(num, g);
  r.num_ = div_by(num, h);
  r.den_ = unit_normalize(r.num_, div_by(a.den_, h) * d2r);
  return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator-(const RatFun& a) {
  RatFun r = a;
  r.num_ = -r.num_;
  return r;
}

// Multiplication with cross-cancellation; the result is in lowest terms.
RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero())
    return RatFun::zero(std::max(a.nvars(), b.nvars()));
  RatFun r;
  Poly g1 = poly_gcd(a.num_, b.den_);
  Poly g2 = poly_gcd(b.num_, a.den_);
  r.num_ = div_by(a.num_, g1) * div_by(b.num_, g2);
  r.den_ = unit_normalize(r.num_, div_by(a.den_, g2) * div_by(b.den_, g1));
  return r;
}

RatFun operator*(const GaussRat& c, const RatFun& a) {
  if (c.is_zero()) return RatFun::zero(a.nvars());
  RatFun r = a;
  r.num_ = c * r.num_;
  return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DivisionByZero("ratfun division by zero");
  if (a.is_zero()) return RatFun::zero(a.nvars());
  RatFun r;
  Poly g1 = poly_gcd(a.num_, b.num_);
  Poly g2 = poly_gcd(a.den_, b.den_);
  r.num_ = div_by(a.num_, g1) * div_by(b.den_, g2);
  r.den_ = unit_normalize(r.num_, div_by(a.den_, g2) * div_by(b.num_, g1));
  return r;
}

std::vector<std::string> default_varnames(int n) {
  std::vector<std::string> v;
  v.reserve(n);
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

}  // namespace ovdkit

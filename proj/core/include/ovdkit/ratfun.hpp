#pragma once

#include "ovdkit/poly.hpp"

namespace ovdkit {

// Element of the fraction field of Q(i)[x1..xn], kept canonical:
// gcd(num,den) is a unit and den's lex-leading coefficient is 1.
class RatFun {
 public:
  RatFun() : num_(0), den_(Poly::constant(0, GaussRat(1))) {}
  explicit RatFun(Poly num);
  RatFun(Poly num, Poly den);

  static RatFun constant(int nvars, GaussRat c) {
    return RatFun(Poly::constant(nvars, std::move(c)));
  }
  static RatFun variable(int nvars, int axis) {
    return RatFun(Poly::variable(nvars, axis));
  }
  static RatFun zero(int nvars) { return RatFun(Poly(nvars)); }
  static RatFun one(int nvars) {
    return RatFun(Poly::constant(nvars, GaussRat(1)));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFun conj() const;
  RatFun derivative(int axis) const;
  std::complex<double> evaluate(std::span<const double> x) const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const GaussRat& c, const RatFun& a);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

 private:
  void canonicalize();
  Poly num_, den_;
};

// Parses the polynomial / rational-function grammar. `vars` supplies the
// declared variable names; "i" is the imaginary unit and not a valid name.
RatFun parse_ratfun(const std::string& text, const std::vector<std::string>& vars);
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars);

std::string to_string(const Poly& p, const std::vector<std::string>& vars);
std::string to_string(const RatFun& f, const std::vector<std::string>& vars);

// Default variable names x1..xn.
std::vector<std::string> default_varnames(int n);

}  // namespace ovdkit

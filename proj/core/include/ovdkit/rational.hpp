#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

#include "ovdkit/errors.hpp"

namespace ovdkit {

using BigRat = boost::multiprecision::cpp_rational;

// Complex scalar with exact rational real and imaginary parts. cpp_rational
// keeps both parts in lowest terms with positive denominators.
struct GaussRat {
  BigRat re{0};
  BigRat im{0};

  GaussRat() = default;
  GaussRat(long r) : re(r) {}
  GaussRat(BigRat r) : re(std::move(r)) {}
  GaussRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
  static GaussRat I() { return GaussRat(BigRat(0), BigRat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return GaussRat(re, -im); }

  std::complex<double> to_complex() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re + b.re, a.im + b.im);
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re - b.re, a.im - b.im);
  }
  friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero GaussRat");
    BigRat n = b.re * b.re + b.im * b.im;
    return GaussRat((a.re * b.re + a.im * b.im) / n,
                    (a.im * b.re - a.re * b.im) / n);
  }
  GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
  GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
  GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

// |a+bi| in double precision, used for pole thresholds and reports.
inline double abs_approx(const GaussRat& c) {
  return std::abs(c.to_complex());
}

std::string to_string(const BigRat& r);

}  // namespace ovdkit

#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "ovdkit/rational.hpp"

namespace ovdkit {

// Per-variable degree cap for values exposed through the public API.
inline constexpr int kMaxVarDegree = 32;
// Looser guard for transient values inside gcd/pseudo-remainder internals.
inline constexpr int kInternalVarDegree = 256;

// Multivariate polynomial over GaussRat. Exponent vectors are dense
// (length == nvars); the term map never stores zero coefficients. Map keys
// compare lexicographically with x1 most significant, so rbegin() is the
// lex-leading term.
class Poly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, GaussRat>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, GaussRat c);
  static Poly variable(int nvars, int axis);  // axis in 1..nvars
  static Poly monomial(int nvars, Exponents e, GaussRat c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  GaussRat constant_term() const;
  GaussRat leading_coeff() const;  // coefficient of the lex-largest monomial
  int degree(int axis) const;      // max exponent of x_axis, -1 for zero poly
  int total_degree() const;        // -1 for zero poly

  void add_term(const Exponents& e, const GaussRat& c);

  Poly conj() const;
  Poly derivative(int axis) const;
  std::complex<double> evaluate(std::span<const double> x) const;
  GaussRat evaluate_exact(std::span<const GaussRat> x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend Poly operator*(const GaussRat& c, const Poly& a);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Multiplication with an explicit per-variable degree cap; the public
  // operator* uses kMaxVarDegree.
  static Poly mul_capped(const Poly& a, const Poly& b, int cap);

 private:
  int nvars_;
  TermMap terms_;
};

// gcd over the coefficient field Q(i); result is normalized so its
// lex-leading coefficient is 1. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact division; throws DivisionByZero / internal error when not divisible.
Poly poly_div_exact(const Poly& a, const Poly& b);

}  // namespace ovdkit

#include "ovdkit/poly.hpp"

#include <sstream>

namespace ovdkit {

std::string to_string(const BigRat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Poly Poly::constant(int nvars, GaussRat c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
  return p;
}

Poly Poly::variable(int nvars, int axis) {
  if (axis < 1 || axis > nvars)
    throw DimensionMismatch("variable axis out of range");
  Poly p(nvars);
  Exponents e(nvars, 0);
  e[axis - 1] = 1;
  p.terms_.emplace(std::move(e), GaussRat(1));
  return p;
}

Poly Poly::monomial(int nvars, Exponents e, GaussRat c) {
  if ((int)e.size() != nvars)
    throw DimensionMismatch("monomial exponent length mismatch");
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

bool Poly::is_one() const {
  return is_constant() && !terms_.empty() && terms_.begin()->second.is_one();
}

GaussRat Poly::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? GaussRat() : it->second;
}

GaussRat Poly::leading_coeff() const {
  if (terms_.empty()) return GaussRat();
  return terms_.rbegin()->second;
}

int Poly::degree(int axis) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[axis - 1]);
  return d;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_term(const Exponents& e, const GaussRat& c) {
  if (c.is_zero()) return;
  if ((int)e.size() != nvars_)
    throw DimensionMismatch("exponent length mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::conj() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
  return r;
}

Poly Poly::derivative(int axis) const {
  if (axis < 1 || axis > nvars_)
    throw DimensionMismatch("derivative axis out of range");
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[axis - 1] == 0) continue;
    Exponents f = e;
    GaussRat k = GaussRat(f[axis - 1]) * c;
    f[axis - 1]--;
    r.add_term(f, k);
  }
  return r;
}

std::complex<double> Poly::evaluate(std::span<const double> x) const {
  if ((int)x.size() != nvars_)
    throw DimensionMismatch("evaluation point dimension mismatch");
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = 1.0;
    for (int i = 0; i < nvars_; ++i) {
      double b = x[i];
      for (int k = 0; k < e[i]; ++k) m *= b;
    }
    acc += c.to_complex() * m;
  }
  return acc;
}

GaussRat Poly::evaluate_exact(std::span<const GaussRat> x) const {
  if ((int)x.size() != nvars_)
    throw DimensionMismatch("evaluation point dimension mismatch");
  GaussRat acc;
  for (const auto& [e, c] : terms_) {
    GaussRat m(1);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    acc += c * m;
  }
  return acc;
}

static void check_same_nvars(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars())
    throw DimensionMismatch("polynomial nvars mismatch");
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_nvars(a, b);
  Poly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same_nvars(a, b);
  Poly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

Poly operator-(const Poly& a) {
  Poly r(a.nvars_);
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::mul_capped(const Poly& a, const Poly& b, int cap) {
  check_same_nvars(a, b);
  Poly r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > cap)
          throw DegreeOverflow("per-variable degree cap exceeded in product");
      }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  return Poly::mul_capped(a, b, kMaxVarDegree);
}

Poly operator*(const GaussRat& c, const Poly& a) {
  Poly r(a.nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : a.terms_) r.terms_.emplace(e, c * k);
  return r;
}

// ---------------------------------------------------------------------------
// gcd via recursive content / primitive-part reduction with primitive
// pseudo-remainder sequences. Coefficient field is Q(i), so the recursion
// bottoms out at constants whose gcd is a unit.

namespace {

Poly mul_internal(const Poly& a, const Poly& b) {
  return Poly::mul_capped(a, b, kInternalVarDegree);
}

// A as a univariate polynomial in x_v: coefficient polys indexed by degree,
// with the x_v exponent zeroed out inside each coefficient.
std::vector<Poly> coeffs_in_var(const Poly& a, int v) {
  std::vector<Poly> out(std::max(0, a.degree(v)) + 1, Poly(a.nvars()));
  for (const auto& [e, c] : a.terms()) {
    Poly::Exponents f = e;
    int d = f[v - 1];
    f[v - 1] = 0;
    out[d].add_term(f, c);
  }
  return out;
}

Poly assemble_in_var(const std::vector<Poly>& coeffs, int v, int nvars) {
  Poly r(nvars);
  for (int d = 0; d < (int)coeffs.size(); ++d) {
    for (const auto& [e, c] : coeffs[d].terms()) {
      Poly::Exponents f = e;
      f[v - 1] += d;
      r.add_term(f, c);
    }
  }
  return r;
}

Poly shift_var(const Poly& a, int v, int d) {
  Poly r(a.nvars());
  for (const auto& [e, c] : a.terms()) {
    Poly::Exponents f = e;
    f[v - 1] += d;
    r.add_term(f, c);
  }
  return r;
}

int top_variable(const Poly& a, const Poly& b) {
  for (int v = a.nvars(); v >= 1; --v)
    if (a.degree(v) > 0 || b.degree(v) > 0) return v;
  return 0;
}

using BigInt = boost::multiprecision::cpp_int;

// Rational content: gcd of all coefficient numerators over lcm of all
// denominators (real and imaginary streams together). Dividing by it keeps
// the scalars in a pseudo-remainder sequence from exploding.
BigRat rat_content(const Poly& a) {
  BigInt g = 0, l = 1;
  auto feed = [&](const BigRat& q) {
    if (q == 0) return;
    g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(q));
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
  };
  for (const auto& [e, c] : a.terms()) {
    feed(c.re);
    feed(c.im);
  }
  if (g == 0) return BigRat(1);
  return BigRat(g, l);
}

Poly strip_rat_content(const Poly& a) {
  if (a.is_zero()) return a;
  BigRat c = rat_content(a);
  if (c == 1) return a;
  return GaussRat(BigRat(1) / c) * a;
}

Poly normalize_leading(const Poly& a) {
  if (a.is_zero()) return a;
  GaussRat lc = a.leading_coeff();
  if (lc.is_one()) return a;
  return (GaussRat(1) / lc) * a;
}

Poly content_in_var(const Poly& a, int v) {
  Poly g(a.nvars());
  for (const Poly& c : coeffs_in_var(a, v)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in x_v (up to scalar factors, which are units
// over the coefficient field). Each step strips the rational content.
Poly pseudo_rem(Poly a, const Poly& b, int v) {
  int db = b.degree(v);
  Poly lcb = coeffs_in_var(b, v)[db];
  while (!a.is_zero() && a.degree(v) >= db) {
    int da = a.degree(v);
    Poly lca = coeffs_in_var(a, v)[da];
    a = mul_internal(lcb, a) - shift_var(mul_internal(lca, b), v, da - db);
    a = strip_rat_content(a);
  }
  return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_leading(b);
  if (b.is_zero()) return normalize_leading(a);
  check_same_nvars(a, b);
  // a nonzero constant is a unit over the coefficient field
  if (a.is_constant() || b.is_constant())
    return Poly::constant(a.nvars(), GaussRat(1));
  int v = top_variable(a, b);
  if (v == 0) return Poly::constant(a.nvars(), GaussRat(1));
  if (a.degree(v) == 0) return poly_gcd(a, content_in_var(b, v));
  if (b.degree(v) == 0) return poly_gcd(content_in_var(a, v), b);

  Poly ca = content_in_var(a, v);
  Poly cb = content_in_var(b, v);
  Poly cg = poly_gcd(ca, cb);
  Poly ap = strip_rat_content(poly_div_exact(a, ca));
  Poly bp = strip_rat_content(poly_div_exact(b, cb));
  if (ap.degree(v) < bp.degree(v)) std::swap(ap, bp);
  while (!bp.is_zero()) {
    Poly r = pseudo_rem(ap, bp, v);
    ap = bp;
    if (r.is_zero()) {
      bp = Poly(a.nvars());
    } else {
      Poly cr = content_in_var(r, v);
      bp = strip_rat_content(poly_div_exact(r, cr));
    }
  }
  return normalize_leading(mul_internal(cg, ap));
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  check_same_nvars(a, b);
  Poly rem = a;
  Poly quot(a.nvars());
  const auto& ltb = *b.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& lta = *rem.terms().rbegin();
    Poly::Exponents e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) {
      e[i] = lta.first[i] - ltb.first[i];
      if (e[i] < 0)
        throw std::logic_error("poly_div_exact: operands not divisible");
    }
    Poly t = Poly::monomial(a.nvars(), e, lta.second / ltb.second);
    quot += t;
    rem -= mul_internal(t, b);
  }
  return quot;
}

}  // namespace ovdkit

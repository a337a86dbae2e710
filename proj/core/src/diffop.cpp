#include "ovdkit/diffop.hpp"

namespace ovdkit {

DiffOp::DiffOp(int nvars)
    : nvars(nvars), a(nvars, RatFun::zero(nvars)), a0(RatFun::zero(nvars)) {}

DiffOp::DiffOp(std::vector<RatFun> a_, RatFun a0_)
    : nvars((int)a_.size()), a(std::move(a_)), a0(std::move(a0_)) {
  for (const RatFun& c : a)
    if (c.nvars() != nvars)
      throw DimensionMismatch("diffop coefficient nvars mismatch");
  if (a0.nvars() != nvars)
    throw DimensionMismatch("diffop zero-order coefficient nvars mismatch");
}

DiffOp DiffOp::partial(int nvars, int axis) {
  DiffOp p(nvars);
  p.a[axis - 1] = RatFun::one(nvars);
  return p;
}

bool DiffOp::is_zero() const {
  for (const RatFun& c : a)
    if (!c.is_zero()) return false;
  return a0.is_zero();
}

bool operator==(const DiffOp& p, const DiffOp& q) {
  return p.nvars == q.nvars && p.a == q.a && p.a0 == q.a0;
}

DiffOp operator+(const DiffOp& p, const DiffOp& q) {
  if (p.nvars != q.nvars) throw DimensionMismatch("diffop nvars mismatch");
  DiffOp r(p.nvars);
  for (int v = 0; v < p.nvars; ++v) r.a[v] = p.a[v] + q.a[v];
  r.a0 = p.a0 + q.a0;
  return r;
}

DiffOp operator-(const DiffOp& p, const DiffOp& q) {
  if (p.nvars != q.nvars) throw DimensionMismatch("diffop nvars mismatch");
  DiffOp r(p.nvars);
  for (int v = 0; v < p.nvars; ++v) r.a[v] = p.a[v] - q.a[v];
  r.a0 = p.a0 - q.a0;
  return r;
}

DiffOp operator-(const DiffOp& p) {
  DiffOp r(p.nvars);
  for (int v = 0; v < p.nvars; ++v) r.a[v] = -p.a[v];
  r.a0 = -p.a0;
  return r;
}

DiffOp operator*(const RatFun& g, const DiffOp& p) {
  DiffOp r(p.nvars);
  for (int v = 0; v < p.nvars; ++v) r.a[v] = g * p.a[v];
  r.a0 = g * p.a0;
  return r;
}

RatFun apply(const DiffOp& p, const RatFun& f) {
  if (f.nvars() != p.nvars)
    throw DimensionMismatch("apply: function nvars mismatch");
  RatFun acc = p.a0 * f;
  for (int v = 0; v < p.nvars; ++v) {
    if (p.a[v].is_zero()) continue;
    acc += p.a[v] * f.derivative(v + 1);
  }
  return acc;
}

DiffOp principal(const DiffOp& p) {
  DiffOp r = p;
  r.a0 = RatFun::zero(p.nvars);
  return r;
}

DiffOp bar(const DiffOp& p) {
  DiffOp r(p.nvars);
  for (int v = 0; v < p.nvars; ++v) r.a[v] = p.a[v].conj();
  r.a0 = p.a0.conj();
  return r;
}

DiffOp bracket(const DiffOp& p, const DiffOp& q) {
  if (p.nvars != q.nvars) throw DimensionMismatch("bracket nvars mismatch");
  int n = p.nvars;
  // second-order coefficients a^u b^v - b^u a^v symmetrized must vanish
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      RatFun s = p.a[u] * q.a[v] + p.a[v] * q.a[u] - q.a[u] * p.a[v] -
                 q.a[v] * p.a[u];
      if (!s.is_zero())
        throw std::logic_error("bracket: second-order terms failed to cancel");
    }
  }
  DiffOp r(n);
  for (int v = 0; v < n; ++v) {
    RatFun c = RatFun::zero(n);
    for (int u = 0; u < n; ++u) {
      if (!p.a[u].is_zero()) c += p.a[u] * q.a[v].derivative(u + 1);
      if (!q.a[u].is_zero()) c -= q.a[u] * p.a[v].derivative(u + 1);
    }
    r.a[v] = c;
  }
  r.a0 = apply(principal(p), q.a0) - apply(principal(q), p.a0);
  return r;
}

DiffOp formal_adjoint(const DiffOp& p) {
  int n = p.nvars;
  DiffOp r(n);
  RatFun div = RatFun::zero(n);
  for (int v = 0; v < n; ++v) {
    RatFun ab = p.a[v].conj();
    r.a[v] = -ab;
    div += ab.derivative(v + 1);
  }
  r.a0 = p.a0.conj() - div;
  return r;
}

}  // namespace ovdkit

#pragma once

#include "ovdkit/ratfun.hpp"

namespace ovdkit {

// First order operator  f |-> sum_v a[v] d_v f + a0 f  with rational-function
// coefficients. a has length nvars.
struct DiffOp {
  int nvars = 0;
  std::vector<RatFun> a;
  RatFun a0;

  DiffOp() = default;
  explicit DiffOp(int nvars);
  DiffOp(std::vector<RatFun> a, RatFun a0);

  static DiffOp zero(int nvars) { return DiffOp(nvars); }
  // d_axis
  static DiffOp partial(int nvars, int axis);

  bool is_zero() const;
  friend bool operator==(const DiffOp& p, const DiffOp& q);
  friend bool operator!=(const DiffOp& p, const DiffOp& q) { return !(p == q); }

  friend DiffOp operator+(const DiffOp& p, const DiffOp& q);
  friend DiffOp operator-(const DiffOp& p, const DiffOp& q);
  friend DiffOp operator-(const DiffOp& p);
  // multiplication operator g . P : f |-> g * P(f)
  friend DiffOp operator*(const RatFun& g, const DiffOp& p);
};

RatFun apply(const DiffOp& p, const RatFun& f);

// Principal part: drops the zero-order coefficient.
DiffOp principal(const DiffOp& p);
// Conjugates every coefficient.
DiffOp bar(const DiffOp& p);

// Commutator [P,Q] = PQ - QP, returned in first-order form. The second-order
// coefficients cancel identically; this is asserted internally.
DiffOp bracket(const DiffOp& p, const DiffOp& q);

// Formal adjoint under the sesquilinear L2 pairing:
//   tP f = -sum_v d_v(conj(a^v) f) + conj(a0) f.
DiffOp formal_adjoint(const DiffOp& p);

}  // namespace ovdkit

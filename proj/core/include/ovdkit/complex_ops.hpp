#pragma once

#include "ovdkit/system.hpp"

namespace ovdkit {

// Explicit matrix form of one level of the compatibility complex: rows are
// target indices (length q), columns source indices (length q-1), entries
// first-order operators. Absent entry = zero.
struct LevelOperator {
  int q = 0;
  std::map<MultiIndex, std::map<MultiIndex, DiffOp>> rows;

  const DiffOp* entry(const MultiIndex& j, const MultiIndex& i) const {
    auto rit = rows.find(j);
    if (rit == rows.end()) return nullptr;
    auto cit = rit->second.find(i);
    return cit == rit->second.end() ? nullptr : &cit->second;
  }
  Cochain apply(const Cochain& f) const;
};

// Level q of the complex applied to a cochain of degree q-1:
//   (Lf)_J = sum_{j in J} (-1)^(j,J\j) P_j f_{J\j}
//          - sum_{m<n in J} sgn(J -> mn(J\{m,n})) sum_s c_mn^s f_{s(J\{m,n})}
Cochain apply_level(const OperatorSystem& sys, int q, const Cochain& f);

// Formal adjoint of the level operator applied to a cochain of degree q:
//   (L*f)_I = sum_{j not in I} tP_j f_{jI}
//           - sum_{s in I} sum_{m<n not in I\s} (-1)^(s,I\s)
//             sgn((I\s)mn -> mn(I\s)) conj(c_mn^s) f_{(I\s)mn}
Cochain apply_level_adjoint(const OperatorSystem& sys, int q, const Cochain& f);

// Assembles the explicit entries; the action reproduces apply_level.
LevelOperator level_matrix(const OperatorSystem& sys, int q);

struct ComplexReport {
  int q = 0;
  bool pass = true;
  bool trivial = false;  // q = r: the next level is zero by definition
  std::string witness;   // (K, I, coefficient) on failure
};

// Proves the composition of level q+1 after level q vanishes, by probing
// each (target K, source I) pair with monomials of degree <= 2 and
// recovering the coefficients of the order-<= 2 composition exactly.
ComplexReport verify_complex(const OperatorSystem& sys, int q);

struct AdjointReport {
  int q = 0;
  bool pass = true;
  std::string witness;  // mismatching entry on failure
};

// Entrywise exact equality of the mechanical adjoint (transpose +
// formal_adjoint of each entry of level_matrix) with the operator realized
// by apply_level_adjoint.
AdjointReport verify_adjoint(const OperatorSystem& sys, int q);

// Pointwise certificate that apply_level_adjoint is the true adjoint:
//   <Lg, f> - <g, L*f> = sum_v d_v V^v
// with V assembled explicitly from the principal coefficients. Returns the
// two sides for the caller to compare; exact equality is the property.
struct DivergenceCertificate {
  RatFun lhs;  // <Lg,f> - <g,L*f>
  RatFun rhs;  // divergence of the assembled field
};
DivergenceCertificate divergence_certificate(const OperatorSystem& sys, int q,
                                             const Cochain& g, const Cochain& f);

}  // namespace ovdkit

#pragma once

#include <complex>

#include "ovdkit/system.hpp"

namespace ovdkit {

using Cplx = std::complex<double>;
using HermMatrix = std::vector<std::vector<Cplx>>;

// Hermitian form sampled at a point: H = (M + M*)/2 with M_jk the value
// multiplying xi_k conj(xi_j).
struct HermitianSample {
  std::vector<double> point;
  HermMatrix h;
};

enum class QFormSource { UseE, UseD };

// M_jk = p_j bar(p_k) phi + sum_l e_jk^l bar(p_l) phi evaluated at x, then
// Hermitized. UseD replaces the correction by d_jk^l p_l phi.
HermitianSample qform_matrix(const OperatorSystem& sys, const RatFun& phi,
                             std::span<const double> x,
                             QFormSource source = QFormSource::UseE);

// Quadratic form on antisymmetric q-vectors induced by summing the base form
// over all (q-1)-index slots.
HermMatrix induced_matrix(const HermMatrix& h, int q);

// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
// row-major sweep order, ascending output. Off-diagonal mass is reduced
// below 1e-13 * ||H||_F.
std::vector<double> eigen_hermitian(const HermMatrix& h);

struct Lemma31Report {
  bool pass = true;
  double max_diff = 0.0;
  std::vector<double> induced_eigs;
  std::vector<double> sum_eigs;
};

// Eigenvalues of the induced form vs sums of base eigenvalues over
// strictly increasing index sets, as multisets within tol.
Lemma31Report check_eigenvalue_law(const HermMatrix& h, int q, double tol);

struct QFormSample {
  std::vector<double> point;
  std::vector<double> eigenvalues;
  bool psd = false;
  int rank = 0;
};

struct QFormScan {
  int q = 1;
  double min_eigenvalue = 0.0;
  int non_psd_points = 0;
  bool rank_ok = true;  // rank >= r-q+1 at every sample
  int poles_skipped = 0;
  std::vector<QFormSample> samples;
  bool pconvex = false;  // psd everywhere and positive definite
  // optional critical-point reduction check (see scan options)
  bool hessian_checked = false;
  double hessian_diff = 0.0;
};

struct ScanOptions {
  int per_axis = 8;
  int q = 1;
  QFormSource source = QFormSource::UseE;
  bool keep_samples = false;
  // point where phi vanishes to first order: the form must reduce to the
  // coefficient-weighted Hessian there
  std::optional<std::vector<double>> critical_point;
};

// Evaluates the form on a grid over the system box and aggregates
// positivity, rank and the optional critical-point reduction.
QFormScan pconvexity_scan(const OperatorSystem& sys, const RatFun& phi,
                          const ScanOptions& opt);

// rank with threshold 1e-9 * spectral radius
int numeric_rank_eigs(const std::vector<double>& eigs);

}  // namespace ovdkit

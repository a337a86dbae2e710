#pragma once

#include <array>
#include <optional>

#include "ovdkit/diffop.hpp"
#include "ovdkit/multiindex.hpp"

namespace ovdkit {

// r x r x r table of rational functions, antisymmetric in the two lower
// indices. All indices 1-based.
class CTable {
 public:
  CTable() = default;
  CTable(int r, int nvars)
      : r_(r), nvars_(nvars), data_(r * r * r, RatFun::zero(nvars)) {}

  int r() const { return r_; }
  const RatFun& at(int j, int k, int l) const {
    return data_[((j - 1) * r_ + (k - 1)) * r_ + (l - 1)];
  }
  // sets both (j,k,l) and the antisymmetric partner (k,j,l)
  void set(int j, int k, int l, const RatFun& v) {
    data_[((j - 1) * r_ + (k - 1)) * r_ + (l - 1)] = v;
    if (j != k) data_[((k - 1) * r_ + (j - 1)) * r_ + (l - 1)] = -v;
  }
  // single-slot write; used for the d,e tables which carry no symmetry
  void set_raw(int j, int k, int l, RatFun v) {
    data_[((j - 1) * r_ + (k - 1)) * r_ + (l - 1)] = std::move(v);
  }
  bool antisymmetric() const;

 private:
  int r_ = 0, nvars_ = 0;
  std::vector<RatFun> data_;
};

struct OperatorSystem {
  int n = 0;  // space dimension
  int r = 0;  // number of operators
  std::vector<DiffOp> ops;
  std::vector<std::string> varnames;
  std::vector<std::array<double, 2>> box;
  std::optional<CTable> c;  // [P_j,P_k] = sum_l c_jk^l P_l
  std::optional<CTable> d, e;  // [p_j, bar p_k] = d_jk^l p_l - e_jk^l bar p_l

  const DiffOp& op(int j) const { return ops[j - 1]; }  // 1-based
};

struct CheckReport {
  std::string assumption;
  bool pass = true;
  std::string witness;  // populated iff !pass
};

// Exact linear solving over the rational-function field; pivots are chosen
// scanning rows then columns in order, free variables are set to zero
// (the lexicographically minimal pivot solution).
struct LinSolveResult {
  bool consistent = false;
  std::vector<RatFun> x;
  int rank = 0;
  int kernel_dim = 0;
  int bad_row = -1;  // first inconsistent row when !consistent
};
LinSolveResult solve_linear(std::vector<std::vector<RatFun>> a,
                            std::vector<RatFun> b);
int generic_rank(std::vector<std::vector<RatFun>> a);

enum class SolveStatus { Solved, NoSolution, NonUnique };

struct StructureSolveResult {
  SolveStatus status = SolveStatus::Solved;
  CTable c;
  int kernel_dim = 0;      // for NonUnique: max over pairs
  int witness_j = -1, witness_k = -1;
  std::string detail;
};

// Solves [P_j,P_k] = sum_l c_jk^l P_l for c over the function field.
StructureSolveResult solve_structure_constants(const OperatorSystem& sys);

// Populates sys.c via solve_structure_constants when absent; throws MissingC
// if no solution exists.
void ensure_c(OperatorSystem& sys);

CheckReport check_a1(OperatorSystem& sys);
CheckReport check_a2(const OperatorSystem& sys);

enum class RankMode { IncludeZeroOrder, PrincipalOnly };

struct RankReport {
  RankMode mode = RankMode::IncludeZeroOrder;
  int generic_rank = 0;
  bool full_rank = false;  // generic_rank == r
  int points_sampled = 0;
  // sample points where the numeric rank drops below the generic rank
  std::vector<std::vector<double>> drop_points;
  int poles_skipped = 0;
};
RankReport check_rank(const OperatorSystem& sys, RankMode mode,
                      int samples = 100, unsigned long seed = 0);

struct A3Result {
  bool in_span = false;
  CTable d, e;
  int witness_j = -1, witness_k = -1;  // first pair not in the span
  DiffOp residual;                     // its unrepresentable remainder
};
A3Result check_a3(const OperatorSystem& sys);
// Stores the solved d,e tables into the system; throws MissingA3 on failure.
void ensure_a3(OperatorSystem& sys);

OperatorSystem make_derham(int n);
OperatorSystem make_dolbeault(int m);
OperatorSystem make_lewy();

// Gauge transform of commuting fields: P'_i = sum_k G_ik d_k with G a
// unipotent upper-triangular polynomial matrix drawn from the seed. The
// returned system carries exact structure constants and satisfies the
// bracket identity by construction.
OperatorSystem random_involutive(unsigned long seed, int n, int r, int deg);

// Exact zero test of denominators at `samples` dyadic points in the box;
// throws PoleError at the first exact zero, returns the number of
// near-zero (double precision) hits.
int check_pole_free(const OperatorSystem& sys, int samples = 1000,
                    unsigned long seed = 0);

}  // namespace ovdkit

#pragma once

#include <map>

#include "ovdkit/ratfun.hpp"

namespace ovdkit {

// Strictly increasing multi-index with entries in 1..r.
using MultiIndex = std::vector<int>;

bool strictly_increasing(const MultiIndex& j);

// Number of entries of J strictly less than k.
int position_count(int k, const MultiIndex& j);

// Sign of the permutation carrying `top` to `bottom`. Throws NotAPermutation
// if the tuples are not rearrangements of each other or contain repeats.
int perm_sign(const std::vector<int>& top, const std::vector<int>& bottom);

// All strictly increasing multi-indices of length q in 1..r, lexicographic.
std::vector<MultiIndex> enumerate_indices(int r, int q);

// J \ {j}; j must be an entry of J.
MultiIndex erase_entry(const MultiIndex& j, int entry);
// Sorted insertion (entry must not already occur).
MultiIndex insert_entry(const MultiIndex& j, int entry);
bool contains(const MultiIndex& j, int entry);

// Antisymmetric vector of rational functions indexed by strictly increasing
// multi-indices of fixed length. Absent component = 0. degree 0 stores one
// scalar at the empty index.
struct Cochain {
  int degree = 0;
  int nvars = 0;
  std::map<MultiIndex, RatFun> comps;

  Cochain() = default;
  Cochain(int degree, int nvars) : degree(degree), nvars(nvars) {}

  const RatFun* find(const MultiIndex& j) const {
    auto it = comps.find(j);
    return it == comps.end() ? nullptr : &it->second;
  }
  RatFun get(const MultiIndex& j) const {
    const RatFun* p = find(j);
    return p ? *p : RatFun::zero(nvars);
  }
  void set(const MultiIndex& j, RatFun v);

  bool is_zero() const;
  friend bool operator==(const Cochain& a, const Cochain& b);
};

// Component at an arbitrary index tuple: 0 on repeats, otherwise the signed
// component at the sorted tuple.
RatFun antisym_get(const Cochain& f, const std::vector<int>& tuple);

}  // namespace ovdkit

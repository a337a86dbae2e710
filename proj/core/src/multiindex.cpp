#include "ovdkit/multiindex.hpp"

#include <algorithm>

namespace ovdkit {

bool strictly_increasing(const MultiIndex& j) {
  for (std::size_t k = 1; k < j.size(); ++k)
    if (j[k - 1] >= j[k]) return false;
  return true;
}

int position_count(int k, const MultiIndex& j) {
  int c = 0;
  for (int e : j)
    if (e < k) ++c;
  return c;
}

int perm_sign(const std::vector<int>& top, const std::vector<int>& bottom) {
  if (top.size() != bottom.size())
    throw NotAPermutation("tuples of different length");
  auto st = top, sb = bottom;
  std::sort(st.begin(), st.end());
  std::sort(sb.begin(), sb.end());
  if (st != sb) throw NotAPermutation("tuples are not rearrangements");
  for (std::size_t k = 1; k < st.size(); ++k)
    if (st[k - 1] == st[k]) throw NotAPermutation("repeated entry");
  // count inversions of the map top -> bottom
  std::vector<int> perm(top.size());
  for (std::size_t a = 0; a < top.size(); ++a) {
    for (std::size_t b = 0; b < bottom.size(); ++b)
      if (bottom[b] == top[a]) perm[a] = (int)b;
  }
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

std::vector<MultiIndex> enumerate_indices(int r, int q) {
  if (q < 0 || q > r) throw DimensionMismatch("enumerate: need 0 <= q <= r");
  std::vector<MultiIndex> out;
  MultiIndex cur(q);
  for (int k = 0; k < q; ++k) cur[k] = k + 1;
  for (;;) {
    out.push_back(cur);
    if (q == 0) break;
    int k = q - 1;
    while (k >= 0 && cur[k] == r - (q - 1 - k)) --k;
    if (k < 0) break;
    ++cur[k];
    for (int m = k + 1; m < q; ++m) cur[m] = cur[m - 1] + 1;
  }
  return out;
}

MultiIndex erase_entry(const MultiIndex& j, int entry) {
  MultiIndex out;
  out.reserve(j.size() - 1);
  bool found = false;
  for (int e : j) {
    if (e == entry && !found) {
      found = true;
      continue;
    }
    out.push_back(e);
  }
  if (!found) throw DimensionMismatch("erase_entry: entry not present");
  return out;
}

MultiIndex insert_entry(const MultiIndex& j, int entry) {
  MultiIndex out = j;
  out.insert(std::upper_bound(out.begin(), out.end(), entry), entry);
  return out;
}

bool contains(const MultiIndex& j, int entry) {
  return std::binary_search(j.begin(), j.end(), entry);
}

void Cochain::set(const MultiIndex& j, RatFun v) {
  if ((int)j.size() != degree)
    throw DegreeMismatch("cochain component of wrong length");
  if (!strictly_increasing(j))
    throw DegreeMismatch("cochain keyed by non-increasing index");
  if (v.is_zero())
    comps.erase(j);
  else
    comps.insert_or_assign(j, std::move(v));
}

bool Cochain::is_zero() const {
  for (const auto& [j, v] : comps)
    if (!v.is_zero()) return false;
  return true;
}

bool operator==(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || a.nvars != b.nvars) return false;
  for (const auto& [j, v] : a.comps)
    if (b.get(j) != v) return false;
  for (const auto& [j, v] : b.comps)
    if (a.get(j) != v) return false;
  return true;
}

RatFun antisym_get(const Cochain& f, const std::vector<int>& tuple) {
  for (std::size_t a = 0; a < tuple.size(); ++a)
    for (std::size_t b = a + 1; b < tuple.size(); ++b)
      if (tuple[a] == tuple[b]) return RatFun::zero(f.nvars);
  MultiIndex sorted = tuple;
  std::sort(sorted.begin(), sorted.end());
  int s = perm_sign(sorted, tuple);
  const RatFun* p = f.find(sorted);
  if (!p) return RatFun::zero(f.nvars);
  return s == 1 ? *p : -*p;
}

}  // namespace ovdkit

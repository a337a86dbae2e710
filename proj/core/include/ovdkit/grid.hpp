#pragma once

#include <array>
#include <complex>

#include "ovdkit/multiindex.hpp"

namespace ovdkit {

using Cplx = std::complex<double>;

// Uniform tensor grid on an axis-aligned box, row-major with x1 fastest.
struct Grid {
  int n = 0;
  int npts = 0;  // nodes per axis
  std::vector<std::array<double, 2>> box;
  std::vector<double> h;

  Grid() = default;
  Grid(std::vector<std::array<double, 2>> box_, int npts_);

  long node_count() const {
    long c = 1;
    for (int v = 0; v < n; ++v) c *= npts;
    return c;
  }
  std::vector<double> coords(long linear) const;
  std::vector<int> index(long linear) const;
  long linear(std::span<const int> idx) const;

  friend bool operator==(const Grid& a, const Grid& b);
};

// Inclusive per-axis index window into a grid (sub-box snapped to nodes).
struct SubGrid {
  std::vector<std::array<int, 2>> range;

  static SubGrid whole(const Grid& g);
  // smallest window containing all nodes inside the sub-box (with an eps
  // tolerance so node-aligned boxes restrict exactly)
  static SubGrid from_box(const Grid& g,
                          const std::vector<std::array<double, 2>>& sub);

  int extent(int axis) const { return range[axis][1] - range[axis][0] + 1; }
  long node_count() const {
    long c = 1;
    for (const auto& rg : range) c *= rg[1] - rg[0] + 1;
    return c;
  }
  bool empty() const {
    for (const auto& rg : range)
      if (rg[1] < rg[0]) return true;
    return false;
  }
  bool contains(std::span<const int> idx) const {
    for (std::size_t v = 0; v < range.size(); ++v)
      if (idx[v] < range[v][0] || idx[v] > range[v][1]) return false;
    return true;
  }
  // local row-major linearization (x1 fastest)
  long local_linear(std::span<const int> idx) const;
  std::vector<int> local_index(long local) const;

  static SubGrid intersect(const SubGrid& a, const SubGrid& b);
};

// Discretized cochain: one complex array of grid.node_count() values per
// strictly increasing multi-index of length q in 1..r.
struct GridField {
  int q = 0;
  int r = 0;
  Grid grid;
  std::vector<std::vector<Cplx>> values;  // enumerate_indices(r, q) order

  GridField() = default;
  GridField(int q, int r, Grid grid);

  int component_count() const { return (int)values.size(); }
  std::vector<Cplx>& comp(int i) { return values[i]; }
  const std::vector<Cplx>& comp(int i) const { return values[i]; }
  void check_finite() const;  // NaN-free invariant
};

// Samples rational functions (enumerate order) on the grid.
GridField sample_field(const std::vector<RatFun>& comps, int q, int r,
                       const Grid& grid);

double field_sup_norm(const GridField& f);

}  // namespace ovdkit

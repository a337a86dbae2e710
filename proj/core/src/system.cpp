#include "ovdkit/system.hpp"

#include <random>
#include <sstream>

namespace ovdkit {

bool CTable::antisymmetric() const {
  for (int j = 1; j <= r_; ++j)
    for (int k = 1; k <= r_; ++k)
      for (int l = 1; l <= r_; ++l)
        if (at(j, k, l) != -at(k, j, l)) return false;
  return true;
}

LinSolveResult solve_linear(std::vector<std::vector<RatFun>> a,
                            std::vector<RatFun> b) {
  const int m = (int)a.size();
  const int w = m == 0 ? 0 : (int)a[0].size();
  int nv = 0;
  for (const auto& rowv : a)
    for (const auto& cell : rowv) nv = std::max(nv, cell.nvars());
  for (const auto& rhs : b) nv = std::max(nv, rhs.nvars());

  std::vector<int> row_of_col(w, -1);
  int row = 0;
  for (int col = 0; col < w && row < m; ++col) {
    int pr = -1;
    for (int i = row; i < m; ++i) {
      if (!a[i][col].is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(a[pr], a[row]);
    std::swap(b[pr], b[row]);
    RatFun p = a[row][col];
    for (int cc = col; cc < w; ++cc) a[row][cc] = a[row][cc] / p;
    b[row] = b[row] / p;
    for (int i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      RatFun f = a[i][col];
      for (int cc = col; cc < w; ++cc) a[i][cc] -= f * a[row][cc];
      b[i] -= f * b[row];
    }
    row_of_col[col] = row;
    ++row;
  }
  LinSolveResult res;
  res.rank = row;
  res.kernel_dim = w - row;
  res.consistent = true;
  for (int i = row; i < m; ++i) {
    if (!b[i].is_zero()) {
      res.consistent = false;
      res.bad_row = i;
      break;
    }
  }
  // lexicographically minimal pivot solution: free variables = 0
  res.x.assign(w, RatFun::zero(nv));
  for (int ci = 0; ci < w; ++ci)
    if (row_of_col[ci] >= 0) res.x[ci] = b[row_of_col[ci]];
  return res;
}

int generic_rank(std::vector<std::vector<RatFun>> a) {
  const int m = (int)a.size();
  if (m == 0) return 0;
  int nv = a[0].empty() ? 0 : a[0][0].nvars();
  std::vector<RatFun> zero(m, RatFun::zero(nv));
  return solve_linear(std::move(a), std::move(zero)).rank;
}

StructureSolveResult solve_structure_constants(const OperatorSystem& sys) {
  StructureSolveResult out;
  out.c = CTable(sys.r, sys.n);
  // columns are the operators; rows the coefficient slots a^0, a^1..a^n
  std::vector<std::vector<RatFun>> a(
      sys.n + 1, std::vector<RatFun>(sys.r, RatFun::zero(sys.n)));
  for (int l = 1; l <= sys.r; ++l) {
    a[0][l - 1] = sys.op(l).a0;
    for (int v = 1; v <= sys.n; ++v) a[v][l - 1] = sys.op(l).a[v - 1];
  }
  for (int j = 1; j <= sys.r; ++j) {
    for (int k = j + 1; k <= sys.r; ++k) {
      DiffOp br = bracket(sys.op(j), sys.op(k));
      std::vector<RatFun> b(sys.n + 1, RatFun::zero(sys.n));
      b[0] = br.a0;
      for (int v = 1; v <= sys.n; ++v) b[v] = br.a[v - 1];
      LinSolveResult ls = solve_linear(a, b);
      if (!ls.consistent) {
        out.status = SolveStatus::NoSolution;
        out.witness_j = j;
        out.witness_k = k;
        out.detail = "inconsistent row " + std::to_string(ls.bad_row);
        return out;
      }
      if (ls.kernel_dim > 0) {
        out.status = SolveStatus::NonUnique;
        out.kernel_dim = std::max(out.kernel_dim, ls.kernel_dim);
      }
      for (int l = 1; l <= sys.r; ++l) out.c.set(j, k, l, ls.x[l - 1]);
    }
  }
  return out;
}

void ensure_c(OperatorSystem& sys) {
  if (sys.c) return;
  StructureSolveResult s = solve_structure_constants(sys);
  if (s.status == SolveStatus::NoSolution)
    throw MissingC("structure constants absent and bracket of pair (" +
                   std::to_string(s.witness_j) + "," +
                   std::to_string(s.witness_k) +
                   ") lies outside the span of the operators");
  sys.c = s.c;
}

CheckReport check_a1(OperatorSystem& sys) {
  ensure_c(sys);
  CheckReport rep{"A1", true, ""};
  if (!sys.c->antisymmetric()) {
    rep.pass = false;
    rep.witness = "c table is not antisymmetric in its lower indices";
    return rep;
  }
  for (int j = 1; j <= sys.r; ++j) {
    for (int k = j + 1; k <= sys.r; ++k) {
      DiffOp res = bracket(sys.op(j), sys.op(k));
      for (int l = 1; l <= sys.r; ++l)
        res = res - sys.c->at(j, k, l) * sys.op(l);
      if (!res.is_zero()) {
        rep.pass = false;
        std::ostringstream os;
        os << "pair (" << j << "," << k << "), residual [";
        for (int v = 0; v < sys.n; ++v)
          os << (v ? ", " : "") << to_string(res.a[v], sys.varnames);
        os << "] + " << to_string(res.a0, sys.varnames);
        rep.witness = os.str();
        return rep;
      }
    }
  }
  return rep;
}

CheckReport check_a2(const OperatorSystem& sys) {
  if (!sys.c) throw MissingC("check_a2 requires structure constants");
  CheckReport rep{"A2", true, ""};
  const CTable& c = *sys.c;
  std::vector<DiffOp> p;
  p.reserve(sys.r);
  for (int j = 1; j <= sys.r; ++j) p.push_back(principal(sys.op(j)));
  for (int k = 1; k <= sys.r; ++k) {
    for (int kp = 1; kp <= sys.r; ++kp) {
      for (int lp = 1; lp <= sys.r; ++lp) {
        for (int l = 1; l <= sys.r; ++l) {
          RatFun lhs = RatFun::zero(sys.n);
          for (int s = 1; s <= sys.r; ++s) {
            lhs += c.at(k, kp, s) * c.at(s, lp, l);
            lhs += c.at(kp, lp, s) * c.at(s, k, l);
            lhs += c.at(lp, k, s) * c.at(s, kp, l);
          }
          RatFun rhs = apply(p[lp - 1], c.at(k, kp, l)) +
                       apply(p[k - 1], c.at(kp, lp, l)) +
                       apply(p[kp - 1], c.at(lp, k, l));
          if (lhs != rhs) {
            rep.pass = false;
            std::ostringstream os;
            os << "indices (k,k',l',l)=(" << k << "," << kp << "," << lp << ","
               << l << "), defect " << to_string(lhs - rhs, sys.varnames);
            rep.witness = os.str();
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

namespace {

double unit_double(std::mt19937_64& rng) {
  return (double)(rng() >> 11) / 9007199254740992.0;  // [0,1)
}

std::vector<double> sample_point(const OperatorSystem& sys,
                                 std::mt19937_64& rng) {
  std::vector<double> x(sys.n);
  for (int v = 0; v < sys.n; ++v) {
    double lo = sys.box.empty() ? -1.0 : sys.box[v][0];
    double hi = sys.box.empty() ? 1.0 : sys.box[v][1];
    x[v] = lo + (hi - lo) * unit_double(rng);
  }
  return x;
}

// numeric rank of a small complex matrix by pivoted elimination
int numeric_rank(std::vector<std::vector<std::complex<double>>> m, double tol) {
  int rows = (int)m.size();
  int cols = rows == 0 ? 0 : (int)m[0].size();
  double scale = 0;
  for (auto& rowv : m)
    for (auto& v : rowv) scale = std::max(scale, std::abs(v));
  if (scale == 0) return 0;
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    double best = tol * scale;
    for (int i = row; i < rows; ++i) {
      if (std::abs(m[i][col]) > best) {
        best = std::abs(m[i][col]);
        pr = i;
      }
    }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    for (int i = row + 1; i < rows; ++i) {
      std::complex<double> f = m[i][col] / m[row][col];
      for (int cc = col; cc < cols; ++cc) m[i][cc] -= f * m[row][cc];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

RankReport check_rank(const OperatorSystem& sys, RankMode mode, int samples,
                      unsigned long seed) {
  RankReport rep;
  rep.mode = mode;
  std::vector<std::vector<RatFun>> a;
  for (int j = 1; j <= sys.r; ++j) {
    std::vector<RatFun> rowv;
    if (mode == RankMode::IncludeZeroOrder) rowv.push_back(sys.op(j).a0);
    for (int v = 1; v <= sys.n; ++v) rowv.push_back(sys.op(j).a[v - 1]);
    a.push_back(std::move(rowv));
  }
  rep.generic_rank = generic_rank(a);
  rep.full_rank = rep.generic_rank == sys.r;

  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
  rep.points_sampled = samples;
  for (int t = 0; t < samples; ++t) {
    std::vector<double> x = sample_point(sys, rng);
    std::vector<std::vector<std::complex<double>>> m;
    bool pole = false;
    for (auto& rowv : a) {
      std::vector<std::complex<double>> mr;
      for (auto& cell : rowv) {
        try {
          mr.push_back(cell.evaluate(x));
        } catch (const PoleError&) {
          pole = true;
          break;
        }
      }
      if (pole) break;
      m.push_back(std::move(mr));
    }
    if (pole) {
      rep.poles_skipped++;
      continue;
    }
    if (numeric_rank(std::move(m), 1e-9) < rep.generic_rank)
      rep.drop_points.push_back(x);
  }
  return rep;
}

A3Result check_a3(const OperatorSystem& sys) {
  A3Result out;
  out.d = CTable(sys.r, sys.n);
  out.e = CTable(sys.r, sys.n);
  out.residual = DiffOp(sys.n);
  std::vector<DiffOp> p, pb;
  for (int j = 1; j <= sys.r; ++j) {
    p.push_back(principal(sys.op(j)));
    pb.push_back(bar(p.back()));
  }
  // unknowns ordered d_1..d_r then e_1..e_r
  std::vector<std::vector<RatFun>> a(
      sys.n, std::vector<RatFun>(2 * sys.r, RatFun::zero(sys.n)));
  for (int l = 1; l <= sys.r; ++l) {
    for (int v = 1; v <= sys.n; ++v) {
      a[v - 1][l - 1] = p[l - 1].a[v - 1];
      a[v - 1][sys.r + l - 1] = -pb[l - 1].a[v - 1];
    }
  }
  out.in_span = true;
  for (int j = 1; j <= sys.r; ++j) {
    for (int k = 1; k <= sys.r; ++k) {
      DiffOp br = bracket(p[j - 1], pb[k - 1]);
      std::vector<RatFun> b(sys.n, RatFun::zero(sys.n));
      for (int v = 1; v <= sys.n; ++v) b[v - 1] = br.a[v - 1];
      LinSolveResult ls = solve_linear(a, b);
      if (!ls.consistent) {
        out.in_span = false;
        out.witness_j = j;
        out.witness_k = k;
        DiffOp res = br;
        for (int l = 1; l <= sys.r; ++l) {
          res = res - ls.x[l - 1] * p[l - 1];
          res = res + ls.x[sys.r + l - 1] * pb[l - 1];
        }
        out.residual = res;
        return out;
      }
      for (int l = 1; l <= sys.r; ++l) {
        out.d.set_raw(j, k, l, ls.x[l - 1]);
        out.e.set_raw(j, k, l, ls.x[sys.r + l - 1]);
      }
    }
  }
  return out;
}

void ensure_a3(OperatorSystem& sys) {
  if (sys.d && sys.e) return;
  A3Result r = check_a3(sys);
  if (!r.in_span)
    throw MissingA3("assumption (A3) fails: bracket of pair (" +
                    std::to_string(r.witness_j) + "," +
                    std::to_string(r.witness_k) +
                    ") leaves the span of the principal parts");
  sys.d = r.d;
  sys.e = r.e;
}

OperatorSystem make_derham(int n) {
  if (n < 1) throw BadParams("derham needs n >= 1");
  OperatorSystem sys;
  sys.n = n;
  sys.r = n;
  sys.varnames = default_varnames(n);
  sys.box.assign(n, {-1.0, 1.0});
  for (int j = 1; j <= n; ++j) sys.ops.push_back(DiffOp::partial(n, j));
  sys.c = CTable(n, n);
  sys.d = CTable(n, n);
  sys.e = CTable(n, n);
  return sys;
}

OperatorSystem make_dolbeault(int m) {
  if (m < 1) throw BadParams("dolbeault needs m >= 1");
  OperatorSystem sys;
  sys.n = 2 * m;
  sys.r = m;
  for (int j = 1; j <= m; ++j) {
    sys.varnames.push_back("x" + std::to_string(j));
    sys.varnames.push_back("y" + std::to_string(j));
  }
  sys.box.assign(2 * m, {-1.0, 1.0});
  for (int j = 1; j <= m; ++j) {
    DiffOp op(2 * m);
    op.a[2 * (j - 1)] = RatFun::constant(2 * m, GaussRat(BigRat(1, 2)));
    op.a[2 * (j - 1) + 1] =
        RatFun::constant(2 * m, GaussRat(BigRat(0), BigRat(1, 2)));
    sys.ops.push_back(std::move(op));
  }
  sys.c = CTable(m, 2 * m);
  sys.d = CTable(m, 2 * m);
  sys.e = CTable(m, 2 * m);
  return sys;
}

OperatorSystem make_lewy() {
  OperatorSystem sys;
  sys.n = 3;
  sys.r = 1;
  sys.varnames = default_varnames(3);
  sys.box.assign(3, {-1.0, 1.0});
  DiffOp op(3);
  op.a[0] = RatFun::constant(3, GaussRat(BigRat(1, 2)));
  op.a[1] = RatFun::constant(3, GaussRat(BigRat(0), BigRat(1, 2)));
  op.a[2] = parse_ratfun("x2 - i x1", sys.varnames);
  sys.ops.push_back(std::move(op));
  sys.c = CTable(1, 3);
  return sys;
}

OperatorSystem random_involutive(unsigned long seed, int n, int r, int deg) {
  if (r < 1 || n < r || n > 4 || deg < 0 || deg > 2)
    throw BadParams("random_involutive needs 1 <= r <= n <= 4, deg <= 2");
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x5bd1e995u);

  // all exponent vectors of total degree <= deg, in a fixed order
  std::vector<Poly::Exponents> monos;
  {
    Poly::Exponents e(n, 0);
    for (;;) {
      int tot = 0;
      for (int v = 0; v < n; ++v) tot += e[v];
      if (tot <= deg) monos.push_back(e);
      int v = 0;
      while (v < n) {
        if (++e[v] <= deg) break;
        e[v] = 0;
        ++v;
      }
      if (v == n) break;
    }
    std::sort(monos.begin(), monos.end());
  }

  // unipotent upper-triangular G with polynomial entries
  std::vector<std::vector<Poly>> g(r, std::vector<Poly>(r, Poly(n)));
  for (int i = 0; i < r; ++i) g[i][i] = Poly::constant(n, GaussRat(1));
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      Poly p(n);
      for (const auto& e : monos) {
        if (rng() % 3 != 0) continue;
        long re = (long)(rng() % 5) - 2;
        long im = (long)(rng() % 5) - 2;
        p.add_term(e, GaussRat(BigRat(re), BigRat(im)));
      }
      g[i][j] = p;
    }
  }

  OperatorSystem sys;
  sys.n = n;
  sys.r = r;
  sys.varnames = default_varnames(n);
  sys.box.assign(n, {-1.0, 1.0});
  for (int i = 0; i < r; ++i) {
    DiffOp op(n);
    for (int k = 0; k < r; ++k) op.a[k] = RatFun(g[i][k]);
    sys.ops.push_back(std::move(op));
  }

  // inverse of the unipotent matrix: I - N + N^2 - ... with N = G - I
  std::vector<std::vector<Poly>> ginv(r, std::vector<Poly>(r, Poly(n)));
  {
    std::vector<std::vector<Poly>> nmat(r, std::vector<Poly>(r, Poly(n)));
    for (int i = 0; i < r; ++i) {
      ginv[i][i] = Poly::constant(n, GaussRat(1));
      for (int j = i + 1; j < r; ++j) nmat[i][j] = g[i][j];
    }
    std::vector<std::vector<Poly>> pw = nmat;
    int sign = -1;
    for (int k = 1; k < r; ++k) {
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          ginv[i][j] += sign == 1 ? pw[i][j] : -pw[i][j];
      std::vector<std::vector<Poly>> nx(r, std::vector<Poly>(r, Poly(n)));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          for (int m = 0; m < r; ++m) nx[i][j] += pw[i][m] * nmat[m][j];
      pw = std::move(nx);
      sign = -sign;
    }
  }

  // [P'_i,P'_j] = sum_m H_ij^m d_m, converted to the primed basis via G^{-1}
  CTable c(r, n);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      std::vector<Poly> h(r, Poly(n));
      for (int m = 0; m < r; ++m) {
        for (int k = 0; k < r; ++k) {
          h[m] += g[i][k] * g[j][m].derivative(k + 1);
          h[m] -= g[j][k] * g[i][m].derivative(k + 1);
        }
      }
      for (int l = 0; l < r; ++l) {
        Poly cl(n);
        for (int m = 0; m < r; ++m) cl += h[m] * ginv[m][l];
        c.set(i + 1, j + 1, l + 1, RatFun(cl));
      }
    }
  }
  sys.c = c;
  return sys;
}

int check_pole_free(const OperatorSystem& sys, int samples, unsigned long seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 3);
  int near_zero = 0;
  std::vector<const RatFun*> funs;
  for (const DiffOp& op : sys.ops) {
    for (const RatFun& f : op.a) funs.push_back(&f);
    funs.push_back(&op.a0);
  }
  auto scan_table = [&](const std::optional<CTable>& t) {
    if (!t) return;
    for (int j = 1; j <= sys.r; ++j)
      for (int k = 1; k <= sys.r; ++k)
        for (int l = 1; l <= sys.r; ++l) funs.push_back(&t->at(j, k, l));
  };
  scan_table(sys.c);
  scan_table(sys.d);
  scan_table(sys.e);

  bool any_rational = false;
  for (const RatFun* f : funs)
    if (!f->is_polynomial()) any_rational = true;
  if (!any_rational) return 0;

  for (int t = 0; t < samples; ++t) {
    std::vector<GaussRat> xq(sys.n);
    std::vector<double> xd(sys.n);
    for (int v = 0; v < sys.n; ++v) {
      // first 33 samples sweep the box diagonal deterministically so zeros
      // at the centre or the endpoints are always certified
      long k = t < 33 ? 32L * t : (long)(rng() % 1025);
      double lo = sys.box.empty() ? -1.0 : sys.box[v][0];
      double hi = sys.box.empty() ? 1.0 : sys.box[v][1];
      // box endpoints are doubles, hence exact rationals
      BigRat lor(lo), hir(hi);
      BigRat coord = lor + (hir - lor) * BigRat(k, 1024);
      xq[v] = GaussRat(coord);
      xd[v] = coord.convert_to<double>();
    }
    for (const RatFun* f : funs) {
      if (f->is_polynomial()) continue;
      if (f->den().evaluate_exact(xq).is_zero())
        throw PoleError("denominator vanishes at a sample point in the box");
      double scale = 0;
      for (const auto& [e2, c2] : f->den().terms()) scale += abs_approx(c2);
      if (std::abs(f->den().evaluate(xd)) < 1e-12 * (1 + scale)) ++near_zero;
    }
  }
  return near_zero;
}

}  // namespace ovdkit

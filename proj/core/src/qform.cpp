#include "ovdkit/qform.hpp"

#include <algorithm>
#include <cmath>

namespace ovdkit {

namespace {

double frob_norm(const HermMatrix& h) {
  double s = 0;
  for (const auto& row : h)
    for (const auto& v : row) s += std::norm(v);
  return std::sqrt(s);
}

void require_real(const RatFun& phi) {
  if (phi.conj() != phi)
    throw InputError("weight function must be real-valued");
}

}  // namespace

HermitianSample qform_matrix(const OperatorSystem& sys, const RatFun& phi,
                             std::span<const double> x, QFormSource source) {
  require_real(phi);
  if ((int)x.size() != sys.n)
    throw DimensionMismatch("qform point dimension mismatch");
  const CTable* corr = nullptr;
  if (source == QFormSource::UseE) {
    if (!sys.e) throw MissingA3("qform with UseE needs the e table");
    corr = &*sys.e;
  } else {
    if (!sys.d) throw MissingA3("qform with UseD needs the d table");
    corr = &*sys.d;
  }
  std::vector<DiffOp> p, pb;
  std::vector<RatFun> pphi, pbphi;
  for (int j = 1; j <= sys.r; ++j) {
    p.push_back(principal(sys.op(j)));
    pb.push_back(bar(p.back()));
    pphi.push_back(apply(p.back(), phi));
    pbphi.push_back(apply(pb.back(), phi));
  }
  HermMatrix m(sys.r, std::vector<Cplx>(sys.r, 0.0));
  for (int j = 1; j <= sys.r; ++j) {
    for (int k = 1; k <= sys.r; ++k) {
      RatFun val = apply(p[j - 1], pbphi[k - 1]);
      for (int l = 1; l <= sys.r; ++l) {
        const RatFun& w = corr->at(j, k, l);
        if (w.is_zero()) continue;
        val += w * (source == QFormSource::UseE ? pbphi[l - 1] : pphi[l - 1]);
      }
      m[j - 1][k - 1] = val.evaluate(x);
    }
  }
  HermitianSample out;
  out.point.assign(x.begin(), x.end());
  out.h.assign(sys.r, std::vector<Cplx>(sys.r, 0.0));
  for (int j = 0; j < sys.r; ++j)
    for (int k = 0; k < sys.r; ++k)
      out.h[j][k] = 0.5 * (m[j][k] + std::conj(m[k][j]));
  return out;
}

HermMatrix induced_matrix(const HermMatrix& h, int q) {
  int r = (int)h.size();
  if (q < 1 || q > r) throw DimensionMismatch("induced_matrix: need 1 <= q <= r");
  auto idxs = enumerate_indices(r, q);
  std::map<MultiIndex, int> pos;
  for (int i = 0; i < (int)idxs.size(); ++i) pos[idxs[i]] = i;
  HermMatrix b(idxs.size(), std::vector<Cplx>(idxs.size(), 0.0));
  for (const MultiIndex& I : enumerate_indices(r, q - 1)) {
    for (int j = 1; j <= r; ++j) {
      if (contains(I, j)) continue;
      int sj = position_count(j, I) % 2 == 0 ? 1 : -1;
      int row = pos[insert_entry(I, j)];
      for (int k = 1; k <= r; ++k) {
        if (contains(I, k)) continue;
        int sk = position_count(k, I) % 2 == 0 ? 1 : -1;
        int col = pos[insert_entry(I, k)];
        b[row][col] += (double)(sj * sk) * h[j - 1][k - 1];
      }
    }
  }
  return b;
}

std::vector<double> eigen_hermitian(const HermMatrix& h_in) {
  HermMatrix h = h_in;
  int m = (int)h.size();
  if (m == 0) return {};
  for (const auto& row : h)
    if ((int)row.size() != m) throw NotHermitian("matrix is not square");
  double norm = frob_norm(h);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (std::abs(h[i][j] - std::conj(h[j][i])) > 1e-10 * (norm + 1e-300))
        throw NotHermitian("matrix is not Hermitian within tolerance");
  if (norm == 0.0) return std::vector<double>(m, 0.0);

  auto offdiag = [&] {
    double s = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) s += 2 * std::norm(h[i][j]);
    return std::sqrt(s);
  };

  const double target = 1e-13 * norm;
  for (int sweep = 0; sweep < 60 && offdiag() > target; ++sweep) {
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        double apq = std::abs(h[p][q]);
        if (apq == 0.0) continue;
        Cplx phase = h[p][q] / apq;
        double app = h[p][p].real();
        double aqq = h[q][q].real();
        double tau = (aqq - app) / (2 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1 + tau * tau));
        double c = 1.0 / std::sqrt(1 + t * t);
        double s = t * c;
        // unitary U = [[c, s],[-s e^{-i phi}, c e^{-i phi}]] on columns p,q
        for (int i = 0; i < m; ++i) {
          Cplx hip = h[i][p], hiq = h[i][q];
          h[i][p] = c * hip - s * std::conj(phase) * hiq;
          h[i][q] = s * hip + c * std::conj(phase) * hiq;
        }
        for (int i = 0; i < m; ++i) {
          Cplx hpi = h[p][i], hqi = h[q][i];
          h[p][i] = c * hpi - s * phase * hqi;
          h[q][i] = s * hpi + c * phase * hqi;
        }
        h[p][q] = 0.0;
        h[q][p] = 0.0;
        h[p][p] = h[p][p].real();
        h[q][q] = h[q][q].real();
      }
    }
  }
  std::vector<double> eig(m);
  for (int i = 0; i < m; ++i) eig[i] = h[i][i].real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

Lemma31Report check_eigenvalue_law(const HermMatrix& h, int q, double tol) {
  Lemma31Report rep;
  int r = (int)h.size();
  std::vector<double> base = eigen_hermitian(h);
  rep.induced_eigs = eigen_hermitian(induced_matrix(h, q));
  for (const MultiIndex& J : enumerate_indices(r, q)) {
    double s = 0;
    for (int j : J) s += base[j - 1];
    rep.sum_eigs.push_back(s);
  }
  std::sort(rep.sum_eigs.begin(), rep.sum_eigs.end());
  for (std::size_t i = 0; i < rep.sum_eigs.size(); ++i)
    rep.max_diff =
        std::max(rep.max_diff, std::abs(rep.sum_eigs[i] - rep.induced_eigs[i]));
  rep.pass = rep.max_diff <= tol;
  return rep;
}

int numeric_rank_eigs(const std::vector<double>& eigs) {
  double rad = 0;
  for (double l : eigs) rad = std::max(rad, std::abs(l));
  if (rad == 0) return 0;
  int rank = 0;
  for (double l : eigs)
    if (std::abs(l) > 1e-9 * rad) ++rank;
  return rank;
}

QFormScan pconvexity_scan(const OperatorSystem& sys, const RatFun& phi,
                          const ScanOptions& opt) {
  require_real(phi);
  if (opt.per_axis < 2) throw BadParams("scan needs at least 2 nodes per axis");
  QFormScan scan;
  scan.q = opt.q;
  scan.min_eigenvalue = std::numeric_limits<double>::infinity();
  bool positive_definite = true;

  std::vector<double> x(sys.n);
  long total = 1;
  for (int v = 0; v < sys.n; ++v) total *= opt.per_axis;
  for (long node = 0; node < total; ++node) {
    long rem = node;
    for (int v = 0; v < sys.n; ++v) {
      int iv = (int)(rem % opt.per_axis);
      rem /= opt.per_axis;
      double lo = sys.box[v][0], hi = sys.box[v][1];
      x[v] = lo + (hi - lo) * iv / (opt.per_axis - 1);
    }
    HermitianSample hs;
    try {
      hs = qform_matrix(sys, phi, x, opt.source);
    } catch (const PoleError&) {
      scan.poles_skipped++;
      continue;
    }
    std::vector<double> eigs = eigen_hermitian(induced_matrix(hs.h, opt.q));
    double spectral = 0;
    for (double l : eigs) spectral = std::max(spectral, std::abs(l));
    double psd_tol = 1e-9 * (spectral > 0 ? spectral : 1.0);
    bool psd = eigs.front() >= -psd_tol;
    if (!psd) scan.non_psd_points++;
    if (eigs.front() <= psd_tol) positive_definite = false;
    scan.min_eigenvalue = std::min(scan.min_eigenvalue, eigs.front());
    // rank condition is on the base form
    std::vector<double> base_eigs = eigen_hermitian(hs.h);
    int rank = numeric_rank_eigs(base_eigs);
    if (rank < sys.r - opt.q + 1) scan.rank_ok = false;
    if (opt.keep_samples) {
      QFormSample s;
      s.point = hs.point;
      s.eigenvalues = eigs;
      s.psd = psd;
      s.rank = rank;
      scan.samples.push_back(std::move(s));
    }
  }
  scan.pconvex = scan.non_psd_points == 0 && positive_definite &&
                 scan.poles_skipped == 0;

  if (opt.critical_point) {
    const std::vector<double>& y = *opt.critical_point;
    HermitianSample hy = qform_matrix(sys, phi, y, opt.source);
    // coefficient-weighted Hessian: entry multiplying xi_k conj(xi_j)
    HermMatrix w(sys.r, std::vector<Cplx>(sys.r, 0.0));
    for (int j = 1; j <= sys.r; ++j) {
      for (int k = 1; k <= sys.r; ++k) {
        Cplx acc = 0.0;
        for (int mu = 1; mu <= sys.n; ++mu) {
          for (int nu = 1; nu <= sys.n; ++nu) {
            RatFun hess = phi.derivative(mu).derivative(nu);
            if (hess.is_zero()) continue;
            acc += sys.op(k).a[mu - 1].evaluate(y) *
                   std::conj(sys.op(j).a[nu - 1].evaluate(y)) *
                   hess.evaluate(y);
          }
        }
        w[j - 1][k - 1] = acc;
      }
    }
    HermMatrix wh(sys.r, std::vector<Cplx>(sys.r, 0.0));
    for (int j = 0; j < sys.r; ++j)
      for (int k = 0; k < sys.r; ++k)
        wh[j][k] = 0.5 * (w[j][k] + std::conj(w[k][j]));
    double diff = 0;
    for (int j = 0; j < sys.r; ++j)
      for (int k = 0; k < sys.r; ++k)
        diff = std::max(diff, std::abs(wh[j][k] - hy.h[j][k]));
    scan.hessian_checked = true;
    scan.hessian_diff = diff;
  }
  return scan;
}

}  // namespace ovdkit

#include "octopus/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include "octopus/parallel.hpp"

namespace octopus {

std::vector<double> symmetric_spectrum(const Eigen::MatrixXd& M,
                                       double sym_tol) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("spectrum of a non-square matrix");
  const double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (asym > sym_tol)
    throw std::invalid_argument("matrix is not symmetric within tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      ((M + M.transpose()) / 2.0).eval(), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

Eigen::MatrixXd laplacian(const AlgebraElement& a, const UnitaryRep& R) {
  if (!a.is_symmetric())
    throw std::invalid_argument("laplacian requires a star-invariant element");
  const int d = R.dim();
  return to_double(a.trivial_eval()) * Eigen::MatrixXd::Identity(d, d) -
         R.evaluate(a);
}

namespace {

// orthonormal basis of the orthogonal complement of the invariant subspace
Eigen::MatrixXd complement_basis(const UnitaryRep& R) {
  const int d = R.dim();
  const int m = R.trivial_multiplicity();
  if (m == 0) return Eigen::MatrixXd::Identity(d, d);
  // all our representations have at most a one-dimensional invariant block,
  // spanned by the normalized all-ones vector; a Householder reflection
  // mapping e_1 onto it supplies the complement in its remaining columns
  const Eigen::VectorXd u = R.invariant_basis().col(0);
  Eigen::VectorXd v = u;
  v(0) -= 1.0;
  Eigen::MatrixXd H = Eigen::MatrixXd::Identity(d, d);
  const double vn2 = v.squaredNorm();
  if (vn2 > 1e-24) H -= (2.0 / vn2) * (v * v.transpose());
  return H.rightCols(d - 1);
}

}  // namespace

SpectrumReport gap_report(const AlgebraElement& a, const UnitaryRep& R,
                          double tol) {
  if (!a.is_positive_symmetric())
    throw std::invalid_argument("spectral gap requires a positive symmetric element");
  SpectrumReport rep;
  rep.rep_label = R.label();
  rep.tol = tol;
  const Eigen::MatrixXd lap = laplacian(a, R);
  rep.eigenvalues = symmetric_spectrum(lap);
  const int m = R.trivial_multiplicity();
  rep.trivial_removed = m;
  if (m >= R.dim()) {
    rep.gap = kGapInfinity;  // only invariant vectors: min over nothing
    return rep;
  }
  if (m == 0) {
    rep.gap = rep.eigenvalues.front();
    return rep;
  }
  const Eigen::MatrixXd Q = complement_basis(R);
  const Eigen::MatrixXd restricted = Q.transpose() * lap * Q;
  rep.gap = symmetric_spectrum(restricted).front();
  return rep;
}

double gap_rep(const AlgebraElement& a, const UnitaryRep& R) {
  return gap_report(a, R).gap;
}

GapMinResult gap_min(const AlgebraElement& a, double tie_tol, int threads) {
  return gap_min(a, all_irreps(a.degree()), tie_tol, threads);
}

GapMinResult gap_min(const AlgebraElement& a,
                     const std::vector<UnitaryRep>& irreps, double tie_tol,
                     int threads) {
  GapMinResult out;
  out.tie_tol = tie_tol;
  const int count = static_cast<int>(irreps.size());
  std::vector<double> gaps(count);
  parallel_for(
      count, [&](int i) { gaps[i] = gap_rep(a, irreps[i]); }, threads);
  for (int i = 0; i < count; ++i) {
    out.per_irrep.emplace_back(*irreps[i].shape(), gaps[i]);
    out.gap = std::min(out.gap, gaps[i]);
  }
  const double tie = tie_tol * std::max(1.0, std::abs(out.gap));
  for (const auto& [beta, g] : out.per_irrep)
    if (g <= out.gap + tie) out.argmin.push_back(beta);
  return out;
}

GammaWitness gamma_member(const AlgebraElement& a, double tol, int threads) {
  return gamma_member(a, all_irreps(a.degree()), tol, threads);
}

GammaWitness gamma_member(const AlgebraElement& a,
                          const std::vector<UnitaryRep>& irreps, double tol,
                          int threads) {
  if (!a.is_symmetric())
    throw std::invalid_argument("gamma membership requires a star-invariant element");
  GammaWitness out;
  out.tol = tol;
  const int count = static_cast<int>(irreps.size());
  std::vector<double> mins(count);
  parallel_for(
      count,
      [&](int i) { mins[i] = symmetric_spectrum(laplacian(a, irreps[i])).front(); },
      threads);
  out.worst_eigenvalue = kGapInfinity;
  for (int i = 0; i < count; ++i) {
    if (mins[i] < out.worst_eigenvalue) {
      out.worst_eigenvalue = mins[i];
      out.worst = *irreps[i].shape();
    }
  }
  out.member = out.worst_eigenvalue >= -tol;
  return out;
}

InterlacingReport interlacing_check(const TranspositionWeights& W,
                                    double tol) {
  const int n = W.degree();
  InterlacingReport rep;
  rep.tol = tol;

  const UnitaryRep Dn = UnitaryRep::defining(n);
  const AlgebraElement w = from_weights(W);
  const TranspositionWeights Wt = theta(W);
  const AlgebraElement wt = from_weights(Wt).lifted(n);

  const Eigen::MatrixXd lap = laplacian(w, Dn);
  const Eigen::MatrixXd lap_t = laplacian(wt, Dn);
  rep.lam = symmetric_spectrum(lap);
  rep.lam_theta = symmetric_spectrum(lap_t);

  rep.interlaced = true;
  for (int k = 0; k < n; ++k) {
    if (rep.lam_theta[k] > rep.lam[k] + tol) rep.interlaced = false;
    if (k + 1 < n && rep.lam[k] > rep.lam_theta[k + 1] + tol)
      rep.interlaced = false;
  }

  // difference must be d d^T / delta_n with d = (-w_1n, ..., -w_{n-1,n}, delta_n)
  const double delta = to_double(W.star_total());
  Eigen::VectorXd d(n);
  for (int i = 1; i < n; ++i) d(i - 1) = -to_double(W.weight(i, n));
  d(n - 1) = delta;
  const Eigen::MatrixXd predicted = d * d.transpose() / delta;
  const Eigen::MatrixXd diff = lap - lap_t;
  rep.rank1_psd = (diff - predicted).cwiseAbs().maxCoeff() <= tol;
  {
    const auto dspec = symmetric_spectrum(diff);
    if (dspec.front() < -tol) rep.rank1_psd = false;
    for (int k = 0; k + 1 < n; ++k)  // all but the top eigenvalue vanish
      if (std::abs(dspec[k]) > tol) rep.rank1_psd = false;
  }

  rep.zero_last_block = lap_t.row(n - 1).cwiseAbs().maxCoeff() <= tol &&
                        lap_t.col(n - 1).cwiseAbs().maxCoeff() <= tol;

  rep.gap_n = gap_rep(w, Dn);
  rep.gap_theta = gap_rep(from_weights(Wt), UnitaryRep::defining(n - 1));
  rep.gap_monotone = rep.gap_n <= rep.gap_theta + tol;

  rep.pass =
      rep.interlaced && rep.rank1_psd && rep.zero_last_block && rep.gap_monotone;
  return rep;
}

}  // namespace octopus

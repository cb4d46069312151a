#include "octopus/kazhdan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "octopus/parallel.hpp"
#include "octopus/rng.hpp"
#include "octopus/spectral.hpp"

namespace octopus {

std::vector<Permutation> all_transpositions(int n) {
  std::vector<Permutation> out;
  out.reserve(n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.push_back(Permutation::transposition(n, i, j));
  return out;
}

bool generates_symmetric_group(const std::vector<Permutation>& Q) {
  if (Q.empty()) return false;
  const int n = Q.front().degree();
  if (n > 8)
    throw std::invalid_argument("generation check by closure capped at n <= 8");
  const BigInt order = factorial(n);
  std::set<Permutation> closure;
  std::vector<Permutation> frontier;
  closure.insert(Permutation::identity(n));
  frontier.push_back(Permutation::identity(n));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& q : Q) {
        Permutation h = q * g;
        if (closure.insert(h).second) next.push_back(std::move(h));
      }
    if (BigInt(closure.size()) == order) return true;
    frontier = std::move(next);
  }
  return BigInt(closure.size()) == order;
}

namespace {

void require_unit(const Eigen::VectorXcd& v, double tol = 1e-10) {
  if (std::abs(v.norm() - 1.0) > tol)
    throw std::invalid_argument("vector must have unit norm");
}

double displacement_sq(const Eigen::MatrixXd& M, const Eigen::VectorXcd& v) {
  const Eigen::VectorXd re = v.real(), im = v.imag();
  return (M * re - re).squaredNorm() + (M * im - im).squaredNorm();
}

}  // namespace

double displacement(const UnitaryRep& R, const Permutation& q,
                    const Eigen::VectorXcd& v) {
  require_unit(v);
  return std::sqrt(displacement_sq(R.matrix(q), v));
}

double displacement_max(const UnitaryRep& R,
                        const std::vector<Permutation>& Q,
                        const Eigen::VectorXcd& v) {
  require_unit(v);
  double worst = 0;
  for (const auto& q : Q)
    worst = std::max(worst, displacement_sq(R.matrix(q), v));
  return std::sqrt(worst);
}

namespace {

// state vector layout: [real part; imaginary part], dimension 2d
struct MinimaxProblem {
  int d = 0;
  std::vector<Eigen::MatrixXd> A;  // (M_q - I)^T (M_q - I) per generator
  Eigen::MatrixXd B;               // invariant basis, d x m

  void project(Eigen::VectorXd& z) const {
    if (B.cols() == 0) return;
    auto re = z.head(d), im = z.tail(d);
    re -= B * (B.transpose() * re);
    im -= B * (B.transpose() * im);
  }

  std::vector<double> squares(const Eigen::VectorXd& z) const {
    std::vector<double> out(A.size());
    const auto re = z.head(d), im = z.tail(d);
    for (std::size_t q = 0; q < A.size(); ++q)
      out[q] = re.dot(A[q] * re) + im.dot(A[q] * im);
    return out;
  }

  // log-sum-exp of beta * squares, shifted for stability; also the softmax
  // gradient in z
  double smoothed(const Eigen::VectorXd& z, double beta,
                  Eigen::VectorXd* grad) const {
    const auto sq = squares(z);
    const double top = *std::max_element(sq.begin(), sq.end());
    double sum = 0;
    std::vector<double> w(sq.size());
    for (std::size_t q = 0; q < sq.size(); ++q) {
      w[q] = std::exp(beta * (sq[q] - top));
      sum += w[q];
    }
    if (grad) {
      grad->setZero(2 * d);
      const auto re = z.head(d), im = z.tail(d);
      for (std::size_t q = 0; q < sq.size(); ++q) {
        const double s = w[q] / sum;
        if (s < 1e-300) continue;
        grad->head(d) += (2.0 * s) * (A[q] * re);
        grad->tail(d) += (2.0 * s) * (A[q] * im);
      }
    }
    return top + std::log(sum) / beta;
  }
};

double gaussian(Rng& rng) {
  const double u1 = (static_cast<double>(rng.next() >> 11) + 0.5) / 9007199254740992.0;
  const double u2 = (static_cast<double>(rng.next() >> 11) + 0.5) / 9007199254740992.0;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

Eigen::VectorXd run_restart(const MinimaxProblem& prob,
                            const KazhdanConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXd z(2 * prob.d);
  for (int i = 0; i < 2 * prob.d; ++i) z(i) = gaussian(rng);
  prob.project(z);
  if (z.norm() < 1e-12) z.setOnes();
  prob.project(z);
  z.normalize();

  for (const double beta : cfg.betas) {
    double step = 0.1;
    Eigen::VectorXd grad(2 * prob.d);
    for (int it = 0; it < cfg.iters_per_stage; ++it) {
      const double f0 = prob.smoothed(z, beta, &grad);
      // Riemannian gradient on the sphere
      grad -= grad.dot(z) * z;
      const double gn = grad.norm();
      if (gn < 1e-15) break;
      bool accepted = false;
      for (int bt = 0; bt < 40; ++bt) {
        Eigen::VectorXd trial = z - (step / gn) * grad;
        prob.project(trial);
        const double tn = trial.norm();
        if (tn > 1e-12) {
          trial /= tn;
          if (prob.smoothed(trial, beta, nullptr) < f0) {
            z = std::move(trial);
            step *= 1.9;
            accepted = true;
            break;
          }
        }
        step *= 0.5;
      }
      if (!accepted) break;  // converged at this temperature
    }
  }
  return z;
}

std::string describe_generators(const std::vector<Permutation>& Q) {
  const int n = Q.empty() ? 0 : Q.front().degree();
  if (!Q.empty() && Q == all_transpositions(n)) {
    std::ostringstream os;
    os << "T_" << n;
    return os.str();
  }
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < Q.size() && i < 8; ++i) {
    if (i) os << ", ";
    os << Q[i].cycle_string();
  }
  if (Q.size() > 8) os << ", ...";
  os << "}";
  return os.str();
}

}  // namespace

KazhdanEstimate kazhdan_rep_estimate(const UnitaryRep& R,
                                     const std::vector<Permutation>& Q,
                                     const KazhdanConfig& cfg) {
  if (Q.empty()) throw std::invalid_argument("empty generating set");
  for (const auto& q : Q)
    if (q.degree() != R.group_degree())
      throw std::invalid_argument("generator degree mismatch");
  if (R.trivial_multiplicity() >= R.dim())
    throw std::invalid_argument(
        "representation has only invariant vectors; no estimate exists");
  if (R.kind() != UnitaryRep::Kind::Irrep && !generates_symmetric_group(Q))
    throw std::invalid_argument("generating set does not generate S_n");

  MinimaxProblem prob;
  prob.d = R.dim();
  prob.B = R.invariant_basis();
  prob.A.reserve(Q.size());
  for (const auto& q : Q) {
    const Eigen::MatrixXd M = R.matrix(q);
    const Eigen::MatrixXd D =
        M - Eigen::MatrixXd::Identity(prob.d, prob.d);
    prob.A.push_back(D.transpose() * D);
  }

  std::vector<Eigen::VectorXd> finals(cfg.restarts);
  std::vector<double> values(cfg.restarts);
  parallel_for(
      cfg.restarts,
      [&](int r) {
        const Eigen::VectorXd z =
            run_restart(prob, cfg, derive_seed(cfg.seed, r));
        const auto sq = prob.squares(z);
        values[r] = std::sqrt(*std::max_element(sq.begin(), sq.end()));
        finals[r] = z;
      },
      cfg.threads);

  int best = 0;
  for (int r = 1; r < cfg.restarts; ++r)
    if (values[r] < values[best]) best = r;

  KazhdanEstimate est;
  est.rep_label = R.label();
  est.generators = describe_generators(Q);
  est.restarts = cfg.restarts;
  est.seed = cfg.seed;
  const Eigen::VectorXd& z = finals[best];
  est.witness.resize(prob.d);
  est.witness.real() = z.head(prob.d);
  est.witness.imag() = z.tail(prob.d);
  est.profile.reserve(Q.size());
  for (const auto& sq : prob.squares(z)) est.profile.push_back(std::sqrt(sq));
  est.kappa = *std::max_element(est.profile.begin(), est.profile.end());
  return est;
}

double conjclass_kazhdan_value(int n) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  return 2.0 / std::sqrt(static_cast<double>(n - 1));
}

Eigen::VectorXcd transposition_gap_minimizer(int n) {
  const UnitaryRep D = UnitaryRep::defining(n);
  AlgebraElement that(n);
  for (const auto& t : all_transpositions(n)) that.add_term(t, 1);
  const Eigen::MatrixXd lap = laplacian(that, D);
  // restrict to the sum-zero subspace and take the lowest eigenvector
  const Eigen::VectorXd u = D.invariant_basis().col(0);
  Eigen::VectorXd v = u;
  v(0) -= 1.0;
  Eigen::MatrixXd H = Eigen::MatrixXd::Identity(n, n);
  if (v.squaredNorm() > 1e-24)
    H -= (2.0 / v.squaredNorm()) * (v * v.transpose());
  const Eigen::MatrixXd Q = H.rightCols(n - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      (Q.transpose() * lap * Q).eval());
  Eigen::VectorXd w = Q * es.eigenvectors().col(0);
  w.normalize();
  Eigen::VectorXcd out(n);
  out.real() = w;
  out.imag().setZero();
  return out;
}

DirectSumProfile rem2_direct_sum_witness(int n, const Eigen::VectorXcd& u,
                                         double gap_tol) {
  if (u.size() != n) throw std::invalid_argument("vector size must equal n");
  require_unit(u);
  if (std::abs(u.sum()) > 1e-9)
    throw std::invalid_argument("vector must lie in the sum-zero subspace");

  // apply the defining action by index: (D(g)u)_i = u_{g^{-1}(i)}
  const auto act = [n](const Permutation& g, const Eigen::VectorXcd& x) {
    Eigen::VectorXcd y(n);
    for (int i = 1; i <= n; ++i) y(g(i) - 1) = x(i - 1);
    return y;
  };

  std::vector<Permutation> group;
  {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
      group.push_back(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
  }
  std::vector<Eigen::VectorXcd> orbit;
  orbit.reserve(group.size());
  for (const auto& g : group) orbit.push_back(act(g, u));

  DirectSumProfile out;
  out.copies = static_cast<int>(group.size());
  const double norm_sq = static_cast<double>(group.size());  // ||Uhat||^2
  for (const auto& q : all_transpositions(n)) {
    double sum = 0;
    for (std::size_t g = 0; g < group.size(); ++g)
      sum += (act(q, orbit[g]) - orbit[g]).squaredNorm();
    out.profile.push_back(std::sqrt(sum / norm_sq));
  }
  const auto [lo, hi] =
      std::minmax_element(out.profile.begin(), out.profile.end());
  out.spread = *hi - *lo;
  out.value = *hi;
  if (std::abs(out.value - conjclass_kazhdan_value(n)) > gap_tol)
    throw std::domain_error(
        "direct-sum profile does not reach the class value: "
        "the input vector is not a gap minimizer");
  return out;
}

StrictCertificate strict_inequality_certificate(int n,
                                                const KazhdanConfig& cfg) {
  if (n < 4)
    throw std::invalid_argument(
        "strict certificate requires n >= 4; equality holds at n = 3");
  const UnitaryRep D = UnitaryRep::defining(n);
  const KazhdanEstimate est =
      kazhdan_rep_estimate(D, all_transpositions(n), cfg);

  StrictCertificate cert;
  cert.threshold = conjclass_kazhdan_value(n);
  cert.best = est.kappa;
  cert.margin = cert.threshold - cert.best;
  cert.conclusive = cert.margin > 0.01;
  cert.witness = est.witness;
  cert.lower_bound = std::sqrt(6.0 / n);
  return cert;
}

SaturationCheck saturation_profile_check(const UnitaryRep& R,
                                         const std::vector<Permutation>& Q,
                                         const KazhdanEstimate& est,
                                         double tol) {
  AlgebraElement qhat(R.group_degree());
  for (const auto& q : Q) qhat.add_term(q, 1);
  SaturationCheck out;
  out.lhs = static_cast<double>(Q.size()) * est.kappa * est.kappa;
  out.rhs = 2.0 * gap_rep(qhat, R);
  out.saturated = std::abs(out.lhs - out.rhs) <= tol * std::max(1.0, out.rhs);
  const auto [lo, hi] =
      std::minmax_element(est.profile.begin(), est.profile.end());
  out.spread = *hi - *lo;
  out.profile_constant = out.spread <= tol;
  return out;
}

}  // namespace octopus

#pragma once

#include <Eigen/Dense>
#include <limits>
#include <string>
#include <vector>

#include "octopus/algebra.hpp"
#include "octopus/reptheory.hpp"

namespace octopus {

inline constexpr double kGapInfinity = std::numeric_limits<double>::infinity();

// all eigenvalues of a symmetric matrix, ascending; throws on asymmetry
std::vector<double> symmetric_spectrum(const Eigen::MatrixXd& M,
                                       double sym_tol = 1e-10);

// trivial_eval(a) * I - R(a); requires a star-invariant
Eigen::MatrixXd laplacian(const AlgebraElement& a, const UnitaryRep& R);

struct SpectrumReport {
  std::string rep_label;
  std::vector<double> eigenvalues;  // full spectrum, ascending
  int trivial_removed = 0;          // dimension of the invariant block
  double gap = kGapInfinity;        // min eigenvalue off the invariant block
  double tol = 1e-9;
};

// spectral gap of the pair (a, R); +infinity when R is a multiple of the
// trivial representation. Requires a positive symmetric.
SpectrumReport gap_report(const AlgebraElement& a, const UnitaryRep& R,
                          double tol = 1e-9);
double gap_rep(const AlgebraElement& a, const UnitaryRep& R);

struct GapMinResult {
  double gap = kGapInfinity;
  std::vector<Partition> argmin;  // all minimizers within tie_tol
  std::vector<std::pair<Partition, double>> per_irrep;
  double tie_tol = 1e-9;
};

// min over irreducibles of gap_rep, with the minimizing partitions
GapMinResult gap_min(const AlgebraElement& a, double tie_tol = 1e-9,
                     int threads = 1);
GapMinResult gap_min(const AlgebraElement& a,
                     const std::vector<UnitaryRep>& irreps,
                     double tie_tol = 1e-9, int threads = 1);

struct GammaWitness {
  bool member = false;
  Partition worst;               // irrep attaining the smallest eigenvalue
  double worst_eigenvalue = 0;   // that smallest eigenvalue
  double tol = 1e-9;
};

// whether every irreducible Laplacian of a is positive semidefinite
GammaWitness gamma_member(const AlgebraElement& a, double tol = 1e-9,
                          int threads = 1);
GammaWitness gamma_member(const AlgebraElement& a,
                          const std::vector<UnitaryRep>& irreps,
                          double tol = 1e-9, int threads = 1);

struct InterlacingReport {
  bool pass = false;
  bool interlaced = false;      // eigenvalue chain of the two Laplacians
  bool rank1_psd = false;       // difference is the predicted rank-1 matrix
  bool zero_last_block = false; // reduced Laplacian ends in a zero row/column
  bool gap_monotone = false;    // gap(w, D_n) <= gap(theta w, D_{n-1})
  std::vector<double> lam;        // spectrum of the Laplacian of w
  std::vector<double> lam_theta;  // spectrum of the reduced Laplacian, lifted
  double gap_n = 0;
  double gap_theta = 0;
  double tol = 1e-9;
};

InterlacingReport interlacing_check(const TranspositionWeights& W,
                                    double tol = 1e-9);

}  // namespace octopus

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "octopus/reptheory.hpp"

namespace octopus {

std::vector<Permutation> all_transpositions(int n);

// closure under products reaches all n! elements (n kept small by callers)
bool generates_symmetric_group(const std::vector<Permutation>& Q);

// max over q in Q of || R(q) v - v ||; v must be a unit vector
double displacement(const UnitaryRep& R, const Permutation& q,
                    const Eigen::VectorXcd& v);
double displacement_max(const UnitaryRep& R,
                        const std::vector<Permutation>& Q,
                        const Eigen::VectorXcd& v);

struct KazhdanConfig {
  int restarts = 32;
  std::uint64_t seed = 1729;
  std::vector<double> betas = {10.0, 1e2, 1e3, 1e4, 1e5, 1e6};
  int iters_per_stage = 600;
  int threads = 1;
};

struct KazhdanEstimate {
  std::string rep_label;
  std::string generators;
  double kappa = 0;              // upper bound: value at the best vector found
  Eigen::VectorXcd witness;      // unit, orthogonal to the invariant subspace
  std::vector<double> profile;   // ||R(q)v - v|| per generator, Q order
  int restarts = 0;
  std::uint64_t seed = 0;
};

// Multi-restart projected descent of a log-sum-exp smoothed maximum over the
// unit sphere of (V^G)-perp, with decreasing temperature. Returns the best
// vector found; deterministic for a fixed config.
KazhdanEstimate kazhdan_rep_estimate(const UnitaryRep& R,
                                     const std::vector<Permutation>& Q,
                                     const KazhdanConfig& cfg = {});

// exact value of the transposition-class Kazhdan constant, 2/sqrt(n-1)
double conjclass_kazhdan_value(int n);

// lowest eigenvector of the transposition-sum Laplacian restricted to the
// sum-zero subspace of the defining representation, returned in defining
// coordinates (real vector, zero imaginary part)
Eigen::VectorXcd transposition_gap_minimizer(int n);

struct DirectSumProfile {
  std::vector<double> profile;  // normalized displacement per transposition
  double value = 0;             // common value of the profile
  double spread = 0;            // max - min over the profile
  int copies = 0;               // number of summands used
};

// Stacks the orbit of u under the group into a direct sum of copies of the
// representation carried by u (given in defining coordinates, sum-zero) and
// measures the displacement profile of the stacked unit vector. The copies
// are indexed by all group elements so that conjugation averages the profile
// over the full transposition class, making it generator-independent.
DirectSumProfile rem2_direct_sum_witness(int n, const Eigen::VectorXcd& u,
                                         double gap_tol = 1e-6);

struct StrictCertificate {
  bool conclusive = false;
  double threshold = 0;   // 2/sqrt(n-1)
  double best = 0;        // smallest max-displacement the optimizer reached
  double margin = 0;      // threshold - best (positive would certify)
  Eigen::VectorXcd witness;
  // quantitative floor: any unit sum-zero vector has max displacement
  // >= sqrt(6/n) by the planar covering-radius argument, so for n >= 4 the
  // searched-for vector cannot exist and the outcome stays inconclusive
  double lower_bound = 0;
};

// Searches for a unit sum-zero vector whose max displacement beats
// 2/sqrt(n-1) - 0.01. Failure to beat the threshold is reported as
// inconclusive, never as a refutation.
StrictCertificate strict_inequality_certificate(int n,
                                                const KazhdanConfig& cfg = {});

struct SaturationCheck {
  bool saturated = false;         // |Q| kappa^2 == 2 psi within tolerance
  bool profile_constant = false;  // witness displacements all equal
  double spread = 0;
  double lhs = 0;  // |Q| kappa^2
  double rhs = 0;  // 2 psi
};

// If the sandwich upper bound is saturated, the optimal profile must be
// constant; a non-constant optimal profile certifies strictness.
SaturationCheck saturation_profile_check(const UnitaryRep& R,
                                         const std::vector<Permutation>& Q,
                                         const KazhdanEstimate& est,
                                         double tol = 1e-6);

}  // namespace octopus

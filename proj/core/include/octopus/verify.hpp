#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octopus/json_io.hpp"
#include "octopus/rng.hpp"
#include "octopus/spectral.hpp"

namespace octopus {

struct ExperimentReport {
  std::string id;
  Json params;
  Json trials = Json::array();
  bool pass = true;
  Json worst;                      // worst-case witness
  std::vector<std::string> lines;  // human-readable rendering

  Json to_json() const;
  std::string to_text() const;
};

// exact rational equality of the convolution square of the octopus element
// against its quartic expansion, at random signed rational tentacle weights
ExperimentReport verify_lemma_w2(int n, int trials, std::uint64_t seed);

// the two eigenvalue-bound tables behind the 4-point and 5-point checks:
// every entry recomputed exactly from characters and cross-checked against
// explicit irreducible matrices
ExperimentReport table1();
ExperimentReport table2();

// the reduced element w - theta(w) has positive semidefinite Laplacians in
// every irreducible, over random nonnegative weights
ExperimentReport verify_octopus(int n, int trials, std::uint64_t seed,
                                double tol = 1e-8, int threads = 1);

// gap over all irreducibles equals the defining-representation gap on random
// connected transposition graphs, with (n-1,1) among the minimizers
ExperimentReport verify_aldous(int n, int trials, std::uint64_t seed,
                               double density = 0.5, double tol = 1e-8,
                               int threads = 1);

// exact per-irrep gaps of a conjugacy-class sum via the scalar image,
// cross-checked against explicit matrices for n <= 6
ExperimentReport classsum_report(const Partition& alpha);

struct SubsetLaw {
  int min_size = 2;
  int max_size = 0;  // 0: up to n
};

// gap identity for nonnegative combinations of subset shuffle sums; tallies
// agreement only, re-verifies any disagreement and persists a witness file
ExperimentReport caputo_trial(int n, int trials, std::uint64_t seed,
                              const SubsetLaw& law = {}, double tol = 1e-8,
                              int threads = 1,
                              const std::string& witness_dir = ".");

// random connected nonnegative rational weights, edge kept with probability
// density (shared by the experiments and the CLI)
TranspositionWeights random_connected_weights(int n, double density, Rng& rng,
                                              int maxden = 64);

}  // namespace octopus

#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "octopus/algebra.hpp"
#include "octopus/numeric.hpp"
#include "octopus/symgroup.hpp"

namespace octopus {

// number of standard Young tableaux of shape beta (hook length formula)
BigInt dimension(const Partition& beta);

// chi^beta(alpha) by recursive border-strip removal, memoized
long long mn_character(const Partition& beta, const Partition& alpha);

// (1/2) sum_i beta_i (beta_i - (2i-1)) = chi^beta(2,1^{n-2}) |T_n| / f_beta
Rational transposition_ratio(const Partition& beta);

// all chi^beta(alpha) for fixed n, with exact row orthogonality
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  const std::vector<Partition>& labels() const { return labels_; }
  long long value(const Partition& beta, const Partition& alpha) const;
  long long value_at(int row, int col) const { return values_[row][col]; }
  bool row_orthogonality_exact() const;
  std::string to_csv() const;

 private:
  int n_;
  std::vector<Partition> labels_;
  std::vector<std::vector<long long>> values_;  // [beta index][alpha index]
};

// Real orthogonal representation of S_n, one of: an irreducible in Young's
// orthogonal form, the n-dimensional defining representation, or the left
// regular representation (capped at n <= 6). Copies share one matrix cache.
class UnitaryRep {
 public:
  enum class Kind { Irrep, Defining, Regular };

  static UnitaryRep irrep(const Partition& beta);
  static UnitaryRep defining(int n);
  static UnitaryRep regular(int n);

  Kind kind() const;
  const std::string& label() const;
  int group_degree() const;  // n of S_n
  int dim() const;
  // shape when kind() == Irrep
  const std::optional<Partition>& shape() const;

  // matrix of the adjacent transposition s_i, i in 1..n-1
  Eigen::MatrixXd generator(int i) const;
  Eigen::MatrixXd matrix(const Permutation& p) const;
  Eigen::MatrixXd evaluate(const AlgebraElement& a) const;

  int trivial_multiplicity() const;
  // orthonormal basis of the invariant subspace, dim x multiplicity
  Eigen::MatrixXd invariant_basis() const;

 private:
  struct Impl;
  explicit UnitaryRep(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

std::vector<UnitaryRep> all_irreps(int n);

}  // namespace octopus

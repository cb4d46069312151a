#pragma once

#include <compare>
#include <string>
#include <vector>

#include "octopus/numeric.hpp"

namespace octopus {

// Element of S_n as an image table: images()[i-1] is the image of i.
// Everything is one-based, matching the usual {1,...,n} conventions.
class Permutation {
 public:
  explicit Permutation(int n);  // identity
  static Permutation identity(int n) { return Permutation(n); }
  static Permutation from_images(std::vector<int> images);
  static Permutation transposition(int n, int i, int j);
  static Permutation from_cycles(int n,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  bool is_even() const;

  Permutation inverse() const;

  // nontrivial cycles, each rotated to start at its minimum, sorted by that
  // minimum; "(1 3)(2 5)" style rendering with "()" for the identity
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// (p * q)(i) = p(q(i)): the right factor acts first.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

// Weakly decreasing positive parts; the empty partition has sum 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int sum() const { return sum_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[i]; }  // zero-based
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::string to_string() const;  // "(3,1)"

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

Partition cycle_type(const Permutation& p);

// all partitions of n, lexicographically decreasing: (n) first, (1^n) last
std::vector<Partition> partitions_of(int n);

// |C^alpha| = n! / prod_k k^{m_k} m_k!  with m = content(alpha)
BigInt class_size(const Partition& alpha);

// content[k-1] = number of parts equal to k
std::vector<int> content(const Partition& alpha);

Partition conjugate(const Partition& alpha);

// partitions of n-1 reachable by decrementing one part
std::vector<Partition> branch_down(const Partition& alpha);

// all permutations of {1..n} fixing the complement of A pointwise
std::vector<Permutation> symmetric_group_on(const std::vector<int>& A, int n);

// those whose restriction to A has cycle type alpha (|A| = sum alpha)
std::vector<Permutation> class_elements_on(const Partition& alpha,
                                           const std::vector<int>& A, int n);

// word of adjacent transpositions s_i = (i,i+1), left-to-right product
// equal to p; length is the inversion count, at most n(n-1)/2
std::vector<int> adjacent_factorization(const Permutation& p);
Permutation compose_word(int n, const std::vector<int>& word);

}  // namespace octopus

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "octopus/numeric.hpp"
#include "octopus/symgroup.hpp"

namespace octopus {

// Sparse element of the rational group algebra of S_n. Keys are ordered by
// image table, so iteration and serialization are canonical; zero
// coefficients are never stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(int n) : n_(n) {}
  static AlgebraElement unit(int n) {
    AlgebraElement a(n);
    a.add_term(Permutation::identity(n), 1);
    return a;
  }
  static AlgebraElement single(const Permutation& p, const Rational& c = 1) {
    AlgebraElement a(p.degree());
    a.add_term(p, c);
    return a;
  }

  int degree() const { return n_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(const Permutation& p) const;
  void add_term(const Permutation& p, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& b);
  AlgebraElement& operator-=(const AlgebraElement& b);
  AlgebraElement& operator*=(const Rational& c);

  AlgebraElement star() const;
  std::vector<Permutation> support() const;
  Rational trivial_eval() const;  // sum of coefficients
  bool is_symmetric() const;      // equals its own star
  bool is_positive_symmetric() const;

  // embed into S_m, m >= n, fixing the new points
  AlgebraElement lifted(int m) const;

  bool operator==(const AlgebraElement&) const = default;

  // hidden friends: keep these out of unqualified overload sets, where the
  // Rational parameter would drag boost's converting constructors into
  // unrelated expression templates
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    a += b;
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a -= b;
    return a;
  }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) {
    a *= c;
    return a;
  }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) {
    a *= c;
    return a;
  }

 private:
  int n_;
  std::map<Permutation, Rational> terms_;
};

// (ab)_g = sum_h a_h b_{h^{-1} g}, exact
AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b);

// J^alpha, alpha a cycle type of S_n with n = alpha.sum()
AlgebraElement class_sum(const Partition& alpha);
// J^alpha_A as an element of S_n
AlgebraElement embedded_class_sum(const Partition& alpha,
                                  const std::vector<int>& A, int n);
// J_{n,A}: every shuffle inside A, |A|! terms
AlgebraElement shuffle_sum(const std::vector<int>& A, int n);

// Nonnegative symmetric edge weights w_ij on {1..n}; the octopus data.
class TranspositionWeights {
 public:
  explicit TranspositionWeights(int n);

  int degree() const { return n_; }
  void set(int i, int j, const Rational& w);
  Rational weight(int i, int j) const;
  const std::map<std::pair<int, int>, Rational>& edges() const {
    return edges_;
  }
  Rational total() const;      // sum of all weights
  Rational star_total() const; // delta = sum_i w_{i,n}
  bool connected() const;      // positive edges span {1..n}

  bool operator==(const TranspositionWeights&) const = default;

 private:
  int n_;
  std::map<std::pair<int, int>, Rational> edges_;  // keyed (i, j), i < j
};

AlgebraElement from_weights(const TranspositionWeights& W);

// w'_ik = w_ik + w_in w_kn / sum_j w_jn, on degree n-1.
// Throws when every w_in vanishes; the reduction is undefined there.
TranspositionWeights theta(const TranspositionWeights& W);

// (sum_i w_in) * (w - theta(w)), computed both from that definition and from
// the explicit expansion in the tentacle weights x_i = w_in; the two routes
// are cross-asserted.
AlgebraElement octopus_hat(const TranspositionWeights& W);

// the same expansion for arbitrary signed tentacle weights, where the
// reduction-map route is unavailable:
//   sum_i x_i^2 (i n) + sum_{i<j} x_i x_j [ (i n) + (j n) - (i j) ]
AlgebraElement octopus_hat_from_x(const std::vector<Rational>& x, int n);

// X_{i,j,k,m} = J^{(3,1)} - 2 J^{(2,2)} on the 4-set {i,j,k,m}
AlgebraElement octopus_X(int i, int j, int k, int m, int degree);
// Y^m_{i,j,k,l} = J^{(3,1,1)} - J^{(2,2,1)} on {i,j,k,l,m} minus X_{i,j,k,l}
AlgebraElement octopus_Y(int i, int j, int k, int l, int m, int degree);

// the quartic expansion of octopus_hat squared, as a function of the
// tentacle weights x (length n-1); sums with too few indices are absent
AlgebraElement quartic_rhs(const std::vector<Rational>& x, int n);

}  // namespace octopus

#include "octopus/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace octopus {

Rational AlgebraElement::coeff(const Permutation& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Permutation& p, const Rational& c) {
  if (p.degree() != n_)
    throw std::invalid_argument("degree mismatch in algebra term");
  if (c == 0) return;
  const auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& b) {
  if (b.n_ != n_) throw std::invalid_argument("degree mismatch in sum");
  for (const auto& [p, c] : b.terms_) add_term(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& b) {
  if (b.n_ != n_) throw std::invalid_argument("degree mismatch in difference");
  for (const auto& [p, c] : b.terms_) add_term(p, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

AlgebraElement AlgebraElement::star() const {
  AlgebraElement out(n_);
  for (const auto& [p, c] : terms_) out.add_term(p.inverse(), c);
  return out;
}

std::vector<Permutation> AlgebraElement::support() const {
  std::vector<Permutation> out;
  out.reserve(terms_.size());
  for (const auto& [p, c] : terms_) out.push_back(p);
  return out;
}

Rational AlgebraElement::trivial_eval() const {
  Rational s = 0;
  for (const auto& [p, c] : terms_) s += c;
  return s;
}

bool AlgebraElement::is_symmetric() const {
  for (const auto& [p, c] : terms_)
    if (coeff(p.inverse()) != c) return false;
  return true;
}

bool AlgebraElement::is_positive_symmetric() const {
  for (const auto& [p, c] : terms_)
    if (c < 0 || coeff(p.inverse()) != c) return false;
  return true;
}

AlgebraElement AlgebraElement::lifted(int m) const {
  if (m < n_) throw std::invalid_argument("cannot lift to a smaller degree");
  AlgebraElement out(m);
  for (const auto& [p, c] : terms_) {
    std::vector<int> img = p.images();
    for (int v = n_ + 1; v <= m; ++v) img.push_back(v);
    out.add_term(Permutation::from_images(std::move(img)), c);
  }
  return out;
}

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in convolution");
  AlgebraElement out(a.degree());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) out.add_term(p * q, cp * cq);
  return out;
}

AlgebraElement class_sum(const Partition& alpha) {
  const int n = alpha.sum();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return embedded_class_sum(alpha, all, n);
}

AlgebraElement embedded_class_sum(const Partition& alpha,
                                  const std::vector<int>& A, int n) {
  AlgebraElement out(n);
  for (const auto& p : class_elements_on(alpha, A, n)) out.add_term(p, 1);
  return out;
}

AlgebraElement shuffle_sum(const std::vector<int>& A, int n) {
  AlgebraElement out(n);
  if (A.empty()) return AlgebraElement::unit(n);
  for (const auto& p : symmetric_group_on(A, n)) out.add_term(p, 1);
  return out;
}

TranspositionWeights::TranspositionWeights(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("need degree >= 2 for edge weights");
}

void TranspositionWeights::set(int i, int j, const Rational& w) {
  if (i == j) throw std::invalid_argument("no diagonal weights");
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw std::invalid_argument("edge index out of range");
  if (w < 0) throw std::invalid_argument("weights must be nonnegative");
  if (i > j) std::swap(i, j);
  if (w == 0)
    edges_.erase({i, j});
  else
    edges_[{i, j}] = w;
}

Rational TranspositionWeights::weight(int i, int j) const {
  if (i > j) std::swap(i, j);
  const auto it = edges_.find({i, j});
  return it == edges_.end() ? Rational(0) : it->second;
}

Rational TranspositionWeights::total() const {
  Rational s = 0;
  for (const auto& [e, w] : edges_) s += w;
  return s;
}

Rational TranspositionWeights::star_total() const {
  Rational s = 0;
  for (int i = 1; i < n_; ++i) s += weight(i, n_);
  return s;
}

namespace {
int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}
}  // namespace

bool TranspositionWeights::connected() const {
  std::vector<int> parent(n_ + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [e, w] : edges_)
    parent[uf_find(parent, e.first)] = uf_find(parent, e.second);
  const int root = uf_find(parent, 1);
  for (int v = 2; v <= n_; ++v)
    if (uf_find(parent, v) != root) return false;
  return true;
}

AlgebraElement from_weights(const TranspositionWeights& W) {
  AlgebraElement out(W.degree());
  for (const auto& [e, w] : W.edges())
    out.add_term(Permutation::transposition(W.degree(), e.first, e.second), w);
  return out;
}

TranspositionWeights theta(const TranspositionWeights& W) {
  const int n = W.degree();
  if (n < 3) throw std::invalid_argument("theta requires degree >= 3");
  const Rational delta = W.star_total();
  if (delta == 0)
    throw std::domain_error(
        "theta undefined: every weight on the reduction point vanishes");
  TranspositionWeights out(n - 1);
  for (int i = 1; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      const Rational w =
          W.weight(i, k) + W.weight(i, n) * W.weight(k, n) / delta;
      if (w != 0) out.set(i, k, w);
    }
  return out;
}

AlgebraElement octopus_hat_from_x(const std::vector<Rational>& x, int n) {
  if (n < 3) throw std::invalid_argument("octopus element requires n >= 3");
  if (static_cast<int>(x.size()) != n - 1)
    throw std::invalid_argument("x must have length n-1");
  AlgebraElement out(n);
  for (int i = 1; i < n; ++i) {
    const Rational& xi = x[i - 1];
    out.add_term(Permutation::transposition(n, i, n), xi * xi);
    for (int j = i + 1; j < n; ++j) {
      const Rational c = xi * x[j - 1];
      if (c == 0) continue;
      out.add_term(Permutation::transposition(n, i, n), c);
      out.add_term(Permutation::transposition(n, j, n), c);
      out.add_term(Permutation::transposition(n, i, j), -c);
    }
  }
  return out;
}

AlgebraElement octopus_hat(const TranspositionWeights& W) {
  const int n = W.degree();
  const Rational delta = W.star_total();

  AlgebraElement by_definition =
      delta * (from_weights(W) - from_weights(theta(W)).lifted(n));

  std::vector<Rational> x(n - 1);
  for (int i = 1; i < n; ++i) x[i - 1] = W.weight(i, n);
  const AlgebraElement by_expansion = octopus_hat_from_x(x, n);

  if (by_definition != by_expansion)
    throw std::logic_error("octopus_hat: definition and expansion disagree");
  return by_definition;
}

namespace {
void require_distinct(std::initializer_list<int> idx, int degree) {
  std::vector<int> v(idx);
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw std::invalid_argument("indices must be distinct");
  if (v.front() < 1 || v.back() > degree)
    throw std::invalid_argument("index out of range");
}
}  // namespace

AlgebraElement octopus_X(int i, int j, int k, int m, int degree) {
  require_distinct({i, j, k, m}, degree);
  const std::vector<int> A = {i, j, k, m};
  return embedded_class_sum(Partition({3, 1}), A, degree) -
         Rational(2) * embedded_class_sum(Partition({2, 2}), A, degree);
}

AlgebraElement octopus_Y(int i, int j, int k, int l, int m, int degree) {
  require_distinct({i, j, k, l, m}, degree);
  const std::vector<int> A5 = {i, j, k, l, m};
  return embedded_class_sum(Partition({3, 1, 1}), A5, degree) -
         embedded_class_sum(Partition({2, 2, 1}), A5, degree) -
         octopus_X(i, j, k, l, degree);
}

AlgebraElement quartic_rhs(const std::vector<Rational>& x, int n) {
  if (n < 3) throw std::invalid_argument("quartic_rhs requires n >= 3");
  if (static_cast<int>(x.size()) != n - 1)
    throw std::invalid_argument("x must have length n-1");

  Rational scalar = 0;
  for (int i = 0; i < n - 1; ++i) {
    scalar += x[i] * x[i] * x[i] * x[i];
    for (int j = 0; j < n - 1; ++j) {
      if (j == i) continue;
      scalar += 2 * x[i] * x[i] * x[i] * x[j];
      if (i < j) scalar += 3 * x[i] * x[i] * x[j] * x[j];
    }
  }
  AlgebraElement out = scalar * AlgebraElement::unit(n);

  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (j == i) continue;
      for (int k = j + 1; k < n; ++k) {
        if (k == i) continue;
        const Rational c = x[i - 1] * x[i - 1] * x[j - 1] * x[k - 1];
        if (c == 0) continue;
        out += c * octopus_X(i, j, k, n, n);
        out += (2 * c) * AlgebraElement::unit(n);
      }
    }

  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const Rational c =
              2 * x[i - 1] * x[j - 1] * x[k - 1] * x[l - 1];
          if (c == 0) continue;
          out += c * octopus_Y(i, j, k, l, n, n);
        }

  return out;
}

}  // namespace octopus

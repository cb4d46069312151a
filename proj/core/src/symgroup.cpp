#include "octopus/symgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace octopus {

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  images_.resize(n);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw std::invalid_argument("empty image table");
  std::vector<char> seen(n + 1, 0);
  for (int v : images) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("image table is not a bijection of {1..n}");
    seen[v] = 1;
  }
  Permutation p(n);
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("bad transposition indices");
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::from_cycles(int n,
                                     const std::vector<std::vector<int>>& cycles) {
  Permutation p(n);
  std::vector<char> used(n + 1, 0);
  for (const auto& c : cycles) {
    for (int v : c) {
      if (v < 1 || v > n || used[v])
        throw std::invalid_argument("bad cycle entry");
      used[v] = 1;
    }
    const int k = static_cast<int>(c.size());
    for (int t = 0; t < k; ++t) p.images_[c[t] - 1] = c[(t + 1) % k];
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

bool Permutation::is_even() const {
  int transpositions = 0;
  for (const auto& c : cycles()) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0;
}

Permutation Permutation::inverse() const {
  Permutation q(degree());
  for (int i = 1; i <= degree(); ++i) q.images_[images_[i - 1] - 1] = i;
  return q;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree() + 1, 0);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int v = start;
    do {
      seen[v] = 1;
      cyc.push_back(v);
      v = images_[v - 1];
    } while (v != start);
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (t) os << ' ';
      os << c[t];
    }
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> img(p.degree());
  for (int i = 1; i <= p.degree(); ++i) img[i - 1] = p(q(i));
  return Permutation::from_images(std::move(img));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition part < 1");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    sum_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  std::vector<char> seen(p.degree() + 1, 0);
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[start]) continue;
    int len = 0, v = start;
    do {
      seen[v] = 1;
      ++len;
      v = p(v);
    } while (v != start);
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(lengths);
}

namespace {
void emit_partitions(int remaining, int cap, std::vector<int>& acc,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int next = std::min(cap, remaining); next >= 1; --next) {
    acc.push_back(next);
    emit_partitions(remaining - next, next, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of requires n >= 1");
  std::vector<Partition> out;
  std::vector<int> acc;
  emit_partitions(n, n, acc, out);
  return out;
}

BigInt class_size(const Partition& alpha) {
  const int n = alpha.sum();
  BigInt denom = 1;
  const auto m = content(alpha);
  for (int k = 1; k <= static_cast<int>(m.size()); ++k) {
    const int mk = m[k - 1];
    for (int t = 0; t < mk; ++t) denom *= k;
    denom *= factorial(mk);
  }
  return factorial(n) / denom;
}

std::vector<int> content(const Partition& alpha) {
  std::vector<int> m(alpha.empty() ? 0 : alpha[0], 0);
  for (int part : alpha.parts()) ++m[part - 1];
  return m;
}

Partition conjugate(const Partition& alpha) {
  if (alpha.empty()) return alpha;
  std::vector<int> cols(alpha[0], 0);
  for (int part : alpha.parts())
    for (int c = 0; c < part; ++c) ++cols[c];
  return Partition(cols);
}

std::vector<Partition> branch_down(const Partition& alpha) {
  if (alpha.sum() < 2)
    throw std::invalid_argument("branch_down requires n >= 2");
  std::vector<Partition> out;
  for (int i = 0; i < alpha.length(); ++i) {
    std::vector<int> parts = alpha.parts();
    if (i + 1 < alpha.length() && parts[i] - 1 < parts[i + 1]) continue;
    --parts[i];
    if (parts[i] == 0) parts.erase(parts.begin() + i);
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Permutation> symmetric_group_on(const std::vector<int>& A, int n) {
  for (int v : A)
    if (v < 1 || v > n) throw std::invalid_argument("index set out of range");
  std::vector<int> sorted = A;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("index set has repeats");

  std::vector<Permutation> out;
  std::vector<int> arrangement = sorted;
  do {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (std::size_t t = 0; t < sorted.size(); ++t)
      img[sorted[t] - 1] = arrangement[t];
    out.push_back(Permutation::from_images(std::move(img)));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> class_elements_on(const Partition& alpha,
                                           const std::vector<int>& A, int n) {
  if (static_cast<int>(A.size()) != alpha.sum())
    throw std::invalid_argument("|A| must equal the size of the partition");
  // restriction to A has type alpha  <=>  full type is alpha plus fixed points
  std::vector<int> full = alpha.parts();
  for (int t = 0; t < n - alpha.sum(); ++t) full.push_back(1);
  std::sort(full.rbegin(), full.rend());
  const Partition target(full);

  std::vector<Permutation> out;
  for (const auto& p : symmetric_group_on(A, n))
    if (cycle_type(p) == target) out.push_back(p);
  return out;
}

std::vector<int> adjacent_factorization(const Permutation& p) {
  // bubble-sort the image table; p * (recorded swaps) = id, so reversing the
  // record gives a word for p
  std::vector<int> img = p.images();
  const int n = p.degree();
  std::vector<int> record;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);
        record.push_back(i + 1);
        moved = true;
      }
    }
  }
  std::reverse(record.begin(), record.end());
  return record;
}

Permutation compose_word(int n, const std::vector<int>& word) {
  Permutation p(n);
  for (int i : word) p = p * Permutation::transposition(n, i, i + 1);
  return p;
}

}  // namespace octopus

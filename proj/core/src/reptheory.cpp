#include "octopus/reptheory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace octopus {

BigInt dimension(const Partition& beta) {
  const int n = beta.sum();
  if (n == 0) return 1;
  const Partition conj = conjugate(beta);
  BigInt hooks = 1;
  for (int r = 0; r < beta.length(); ++r)
    for (int c = 0; c < beta[r]; ++c) {
      const int arm = beta[r] - c - 1;
      const int leg = conj[c] - r - 1;
      hooks *= arm + leg + 1;
    }
  return factorial(n) / hooks;
}

namespace {

// First-column hook lengths ("beads"): strictly decreasing.
std::vector<int> beads_of(const Partition& beta) {
  const int r = beta.length();
  std::vector<int> b(r);
  for (int i = 0; i < r; ++i) b[i] = beta[i] + (r - 1 - i);
  return b;
}

Partition partition_from_beads(std::vector<int> beads) {
  std::sort(beads.rbegin(), beads.rend());
  const int r = static_cast<int>(beads.size());
  std::vector<int> parts;
  for (int i = 0; i < r; ++i) {
    const int part = beads[i] - (r - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(parts);
}

long long mn_rec(const Partition& beta, const Partition& alpha,
                 std::map<std::pair<Partition, Partition>, long long>& memo) {
  if (alpha.empty()) return beta.empty() ? 1 : 0;
  const auto key = std::make_pair(beta, alpha);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;

  const int strip = alpha[0];
  std::vector<int> rest(alpha.parts().begin() + 1, alpha.parts().end());
  const Partition alpha_rest(rest);

  const std::vector<int> beads = beads_of(beta);
  long long total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int target = beads[i] - strip;
    if (target < 0) continue;
    if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    int height = 0;  // rows spanned minus one = beads passed over
    for (int b : beads)
      if (b > target && b < beads[i]) ++height;
    std::vector<int> next = beads;
    next[i] = target;
    const long long sub = mn_rec(partition_from_beads(next), alpha_rest, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

std::map<std::pair<Partition, Partition>, long long>& mn_memo() {
  static std::map<std::pair<Partition, Partition>, long long> memo;
  return memo;
}
std::mutex& mn_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

long long mn_character(const Partition& beta, const Partition& alpha) {
  if (beta.sum() != alpha.sum())
    throw std::invalid_argument("character arguments must partition the same n");
  std::lock_guard<std::mutex> lock(mn_mutex());
  return mn_rec(beta, alpha, mn_memo());
}

Rational transposition_ratio(const Partition& beta) {
  Rational s = 0;
  for (int i = 1; i <= beta.length(); ++i) {
    const Rational bi = beta[i - 1];
    s += bi * (bi - (2 * i - 1));
  }
  return s / 2;
}

CharacterTable::CharacterTable(int n) : n_(n), labels_(partitions_of(n)) {
  values_.resize(labels_.size());
  for (std::size_t b = 0; b < labels_.size(); ++b) {
    values_[b].resize(labels_.size());
    for (std::size_t a = 0; a < labels_.size(); ++a)
      values_[b][a] = mn_character(labels_[b], labels_[a]);
  }
}

long long CharacterTable::value(const Partition& beta,
                                const Partition& alpha) const {
  const auto bi = std::find(labels_.begin(), labels_.end(), beta);
  const auto ai = std::find(labels_.begin(), labels_.end(), alpha);
  if (bi == labels_.end() || ai == labels_.end())
    throw std::invalid_argument("partition not in table");
  return values_[bi - labels_.begin()][ai - labels_.begin()];
}

bool CharacterTable::row_orthogonality_exact() const {
  const BigInt order = factorial(n_);
  std::vector<BigInt> sizes;
  sizes.reserve(labels_.size());
  for (const auto& alpha : labels_) sizes.push_back(class_size(alpha));
  for (std::size_t b1 = 0; b1 < labels_.size(); ++b1)
    for (std::size_t b2 = b1; b2 < labels_.size(); ++b2) {
      BigInt dot = 0;
      for (std::size_t a = 0; a < labels_.size(); ++a)
        dot += sizes[a] * values_[b1][a] * values_[b2][a];
      if (dot != (b1 == b2 ? order : BigInt(0))) return false;
    }
  return true;
}

std::string CharacterTable::to_csv() const {
  std::ostringstream os;
  os << "beta\\alpha";
  for (const auto& alpha : labels_) os << ',' << '"' << alpha.to_string() << '"';
  os << '\n';
  for (std::size_t b = 0; b < labels_.size(); ++b) {
    os << '"' << labels_[b].to_string() << '"';
    for (std::size_t a = 0; a < labels_.size(); ++a) os << ',' << values_[b][a];
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Young's orthogonal form

namespace {

struct TableauSet {
  // rowof[t][v-1], colof[t][v-1]: zero-based cell of value v in tableau t
  std::vector<std::vector<int>> rowof, colof;
  std::map<std::vector<int>, int> index;  // rowof vector -> tableau index
};

void grow_tableaux(const Partition& shape, std::vector<int>& lens,
                   std::vector<int>& rowof, std::vector<int>& colof, int v,
                   TableauSet& out) {
  const int n = shape.sum();
  if (v > n) {
    out.index.emplace(rowof, static_cast<int>(out.rowof.size()));
    out.rowof.push_back(rowof);
    out.colof.push_back(colof);
    return;
  }
  for (int r = 0; r < shape.length(); ++r) {
    if (lens[r] >= shape[r]) continue;
    if (r > 0 && lens[r] >= lens[r - 1]) continue;
    rowof[v - 1] = r;
    colof[v - 1] = lens[r];
    ++lens[r];
    grow_tableaux(shape, lens, rowof, colof, v + 1, out);
    --lens[r];
  }
}

TableauSet standard_tableaux(const Partition& shape) {
  TableauSet out;
  std::vector<int> lens(shape.length(), 0);
  std::vector<int> rowof(shape.sum()), colof(shape.sum());
  grow_tableaux(shape, lens, rowof, colof, 1, out);
  return out;
}

}  // namespace

struct UnitaryRep::Impl {
  Kind kind;
  std::string label;
  int n = 0;
  int dim = 0;
  std::optional<Partition> shape;
  std::vector<Eigen::MatrixXd> generators;  // irreps only

  // regular representation: element <-> index, sorted by image table
  std::vector<Permutation> elements;
  std::map<Permutation, int> element_index;

  mutable std::map<std::vector<int>, Eigen::MatrixXd> cache;
  mutable std::mutex cache_mutex;

  Eigen::MatrixXd direct_matrix(const Permutation& p) const {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
    if (kind == Kind::Defining) {
      for (int i = 1; i <= n; ++i) M(p(i) - 1, i - 1) = 1.0;
    } else {  // Regular: L(p) e_h = e_{p h}
      for (int h = 0; h < dim; ++h) {
        const int g = element_index.at(p * elements[h]);
        M(g, h) = 1.0;
      }
    }
    return M;
  }
};

UnitaryRep UnitaryRep::irrep(const Partition& beta) {
  const int n = beta.sum();
  if (n < 1) throw std::invalid_argument("irrep of the empty partition");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Irrep;
  impl->label = beta.to_string();
  impl->n = n;
  impl->shape = beta;

  const TableauSet tabs = standard_tableaux(beta);
  const int f = static_cast<int>(tabs.rowof.size());
  impl->dim = f;

  impl->generators.reserve(std::max(0, n - 1));
  for (int k = 1; k < n; ++k) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(f, f);
    for (int t = 0; t < f; ++t) {
      const int rk = tabs.rowof[t][k - 1], ck = tabs.colof[t][k - 1];
      const int rk1 = tabs.rowof[t][k], ck1 = tabs.colof[t][k];
      if (rk == rk1) {
        M(t, t) = 1.0;
      } else if (ck == ck1) {
        M(t, t) = -1.0;
      } else {
        const int d = (ck1 - rk1) - (ck - rk);  // axial distance, |d| >= 2
        std::vector<int> swapped = tabs.rowof[t];
        std::swap(swapped[k - 1], swapped[k]);
        const int u = tabs.index.at(swapped);
        M(t, t) = 1.0 / d;
        M(t, u) = std::sqrt(1.0 - 1.0 / (static_cast<double>(d) * d));
      }
    }
    impl->generators.push_back(std::move(M));
  }
  return UnitaryRep(std::move(impl));
}

UnitaryRep UnitaryRep::defining(int n) {
  if (n < 2) throw std::invalid_argument("defining representation needs n >= 2");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Defining;
  impl->label = "defining";
  impl->n = n;
  impl->dim = n;
  return UnitaryRep(std::move(impl));
}

UnitaryRep UnitaryRep::regular(int n) {
  if (n < 2) throw std::invalid_argument("regular representation needs n >= 2");
  if (n > 6)
    throw std::invalid_argument(
        "regular representation capped at n <= 6; use the irrep decomposition");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Regular;
  impl->label = "regular";
  impl->n = n;

  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<int> img = base;
  do {
    impl->elements.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(impl->elements.begin(), impl->elements.end());
  impl->dim = static_cast<int>(impl->elements.size());
  for (int i = 0; i < impl->dim; ++i)
    impl->element_index.emplace(impl->elements[i], i);
  return UnitaryRep(std::move(impl));
}

UnitaryRep::Kind UnitaryRep::kind() const { return impl_->kind; }
const std::string& UnitaryRep::label() const { return impl_->label; }
int UnitaryRep::group_degree() const { return impl_->n; }
int UnitaryRep::dim() const { return impl_->dim; }
const std::optional<Partition>& UnitaryRep::shape() const {
  return impl_->shape;
}

Eigen::MatrixXd UnitaryRep::generator(int i) const {
  if (i < 1 || i >= impl_->n)
    throw std::invalid_argument("generator index out of range");
  if (impl_->kind == Kind::Irrep) return impl_->generators[i - 1];
  return impl_->direct_matrix(
      Permutation::transposition(impl_->n, i, i + 1));
}

Eigen::MatrixXd UnitaryRep::matrix(const Permutation& p) const {
  if (p.degree() != impl_->n)
    throw std::invalid_argument("degree mismatch in representation matrix");
  if (impl_->kind != Kind::Irrep) return impl_->direct_matrix(p);

  std::lock_guard<std::mutex> lock(impl_->cache_mutex);
  const auto it = impl_->cache.find(p.images());
  if (it != impl_->cache.end()) return it->second;
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(impl_->dim, impl_->dim);
  for (int i : adjacent_factorization(p)) M = M * impl_->generators[i - 1];
  impl_->cache.emplace(p.images(), M);
  return M;
}

Eigen::MatrixXd UnitaryRep::evaluate(const AlgebraElement& a) const {
  if (a.degree() != impl_->n)
    throw std::invalid_argument("degree mismatch in evaluation");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(impl_->dim, impl_->dim);
  for (const auto& [p, c] : a.terms()) out += to_double(c) * matrix(p);
  return out;
}

int UnitaryRep::trivial_multiplicity() const {
  switch (impl_->kind) {
    case Kind::Irrep:
      return (impl_->shape->length() == 1) ? 1 : 0;
    case Kind::Defining:
    case Kind::Regular:
      return 1;
  }
  return 0;
}

Eigen::MatrixXd UnitaryRep::invariant_basis() const {
  const int m = trivial_multiplicity();
  Eigen::MatrixXd B(impl_->dim, m);
  if (m == 1)
    B.col(0) =
        Eigen::VectorXd::Constant(impl_->dim, 1.0 / std::sqrt(impl_->dim));
  return B;
}

std::vector<UnitaryRep> all_irreps(int n) {
  std::vector<UnitaryRep> out;
  for (const auto& beta : partitions_of(n)) out.push_back(UnitaryRep::irrep(beta));
  return out;
}

}  // namespace octopus

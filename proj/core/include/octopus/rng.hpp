#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "octopus/numeric.hpp"

namespace octopus {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Stream for trial k of a seeded experiment. Parallel and serial runs agree
// because every trial draws from its own engine.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

// mt19937_64 has a standardized output sequence; all derived draws below
// avoid std::uniform_*_distribution, whose mapping is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // uniform on {lo, ..., hi}, rejection sampled
  int uniform_int(int lo, int hi) {
    const std::uint64_t m = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t lim = UINT64_MAX - UINT64_MAX % m;
    std::uint64_t u;
    do {
      u = next();
    } while (u >= lim);
    return lo + static_cast<int>(u % m);
  }

  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return static_cast<double>(next()) < p * 18446744073709551616.0;  // 2^64
  }

  // uniform-ish rational in (0, 1] with denominator at most maxden
  Rational unit_rational(int maxden = 64) {
    const int den = uniform_int(1, maxden);
    const int num = uniform_int(1, den);
    return Rational(num, den);
  }

  // random k-subset of {1..n}, ascending
  std::vector<int> sample_subset(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    for (int i = 0; i < k; ++i) {
      const int j = uniform_int(i, n - 1);
      std::swap(pool[i], pool[j]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace octopus

// Acceptance suite: one check per numbered criterion, each printing a single
// PASS/FAIL line with its measured runtime. Run all with no arguments or one
// criterion with `acceptance <id>` where id is 1..7, 8a, 8b, 8c, 9, 10, 11.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "octopus/kazhdan.hpp"
#include "octopus/parallel.hpp"
#include "octopus/verify.hpp"

using namespace octopus;

namespace {

constexpr std::uint64_t kSeed = 1729;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

AlgebraElement transposition_sum(int n) {
  AlgebraElement a(n);
  for (const auto& t : all_transpositions(n)) a.add_term(t, 1);
  return a;
}

Eigen::VectorXcd remark_vector_n3() {
  Eigen::VectorXcd u(3);
  const double a = 2.0 * M_PI / 3.0;
  u << std::complex<double>(1, 0), std::polar(1.0, a), std::polar(1.0, -a);
  return u / std::sqrt(3.0);
}

Outcome criterion_1_tables() {
  const auto start = Clock::now();
  const bool ok = table1().pass && table2().pass;
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "both tables exact, lambda* cross-check <= 1e-9, " << elapsed << "s";
  return {ok && elapsed < 1.0, os.str()};
}

Outcome criterion_2_lemma() {
  const auto start = Clock::now();
  bool ok = true;
  for (int n = 3; n <= 6; ++n) ok = ok && verify_lemma_w2(n, 25, kSeed).pass;
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "25 exact identities per n in {3..6}, " << elapsed << "s";
  return {ok && elapsed < 120.0, os.str()};
}

Outcome criterion_3_octopus() {
  const auto start = Clock::now();
  bool ok = true;
  double worst = kGapInfinity;
  for (int n = 3; n <= 7; ++n) {
    const auto rep = verify_octopus(n, 50, kSeed, 1e-8, default_threads());
    ok = ok && rep.pass;
    worst = std::min(worst, rep.worst.at("min_eigenvalue").get<double>());
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "50 weight vectors per n in {3..7}, worst eigenvalue " << worst << ", "
     << elapsed << "s";
  return {ok && elapsed < 300.0, os.str()};
}

Outcome criterion_4_aldous() {
  const auto start = Clock::now();
  bool ok = true;
  double worst = 0;
  for (int n = 3; n <= 7; ++n) {
    const auto rep = verify_aldous(n, 100, kSeed, 0.5, 1e-8, default_threads());
    ok = ok && rep.pass;
    worst = std::max(worst, rep.worst.at("residual").get<double>());
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "100 connected graphs per n in {3..7}, worst relative residual "
     << worst << ", " << elapsed << "s";
  return {ok && elapsed < 600.0, os.str()};
}

Outcome criterion_5_complete_gap() {
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream os;
  for (int n = 2; n <= 8; ++n) {
    // exact route: |T_n| - max_{beta != (n)} ratio(beta) over the hook
    const Rational tn = Rational(n) * (n - 1) / 2;
    Rational exact_gap;
    Partition exact_argmin;
    bool first = true;
    for (const auto& beta : partitions_of(n)) {
      if (beta.length() == 1) continue;
      const Rational gap = tn - transposition_ratio(beta);
      if (first || gap < exact_gap) {
        exact_gap = gap;
        exact_argmin = beta;
        first = false;
      }
    }
    if (exact_gap != n) ok = false;
    if (exact_argmin != Partition({n - 1, 1})) ok = false;

    const GapMinResult gm = gap_min(transposition_sum(n), 1e-9,
                                    default_threads());
    if (std::abs(gm.gap - n) > 1e-9) ok = false;
  }
  const double elapsed = seconds_since(start);
  os << "psi(T_n) = n exactly and within 1e-9 for n = 2..8, " << elapsed
     << "s";
  return {ok, os.str()};
}

Outcome criterion_6_classsum() {
  const auto start = Clock::now();
  bool ok = true;
  const auto odd = classsum_report(Partition({4, 1}));
  ok = ok && odd.pass;
  ok = ok && odd.worst.at("gap_min").get<std::string>() == "24";
  ok = ok && odd.worst.at("gap_defining").get<std::string>() == "30";
  bool hook_argmin = false;
  for (const auto& b : odd.worst.at("argmin"))
    if (partition_from_json(b) == Partition({2, 2, 1})) hook_argmin = true;
  ok = ok && hook_argmin;
  ok = ok && std::abs(odd.worst.at("gap_min_float").get<double>() - 24) < 1e-9;
  ok = ok &&
       std::abs(odd.worst.at("gap_defining_float").get<double>() - 30) < 1e-9;

  // even classes: exact zero attained at the sign representation
  for (int n = 4; n <= 5; ++n) {
    for (const auto& alpha : partitions_of(n)) {
      int transpositions = 0;
      for (int part : alpha.parts()) transpositions += part - 1;
      if (transpositions % 2 != 0) continue;  // odd class
      const auto rep = classsum_report(alpha);
      if (rep.worst.at("gap_min").get<std::string>() != "0") ok = false;
      bool sign_in = false;
      for (const auto& b : rep.worst.at("argmin"))
        if (partition_from_json(b) == conjugate(Partition({n}))) sign_in = true;
      ok = ok && sign_in;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "J^(4,1): 24 at (2,2,1) vs 30 on defining; even classes exactly 0 at "
        "the sign representation, "
     << elapsed << "s";
  return {ok, os.str()};
}

Outcome criterion_7_interlacing() {
  const auto start = Clock::now();
  bool ok = true;
  for (int n = 3; n <= 7; ++n)
    for (int t = 0; t < 50; ++t) {
      Rng rng(derive_seed(kSeed + n, t));
      TranspositionWeights W(n);
      do {
        W = TranspositionWeights(n);
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j)
            if (rng.bernoulli(0.5)) W.set(i, j, rng.unit_rational());
      } while (W.star_total() == 0);
      const auto rep = interlacing_check(W, 1e-9);
      ok = ok && rep.pass;
    }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "chain + rank-1 PSD + gap monotonicity on 50 instances per n in "
        "{3..7}, "
     << elapsed << "s";
  return {ok, os.str()};
}

KazhdanConfig acceptance_config() {
  KazhdanConfig cfg;
  cfg.seed = kSeed;
  cfg.threads = default_threads();
  return cfg;
}

Outcome criterion_8a_remark_vector() {
  const auto start = Clock::now();
  bool ok = true;
  const auto u = remark_vector_n3();
  const UnitaryRep D3 = UnitaryRep::defining(3);
  const double target = std::sqrt(2.0);
  for (const auto& q : all_transpositions(3))
    if (std::abs(displacement(D3, q, u) - target) > 1e-10) ok = false;

  const KazhdanEstimate est =
      kazhdan_rep_estimate(D3, all_transpositions(3), acceptance_config());
  const bool opt_ok = std::abs(est.kappa - conjclass_kazhdan_value(3)) <= 1e-4;
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "explicit vector displaces by sqrt(2) on every transposition; "
        "optimizer reached "
     << est.kappa << ", " << elapsed << "s";
  return {ok && opt_ok, os.str()};
}

Outcome criterion_8b_direct_sum() {
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream os;
  for (int n = 3; n <= 5; ++n) {
    const Eigen::VectorXcd u =
        n == 3 ? remark_vector_n3() : transposition_gap_minimizer(n);
    const auto ds = rem2_direct_sum_witness(n, u);
    const bool good = ds.spread < 1e-9 &&
                      std::abs(ds.value - conjclass_kazhdan_value(n)) < 1e-6;
    ok = ok && good;
    os << "n=" << n << ": value " << ds.value << " spread " << ds.spread
       << "; ";
  }
  os << seconds_since(start) << "s";
  return {ok, os.str()};
}

Outcome criterion_8c_strict_certificates() {
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream os;
  for (int n = 4; n <= 5; ++n) {
    const auto cert = strict_inequality_certificate(n, acceptance_config());
    // the criterion under test: a unit sum-zero vector with max displacement
    // at most 2/sqrt(n-1) - 0.01
    const bool found = cert.conclusive && cert.margin > 0.01;
    ok = ok && found;
    os << "n=" << n << ": best " << cert.best << " vs threshold "
       << cert.threshold << " (margin " << cert.margin << "); ";
  }
  // No such vector exists: every unit sum-zero vector has max displacement
  // >= sqrt(2) * covering-radius >= sqrt(6/n) by Jung's theorem in the
  // plane, and sqrt(6/n) > 2/sqrt(n-1) for n >= 4; 2/sqrt(n-1) is also the
  // global infimum over all representations without invariant vectors. The
  // strict inequality goes the other way: the single-copy representation
  // sits strictly ABOVE the class constant. This check is kept as stated
  // and is expected to fail; the inconclusive certificate plus the floor
  // sqrt(6/n) printed above is the honest outcome.
  os << seconds_since(start) << "s";
  return {ok, os.str()};
}

Outcome criterion_9_sandwich() {
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream os;
  for (int n = 3; n <= 5; ++n) {
    const auto Q = all_transpositions(n);
    const UnitaryRep D = UnitaryRep::defining(n);
    const auto est = kazhdan_rep_estimate(D, Q, acceptance_config());
    const double psi = gap_rep(transposition_sum(n), D);
    const double k2 = est.kappa * est.kappa;
    const bool good = k2 >= 2.0 * psi / static_cast<double>(Q.size()) - 1e-6 &&
                      k2 <= 2.0 * psi + 1e-6;
    ok = ok && good;
    os << "n=" << n << ": kappa^2 = " << k2 << " in [" << 2.0 * psi / Q.size()
       << ", " << 2.0 * psi << "]; ";
  }
  os << seconds_since(start) << "s";
  return {ok, os.str()};
}

Outcome criterion_10_characters() {
  const auto start = Clock::now();
  bool ok = true;
  for (int n = 2; n <= 8; ++n)
    if (!CharacterTable(n).row_orthogonality_exact()) ok = false;
  for (int n = 1; n <= 10; ++n) {
    BigInt total = 0;
    for (const auto& beta : partitions_of(n)) {
      const BigInt f = dimension(beta);
      total += f * f;
    }
    if (total != factorial(n)) ok = false;
  }
  // trace against the recursion
  for (int n = 2; n <= 6; ++n)
    for (const auto& beta : partitions_of(n)) {
      const UnitaryRep R = UnitaryRep::irrep(beta);
      for (const auto& alpha : partitions_of(n)) {
        std::vector<std::vector<int>> cycles;
        int next = 1;
        for (int part : alpha.parts()) {
          std::vector<int> c(part);
          std::iota(c.begin(), c.end(), next);
          next += part;
          if (part > 1) cycles.push_back(c);
        }
        const double tr =
            R.matrix(Permutation::from_cycles(n, cycles)).trace();
        if (std::abs(tr - mn_character(beta, alpha)) > 1e-9) ok = false;
      }
    }
  // branching-rule spectrum consistency
  Rng rng(kSeed);
  for (int n = 3; n <= 6; ++n) {
    AlgebraElement a(n - 1);
    for (int t = 0; t < 3; ++t) {
      std::vector<int> img(n - 1);
      std::iota(img.begin(), img.end(), 1);
      for (int i = n - 2; i > 0; --i)
        std::swap(img[i], img[rng.uniform_int(0, i)]);
      const auto p = Permutation::from_images(img);
      const Rational c = rng.unit_rational();
      a.add_term(p, c);
      a.add_term(p.inverse(), c);
    }
    const AlgebraElement lifted = a.lifted(n);
    for (const auto& alpha : partitions_of(n)) {
      auto whole = symmetric_spectrum(UnitaryRep::irrep(alpha).evaluate(lifted));
      std::vector<double> pieces;
      for (const auto& beta : branch_down(alpha))
        for (double ev :
             symmetric_spectrum(UnitaryRep::irrep(beta).evaluate(a)))
          pieces.push_back(ev);
      std::sort(pieces.begin(), pieces.end());
      if (whole.size() != pieces.size()) {
        ok = false;
        continue;
      }
      for (std::size_t i = 0; i < whole.size(); ++i)
        if (std::abs(whole[i] - pieces[i]) > 1e-9) ok = false;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "orthogonality exact to n=8, sum f^2 = n! to n=10, trace and "
        "branching checks to n=6, "
     << elapsed << "s";
  return {ok, os.str()};
}

Outcome criterion_11_caputo() {
  const auto start = Clock::now();
  const auto rep = caputo_trial(5, 20, kSeed, {}, 1e-8, default_threads(), ".");
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "20 shuffle-sum families at n=5, "
     << (rep.pass ? "zero disagreements" : "DISAGREEMENT (witness persisted)")
     << ", " << elapsed << "s";
  return {rep.pass, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> all = {
      {"1", criterion_1_tables},
      {"2", criterion_2_lemma},
      {"3", criterion_3_octopus},
      {"4", criterion_4_aldous},
      {"5", criterion_5_complete_gap},
      {"6", criterion_6_classsum},
      {"7", criterion_7_interlacing},
      {"8a", criterion_8a_remark_vector},
      {"8b", criterion_8b_direct_sum},
      {"8c", criterion_8c_strict_certificates},
      {"9", criterion_9_sandwich},
      {"10", criterion_10_characters},
      {"11", criterion_11_caputo},
  };

  std::string only;
  if (argc > 1) only = argv[1];

  bool all_pass = true;
  bool ran_any = false;
  for (const auto& [id, fn] : all) {
    if (!only.empty() && only != id) continue;
    ran_any = true;
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    std::cout << "CRITERION " << id << ": " << (out.pass ? "PASS" : "FAIL")
              << " (" << out.detail << ")\n";
    all_pass = all_pass && out.pass;
  }
  if (!ran_any) {
    std::cerr << "unknown criterion id: " << only << "\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}

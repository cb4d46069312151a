#include <doctest.h>

#include <cmath>
#include <complex>

#include "octopus/kazhdan.hpp"
#include "octopus/spectral.hpp"

using namespace octopus;

namespace {

Eigen::VectorXcd remark_vector_n3() {
  Eigen::VectorXcd u(3);
  const double a = 2.0 * M_PI / 3.0;
  u << std::complex<double>(1, 0), std::polar(1.0, a), std::polar(1.0, -a);
  return u / std::sqrt(3.0);
}

KazhdanConfig fast_config(std::uint64_t seed = 1729) {
  KazhdanConfig cfg;
  cfg.seed = seed;
  cfg.restarts = 12;
  cfg.iters_per_stage = 400;
  return cfg;
}

}  // namespace

TEST_SUITE_BEGIN("kazhdan");

TEST_CASE("generation check") {
  CHECK(generates_symmetric_group(all_transpositions(4)));
  CHECK_FALSE(
      generates_symmetric_group({Permutation::transposition(4, 1, 2)}));
  CHECK(generates_symmetric_group(
      {Permutation::transposition(4, 1, 2),
       Permutation::from_cycles(4, {{1, 2, 3, 4}})}));
  // 3-cycles are even: they generate only the alternating group
  CHECK_FALSE(generates_symmetric_group(
      {Permutation::from_cycles(4, {{1, 2, 3}}),
       Permutation::from_cycles(4, {{2, 3, 4}})}));
}

TEST_CASE("displacements") {
  const UnitaryRep D = UnitaryRep::defining(4);
  Eigen::VectorXcd constant = Eigen::VectorXcd::Constant(4, 0.5);
  for (const auto& q : all_transpositions(4))
    CHECK(displacement(D, q, constant) == doctest::Approx(0));

  const auto u = remark_vector_n3();
  const UnitaryRep D3 = UnitaryRep::defining(3);
  for (const auto& q : all_transpositions(3))
    CHECK(displacement(D3, q, u) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(displacement_max(D3, all_transpositions(3), u) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

  // single generator, real vector: sqrt(2 v^T (I - R(q)) v)
  Eigen::VectorXcd v(4);
  v.real() << 0.5, -0.5, 0.5, -0.5;
  v.imag().setZero();
  const auto q = Permutation::transposition(4, 1, 2);
  const Eigen::MatrixXd M = D.matrix(q);
  const Eigen::VectorXd re = v.real();
  const double expected = std::sqrt(2.0 * re.dot(re - M * re));
  CHECK(displacement(D, q, v) == doctest::Approx(expected).epsilon(1e-12));

  Eigen::VectorXcd not_unit = 2.0 * u;
  CHECK_THROWS_AS(
      displacement(D3, Permutation::transposition(3, 1, 2), not_unit),
      std::invalid_argument);
}

TEST_CASE("estimator finds the n=3 optimum") {
  const auto Q = all_transpositions(3);
  for (const UnitaryRep& R :
       {UnitaryRep::defining(3), UnitaryRep::irrep(Partition({2, 1}))}) {
    const KazhdanEstimate est = kazhdan_rep_estimate(R, Q, fast_config());
    CHECK(std::abs(est.kappa - std::sqrt(2.0)) < 1e-4);
    CHECK(std::abs(est.witness.norm() - 1.0) < 1e-12);
    // witness stays orthogonal to the invariant subspace
    if (R.trivial_multiplicity() == 1)
      CHECK(std::abs(est.witness.sum()) < 1e-9);
    CHECK(est.profile.size() == Q.size());
  }
}

TEST_CASE("estimator input contracts") {
  CHECK_THROWS_AS(
      kazhdan_rep_estimate(UnitaryRep::defining(3), {}, fast_config()),
      std::invalid_argument);
  CHECK_THROWS_AS(
      kazhdan_rep_estimate(UnitaryRep::irrep(Partition({3})),
                           all_transpositions(3), fast_config()),
      std::invalid_argument);
  // non-generating set on a reducible representation
  CHECK_THROWS_AS(
      kazhdan_rep_estimate(UnitaryRep::defining(4),
                           {Permutation::transposition(4, 1, 2)},
                           fast_config()),
      std::invalid_argument);
}

TEST_CASE("sandwich bounds hold for every estimate") {
  for (int n = 3; n <= 5; ++n) {
    const auto Q = all_transpositions(n);
    const UnitaryRep D = UnitaryRep::defining(n);
    const KazhdanEstimate est = kazhdan_rep_estimate(D, Q, fast_config());
    AlgebraElement qhat(n);
    for (const auto& q : Q) qhat.add_term(q, 1);
    const double psi = gap_rep(qhat, D);
    const double k2 = est.kappa * est.kappa;
    CHECK(k2 >= 2.0 * psi / static_cast<double>(Q.size()) - 1e-6);
    CHECK(k2 <= 2.0 * psi + 1e-6);
  }
}

TEST_CASE("estimates are deterministic and class-conjugation invariant") {
  const auto Q = all_transpositions(4);
  const UnitaryRep D = UnitaryRep::defining(4);
  const KazhdanEstimate a = kazhdan_rep_estimate(D, Q, fast_config(5));
  const KazhdanEstimate b = kazhdan_rep_estimate(D, Q, fast_config(5));
  CHECK(a.kappa == b.kappa);
  CHECK(a.witness == b.witness);
  CHECK(a.profile == b.profile);

  // conjugating a full class fixes it setwise
  const auto g = Permutation::from_cycles(4, {{1, 3, 2}});
  std::vector<Permutation> conjugated;
  for (const auto& q : Q) conjugated.push_back(g * q * g.inverse());
  std::sort(conjugated.begin(), conjugated.end());
  std::vector<Permutation> expected = Q;
  std::sort(expected.begin(), expected.end());
  CHECK(conjugated == expected);
}

TEST_CASE("class constant and the direct-sum witness") {
  CHECK(conjclass_kazhdan_value(3) == doctest::Approx(std::sqrt(2.0)));
  CHECK(conjclass_kazhdan_value(5) == doctest::Approx(1.0));
  for (int n = 2; n <= 8; ++n)
    CHECK(conjclass_kazhdan_value(n) ==
          doctest::Approx(std::sqrt(4.0 / (n - 1))));

  const auto ds3 = rem2_direct_sum_witness(3, remark_vector_n3());
  CHECK(ds3.spread < 1e-9);
  CHECK(ds3.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));

  for (int n = 4; n <= 5; ++n) {
    const auto ds = rem2_direct_sum_witness(n, transposition_gap_minimizer(n));
    CHECK(ds.spread < 1e-9);
    CHECK(std::abs(ds.value - conjclass_kazhdan_value(n)) < 1e-6);
  }

  // vectors with an invariant component are rejected
  Eigen::VectorXcd bad = Eigen::VectorXcd::Zero(4);
  bad(0) = 1.0;
  CHECK_THROWS_AS(rem2_direct_sum_witness(4, bad), std::invalid_argument);
}

TEST_CASE("strict-inequality search contract") {
  CHECK_THROWS_AS(strict_inequality_certificate(3, fast_config()),
                  std::invalid_argument);

  // For n >= 4 the searched-for vector cannot exist: every unit sum-zero
  // vector has max displacement at least sqrt(6/n), which lies strictly
  // above the threshold. The operation must report that honestly as
  // inconclusive rather than as a refutation.
  for (int n = 4; n <= 5; ++n) {
    const StrictCertificate cert =
        strict_inequality_certificate(n, fast_config());
    CHECK_FALSE(cert.conclusive);
    CHECK(cert.lower_bound > cert.threshold);
    CHECK(cert.best >= cert.lower_bound - 1e-9);
    CHECK(cert.margin < 0.01);
  }
}

TEST_CASE("saturation profile check") {
  const auto Q3 = all_transpositions(3);
  const UnitaryRep D3 = UnitaryRep::defining(3);
  const auto est3 = kazhdan_rep_estimate(D3, Q3, fast_config());
  const auto sat3 = saturation_profile_check(D3, Q3, est3);
  CHECK(sat3.saturated);
  CHECK(sat3.profile_constant);

  // at n=4 the optimum cannot have a constant profile: that would put four
  // equidistant points in the plane
  const auto Q4 = all_transpositions(4);
  const UnitaryRep D4 = UnitaryRep::defining(4);
  const auto est4 = kazhdan_rep_estimate(D4, Q4, fast_config());
  const auto sat4 = saturation_profile_check(D4, Q4, est4);
  CHECK_FALSE(sat4.saturated);
  CHECK_FALSE(sat4.profile_constant);

  // a single generator has a trivially constant profile
  KazhdanEstimate single;
  single.kappa = 0.5;
  single.profile = {0.5};
  const auto sat1 = saturation_profile_check(
      D4, {Permutation::transposition(4, 1, 2)}, single);
  CHECK(sat1.profile_constant);
}

TEST_CASE("displacement grows with the generating set") {
  const UnitaryRep D = UnitaryRep::defining(4);
  const Eigen::VectorXcd u = transposition_gap_minimizer(4);
  const std::vector<Permutation> small = {Permutation::transposition(4, 1, 2),
                                          Permutation::transposition(4, 2, 3)};
  std::vector<Permutation> large = small;
  large.push_back(Permutation::transposition(4, 3, 4));
  CHECK(displacement_max(D, large, u) >= displacement_max(D, small, u));
}

TEST_SUITE_END();

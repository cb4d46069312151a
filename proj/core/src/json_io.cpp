#include "octopus/json_io.hpp"

#include <stdexcept>

namespace octopus {

namespace {

long long to_int64(const BigInt& z) {
  if (z > BigInt(INT64_MAX) || z < BigInt(INT64_MIN))
    throw std::overflow_error("value does not fit in a 64-bit integer field");
  return static_cast<long long>(z);
}

}  // namespace

Json permutation_to_json(const Permutation& p) { return Json(p.images()); }

Permutation permutation_from_json(const Json& j) {
  return Permutation::from_images(j.get<std::vector<int>>());
}

Json partition_to_json(const Partition& a) { return Json(a.parts()); }

Partition partition_from_json(const Json& j) {
  return Partition(j.get<std::vector<int>>());
}

Json rational_to_json(const Rational& r) {
  return Json{{"num", to_int64(numerator(r))}, {"den", to_int64(denominator(r))}};
}

Rational rational_from_json(const Json& j) {
  const long long num = j.at("num").get<long long>();
  const long long den = j.at("den").get<long long>();
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

Json algebra_to_json(const AlgebraElement& a) {
  Json terms = Json::array();
  for (const auto& [p, c] : a.terms()) {
    Json t = rational_to_json(c);
    t["perm"] = permutation_to_json(p);
    terms.push_back(Json{{"perm", t["perm"]}, {"num", t["num"]}, {"den", t["den"]}});
  }
  return Json{{"n", a.degree()}, {"terms", terms}};
}

AlgebraElement algebra_from_json(const Json& j) {
  AlgebraElement a(j.at("n").get<int>());
  for (const auto& t : j.at("terms"))
    a.add_term(permutation_from_json(t.at("perm")), rational_from_json(t));
  return a;
}

Json weights_to_json(const TranspositionWeights& W) {
  Json edges = Json::array();
  for (const auto& [e, w] : W.edges()) {
    Json r = rational_to_json(w);
    edges.push_back(
        Json{{"i", e.first}, {"j", e.second}, {"num", r["num"]}, {"den", r["den"]}});
  }
  return Json{{"n", W.degree()}, {"edges", edges}};
}

TranspositionWeights weights_from_json(const Json& j) {
  TranspositionWeights W(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    int a = e.at("i").get<int>(), b = e.at("j").get<int>();
    if (a == b) throw std::invalid_argument("weight on a diagonal pair");
    if (a > b) std::swap(a, b);
    if (W.weight(a, b) != 0)
      throw std::invalid_argument("duplicate edge in weight file");
    const Rational w = rational_from_json(e);
    if (w < 0) throw std::invalid_argument("negative weight");
    W.set(a, b, w);
  }
  return W;
}

Json matrix_to_json(const Eigen::MatrixXd& M) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    rows.push_back(row);
  }
  return Json{{"rows", M.rows()}, {"cols", M.cols()}, {"data", rows}};
}

Json spectrum_report_to_json(const SpectrumReport& r) {
  Json j{{"rep", r.rep_label},
         {"eigenvalues", r.eigenvalues},
         {"trivial_removed", r.trivial_removed},
         {"tol", r.tol}};
  if (std::isinf(r.gap))
    j["gap"] = "inf";
  else
    j["gap"] = r.gap;
  return j;
}

Json kazhdan_estimate_to_json(const KazhdanEstimate& e) {
  Json witness = Json::array();
  for (Eigen::Index i = 0; i < e.witness.size(); ++i)
    witness.push_back(Json{{"re", e.witness(i).real()}, {"im", e.witness(i).imag()}});
  return Json{{"rep", e.rep_label},
              {"generators", e.generators},
              {"kappa", e.kappa},
              {"witness", witness},
              {"profile", e.profile},
              {"restarts", e.restarts},
              {"seed", e.seed}};
}

}  // namespace octopus

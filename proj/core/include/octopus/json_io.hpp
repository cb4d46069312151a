#pragma once

#include <Eigen/Dense>
#include <string>

#include <nlohmann/json.hpp>

#include "octopus/algebra.hpp"
#include "octopus/kazhdan.hpp"
#include "octopus/spectral.hpp"
#include "octopus/symgroup.hpp"

namespace octopus {

using Json = nlohmann::ordered_json;

Json permutation_to_json(const Permutation& p);  // one-based image array
Permutation permutation_from_json(const Json& j);

Json partition_to_json(const Partition& a);
Partition partition_from_json(const Json& j);

Json rational_to_json(const Rational& r);  // {"num": ..., "den": ...}
Rational rational_from_json(const Json& j);

// {"n": int, "terms": [{"perm": [...], "num": ..., "den": ...}]}
Json algebra_to_json(const AlgebraElement& a);
AlgebraElement algebra_from_json(const Json& j);

// {"n": int, "edges": [{"i": ..., "j": ..., "num": ..., "den": ...}]}
Json weights_to_json(const TranspositionWeights& W);
TranspositionWeights weights_from_json(const Json& j);

Json matrix_to_json(const Eigen::MatrixXd& M);  // row-major float array

Json spectrum_report_to_json(const SpectrumReport& r);
Json kazhdan_estimate_to_json(const KazhdanEstimate& e);

}  // namespace octopus

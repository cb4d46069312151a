#pragma once

#include <string>
#include <vector>

#include "octopus/algebra.hpp"

namespace octopus::cli {

inline constexpr std::uint64_t kDefaultSeed = 1729;

// parses and validates the weight-file schema
// {"n": int, "edges": [{"i","j","num","den"}]}
TranspositionWeights load_weights(const std::string& path);

// exit code: 0 all checks passed, 1 a check failed, 2 usage or input error
int run(const std::vector<std::string>& args);

}  // namespace octopus::cli

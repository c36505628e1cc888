#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "numeric.hpp"
#include "sign_matrix.hpp"

namespace permrange::reports {

// Every document carries "schema": "permrange/1" and encodes integers as
// decimal strings so arbitrary precision survives any JSON reader.
inline constexpr const char* kSchema = "permrange/1";

nlohmann::json per_json(const SignMatrix& m, const std::string& engine, uint64_t budget);

struct VerifyOutcome {
  nlohmann::json doc;
  bool passed = false;
};

// suite: lemma | mobius | laplace | transform | recursion. k_max / n_max of 0
// select per-suite defaults.
VerifyOutcome verify_suite(const std::string& suite, int64_t k_max, int64_t n_max,
                           uint64_t budget, uint64_t seed);

nlohmann::json range_json(int64_t k, int64_t n, const std::string& mode, uint64_t budget,
                          int workers);

nlohmann::json bounds_json(int64_t k, int64_t n, double eps);

nlohmann::json report_json(int64_t k, int64_t n, int64_t side, uint64_t budget, int workers);

// name: krauter | upper-triangular | monotonicity.
nlohmann::json experiment_json(const std::string& name, int64_t k, int64_t n, bool allow_long,
                               uint64_t budget, uint64_t seed);

}  // namespace permrange::reports

#include "permrange/permrange.h"

#include <cstring>
#include <new>
#include <string>

#include "gap.hpp"
#include "numeric.hpp"
#include "reports.hpp"
#include "sign_matrix.hpp"

struct pr_matrix {
  permrange::SignMatrix m;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
pr_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const permrange::InputError& e) {
    g_last_error = e.what();
    return PR_ERR_INPUT;
  } catch (const permrange::BudgetError& e) {
    g_last_error = e.what();
    return PR_ERR_BUDGET;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PR_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return PR_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* pr_version(void) { return "1.0.0"; }

const char* pr_last_error(void) { return g_last_error.c_str(); }

void pr_string_free(char* s) { delete[] s; }

void pr_matrix_free(pr_matrix* m) { delete m; }

pr_status pr_matrix_parse(const char* text, pr_matrix** out) {
  return guarded([&]() -> pr_status {
    if (text == nullptr || out == nullptr) throw permrange::InputError("null argument");
    *out = new pr_matrix{permrange::parse_matrix(text)};
    return PR_OK;
  });
}

pr_status pr_matrix_render(const pr_matrix* m, char** out_text) {
  return guarded([&]() -> pr_status {
    if (m == nullptr || out_text == nullptr) throw permrange::InputError("null argument");
    *out_text = dup_string(permrange::render_matrix(m->m));
    return PR_OK;
  });
}

pr_status pr_matrix_block(int32_t k, int64_t n, const int64_t* counts, pr_matrix** out) {
  return guarded([&]() -> pr_status {
    if (counts == nullptr || out == nullptr) throw permrange::InputError("null argument");
    if (k < 1) throw permrange::InputError("k must be at least 1");
    std::vector<int64_t> entries(counts, counts + k);
    *out = new pr_matrix{permrange::make_block_matrix(permrange::make_counts(n, std::move(entries)))};
    return PR_OK;
  });
}

pr_status pr_matrix_concat(const pr_matrix* top, const pr_matrix* bottom, pr_matrix** out) {
  return guarded([&]() -> pr_status {
    if (top == nullptr || bottom == nullptr || out == nullptr)
      throw permrange::InputError("null argument");
    *out = new pr_matrix{permrange::concat_rows(top->m, bottom->m)};
    return PR_OK;
  });
}

int32_t pr_matrix_rows(const pr_matrix* m) { return m ? static_cast<int32_t>(m->m.rows()) : 0; }

int64_t pr_matrix_cols(const pr_matrix* m) { return m ? m->m.cols() : 0; }

pr_status pr_permanent(const pr_matrix* m, const char* engine, uint64_t budget, char** out_value,
                       char** out_engine_used) {
  return guarded([&]() -> pr_status {
    if (m == nullptr || out_value == nullptr) throw permrange::InputError("null argument");
    nlohmann::json doc =
        permrange::reports::per_json(m->m, engine == nullptr ? "auto" : engine, budget);
    *out_value = dup_string(doc["value"].get<std::string>());
    if (out_engine_used != nullptr)
      *out_engine_used = dup_string(doc["engine"].get<std::string>());
    return PR_OK;
  });
}

pr_status pr_verify_json(const char* suite, int32_t k_max, int64_t n_max, uint64_t budget,
                         uint64_t seed, char** out_json) {
  return guarded([&]() -> pr_status {
    if (suite == nullptr || out_json == nullptr) throw permrange::InputError("null argument");
    permrange::reports::VerifyOutcome outcome =
        permrange::reports::verify_suite(suite, k_max, n_max, budget, seed);
    *out_json = dup_string(outcome.doc.dump(2));
    return outcome.passed ? PR_OK : PR_VERIFY_FAILED;
  });
}

pr_status pr_range_json(int32_t k, int64_t n, const char* mode, uint64_t budget, int32_t workers,
                        char** out_json) {
  return guarded([&]() -> pr_status {
    if (out_json == nullptr) throw permrange::InputError("null argument");
    nlohmann::json doc = permrange::reports::range_json(
        k, n, mode == nullptr ? "canonical" : mode, budget, workers);
    *out_json = dup_string(doc.dump(2));
    return PR_OK;
  });
}

pr_status pr_construct(int32_t k, int64_t n, int64_t n0_override, char** out_text) {
  return guarded([&]() -> pr_status {
    if (out_text == nullptr) throw permrange::InputError("null argument");
    std::vector<permrange::Rational> mu = permrange::gap::choose_mu(k);
    int64_t dk = permrange::gap::denominator_lcm(mu);
    int64_t n0 = n0_override;
    if (n0 < 0) {
      n0 = permrange::gap::derive_counts(k, n, mu).n0;
    } else if (n0 >= n || (n - n0) % dk != 0) {
      throw permrange::InputError("n0 override must satisfy 0 <= n0 < n with d_k | (n - n0)");
    }
    std::vector<int64_t> entries;
    for (const auto& m : mu) {
      permrange::Rational c = m * (n - n0);
      entries.push_back(static_cast<int64_t>(numerator(c)));
    }
    permrange::SignMatrix b =
        permrange::make_block_matrix(permrange::make_counts(n, std::move(entries)));
    *out_text = dup_string(permrange::render_matrix(b));
    return PR_OK;
  });
}

pr_status pr_bounds_json(int32_t k, int64_t n, double eps, char** out_json) {
  return guarded([&]() -> pr_status {
    if (out_json == nullptr) throw permrange::InputError("null argument");
    *out_json = dup_string(permrange::reports::bounds_json(k, n, eps).dump(2));
    return PR_OK;
  });
}

pr_status pr_report_json(int32_t k, int64_t n, int64_t side, uint64_t budget, int32_t workers,
                         char** out_json) {
  return guarded([&]() -> pr_status {
    if (out_json == nullptr) throw permrange::InputError("null argument");
    *out_json = dup_string(permrange::reports::report_json(k, n, side, budget, workers).dump(2));
    return PR_OK;
  });
}

pr_status pr_experiment_json(const char* name, int32_t k, int64_t n, int32_t allow_long,
                             uint64_t budget, uint64_t seed, char** out_json) {
  return guarded([&]() -> pr_status {
    if (name == nullptr || out_json == nullptr) throw permrange::InputError("null argument");
    nlohmann::json doc =
        permrange::reports::experiment_json(name, k, n, allow_long != 0, budget, seed);
    *out_json = dup_string(doc.dump(2));
    return PR_OK;
  });
}

}  // extern "C"

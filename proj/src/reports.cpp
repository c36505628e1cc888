#include "reports.hpp"

#include <functional>
#include <random>

#include "gap.hpp"
#include "permanent.hpp"
#include "range_oracle.hpp"
#include "symbolic.hpp"

namespace permrange::reports {

namespace {

using nlohmann::json;

std::string dec(const BigInt& v) { return to_decimal(v); }
std::string dec(const Rational& v) { return to_decimal(v); }
std::string dec(int64_t v) { return std::to_string(v); }
std::string dec(uint64_t v) { return std::to_string(v); }

json dec_list(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(dec(v));
  return out;
}

json dec_list(const std::vector<int64_t>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(dec(v));
  return out;
}

json dec_list(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(dec(v));
  return out;
}

json base_doc(const std::string& command) {
  return json{{"schema", kSchema}, {"command", command}};
}

// One-line matrix rendering for counterexample reporting; '/' stands in for
// the row separator of the file format.
std::string compact(const SignMatrix& m) {
  std::string text = render_matrix(m);
  for (auto& c : text)
    if (c == '\n') c = '/';
  if (!text.empty() && text.back() == '/') text.pop_back();
  return text;
}

std::string compact(const std::vector<int64_t>& entries) {
  std::string out = "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries[i]);
  }
  return out + ")";
}

// Enumerates every counts vector with the given number of rows and sum <= n.
void for_each_counts(int64_t k, int64_t n,
                     const std::function<void(const std::vector<int64_t>&)>& fn) {
  std::vector<int64_t> entries(static_cast<size_t>(k), 0);
  auto rec = [&](auto&& self, int64_t pos, int64_t left) -> void {
    if (pos == k) {
      fn(entries);
      return;
    }
    for (int64_t v = 0; v <= left; ++v) {
      entries[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
}

struct SuiteRow {
  int64_t k;
  std::string param_name;
  int64_t param;
  uint64_t cases;
  bool pass;
  std::string detail;
};

json row_to_json(const SuiteRow& row) {
  json j{{"k", dec(row.k)},
         {row.param_name, dec(row.param)},
         {"cases", dec(row.cases)},
         {"status", row.pass ? "PASS" : "FAIL"}};
  if (!row.detail.empty()) j["detail"] = row.detail;
  return j;
}

std::vector<SuiteRow> run_lemma_suite(int64_t k_max, int64_t n_max, uint64_t budget) {
  std::vector<SuiteRow> rows;
  for (int64_t k = 1; k <= k_max; ++k) {
    for (int64_t n = k; n <= n_max; ++n) {
      SuiteRow row{k, "n", n, 0, true, ""};
      for_each_counts(k, n, [&](const std::vector<int64_t>& entries) {
        ++row.cases;
        CountsVector counts = make_counts(n, entries);
        BigInt closed = symbolic::block_permanent_closed_form(counts);
        BigInt direct = permanent_injection_sum(make_block_matrix(counts), budget);
        if (closed != direct && row.pass) {
          row.pass = false;
          row.detail = "counts " + compact(entries) + ": closed form " + dec(closed) +
                       " != oracle " + dec(direct);
        }
      });
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<SuiteRow> run_mobius_suite(int64_t k_max, int64_t n_max, uint64_t budget) {
  std::vector<SuiteRow> rows;
  for (int64_t k = 1; k <= k_max; ++k) {
    for (int64_t n = k; n <= n_max; ++n) {
      SuiteRow row{k, "n", n, 0, true, ""};
      for_each_counts(k, n, [&](const std::vector<int64_t>& entries) {
        ++row.cases;
        auto counts = range_oracle::count_gamma(make_block_matrix(make_counts(n, entries)), budget);
        if (!(counts.mobius_ok && counts.permanent_identity_ok &&
              counts.product_formula_applicable && counts.product_formula_ok) &&
            row.pass) {
          row.pass = false;
          row.detail = "counting identity failed for counts " + compact(entries);
        }
      });
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<SuiteRow> run_laplace_suite(int64_t k_max, int64_t n_max, uint64_t budget,
                                        uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SuiteRow> rows;
  for (int64_t k = 2; k <= k_max; ++k) {
    for (int64_t n = k; n <= n_max; ++n) {
      SuiteRow row{k, "n", n, 0, true, ""};
      for (int sample = 0; sample < 10; ++sample) {
        std::vector<std::vector<int64_t>> minus(static_cast<size_t>(k));
        for (int64_t i = 0; i < k; ++i)
          for (int64_t j = 0; j < n; ++j)
            if (rng() & 1) minus[static_cast<size_t>(i)].push_back(j);
        SignMatrix m(k, n, std::move(minus));
        BigInt direct = permanent_auto(m, budget);
        ++row.cases;
        for (int64_t i = 0; i < k; ++i) {
          if (laplace_expand(m, i, budget) != direct && row.pass) {
            row.pass = false;
            row.detail = "row " + std::to_string(i + 1) + " expansion differs on " + compact(m);
          }
        }
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<SuiteRow> run_transform_suite(int64_t k_max, int64_t n_max, uint64_t budget,
                                          uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SuiteRow> rows;
  for (int64_t k = 2; k <= k_max; ++k) {
    std::vector<Rational> mu = gap::choose_mu(k);
    int64_t dk = gap::denominator_lcm(mu);
    for (int64_t n = std::max(dk, k + 1); n <= n_max; ++n) {
      SuiteRow row{k, "n", n, 0, true, ""};
      SignMatrix b = make_block_matrix(gap::derive_counts(k, n, mu).counts);
      for (int sample = 0; sample < 10; ++sample) {
        std::vector<int> a(static_cast<size_t>(n));
        for (auto& v : a) v = (rng() & 1) ? -1 : 1;
        ++row.cases;
        if (!gap::affine_transform_check(a, b, budget).ok && row.pass) {
          row.pass = false;
          std::string sign_row;
          for (int v : a) sign_row += v < 0 ? '-' : '+';
          row.detail = "identity failed for row " + sign_row + " over " + compact(b);
        }
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<SuiteRow> run_recursion_suite(int64_t k_max) {
  std::vector<SuiteRow> rows;
  for (int64_t k = 3; k <= k_max; ++k) {
    std::vector<Rational> mu = gap::choose_mu(k);
    int64_t dk = gap::denominator_lcm(mu);
    for (int64_t n0 = 0; n0 < dk; ++n0) {
      SuiteRow row{k, "n0", n0, 0, true, ""};
      auto cert = symbolic::rank_certificate(k, mu, n0);
      row.cases = static_cast<uint64_t>(cert.span_dims.size());
      if (!(cert.recursion_ok && cert.span_dims_ok && cert.decomposition_ok)) {
        row.pass = false;
        row.detail = !cert.recursion_ok ? "recursion identity failed"
                     : !cert.span_dims_ok ? "span dimension bound failed"
                                          : "outer-product decomposition failed";
      }
      rows.push_back(row);
    }
  }
  return rows;
}

json params_json(const gap::ConstructionParams& params) {
  return json{{"k", dec(params.k)},
              {"mu", dec_list(params.mu)},
              {"d_k", dec(params.d_k)},
              {"scale", dec(params.scale)},
              {"M_k", dec(params.m_k)},
              {"M_k_bound", dec(params.m_k_bound)},
              {"M_k_within_bound", params.m_k_within_bound},
              {"delta_k", dec(params.delta_k)},
              {"eps_k", dec(params.eps_k)},
              {"delta_closed_lower", dec(params.delta_closed_lower)},
              {"delta_within_bound", params.delta_within_bound}};
}

json certificate_json(const symbolic::RankCertificate& cert) {
  json span = json::array();
  for (const auto& c : cert.span_dims) {
    span.push_back(json{{"a", dec(c.a)},
                        {"dim", dec(c.dim)},
                        {"lower_bound", dec(c.lower_bound)},
                        {"ok", c.ok}});
  }
  return json{{"k", dec(cert.k)},
              {"n0", dec(cert.n0)},
              {"vacuous", cert.vacuous},
              {"required_rank", dec(cert.required)},
              {"rank_scaled_diffs", dec(cert.rank_scaled_diffs)},
              {"rank_minor_polys", dec(cert.rank_minor_polys)},
              {"rank_coeff_matrix", dec(cert.rank_coeff_matrix)},
              {"rank_right_stack", dec(cert.rank_right_stack)},
              {"left_stack_invertible", cert.left_stack_invertible},
              {"rank_ok", cert.rank_ok},
              {"witness", dec_list(cert.witness)},
              {"diff_routes_agree", cert.diff_routes_agree},
              {"decomposition_ok", cert.decomposition_ok},
              {"recursion_ok", cert.recursion_ok},
              {"span_dims", span},
              {"passed", cert.passed}};
}

}  // namespace

json per_json(const SignMatrix& m, const std::string& engine, uint64_t budget) {
  std::string engine_used = engine;
  BigInt value;
  if (engine.empty() || engine == "auto") {
    value = permanent_auto(m, budget, &engine_used);
  } else if (engine == "injection") {
    value = permanent_injection_sum(m, budget);
    engine_used = "injection-sum";
  } else if (engine == "bitmask") {
    value = permanent_bitmask_dp(m, budget);
    engine_used = "bitmask-dp";
  } else if (engine == "ryser") {
    value = permanent_ryser(m, budget);
    engine_used = "ryser";
  } else {
    throw InputError("unknown engine '" + engine + "'");
  }
  json doc = base_doc("per");
  doc["k"] = dec(m.rows());
  doc["n"] = dec(m.cols());
  doc["engine"] = engine_used;
  doc["value"] = dec(value);
  return doc;
}

VerifyOutcome verify_suite(const std::string& suite, int64_t k_max, int64_t n_max, uint64_t budget,
                           uint64_t seed) {
  std::vector<SuiteRow> rows;
  if (suite == "lemma") {
    rows = run_lemma_suite(k_max > 0 ? k_max : 3, n_max > 0 ? n_max : 8, budget);
  } else if (suite == "mobius") {
    rows = run_mobius_suite(k_max > 0 ? k_max : 3, n_max > 0 ? n_max : 7, budget);
  } else if (suite == "laplace") {
    rows = run_laplace_suite(k_max > 0 ? k_max : 4, n_max > 0 ? n_max : 8, budget, seed);
  } else if (suite == "transform") {
    rows = run_transform_suite(k_max > 0 ? k_max : 3, n_max > 0 ? n_max : 8, budget, seed);
  } else if (suite == "recursion") {
    rows = run_recursion_suite(k_max > 0 ? k_max : 8);
  } else {
    throw InputError("unknown verify suite '" + suite +
                     "'; expected lemma|mobius|laplace|transform|recursion");
  }
  VerifyOutcome outcome;
  outcome.passed = true;
  json rows_json = json::array();
  for (const auto& row : rows) {
    if (!row.pass) outcome.passed = false;
    rows_json.push_back(row_to_json(row));
  }
  outcome.doc = base_doc("verify");
  outcome.doc["suite"] = suite;
  outcome.doc["seed"] = dec(seed);
  outcome.doc["rows"] = rows_json;
  outcome.doc["passed"] = outcome.passed;
  return outcome;
}

json range_json(int64_t k, int64_t n, const std::string& mode, uint64_t budget, int workers) {
  range_oracle::EnumMode enum_mode;
  if (mode.empty() || mode == "canonical") enum_mode = range_oracle::EnumMode::kCanonical;
  else if (mode == "naive") enum_mode = range_oracle::EnumMode::kNaive;
  else throw InputError("unknown range mode '" + mode + "'; expected naive|canonical");

  range_oracle::RangeReport report = range_oracle::enumerate_range(k, n, enum_mode, budget, workers);
  json doc = base_doc("range");
  doc["k"] = dec(report.k);
  doc["n"] = dec(report.n);
  doc["mode"] = mode.empty() ? "canonical" : mode;
  doc["r"] = dec(report.r);
  doc["values"] = dec_list(report.values);
  doc["min_positive"] = report.min_positive ? json(dec(*report.min_positive)) : json(nullptr);
  doc["two_adic_content"] =
      report.two_adic_content ? json(dec(*report.two_adic_content)) : json(nullptr);
  doc["two_adic_valuation"] =
      report.two_adic_valuation ? json(dec(*report.two_adic_valuation)) : json(nullptr);
  doc["stats"] = json{{"matrices_visited", dec(report.matrices_visited)},
                      {"symmetry_classes", dec(report.symmetry_classes)},
                      {"wall_ms", report.wall_ms}};
  return doc;
}

json bounds_json(int64_t k, int64_t n, double eps) {
  json doc = base_doc("bounds");
  doc["params"] = params_json(gap::constants(k));
  if (n > 0) {
    gap::PlugInReport plug = gap::main2_plugin(n, eps);
    json p{{"n", dec(plug.n)},        {"eps", plug.eps},
           {"k", dec(plug.k)},        {"vacuous", plug.vacuous},
           {"exponent", dec(plug.exponent)}};
    if (!plug.vacuous) {
      p["eps_k_lower"] = dec(plug.eps_k_lower);
      p["bound"] = dec(plug.bound);
      p["log10_bound"] = plug.log10_bound;
    }
    doc["plug_in"] = p;
  }
  return doc;
}

json report_json(int64_t k, int64_t n, int64_t side, uint64_t budget, int workers) {
  gap::LowerBoundReport report = gap::lower_bound_report(k, n, side, budget, workers);
  json doc = base_doc("report");
  doc["params"] = params_json(report.params);
  doc["n"] = dec(report.n);
  doc["n0"] = dec(report.n0);
  doc["counts"] = dec_list(report.counts);
  doc["basis"] = dec_list(report.basis);
  doc["certificate"] = certificate_json(report.certificate);
  json box{{"vacuous", report.box.vacuous},
           {"default_side", report.box.default_side},
           {"side", dec(report.box.side)},
           {"witness", dec_list(report.box.witness)},
           {"point_count", dec(report.box.point_count)},
           {"proper", report.box.proper},
           {"meets_eps_bound", report.box.meets_eps_bound}};
  if (report.box.vacuous) box["minimal_nonvacuous_n"] = dec(report.box.minimal_n);
  if (report.box.collision) {
    box["collision"] = json{{"x", dec_list(report.box.collision->first)},
                            {"y", dec_list(report.box.collision->second)},
                            {"value", dec(report.box.collision_value)}};
  }
  doc["box"] = box;
  doc["certified_distinct"] = dec(report.certified_distinct);
  doc["eps_bound"] = dec(report.eps_bound);
  doc["meets_bound"] = report.meets_bound;
  doc["transfers_to_square"] = report.transfers_to_square;
  return doc;
}

json experiment_json(const std::string& name, int64_t k, int64_t n, bool allow_long,
                     uint64_t budget, uint64_t seed) {
  json doc = base_doc("experiment");
  doc["name"] = name;
  if (name == "krauter") {
    auto report = range_oracle::min_positive_permanent(n, allow_long, budget);
    doc["n"] = dec(report.n);
    doc["min_positive"] = dec(report.min_positive);
    doc["conjectured"] = dec(report.conjectured);
    doc["matches"] = report.matches;
    doc["stats"] = json{{"symmetry_classes", dec(report.classes)}, {"wall_ms", report.wall_ms}};
  } else if (name == "upper-triangular") {
    auto report = range_oracle::upper_triangular_range(n, budget);
    doc["n"] = dec(report.n);
    doc["triangular_values"] = dec_list(report.values);
    doc["full_values"] = dec_list(report.full_values);
    doc["r_triangular"] = dec(static_cast<uint64_t>(report.values.size()));
    doc["r_full"] = dec(static_cast<uint64_t>(report.full_values.size()));
    doc["equal"] = report.equal;
  } else if (name == "monotonicity") {
    auto report = range_oracle::monotonicity_check(k, n, budget, seed);
    doc["k"] = dec(report.k);
    doc["n"] = dec(report.n);
    doc["r_k"] = dec(report.r_low);
    doc["r_k_plus_1"] = dec(report.r_high);
    doc["monotone_ok"] = report.monotone_ok;
    doc["padding_ok"] = report.padding_ok;
    doc["padding_samples"] = dec(report.padding_samples);
  } else if (name == "subset") {
    auto report = range_oracle::construction_subset_check(k, n, budget);
    doc["k"] = dec(report.k);
    doc["n"] = dec(report.n);
    doc["subset_ok"] = report.subset_ok;
    doc["construction_values"] = dec(report.construction_values);
    doc["range_values"] = dec(report.range_values);
    doc["coverage"] = report.coverage;
  } else {
    throw InputError("unknown experiment '" + name +
                     "'; expected krauter|upper-triangular|monotonicity|subset");
  }
  return doc;
}

}  // namespace permrange::reports

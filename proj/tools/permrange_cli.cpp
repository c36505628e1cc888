// Command-line front end. Talks to the permrange shared library exclusively
// through the C API in permrange/permrange.h; JSON documents returned by the
// library are rendered here as json, csv, or text.

#include <permrange/permrange.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct OutputOptions {
  std::string format = "text";  // json | csv | text
  std::string out_path;         // empty = stdout
};

[[noreturn]] void fail(pr_status status) {
  const char* message = pr_last_error();
  std::cerr << "error: " << (message && *message ? message : "unknown failure") << "\n";
  std::exit(status == PR_OK ? 4 : static_cast<int>(status));
}

void write_output(const OutputOptions& opts, const std::string& content) {
  if (opts.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot open output file '" << opts.out_path << "'\n";
    std::exit(2);
  }
  out << content;
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  pr_string_free(s);
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += csv_escape(fields[i]);
  }
  out += "\n";
  return out;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string str_or(const json& doc, const std::string& key, const std::string& fallback = "") {
  if (!doc.contains(key) || doc[key].is_null()) return fallback;
  if (doc[key].is_string()) return doc[key].get<std::string>();
  if (doc[key].is_boolean()) return doc[key].get<bool>() ? "true" : "false";
  if (doc[key].is_number_float()) return fmt_double(doc[key].get<double>());
  return doc[key].dump();
}

uint64_t default_budget() {
  const char* env = std::getenv("PERMRANGE_BUDGET");
  if (env == nullptr || *env == '\0') return 0;
  return std::strtoull(env, nullptr, 10);
}

std::string render_verify(const json& doc, const std::string& format) {
  if (format == "csv") {
    std::string out = "suite,k,param,cases,status\n";
    for (const auto& row : doc["rows"]) {
      std::string param = row.contains("n") ? str_or(row, "n") : str_or(row, "n0");
      out += csv_line({doc["suite"], str_or(row, "k"), param, str_or(row, "cases"),
                       str_or(row, "status")});
    }
    return out;
  }
  std::ostringstream out;
  for (const auto& row : doc["rows"]) {
    std::string param_name = row.contains("n") ? "n" : "n0";
    out << "suite=" << doc["suite"].get<std::string>() << " k=" << str_or(row, "k") << " "
        << param_name << "=" << str_or(row, param_name) << " cases=" << str_or(row, "cases")
        << " " << str_or(row, "status");
    if (row.contains("detail")) out << "  (" << str_or(row, "detail") << ")";
    out << "\n";
  }
  out << (doc["passed"].get<bool>() ? "all checks passed" : "FAILURES present") << "\n";
  return out.str();
}

std::string render_range(const json& doc, const std::string& format) {
  if (format == "csv") {
    std::string out = "k,n,mode,r,min_positive,two_adic_content,symmetry_classes,matrices_visited\n";
    out += csv_line({str_or(doc, "k"), str_or(doc, "n"), str_or(doc, "mode"), str_or(doc, "r"),
                     str_or(doc, "min_positive"), str_or(doc, "two_adic_content"),
                     str_or(doc["stats"], "symmetry_classes"),
                     str_or(doc["stats"], "matrices_visited")});
    return out;
  }
  // One value per line for easy diffing.
  std::string out;
  for (const auto& v : doc["values"]) out += v.get<std::string>() + "\n";
  return out;
}

std::string render_bounds(const json& doc, const std::string& format) {
  const json& p = doc["params"];
  if (format == "csv") {
    std::string plug_k, plug_exp;
    if (doc.contains("plug_in")) {
      plug_k = str_or(doc["plug_in"], "k");
      plug_exp = str_or(doc["plug_in"], "exponent");
    }
    std::string out =
        "k,d_k,scale,M_k,M_k_bound,M_k_within_bound,delta_k,eps_k,delta_within_bound,"
        "plugin_k,plugin_exponent\n";
    out += csv_line({str_or(p, "k"), str_or(p, "d_k"), str_or(p, "scale"), str_or(p, "M_k"),
                     str_or(p, "M_k_bound"), str_or(p, "M_k_within_bound"), str_or(p, "delta_k"),
                     str_or(p, "eps_k"), str_or(p, "delta_within_bound"), plug_k, plug_exp});
    return out;
  }
  std::ostringstream out;
  out << "k = " << str_or(p, "k") << "\n"
      << "d_k = " << str_or(p, "d_k") << "\n"
      << "scale = " << str_or(p, "scale") << "\n"
      << "M_k = " << str_or(p, "M_k") << " (bound " << str_or(p, "M_k_bound") << ", within: "
      << str_or(p, "M_k_within_bound") << ")\n"
      << "delta_k = " << str_or(p, "delta_k") << " (closed lower bound "
      << str_or(p, "delta_closed_lower") << ", within: " << str_or(p, "delta_within_bound")
      << ")\n"
      << "eps_k = " << str_or(p, "eps_k") << "\n";
  if (doc.contains("plug_in")) {
    const json& plug = doc["plug_in"];
    out << "plug-in: n = " << str_or(plug, "n") << ", eps = " << str_or(plug, "eps")
        << ", k = " << str_or(plug, "k") << ", exponent = " << str_or(plug, "exponent");
    if (plug.contains("bound")) out << ", log10(bound) = " << str_or(plug, "log10_bound");
    if (plug["vacuous"].get<bool>()) out << " (vacuous: k < 3)";
    out << "\n";
  }
  return out.str();
}

std::string render_report(const json& doc, const std::string& format) {
  if (format == "csv") {
    std::string out = "n,certified_count,epsilon_bound\n";
    out += csv_line({str_or(doc, "n"), str_or(doc, "certified_distinct"), str_or(doc, "eps_bound")});
    return out;
  }
  const json& box = doc["box"];
  std::ostringstream out;
  out << "k = " << str_or(doc["params"], "k") << ", n = " << str_or(doc, "n")
      << ", n0 = " << str_or(doc, "n0") << "\n"
      << "counts = " << doc["counts"].dump() << "\n"
      << "basis = " << doc["basis"].dump() << "\n"
      << "rank certificate: rank = " << str_or(doc["certificate"], "rank_scaled_diffs")
      << " (required " << str_or(doc["certificate"], "required_rank") << "), witness = "
      << doc["certificate"]["witness"].dump() << ", passed = "
      << str_or(doc["certificate"], "passed") << "\n"
      << "box: side = " << str_or(box, "side") << " (default: " << str_or(box, "default_side")
      << "), points = " << str_or(box, "point_count") << ", proper = " << str_or(box, "proper")
      << "\n";
  if (box["vacuous"].get<bool>())
    out << "box vacuous at this n; smallest nonvacuous n = "
        << str_or(box, "minimal_nonvacuous_n") << "\n";
  if (box.contains("collision"))
    out << "collision: x = " << box["collision"]["x"].dump() << ", y = "
        << box["collision"]["y"].dump() << ", value = " << str_or(box["collision"], "value")
        << "\n";
  out << "certified distinct values = " << str_or(doc, "certified_distinct") << "\n"
      << "epsilon bound = " << str_or(doc, "eps_bound") << ", met: " << str_or(doc, "meets_bound")
      << "\n";
  return out.str();
}

std::string render_experiment(const json& doc, const std::string& format) {
  const std::string name = doc["name"].get<std::string>();
  if (format == "csv") {
    if (name == "krauter") {
      return "n,min_positive,conjectured,matches\n" +
             csv_line({str_or(doc, "n"), str_or(doc, "min_positive"), str_or(doc, "conjectured"),
                       str_or(doc, "matches")});
    }
    if (name == "upper-triangular") {
      return "n,r_triangular,r_full,equal\n" +
             csv_line({str_or(doc, "n"), str_or(doc, "r_triangular"), str_or(doc, "r_full"),
                       str_or(doc, "equal")});
    }
    if (name == "monotonicity") {
      return "k,n,r_k,r_k_plus_1,monotone_ok,padding_ok\n" +
             csv_line({str_or(doc, "k"), str_or(doc, "n"), str_or(doc, "r_k"),
                       str_or(doc, "r_k_plus_1"), str_or(doc, "monotone_ok"),
                       str_or(doc, "padding_ok")});
    }
    return "k,n,subset_ok,construction_values,range_values,coverage\n" +
           csv_line({str_or(doc, "k"), str_or(doc, "n"), str_or(doc, "subset_ok"),
                     str_or(doc, "construction_values"), str_or(doc, "range_values"),
                     str_or(doc, "coverage")});
  }
  std::ostringstream out;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() == "schema" || it.key() == "command" || it.key() == "stats") continue;
    if (it->is_string()) out << it.key() << " = " << it->get<std::string>() << "\n";
    else out << it.key() << " = " << it->dump() << "\n";
  }
  return out.str();
}

std::string read_input_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open matrix file '" << path << "'\n";
    std::exit(2);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact permanents of sign matrices, their value ranges, and lower-bound "
               "certificates"};
  app.require_subcommand(1);

  OutputOptions output;
  int64_t k = 0, n = 0, n0 = -1, side = -1;
  double eps = 0.1;
  uint64_t budget = default_budget();
  uint64_t seed = 12345;
  int32_t workers = 1;
  std::string mode, engine = "auto", suite, matrix_path, experiment_name;
  bool allow_long = false;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", output.format, "output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", output.out_path, "output path (default stdout)");
  };

  CLI::App* per = app.add_subcommand("per", "exact permanent of a matrix file");
  per->add_option("file", matrix_path, "matrix file, '-' for stdin")->required();
  per->add_option("--engine", engine, "engine: auto|injection|bitmask|ryser");
  per->add_option("--budget", budget, "work budget (0 = defaults)");
  add_output(per);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "lemma|mobius|laplace|transform|recursion")->required();
  verify->add_option("--k", k, "largest k to cover (0 = suite default)");
  verify->add_option("--n", n, "largest n to cover (0 = suite default)");
  verify->add_option("--budget", budget, "work budget (0 = defaults)");
  verify->add_option("--seed", seed, "seed for sampled checks");
  add_output(verify);

  CLI::App* range = app.add_subcommand("range", "enumerate the permanent range of k x n matrices");
  range->add_option("--k", k)->required();
  range->add_option("--n", n)->required();
  range->add_option("--mode", mode, "naive|canonical (default canonical)");
  range->add_option("--budget", budget, "work budget (0 = defaults)");
  range->add_option("--workers", workers, "worker threads");
  add_output(range);

  CLI::App* construct = app.add_subcommand("construct", "emit the block matrix for (k, n)");
  construct->add_option("--k", k)->required();
  construct->add_option("--n", n)->required();
  construct->add_option("--n0", n0, "override the derived residue");
  construct->add_option("--out", output.out_path, "output path (default stdout)");

  CLI::App* bounds = app.add_subcommand("bounds", "constants pipeline and plug-in rule");
  bounds->add_option("--k", k)->required();
  bounds->add_option("--n", n, "enable the plug-in report at this n");
  bounds->add_option("--eps", eps, "plug-in epsilon (default 0.1)");
  add_output(bounds);

  CLI::App* report = app.add_subcommand("report", "lower-bound certificate at (k, n)");
  report->add_option("--k", k)->required();
  report->add_option("--n", n)->required();
  report->add_option("--side", side, "box side (default floor(delta_k n))");
  report->add_option("--budget", budget, "work budget (0 = defaults)");
  report->add_option("--workers", workers, "worker threads");
  add_output(report);

  CLI::App* experiment = app.add_subcommand("experiment", "open-problem experiments");
  experiment->add_option("name", experiment_name, "krauter|upper-triangular|monotonicity|subset")
      ->required();
  experiment->add_option("--k", k);
  experiment->add_option("--n", n);
  experiment->add_flag("--long", allow_long, "allow long-running sizes (krauter n=5)");
  experiment->add_option("--budget", budget, "work budget (0 = defaults)");
  experiment->add_option("--seed", seed, "seed for sampled checks");
  add_output(experiment);

  CLI11_PARSE(app, argc, argv);

  pr_status status = PR_OK;
  std::string rendered;

  if (per->parsed()) {
    std::string text = read_input_file(matrix_path);
    pr_matrix* m = nullptr;
    status = pr_matrix_parse(text.c_str(), &m);
    if (status != PR_OK) fail(status);
    char* value = nullptr;
    char* engine_used = nullptr;
    status = pr_permanent(m, engine.c_str(), budget, &value, &engine_used);
    pr_matrix_free(m);
    if (status != PR_OK) fail(status);
    std::string value_str = take_string(value);
    std::string engine_str = take_string(engine_used);
    if (output.format == "json") {
      json doc{{"schema", "permrange/1"}, {"command", "per"}, {"engine", engine_str},
               {"value", value_str}};
      rendered = doc.dump(2) + "\n";
    } else if (output.format == "csv") {
      rendered = "engine,value\n" + csv_line({engine_str, value_str});
    } else {
      rendered = value_str + "\n";
    }
  } else if (verify->parsed()) {
    char* raw = nullptr;
    status = pr_verify_json(suite.c_str(), static_cast<int32_t>(k), n, budget, seed, &raw);
    if (status != PR_OK && status != PR_VERIFY_FAILED) fail(status);
    json doc = json::parse(take_string(raw));
    rendered = output.format == "json" ? doc.dump(2) + "\n" : render_verify(doc, output.format);
  } else if (range->parsed()) {
    char* raw = nullptr;
    status = pr_range_json(static_cast<int32_t>(k), n, mode.empty() ? nullptr : mode.c_str(),
                           budget, workers, &raw);
    if (status != PR_OK) fail(status);
    json doc = json::parse(take_string(raw));
    rendered = output.format == "json" ? doc.dump(2) + "\n" : render_range(doc, output.format);
  } else if (construct->parsed()) {
    char* raw = nullptr;
    status = pr_construct(static_cast<int32_t>(k), n, n0, &raw);
    if (status != PR_OK) fail(status);
    rendered = take_string(raw);
  } else if (bounds->parsed()) {
    char* raw = nullptr;
    status = pr_bounds_json(static_cast<int32_t>(k), n, eps, &raw);
    if (status != PR_OK) fail(status);
    json doc = json::parse(take_string(raw));
    rendered = output.format == "json" ? doc.dump(2) + "\n" : render_bounds(doc, output.format);
  } else if (report->parsed()) {
    char* raw = nullptr;
    status = pr_report_json(static_cast<int32_t>(k), n, side, budget, workers, &raw);
    if (status != PR_OK) fail(status);
    json doc = json::parse(take_string(raw));
    rendered = output.format == "json" ? doc.dump(2) + "\n" : render_report(doc, output.format);
  } else if (experiment->parsed()) {
    char* raw = nullptr;
    status = pr_experiment_json(experiment_name.c_str(), static_cast<int32_t>(k), n,
                                allow_long ? 1 : 0, budget, seed, &raw);
    if (status != PR_OK) fail(status);
    json doc = json::parse(take_string(raw));
    rendered = output.format == "json" ? doc.dump(2) + "\n" : render_experiment(doc, output.format);
  }

  write_output(output, rendered);
  return status == PR_VERIFY_FAILED ? 1 : 0;
}

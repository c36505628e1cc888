#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <permrange/permrange.h>

#include <json.hpp>

#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  pr_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error surface") {
  CHECK(std::string(pr_version()) == "1.0.0");
  CHECK(std::string(pr_last_error()).empty());
}

TEST_CASE("matrix handles: parse, render, dims") {
  pr_matrix* m = nullptr;
  REQUIRE(pr_matrix_parse("2 3\n+-+\n++-\n", &m) == PR_OK);
  CHECK(pr_matrix_rows(m) == 2);
  CHECK(pr_matrix_cols(m) == 3);
  char* text = nullptr;
  REQUIRE(pr_matrix_render(m, &text) == PR_OK);
  CHECK(take(text) == "2 3\n+-+\n++-\n");
  pr_matrix_free(m);

  pr_matrix* bad = nullptr;
  CHECK(pr_matrix_parse("2 1\n+\n+\n", &bad) == PR_ERR_INPUT);
  CHECK(!std::string(pr_last_error()).empty());
}

TEST_CASE("block construction and concatenation") {
  int64_t counts[2] = {1, 1};
  pr_matrix* b = nullptr;
  REQUIRE(pr_matrix_block(2, 4, counts, &b) == PR_OK);
  char* text = nullptr;
  REQUIRE(pr_matrix_render(b, &text) == PR_OK);
  CHECK(take(text) == "2 4\n++-+\n+++-\n");

  pr_matrix* row = nullptr;
  REQUIRE(pr_matrix_parse("1 4\n++++\n", &row) == PR_OK);
  pr_matrix* stacked = nullptr;
  REQUIRE(pr_matrix_concat(row, b, &stacked) == PR_OK);
  CHECK(pr_matrix_rows(stacked) == 3);

  char* value = nullptr;
  char* engine = nullptr;
  REQUIRE(pr_permanent(b, nullptr, 0, &value, &engine) == PR_OK);
  CHECK(take(value) == "4");
  CHECK(take(engine) == "injection-sum");

  int64_t too_many[2] = {3, 3};
  pr_matrix* overfull = nullptr;
  CHECK(pr_matrix_block(2, 4, too_many, &overfull) == PR_ERR_INPUT);

  pr_matrix_free(stacked);
  pr_matrix_free(row);
  pr_matrix_free(b);
}

TEST_CASE("permanent budget errors surface as PR_ERR_BUDGET") {
  pr_matrix* m = nullptr;
  REQUIRE(pr_matrix_parse("4 4\n++++\n++++\n++++\n++++\n", &m) == PR_OK);
  char* value = nullptr;
  CHECK(pr_permanent(m, "injection", 10, &value, nullptr) == PR_ERR_BUDGET);
  CHECK(pr_permanent(m, "nonsense", 0, &value, nullptr) == PR_ERR_INPUT);
  REQUIRE(pr_permanent(m, "ryser", 0, &value, nullptr) == PR_OK);
  CHECK(take(value) == "24");
  pr_matrix_free(m);
}

TEST_CASE("verify runner round-trips JSON and status") {
  char* raw = nullptr;
  REQUIRE(pr_verify_json("recursion", 4, 0, 0, 1, &raw) == PR_OK);
  nlohmann::json doc = nlohmann::json::parse(take(raw));
  CHECK(doc["schema"] == "permrange/1");
  CHECK(doc["passed"] == true);
  CHECK(doc["rows"].size() > 0);

  CHECK(pr_verify_json("bogus", 0, 0, 0, 1, &raw) == PR_ERR_INPUT);
}

TEST_CASE("range runner") {
  char* raw = nullptr;
  REQUIRE(pr_range_json(2, 2, "naive", 0, 1, &raw) == PR_OK);
  nlohmann::json doc = nlohmann::json::parse(take(raw));
  CHECK(doc["r"] == "3");
  CHECK(doc["values"] == nlohmann::json::array({"-2", "0", "2"}));
  CHECK(doc["min_positive"] == "2");
}

TEST_CASE("construct runner") {
  char* raw = nullptr;
  REQUIRE(pr_construct(2, 7, -1, &raw) == PR_OK);
  CHECK(take(raw) == "2 7\n+--++++\n+++----\n");
  CHECK(pr_construct(2, 7, 2, &raw) == PR_ERR_INPUT);  // residue mismatch
  REQUIRE(pr_construct(2, 7, 1, &raw) == PR_OK);
  take(raw);
}

TEST_CASE("bounds runner") {
  char* raw = nullptr;
  REQUIRE(pr_bounds_json(2, 0, 0.1, &raw) == PR_OK);
  nlohmann::json doc = nlohmann::json::parse(take(raw));
  CHECK(doc["params"]["M_k"] == "80");
  CHECK(doc["params"]["delta_k"] == "1/320");
  CHECK(doc["params"]["M_k_within_bound"] == true);
}

TEST_CASE("report runner") {
  char* raw = nullptr;
  REQUIRE(pr_report_json(3, 300, 20, 0, 2, &raw) == PR_OK);
  nlohmann::json doc = nlohmann::json::parse(take(raw));
  CHECK(doc["certified_distinct"] == "21");
  CHECK(doc["box"]["proper"] == true);
  CHECK(doc["certificate"]["passed"] == true);
}

TEST_CASE("experiment runner") {
  char* raw = nullptr;
  REQUIRE(pr_experiment_json("krauter", 0, 3, 0, 0, 1, &raw) == PR_OK);
  nlohmann::json doc = nlohmann::json::parse(take(raw));
  CHECK(doc["min_positive"] == "2");
  CHECK(doc["matches"] == true);

  CHECK(pr_experiment_json("krauter", 0, 5, 0, 0, 1, &raw) == PR_ERR_INPUT);  // needs long flag
  CHECK(pr_experiment_json("unknown", 0, 3, 0, 0, 1, &raw) == PR_ERR_INPUT);
}

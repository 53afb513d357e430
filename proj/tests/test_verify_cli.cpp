#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "rsthl/error.hpp"
#include "rsthl/verify/suite.hpp"

using namespace rsthl;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("rsthl_test_" + name); }

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RSTHL_VERIFY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::IoError;
}

std::vector<std::string> names(const CheckReport& r) {
  std::vector<std::string> out;
  for (const auto& e : r.entries) out.push_back(e.name);
  return out;
}

}  // namespace

TEST_CASE("model round trip") {
  const ModelFile m = builtin_example47();
  const json doc = model_to_json(m);
  CHECK(model_from_json(doc) == m);
  CHECK(model_to_json(model_from_json(doc)) == doc);
  CHECK(doc["submanifold"]["xi"]["X3"] == "-mu");

  const fs::path path = scratch("roundtrip.json");
  save_model(m, path);
  CHECK(load_model(path) == m);
  fs::remove(path);

  const ModelFile fixed = builtin_example47(Rational(3, 2));
  CHECK(fixed.parameters.empty());
  CHECK(model_from_json(model_to_json(fixed)) == fixed);
}

TEST_CASE("deterministic JSON") {
  CHECK(model_to_json(builtin_example47()).dump() == model_to_json(builtin_example47()).dump());
  const CheckReport a = run_suite(builtin_example47(), Suite::All);
  const CheckReport b = run_suite(builtin_example47(), Suite::All);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
}

TEST_CASE("schema violations name the field") {
  json doc = model_to_json(builtin_example47());
  doc["submanifold"].erase("xi");
  try {
    model_from_json(doc);
    FAIL("expected SchemaViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaViolation);
    CHECK(std::string(e.what()).find("submanifold.xi: missing required field") != std::string::npos);
  }

  doc = model_to_json(builtin_example47());
  doc["parameters"] = json::array();
  CHECK(error_of([&] { model_from_json(doc); }) == ErrorCode::SchemaViolation);

  doc = model_to_json(builtin_example47());
  doc["parameters"] = {"mu", "nu"};
  CHECK(error_of([&] { model_from_json(doc); }) == ErrorCode::SchemaViolation);

  doc = model_to_json(builtin_example47());
  doc["submanifold"]["L"] = {{"Y7", "1"}};
  CHECK(error_of([&] { model_from_json(doc); }) == ErrorCode::SchemaViolation);

  CHECK(error_of([] { load_model(scratch("does-not-exist.json")); }) == ErrorCode::IoError);
}

TEST_CASE("malformed scalars report field and offset") {
  json doc = model_to_json(builtin_example47());
  doc["submanifold"]["xi"]["E"] = "2*nu";
  try {
    model_from_json(doc);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.field() == "submanifold.xi.E");
    CHECK(e.position() == 2);
  }
}

TEST_CASE("specialised mu") {
  CHECK(run_suite(builtin_example47(Rational(1)), Suite::All).passed());
  CHECK(run_suite(builtin_example47(Rational(-2, 3)), Suite::All).passed());
  CHECK(error_of([] { builtin_example47(Rational(0)); }) == ErrorCode::MuZero);
}

TEST_CASE("a failed gate skips the later stages") {
  ModelFile m = builtin_example47();
  m.name = "broken";
  Vector<Scalar> v = Vector<Scalar>::Zero(5);
  v(0) = Scalar(1);
  m.algebra.set_bracket(0, 2, v);  // [X1, X3] = X1 breaks Jacobi
  const CheckReport r = run_suite(m, Suite::All);
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("lie.structure-constants"));
  CHECK(r.find("lie.structure-constants")->failed());
  REQUIRE(r.find("stage.submanifold"));
  CHECK(r.find("stage.submanifold")->status == CheckStatus::Skipped);
  REQUIRE(r.find("stage.equivalence"));
  CHECK(r.find("stage.equivalence")->status == CheckStatus::Skipped);
  CHECK(r.find("rsthl.certificate") == nullptr);

  const CheckReport only = run_suite(m, Suite::Equivalence);
  CHECK(names(only) == std::vector<std::string>{"stage.ambient", "stage.equivalence"});
}

TEST_CASE("suite selection") {
  const CheckReport eq = run_suite(builtin_example47(), Suite::Equivalence);
  CHECK(eq.passed());
  for (const auto& n : names(eq)) CHECK(n.rfind("equivalence.", 0) == 0);
  CHECK(eq.find("equivalence.equivalent"));

  const CheckReport amb = run_suite(builtin_example47(), Suite::Ambient);
  CHECK(amb.passed());
  CHECK(amb.find("finding.example-metric-signature"));
  CHECK(amb.find("rsthl.certificate") == nullptr);

  CHECK(parse_suite("theorem46") == Suite::Equivalence);
  CHECK_FALSE(parse_suite("bogus").has_value());
}

TEST_CASE("JSON report layout") {
  const json j = report_to_json(run_suite(builtin_example47(), Suite::All));
  CHECK(j["verdict"] == "pass");
  for (const auto& e : j["entries"]) {
    CHECK(e.contains("name"));
    CHECK(e.contains("anchor"));
    CHECK(e.contains("residual_zero"));
    CHECK(e.contains("detail"));
    const std::string status = e["status"];
    CHECK((status == "pass" || status == "skipped"));
  }
}

TEST_CASE("command line exit codes") {
  CHECK(run_cli("example47") == 0);
  CHECK(run_cli("example47 --mu 1") == 0);
  CHECK(run_cli("example47 --mu 0") == 2);
  CHECK(run_cli("example47 --mu 2*nu") == 2);
  CHECK(run_cli("example47 --suite nope") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("check " + scratch("missing.json").string()) == 2);

  const fs::path model = scratch("cli_model.json");
  const fs::path report = scratch("cli_report.json");
  CHECK(run_cli("example47 --emit " + model.string()) == 0);
  CHECK(run_cli("check " + model.string() + " --suite theorem46 --report " + report.string()) == 0);
  std::ifstream in(report);
  CHECK(json::parse(in)["verdict"] == "pass");

  ModelFile broken = load_model(model);
  Vector<Scalar> v = Vector<Scalar>::Zero(5);
  v(0) = Scalar(1);
  broken.algebra.set_bracket(0, 2, v);
  save_model(broken, model);
  CHECK(run_cli("check " + model.string()) == 1);
  fs::remove(model);
  fs::remove(report);
}

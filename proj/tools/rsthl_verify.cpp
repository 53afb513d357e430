#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rsthl/error.hpp"
#include "rsthl/scalar/parse.hpp"
#include "rsthl/verify/suite.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

int write_report(const rsthl::CheckReport& report, const std::string& path) {
  std::cout << rsthl::report_to_text(report);
  if (!path.empty()) {
    std::ofstream out(path);
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      return kUsage;
    }
    out << rsthl::report_to_json(report).dump(2) << "\n";
  }
  return report.passed() ? kPass : kFail;
}

std::optional<rsthl::Rational> parse_mu(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const rsthl::Scalar value = rsthl::parse_scalar(text);
  const auto constant = value.constant_value();
  if (!constant) throw rsthl::Error(rsthl::ErrorCode::ParseError, "--mu expects a rational number, got " + text);
  return constant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of radical screen transversal half lightlike submanifolds"};
  app.require_subcommand(1);

  std::string model_path, suite_name = "all", report_path;
  auto* check = app.add_subcommand("check", "Run a check suite on a model file");
  check->add_option("file", model_path, "Model file (JSON)")->required();
  check->add_option("--suite", suite_name, "ambient | submanifold | theorem46 | all");
  check->add_option("--report", report_path, "Write a JSON report to this path");

  std::string mu_text, emit_path, example_report;
  std::string example_suite = "all";
  auto* example = app.add_subcommand("example47", "Build the product group example and run the full suite");
  example->add_option("--mu", mu_text, "Rational value p/q for mu (default: symbolic)");
  example->add_option("--emit", emit_path, "Write the model file instead of checking it");
  example->add_option("--suite", example_suite, "ambient | submanifold | theorem46 | all");
  example->add_option("--report", example_report, "Write a JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*check) {
      const auto suite = rsthl::parse_suite(suite_name);
      if (!suite) {
        std::cerr << "error: unknown suite '" << suite_name << "'\n";
        return kUsage;
      }
      const rsthl::ModelFile model = rsthl::load_model(model_path);
      return write_report(rsthl::run_suite(model, *suite), report_path);
    }
    const auto suite = rsthl::parse_suite(example_suite);
    if (!suite) {
      std::cerr << "error: unknown suite '" << example_suite << "'\n";
      return kUsage;
    }
    const rsthl::ModelFile model = rsthl::builtin_example47(parse_mu(mu_text));
    if (!emit_path.empty()) {
      rsthl::save_model(model, emit_path);
      return kPass;
    }
    return write_report(rsthl::run_suite(model, *suite), example_report);
  } catch (const rsthl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case rsthl::ErrorCode::ParseError:
      case rsthl::ErrorCode::SchemaViolation:
      case rsthl::ErrorCode::IoError:
      case rsthl::ErrorCode::MuZero:
        return kUsage;
      default:
        return kFail;
    }
  }
}

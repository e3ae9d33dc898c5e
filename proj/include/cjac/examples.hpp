#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace cjac {

/// pass: matches; fail: differs; diagnostic: the fixture records an input
/// that cannot be loaded as printed; inconclusive: a bounded search left a
/// stated expectation unconfirmed.
enum class Outcome { Pass, Fail, Diagnostic, Inconclusive };
std::string_view to_string(Outcome o);

struct CheckResult {
  std::string kind;
  std::string provenance;
  Outcome outcome = Outcome::Fail;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json actual;
  std::string detail;
};

struct ExampleResult {
  int id = 0;
  std::string title;
  /// Worst check outcome, ordered fail > inconclusive > diagnostic > pass.
  Outcome outcome = Outcome::Pass;
  std::vector<CheckResult> checks;
};

struct ReplicateOptions {
  std::optional<int> only;
  int threads = 1;
};

/// Reads and validates the fixture layout; throws ParseError on malformed
/// files.
nlohmann::json load_fixtures(const std::string& path);

/// Fixture path compiled into the build.
std::string default_fixture_path();

std::vector<ExampleResult> replicate_examples(const nlohmann::json& fixtures, const ReplicateOptions& options = {});

nlohmann::ordered_json to_json(const ExampleResult& r);

}  // namespace cjac

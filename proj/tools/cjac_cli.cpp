// Command-line front end. JSON on stdout; errors as JSON on stderr.
//   0 success, 2 parse/input error, 3 hypothesis not applicable,
//   4 verification mismatch.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cjac/classifier.hpp"
#include "cjac/deformation.hpp"
#include "cjac/error.hpp"
#include "cjac/examples.hpp"
#include "cjac/json_io.hpp"
#include "cjac/lattice.hpp"
#include "cjac/survey.hpp"

using namespace cjac;
using ojson = nlohmann::ordered_json;

namespace {

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::HypothesisNotApplicable:
    case ErrorCode::HypothesisFails:
    case ErrorCode::PreconditionFailed:
    case ErrorCode::AlreadyNormal:
      return 3;
    case ErrorCode::VerificationMismatch:
    case ErrorCode::RankDrop:
    case ErrorCode::NonTermination:
      return 4;
    default:
      return 2;
  }
}

void emit(const ojson& j) { std::cout << j.dump(2) << '\n'; }

ojson analyze(const NumericalSemigroup& s) {
  ojson j = to_json(s);
  j["gorenstein"] = is_gorenstein(s);
  j["planar"] = is_planar(s);
  j["multiplicity_condition"] = multiplicity_condition(s);
  j["smalls_are_multiples"] = smalls_are_multiples(s);
  if (s.is_natural()) {
    j["partial_normalization"] = nullptr;
    j["rank_M_mod_C"] = nullptr;
    j["rank_M_mod_tC"] = nullptr;
  } else {
    j["partial_normalization"] = to_json(partial_normalization(s));
    j["rank_M_mod_C"] = rank_M_mod(s, ConductorIdeal::C);
    j["rank_M_mod_tC"] = rank_M_mod(s, ConductorIdeal::tC);
  }
  j["normalization_chain_conductors"] = normalization_chain(s).conductors();
  j["canonical_value_set"] = to_json(canonical_value_set(s), s.conductor());
  return j;
}

ojson survey_json(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> header;
  {
    std::istringstream h(line);
    std::string f;
    while (std::getline(h, f, ',')) header.push_back(f);
  }
  ojson rows = ojson::array();
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (i <= line.size()) {
      std::string f;
      if (i < line.size() && line[i] == '"') {
        const std::size_t close = line.find('"', i + 1);
        f = line.substr(i + 1, close - i - 1);
        i = close + 2;
      } else {
        const std::size_t comma = line.find(',', i);
        const std::size_t end = comma == std::string::npos ? line.size() : comma;
        f = line.substr(i, end - i);
        i = end + 1;
      }
      fields.push_back(f);
    }
    ojson row;
    for (std::size_t k = 0; k < header.size() && k < fields.size(); ++k) {
      const std::string& f = fields[k];
      if (f.empty()) {
        row[header[k]] = nullptr;
      } else if (f == "true" || f == "false") {
        row[header[k]] = f == "true";
      } else if (k > 0 && f.find_first_not_of("-0123456789") == std::string::npos) {
        row[header[k]] = std::stol(f);
      } else {
        row[header[k]] = f;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compactified Jacobian boundary tools for numerical semigroup rings"};
  app.require_subcommand(1);

  std::string gens;
  auto* analyze_cmd = app.add_subcommand("analyze", "Semigroup invariants");
  analyze_cmd->add_option("semigroup", gens, "generators \"3,4,5\" or value set \"{0,3}+[5,)\"")->required();

  int d = -1;
  bool filt_only = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Monomial points of E(C, d)");
  enumerate_cmd->add_option("semigroup", gens)->required();
  enumerate_cmd->add_option("--d", d, "colength (default δ)");
  enumerate_cmd->add_flag("--filt-only", filt_only, "keep members of Filt(C, δ)");

  std::string family;
  auto* limit_cmd = app.add_subcommand("limit", "Flat limit of ∂_βO + C at β = 0");
  limit_cmd->add_option("semigroup", gens)->required();
  limit_cmd->add_option("--family", family, "unit family, e.g. \"t^2 + b*t + b^2\"")->required();

  int threads = 1;
  bool no_search = false;
  auto* classify_cmd = app.add_subcommand("classify", "Boundary report");
  classify_cmd->add_option("semigroup", gens)->required();
  classify_cmd->add_flag("--no-search", no_search, "skip witness search outside the proved cases");
  classify_cmd->add_option("--threads", threads)->check(CLI::Range(1, 256));

  std::optional<int> only;
  std::string fixtures = default_fixture_path();
  auto* replicate_cmd = app.add_subcommand("replicate-examples", "Run the worked-example fixtures");
  replicate_cmd->add_option("--only", only, "single example id");
  replicate_cmd->add_option("--fixtures", fixtures, "fixture file")->capture_default_str();
  replicate_cmd->add_option("--threads", threads)->check(CLI::Range(1, 256));

  int v0_max = 8;
  bool csv = false;
  bool search = false;
  auto* survey_cmd = app.add_subcommand("survey", "One row per semigroup with v0 ≤ N");
  survey_cmd->add_option("--v0-max", v0_max)->required()->check(CLI::Range(0, 40));
  survey_cmd->add_flag("--csv", csv, "CSV instead of JSON");
  survey_cmd->add_flag("--search", search, "grade open Filt members by a small witness search");
  survey_cmd->add_option("--threads", threads)->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze_cmd) {
      emit(analyze(NumericalSemigroup::parse(gens)));
    } else if (*enumerate_cmd) {
      const auto s = NumericalSemigroup::parse(gens);
      const int colength = d < 0 ? s.delta() : d;
      ojson rows = ojson::array();
      for (const auto& v : enumerate_E(s, colength)) {
        const bool f = colength == s.delta() && in_filt(s, v);
        if (filt_only && !f) continue;
        ojson row = to_json(v, s.conductor());
        row["in_filt"] = colength == s.delta() ? ojson(f) : ojson(nullptr);
        rows.push_back(std::move(row));
      }
      if (filt_only && colength != s.delta()) {
        throw Error(ErrorCode::DOutOfRange, "--filt-only needs d = δ = " + std::to_string(s.delta()));
      }
      ojson out;
      out["semigroup"] = s.to_string();
      out["d"] = colength;
      out["count"] = rows.size();
      out["rows"] = std::move(rows);
      emit(out);
    } else if (*limit_cmd) {
      const auto s = NumericalSemigroup::parse(gens);
      const auto f = FamilyElement::parse(family);
      ojson out;
      out["semigroup"] = s.to_string();
      out["family"] = f.to_string();
      const ojson limit = to_json(limit_of(f, s), s.conductor());
      for (const auto& [k, v] : limit.items()) out[k] = v;
      emit(out);
    } else if (*classify_cmd) {
      const auto s = NumericalSemigroup::parse(gens);
      ClassifierOptions options;
      options.search = !no_search;
      options.budget.threads = threads;
      emit(to_json(boundary_report(s, options)));
    } else if (*replicate_cmd) {
      ReplicateOptions options;
      options.only = only;
      options.threads = threads;
      const auto results = replicate_examples(load_fixtures(fixtures), options);
      ojson out;
      out["fixtures"] = fixtures;
      out["examples"] = ojson::array();
      ojson summary = {{"pass", 0}, {"fail", 0}, {"diagnostic", 0}, {"inconclusive", 0}};
      std::vector<int> failed;
      for (const auto& r : results) {
        out["examples"].push_back(to_json(r));
        summary[std::string(to_string(r.outcome))] = summary[std::string(to_string(r.outcome))].get<int>() + 1;
        if (r.outcome == Outcome::Fail) failed.push_back(r.id);
      }
      out["summary"] = summary;
      emit(out);
      if (!failed.empty()) {
        std::string ids;
        for (int id : failed) ids += (ids.empty() ? "" : ", ") + std::to_string(id);
        throw Error(ErrorCode::VerificationMismatch, "fixture mismatch in example " + ids);
      }
    } else if (*survey_cmd) {
      SurveyOptions options;
      options.v0_max = v0_max;
      options.threads = threads;
      options.search = search;
      const std::string table = survey_csv(options);
      if (csv) {
        std::cout << table;
      } else {
        emit(survey_json(table));
      }
    }
  } catch (const Error& e) {
    const int code = exit_code(e.code());
    ojson err;
    err["error"] = std::string(to_string(e.code()));
    err["message"] = e.what();
    if (code == 4) {
      err["meaning"] = "a result the engine asserts by construction failed: either an engine defect or a counterexample "
                       "to the stated result; inspect the report";
    }
    std::cerr << err.dump() << '\n';
    return code;
  }
  return 0;
}

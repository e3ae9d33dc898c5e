#pragma once

#include <string>
#include <vector>

#include "cjac/semigroup.hpp"

namespace cjac {

/// Every numerical semigroup with conductor ≤ v0_max, ordered by
/// (v0, generators). Walks the tree rooted at ℕ whose children drop one
/// minimal generator above the Frobenius number.
std::vector<NumericalSemigroup> semigroups_up_to(int v0_max);

struct SurveyOptions {
  int v0_max = 8;
  int threads = 1;
  /// Grade Filt members outside the rank-one case by a survey-budget search.
  bool search = false;
};

std::string survey_header();
std::string survey_row(const NumericalSemigroup& s, bool search);
/// Header plus one row per semigroup; rows are computed in parallel and
/// written in order.
std::string survey_csv(const SurveyOptions& options);

}  // namespace cjac

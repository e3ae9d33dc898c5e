#include "cjac/classifier.hpp"

#include <algorithm>
#include <map>

#include "cjac/error.hpp"

namespace cjac {

std::string_view to_string(KStatus s) {
  switch (s) {
    case KStatus::Witnessed:
      return "Witnessed";
    case KStatus::TheoremBacked:
      return "TheoremBacked";
    case KStatus::CertifiedOut:
      return "CertifiedOut";
    case KStatus::Exhausted:
      return "Exhausted";
  }
  return "?";
}

std::string_view to_string(FiltKbar f) {
  switch (f) {
    case FiltKbar::Proved:
      return "Proved";
    case FiltKbar::AllWitnessed:
      return "AllWitnessed";
    case FiltKbar::CounterexampleEvidence:
      return "CounterexampleEvidence";
  }
  return "?";
}

namespace {

bool reached(KStatus s) { return s == KStatus::Witnessed || s == KStatus::TheoremBacked; }

// k_i for 0 ≤ i ≤ γ - 1; nullopt outside that range.
std::optional<int> small(const NumericalSemigroup& s, int i) {
  if (i < 0 || i >= s.gamma()) return std::nullopt;
  return s.element(i);
}

ValueSet generated_module(const NumericalSemigroup& s, const std::vector<int>& generators) {
  const int v0 = s.conductor();
  std::vector<int> members;
  for (int g : generators) {
    for (int x = g; x < v0; ++x) {
      if (s.contains(x - g)) members.push_back(x);
    }
  }
  return ValueSet::from_elements(members, v0);
}

std::vector<MemberStatus> grade_all(const NumericalSemigroup& s, int d, const ClassifierOptions& options) {
  std::vector<MemberStatus> out;
  for (const auto& delta : enumerate_E(s, d)) out.push_back(kbar_status(s, delta, options));
  return out;
}

}  // namespace

MemberStatus kbar_status(const NumericalSemigroup& s, const ValueSet& delta, const ClassifierOptions& options) {
  MemberStatus out;
  out.delta = delta;
  out.in_filt = in_filt(s, delta);
  if (!out.in_filt) {
    out.status = KStatus::CertifiedOut;
    return out;
  }
  const int rank = rank_M_mod(s, ConductorIdeal::C);
  if (rank == 1) {
    out.family = witness_2_6(s, delta);
    out.status = KStatus::TheoremBacked;
    return out;
  }
  if (s.gamma() <= 1) {
    FamilyElement d = chain_family(s, delta);
    if (limit_of(d, s).delta != delta) {
      throw Error(ErrorCode::VerificationMismatch, "chain family misses " + delta.to_string() + " with M = C");
    }
    out.family = d;
    out.status = KStatus::Witnessed;
    return out;
  }
  if (!options.search) {
    out.status = KStatus::Exhausted;
    return out;
  }
  const auto result = search_witness(s, delta, options.budget);
  if (const auto* d = std::get_if<FamilyElement>(&result)) {
    out.family = *d;
    out.status = KStatus::Witnessed;
  } else {
    const auto& ex = std::get<Exhausted>(result);
    out.status = KStatus::Exhausted;
    out.candidates = ex.candidates;
    out.search_complete = ex.complete;
  }
  return out;
}

bool e_equals_filt(const NumericalSemigroup& s) {
  for (const auto& delta : enumerate_E(s, s.delta())) {
    if (!in_filt(s, delta)) return false;
  }
  return true;
}

bool lemma_2_5_1_applies(const NumericalSemigroup& s) {
  if (s.gamma() < 1) return false;
  return rank_M_mod(s, ConductorIdeal::C) == 1 && s.conductor() >= s.element(s.gamma() - 1) + s.multiplicity() - 1;
}

Report252 check_2_5_2(const NumericalSemigroup& s) {
  if (!e_equals_filt(s)) {
    throw Error(ErrorCode::PreconditionFailed, "E(C, δ) ≠ Filt(C, δ) for " + s.to_string());
  }
  const int v0 = s.conductor();
  const int g = s.gamma();
  const int k1 = s.multiplicity();
  Report252 r;

  r.clause_i.name = "i";
  const auto top = small(s, g - 1);
  r.clause_i.premise = rank_M_mod(s, ConductorIdeal::C) == 1;
  if (!top) {
    r.clause_i.degenerate = true;
    r.clause_i.detail = "k_{γ-1} undefined";
  } else if (r.clause_i.premise) {
    r.clause_i.holds = v0 >= *top + k1 - 1;
    r.clause_i.detail = "v0 = " + std::to_string(v0) + ", k_{γ-1} + k_1 - 1 = " + std::to_string(*top + k1 - 1);
  }

  r.clause_ii.name = "ii";
  r.clause_ii.premise = top.has_value() && v0 < *top + k1 - 1;
  if (!top) {
    r.clause_ii.degenerate = true;
    r.clause_ii.detail = "k_{γ-1} undefined";
  } else if (r.clause_ii.premise) {
    const auto below = small(s, g - 2);
    if (!below) {
      r.clause_ii.degenerate = true;
      r.clause_ii.detail = "k_{γ-2} undefined";
    } else {
      bool ok = v0 - k1 <= *below && *top <= v0 - *top + *below;
      for (int j = 2; j <= g - 2 && ok; ++j) {
        const int kj = s.element(j);
        if (v0 - k1 < kj && kj > v0 - *top + s.element(j - 1)) {
          ok = false;
          r.clause_ii.detail = "fails at j = " + std::to_string(j);
        }
      }
      r.clause_ii.holds = ok;
    }
  }
  r.at_least_one = r.clause_i.holds || r.clause_ii.holds;
  r.both = r.clause_i.holds && r.clause_ii.holds;
  if (!r.at_least_one) {
    throw Error(ErrorCode::VerificationMismatch,
                "E(C, δ) = Filt(C, δ) but neither clause of check_2_5_2 holds for " + s.to_string());
  }
  return r;
}

Report27 check_2_7_and_2_8(const NumericalSemigroup& s, const std::vector<std::pair<std::string, ValueSet>>& probes,
                           const ClassifierOptions& options) {
  Report27 r;
  const int v0 = s.conductor();
  const int g = s.gamma();
  const int k1 = s.multiplicity();
  const int rank = s.is_natural() ? 0 : rank_M_mod(s, ConductorIdeal::C);
  const auto top = small(s, g - 1);
  const auto below = small(s, g - 2);
  const auto third = small(s, g - 3);

  auto build = [&](std::string name, std::vector<int> gens, bool predicted_out) {
    Construction c;
    c.name = std::move(name);
    c.generators = std::move(gens);
    c.delta = generated_module(s, c.generators);
    c.in_E = in_E(s, c.delta);
    c.predicted_out = predicted_out;
    if (c.delta.colength() == s.delta()) c.in_filt = in_filt(s, c.delta);
    if (c.in_E) {
      c.status = kbar_status(s, c.delta, options);
      c.inconsistent = c.predicted_out && reached(c.status->status);
    } else {
      c.note = "outside E(C, δ): colength " + std::to_string(c.delta.colength());
    }
    if (c.inconsistent) r.consistent = false;
    r.constructions.push_back(std::move(c));
  };

  if (!s.is_natural() && top && below) {
    // Four-generator module for v0 = k_{γ-1} + k_1 - 1 with k_1 > 4.
    r.applies_2_7_i = v0 == *top + k1 - 1 && rank != 1 && *below + k1 > *top && k1 > 4;
    if (r.applies_2_7_i) {
      build("2.7(i)", {k1 + 4, v0 - k1, v0 - k1 + 2, v0 - k1 + 4}, true);
    }

    r.applies_2_7_ii = v0 < *top + k1 - 1 && *top <= v0 - *top + *below && v0 - k1 == *below;
    if (r.applies_2_7_ii) {
      const bool conclusion =
          k1 >= 5 && k1 % 2 == 1 && v0 == *top + k1 - 2 && third.has_value() && v0 == *third + 2 * k1 - 2;
      const int h = v0 - *top;
      const std::size_t first = r.constructions.size();
      for (int hp = v0 - k1; hp < *top; ++hp) {
        const ValueSet delta = generated_module(s, {h, hp});
        if (!in_E(s, delta)) continue;
        const auto a = delta.elements_below(v0 + g + 1);
        if (a.size() <= static_cast<std::size_t>(g - 2) || a[static_cast<std::size_t>(g - 2)] != hp) continue;
        build("2.7(ii) h'=" + std::to_string(hp), {h, hp}, false);
      }
      if (!conclusion) {
        bool any_out = false;
        for (std::size_t i = first; i < r.constructions.size(); ++i) {
          const auto& c = r.constructions[i];
          any_out = any_out || !c.status || !reached(c.status->status);
        }
        if (!any_out) {
          r.constructions.push_back({"2.7(ii) evidence", {}, ValueSet(), false, false, std::nullopt, false, false,
                                     "conclusion fails yet every constructed h' was reached under the budget"});
        }
      }
    }
  }

  r.applies_2_8 = !s.is_natural() && top.has_value() && v0 == *top + k1 - 1 && rank != 1;
  if (r.applies_2_8) {
    if (v0 % k1 == 0) {
      r.form_2_8 = "i";
      r.m = v0 / k1 - 1;
      for (int i = 1; i * k1 + 1 < v0; ++i) {
        if (s.contains(i * k1 + 1)) {
          r.n = i;
          break;
        }
      }
    } else if ((v0 + 1) % k1 == 0) {
      r.form_2_8 = "ii";
      r.m = (v0 + 1) / k1 - 1;
      for (int i = 1; i * k1 - 1 < v0; ++i) {
        if (s.contains(i * k1 - 1)) {
          r.n = i;
          break;
        }
      }
    }
    if (!r.form_2_8.empty() && r.n > 0) {
      const bool exempt = (r.form_2_8 == "i" && k1 <= 3) || (r.form_2_8 == "ii" && k1 <= 4);
      build("2.8(" + r.form_2_8 + ")", {k1, r.n * k1 + 2, r.m * k1 + 3}, !exempt);
    } else {
      r.constructions.push_back({"2.8", {}, ValueSet(), false, false, std::nullopt, false, false,
                                 "Γ matches neither listed shape (k_1 divides neither v0 nor v0 + 1)"});
    }
  }

  for (const auto& [label, delta] : probes) {
    Probe p;
    p.label = label;
    p.delta = delta;
    p.closure_diagnostic = closure_diagnostic(s, delta);
    if (delta.colength() != s.delta()) {
      const std::string c = "colength " + std::to_string(delta.colength()) + " ≠ δ = " + std::to_string(s.delta());
      p.closure_diagnostic = p.closure_diagnostic ? *p.closure_diagnostic + "; " + c : c;
    } else {
      p.in_filt = in_filt(s, delta);
    }
    if (in_E(s, delta)) p.status = kbar_status(s, delta, options);
    r.probes.push_back(std::move(p));
  }

  if (!r.applies_2_7_i && !r.applies_2_7_ii && !r.applies_2_8 && probes.empty()) {
    throw Error(ErrorCode::HypothesisNotApplicable, "no counterexample construction applies to " + s.to_string());
  }
  return r;
}

Report33 thm_3_3_report(const NumericalSemigroup& s, const ClassifierOptions& options) {
  Report33 r;
  r.multiplicity_condition = multiplicity_condition(s);
  r.smalls_are_multiples = smalls_are_multiples(s);
  r.condition_i = !s.is_natural() && rank_M_mod(s, ConductorIdeal::tC) == 1;
  r.remark_0_6_ok = r.condition_i == r.multiplicity_condition && r.condition_i == r.smalls_are_multiples;
  if (!r.remark_0_6_ok) r.discrepancies.push_back("rank, multiplicity and multiples conditions disagree");

  r.members = grade_all(s, s.delta(), options);
  bool all = std::all_of(r.members.begin(), r.members.end(), [](const auto& m) { return reached(m.status); });
  if (!s.is_natural()) {
    r.ring_prime = partial_normalization(s);
    r.members_prime = grade_all(*r.ring_prime, r.ring_prime->delta(), options);
    all = all && std::all_of(r.members_prime.begin(), r.members_prime.end(),
                             [](const auto& m) { return reached(m.status); });
  }
  r.condition_iii_evidence = all;

  if (r.condition_i) {
    auto check = [&](const std::vector<MemberStatus>& ms, const char* ring) {
      for (const auto& m : ms) {
        if (m.in_filt && !reached(m.status)) {
          r.discrepancies.push_back(std::string("(i) holds but Filt member ") + m.delta.to_string() + " over " + ring +
                                    " is " + std::string(to_string(m.status)));
        }
      }
    };
    check(r.members, "Γ");
    check(r.members_prime, "Γ'");
  }
  if (lemma_2_5_1_applies(s) && !e_equals_filt(s)) {
    r.discrepancies.push_back("E(C, δ) ≠ Filt(C, δ) although rk(M/M² + C) = 1 and v0 ≥ k_{γ-1} + k_1 - 1");
  }
  if (!s.is_natural() && r.condition_iii_evidence && !r.condition_i) {
    r.discrepancies.push_back("every member over Γ and Γ' reached, yet rk(M/M² + tC) ≠ 1");
  }
  return r;
}

Lemma34 lemma_3_4(const NumericalSemigroup& s) {
  if (s.is_natural()) return {true, true};
  const int v0 = s.conductor();
  const int k1 = s.multiplicity();
  return {is_gorenstein(partial_normalization(s)), (v0 > k1 && k1 == 2) || (v0 == k1 && k1 < 4)};
}

Report35 lemma_3_5_and_3_1(const NumericalSemigroup& s) {
  Report35 r;
  r.planar = is_planar(s);
  r.v0_is_2delta_minus_1 = s.conductor() == 2 * s.delta() - 1;
  if (!s.is_natural()) r.conductor_drop = s.conductor() - partial_normalization(s).conductor();
  r.lemma_3_1_ok = s.is_natural() || r.conductor_drop == 1 || s.multiplicity() == 2;
  r.lemma_3_5_ok = r.planar || r.v0_is_2delta_minus_1;
  return r;
}

Report38 structure_3_8(const NumericalSemigroup& s) {
  if (s.is_natural() || is_planar(s)) {
    throw Error(ErrorCode::HypothesisNotApplicable, s.to_string() + " is planar");
  }
  if (s.gamma() <= 1) {
    throw Error(ErrorCode::HypothesisNotApplicable, "M = C for " + s.to_string());
  }
  Report38 r;
  r.conductors = normalization_chain(s).conductors();
  const int v0 = s.conductor();
  const int k1 = s.multiplicity();
  const int delta = s.delta();
  const int v1 = r.conductors[1];
  r.dichotomy_3_6 = v1 == k1 || v0 - v1 == k1;
  r.case_3_7 = v1 == k1;
  r.unique_case_3_7 = s.as_value_set() == ValueSet::parse("{0,3}+[5,)");
  if (r.case_3_7) {
    r.trace.push_back(std::string("v1 = k1: δ = k1 is ") + (delta == k1 ? "true" : "false") + ", v0 = 2k1 - 1 is " +
                      (v0 == 2 * k1 - 1 ? "true" : "false"));
  }
  r.hypothesis_3_8 = v1 > k1 && v0 - v1 == k1;
  if (!r.hypothesis_3_8) {
    r.trace.push_back("v1 > k1 with v0 - v1 = k1 does not hold; no j* search");
    return r;
  }
  // v_i for the non-normal rings of the chain, i = 0 … δ - 1.
  const int last = delta - 1;
  for (int j = 0; j < delta - k1 + 1; ++j) {
    std::string failure;
    for (int i = 1; i < j && failure.empty(); ++i) {
      if (v0 - r.conductors[static_cast<std::size_t>(i)] != s.element(i)) failure = "v0 - v_i ≠ k_i at i = " + std::to_string(i);
    }
    for (int i = j + 1; i <= last && failure.empty(); ++i) {
      if (v0 - r.conductors[static_cast<std::size_t>(i)] != s.element(i - 1)) {
        failure = "v0 - v_i ≠ k_{i-1} at i = " + std::to_string(i);
      }
    }
    if (failure.empty() && r.conductors[static_cast<std::size_t>(j)] != delta) failure = "v_j ≠ δ";
    if (failure.empty()) {
      r.candidates.push_back(j);
    } else {
      r.trace.push_back("j = " + std::to_string(j) + ": " + failure);
    }
  }
  if (r.candidates.size() == 1) r.j_star = r.candidates.front();
  return r;
}

BoundaryReport boundary_report(const NumericalSemigroup& s, const ClassifierOptions& options) {
  BoundaryReport r;
  r.semigroup = s;
  r.gorenstein = is_gorenstein(s);
  r.M_equals_C = s.gamma() == 1;
  r.multiplicity_condition = multiplicity_condition(s);
  if (!s.is_natural()) {
    r.gorenstein_prime = is_gorenstein(partial_normalization(s));
    r.rank_M_mod_C = rank_M_mod(s, ConductorIdeal::C);
    r.rank_M_mod_tC = rank_M_mod(s, ConductorIdeal::tC);
  }
  r.E_equals_Filt = e_equals_filt(s);
  r.lemma_3_4 = lemma_3_4(s);
  const auto r35 = lemma_3_5_and_3_1(s);
  r.lemma_3_5_necessary_ok = r35.lemma_3_5_ok;
  r.conductor_drop = r35.conductor_drop == 1;
  try {
    r.structure_3_8 = structure_3_8(s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HypothesisNotApplicable) throw;
  }

  const auto r33 = thm_3_3_report(s, options);
  r.members = r33.members;
  r.thm_3_3_equivalence_ok = r33.remark_0_6_ok && r33.discrepancies.empty();
  r.discrepancies = r33.discrepancies;

  if (s.gamma() <= 1 || r.rank_M_mod_C == 1) {
    r.Filt_equals_Kbar_status = FiltKbar::Proved;
  } else {
    for (const auto& m : r.members) {
      if (m.in_filt && !reached(m.status)) r.counterexample_evidence.push_back(m.delta);
    }
    r.Filt_equals_Kbar_status =
        r.counterexample_evidence.empty() ? FiltKbar::AllWitnessed : FiltKbar::CounterexampleEvidence;
  }

  std::map<std::string, const MemberStatus*> by_text;
  for (const auto& m : r.members) by_text[m.delta.to_string()] = &m;
  auto translate_of = [&](const ValueSet& normal) -> std::optional<ValueSet> {
    const int shift = s.delta() - normal.colength();
    if (shift < 0 || normal.tail() + shift > s.conductor()) return std::nullopt;
    return normal.translated(shift);
  };

  r.iso_classes = iso_classes(s);
  for (const auto& nf : r.iso_classes) {
    const auto t = translate_of(nf);
    const MemberStatus* m = t ? by_text[t->to_string()] : nullptr;
    if (m == nullptr || !reached(m->status)) ++r.component_surrogate;
  }

  const auto chain = normalization_chain(s);
  for (std::size_t j = 0; j < chain.rings.size(); ++j) {
    IdealMember im;
    im.j = static_cast<int>(j);
    im.ideal = dual(s, chain.rings[j].as_value_set());
    im.normal_form = im.ideal.base;
    im.translate = translate_of(im.normal_form);
    if (im.translate) {
      if (const auto* m = by_text[im.translate->to_string()]) im.status = m->status;
    }
    r.lemma_2_0.push_back(std::move(im));
  }

  r.boundary_fully_described =
      r.M_equals_C && std::all_of(r.members.begin(), r.members.end(), [](const auto& m) { return reached(m.status); });

  if (!s.is_natural()) {
    const auto prime = partial_normalization(s);
    for (const auto& m : r.members) {
      if (reached(m.status) && !m.delta.contains(0) && !is_closed_under(m.delta, prime)) r.theorem_1_1_ok = false;
    }
    const ValueSet expected = prime.as_value_set().translated(1);
    r.theorem_1_2_ok = limit_of(witness_1_2(s), s).delta == expected;
  }
  if (!r.theorem_1_1_ok) r.discrepancies.push_back("a reached member without 0 is not closed under Γ'");
  if (!r.theorem_1_2_ok) r.discrepancies.push_back("t - β does not reach 1 + Γ'");
  if (r.lemma_3_4.computed != r.lemma_3_4.predicted) {
    r.discrepancies.push_back("Γ' Gorenstein status differs from the closed form");
  }

  r.notes.push_back("planar: two-generator surrogate for embedding dimension ≤ 2");
  r.notes.push_back("component_surrogate: 1 + iso classes without a reached translate in E(C, δ)");
  r.notes.push_back("Exhausted: no witness under the search budget; not a proof of non-membership");
  return r;
}

}  // namespace cjac

#include "cjac/json_io.hpp"

namespace cjac {

using json = nlohmann::ordered_json;

json to_json(const ValueSet& v, int tail_at) {
  const int tail = std::max(tail_at, v.tail());
  json out;
  out["elements"] = v.elements_below(tail);
  out["tail"] = tail;
  out["text"] = v.to_string(tail);
  return out;
}

json to_json(const NumericalSemigroup& s) {
  json out;
  out["generators"] = s.generators();
  out["v0"] = s.conductor();
  out["delta"] = s.delta();
  out["gamma"] = s.gamma();
  out["gaps"] = s.gaps();
  out["smalls"] = s.smalls();
  return out;
}

json to_json(const FlatLimit& limit, int v0) {
  json out;
  out["limit"] = to_json(limit.delta, v0);
  json basis = json::array();
  for (const auto& row : limit.basis) {
    json r = json::array();
    for (const auto& q : row) r.push_back(q.get_str());
    basis.push_back(std::move(r));
  }
  out["basis"] = std::move(basis);
  out["iterations"] = limit.iterations;
  return out;
}

json to_json(const MemberStatus& m, int v0) {
  json out;
  out["delta"] = m.delta.to_string(v0);
  out["in_filt"] = m.in_filt;
  out["status"] = std::string(to_string(m.status));
  out["family"] = m.family ? json(m.family->to_string()) : json(nullptr);
  if (m.status == KStatus::Exhausted) {
    out["candidates"] = m.candidates;
    out["search_complete"] = m.search_complete;
  }
  return out;
}

json to_json(const Exhausted& e, int v0) {
  json out;
  out["status"] = "Exhausted";
  out["candidates"] = e.candidates;
  out["complete"] = e.complete;
  out["budget"] = {{"terms", e.budget.terms},
                   {"max_beta_degree", e.budget.max_beta_degree},
                   {"max_exponent", e.budget.max_exponent},
                   {"max_candidates", e.budget.max_candidates}};
  json reached = json::array();
  for (const auto& r : e.reached) reached.push_back(r.to_string(v0));
  out["reached"] = std::move(reached);
  return out;
}

json to_json(const Report27& r, int v0) {
  json out;
  out["applies_2_7_i"] = r.applies_2_7_i;
  out["applies_2_7_ii"] = r.applies_2_7_ii;
  out["applies_2_8"] = r.applies_2_8;
  if (r.applies_2_8) {
    out["form_2_8"] = r.form_2_8;
    out["n"] = r.n;
    out["m"] = r.m;
  }
  json cs = json::array();
  for (const auto& c : r.constructions) {
    json j;
    j["name"] = c.name;
    j["generators"] = c.generators;
    j["delta"] = c.delta.to_string(v0);
    j["in_E"] = c.in_E;
    j["in_filt"] = c.in_filt;
    j["predicted_out"] = c.predicted_out;
    j["status"] = c.status ? to_json(*c.status, v0) : json(nullptr);
    j["inconsistent"] = c.inconsistent;
    if (!c.note.empty()) j["note"] = c.note;
    cs.push_back(std::move(j));
  }
  out["constructions"] = std::move(cs);
  json ps = json::array();
  for (const auto& p : r.probes) {
    json j;
    j["label"] = p.label;
    j["delta"] = p.delta.to_string(v0);
    j["closure_diagnostic"] = p.closure_diagnostic ? json(*p.closure_diagnostic) : json(nullptr);
    j["in_filt"] = p.in_filt;
    j["status"] = p.status ? to_json(*p.status, v0) : json(nullptr);
    ps.push_back(std::move(j));
  }
  out["probes"] = std::move(ps);
  out["consistent"] = r.consistent;
  return out;
}

json to_json(const Report33& r) {
  json out;
  out["condition_i"] = r.condition_i;
  out["multiplicity_condition"] = r.multiplicity_condition;
  out["smalls_are_multiples"] = r.smalls_are_multiples;
  out["remark_0_6_ok"] = r.remark_0_6_ok;
  out["condition_iii_evidence"] = r.condition_iii_evidence;
  out["discrepancies"] = r.discrepancies;
  return out;
}

json to_json(const Report38& r) {
  json out;
  out["conductors"] = r.conductors;
  out["dichotomy_3_6"] = r.dichotomy_3_6;
  out["case_3_7"] = r.case_3_7;
  out["unique_case_3_7"] = r.unique_case_3_7;
  out["hypothesis_3_8"] = r.hypothesis_3_8;
  out["candidates"] = r.candidates;
  out["j_star"] = r.j_star ? json(*r.j_star) : json(nullptr);
  out["trace"] = r.trace;
  return out;
}

json to_json(const BoundaryReport& r) {
  const int v0 = r.semigroup.conductor();
  json out;
  out["semigroup"] = to_json(r.semigroup);
  json flags;
  flags["M_equals_C"] = r.M_equals_C;
  flags["gorenstein"] = r.gorenstein;
  flags["gorenstein_prime"] = r.gorenstein_prime ? json(*r.gorenstein_prime) : json(nullptr);
  flags["multiplicity_condition"] = r.multiplicity_condition;
  flags["rank_M_mod_C"] = r.rank_M_mod_C;
  flags["rank_M_mod_tC"] = r.rank_M_mod_tC;
  flags["E_equals_Filt"] = r.E_equals_Filt;
  json status;
  status["kind"] = std::string(to_string(r.Filt_equals_Kbar_status));
  json evidence = json::array();
  for (const auto& d : r.counterexample_evidence) evidence.push_back(d.to_string(v0));
  status["evidence"] = std::move(evidence);
  flags["Filt_equals_Kbar_status"] = std::move(status);
  flags["thm_3_3_equivalence_ok"] = r.thm_3_3_equivalence_ok;
  flags["lemma_3_5_necessary_ok"] = r.lemma_3_5_necessary_ok;
  flags["conductor_drop"] = r.conductor_drop;
  flags["structure_3_8"] = r.structure_3_8 ? to_json(*r.structure_3_8) : json(nullptr);
  flags["lemma_3_4"] = {{"computed", r.lemma_3_4.computed}, {"predicted", r.lemma_3_4.predicted}};
  out["flags"] = std::move(flags);

  json members = json::array();
  for (const auto& m : r.members) members.push_back(to_json(m, v0));
  out["members"] = std::move(members);
  json classes = json::array();
  for (const auto& c : r.iso_classes) classes.push_back(c.to_string());
  out["iso_classes"] = std::move(classes);
  out["component_surrogate"] = r.component_surrogate;
  json ideals = json::array();
  for (const auto& im : r.lemma_2_0) {
    json j;
    j["j"] = im.j;
    j["shift"] = im.ideal.shift;
    j["normal_form"] = im.normal_form.to_string();
    j["translate"] = im.translate ? json(im.translate->to_string(v0)) : json(nullptr);
    j["status"] = im.status ? json(std::string(to_string(*im.status))) : json(nullptr);
    ideals.push_back(std::move(j));
  }
  out["lemma_2_0"] = std::move(ideals);
  out["boundary_fully_described"] = r.boundary_fully_described;
  out["theorem_1_1_ok"] = r.theorem_1_1_ok;
  out["theorem_1_2_ok"] = r.theorem_1_2_ok;
  out["discrepancies"] = r.discrepancies;
  out["notes"] = r.notes;
  return out;
}

}  // namespace cjac

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cjac/deformation.hpp"
#include "cjac/lattice.hpp"
#include "cjac/semigroup.hpp"

namespace cjac {

/// Evidence grade for Δ ∈ K̄ (limit of free modules ∂_βO).
enum class KStatus { Witnessed, TheoremBacked, CertifiedOut, Exhausted };
std::string_view to_string(KStatus s);

struct MemberStatus {
  ValueSet delta;
  bool in_filt = false;
  KStatus status = KStatus::Exhausted;
  std::optional<FamilyElement> family;
  /// Search effort behind an Exhausted verdict.
  long candidates = 0;
  bool search_complete = false;
};

struct ClassifierOptions {
  /// Budget for members not covered by a construction; zero fields resolve
  /// to SearchBudget::survey.
  SearchBudget budget{3, 3, 0, 2000, 1};
  bool search = true;
};

/// Grades Δ ∈ E(C, δ): CertifiedOut off Filt, TheoremBacked by the chain
/// construction when rk(M/M² + C) = 1, otherwise a budgeted search.
MemberStatus kbar_status(const NumericalSemigroup& s, const ValueSet& delta, const ClassifierOptions& options = {});

/// E(C, δ) = Filt(C, δ).
bool e_equals_filt(const NumericalSemigroup& s);

/// rk(M/M² + C) = 1 and v0 ≥ k_{γ-1} + k_1 - 1.
bool lemma_2_5_1_applies(const NumericalSemigroup& s);

struct Clause {
  std::string name;
  /// The implication holds (vacuously when its premise fails).
  bool holds = true;
  bool premise = false;
  /// Some index in the clause falls outside 0 … γ-1.
  bool degenerate = false;
  std::string detail;
};

struct Report252 {
  Clause clause_i;
  Clause clause_ii;
  bool at_least_one = false;
  bool both = false;
};

/// Throws PreconditionFailed unless E(C, δ) = Filt(C, δ), and
/// VerificationMismatch when neither clause holds.
Report252 check_2_5_2(const NumericalSemigroup& s);

struct Construction {
  std::string name;
  std::vector<int> generators;
  ValueSet delta;
  bool in_E = false;
  bool in_filt = false;
  std::optional<MemberStatus> status;
  /// The statement predicts Δ ∉ K̄.
  bool predicted_out = false;
  /// predicted_out together with a witness found.
  bool inconsistent = false;
  std::string note;
};

struct Probe {
  std::string label;
  ValueSet delta;
  std::optional<std::string> closure_diagnostic;
  bool in_filt = false;
  std::optional<MemberStatus> status;
};

struct Report27 {
  bool applies_2_7_i = false;
  bool applies_2_7_ii = false;
  bool applies_2_8 = false;
  /// 'i' or 'ii' when the second construction applies.
  std::string form_2_8;
  int n = 0;
  int m = 0;
  std::vector<Construction> constructions;
  std::vector<Probe> probes;
  bool consistent = true;
};

/// Builds the counterexample modules of the two non-membership constructions when their
/// hypotheses hold. `probes` are extra value sets (possibly not Γ-closed)
/// evaluated alongside. Throws HypothesisNotApplicable when no construction
/// applies and no probe is given.
Report27 check_2_7_and_2_8(const NumericalSemigroup& s, const std::vector<std::pair<std::string, ValueSet>>& probes = {},
                           const ClassifierOptions& options = {});

struct Report33 {
  bool condition_i = false;
  bool multiplicity_condition = false;
  bool smalls_are_multiples = false;
  bool remark_0_6_ok = false;
  std::vector<MemberStatus> members;
  std::optional<NumericalSemigroup> ring_prime;
  std::vector<MemberStatus> members_prime;
  /// Every member over Γ and Γ' witnessed or theorem-backed.
  bool condition_iii_evidence = false;
  std::vector<std::string> discrepancies;
};

Report33 thm_3_3_report(const NumericalSemigroup& s, const ClassifierOptions& options = {});

struct Lemma34 {
  bool computed = false;
  bool predicted = false;
};

/// computed = Γ' Gorenstein; predicted = (v0 > k_1 = 2) ∨ (v0 = k_1 < 4).
/// ℕ has no Γ'; both sides are reported true there.
Lemma34 lemma_3_4(const NumericalSemigroup& s);

struct Report35 {
  /// Two-generator surrogate for local planarity.
  bool planar = false;
  bool v0_is_2delta_minus_1 = false;
  /// rk(C'/C) = v0 - v1.
  int conductor_drop = 0;
  /// rk(C'/C) = 1 or k_1 = 2.
  bool lemma_3_1_ok = false;
  bool lemma_3_5_ok = false;
};

Report35 lemma_3_5_and_3_1(const NumericalSemigroup& s);

struct Report38 {
  std::vector<int> conductors;  // v_0, v_1, …, along the normalization chain
  bool dichotomy_3_6 = false;   // v_1 = k_1 or v0 - v_1 = k_1
  bool case_3_7 = false;        // v_1 = k_1
  bool unique_case_3_7 = false; // Γ = {0,3} ∪ [5, ∞)
  bool hypothesis_3_8 = false;  // v_1 > k_1 and v0 - v_1 = k_1
  std::vector<int> candidates;  // every j satisfying the clauses
  std::optional<int> j_star;    // the unique candidate, if unique
  std::vector<std::string> trace;
};

/// Throws HypothesisNotApplicable for planar Γ or M = C.
Report38 structure_3_8(const NumericalSemigroup& s);

struct IdealMember {
  int j = 0;
  /// I_j = dual(Γ^j), Γ^j the j-th ring of the normalization chain.
  ShiftedValueSet ideal;
  ValueSet normal_form;
  /// The translate of colength δ, when it contains [v0, ∞).
  std::optional<ValueSet> translate;
  std::optional<KStatus> status;
};

enum class FiltKbar { Proved, AllWitnessed, CounterexampleEvidence };
std::string_view to_string(FiltKbar f);

struct BoundaryReport {
  NumericalSemigroup semigroup;
  bool M_equals_C = false;
  bool gorenstein = false;
  std::optional<bool> gorenstein_prime;
  bool multiplicity_condition = false;
  int rank_M_mod_C = 0;
  int rank_M_mod_tC = 0;
  bool E_equals_Filt = false;
  FiltKbar Filt_equals_Kbar_status = FiltKbar::Proved;
  std::vector<ValueSet> counterexample_evidence;
  bool thm_3_3_equivalence_ok = false;
  bool lemma_3_5_necessary_ok = false;
  bool conductor_drop = false;
  std::optional<Report38> structure_3_8;
  Lemma34 lemma_3_4;
  std::vector<MemberStatus> members;
  std::vector<ValueSet> iso_classes;
  /// 1 + #iso classes with no witnessed translate in E(C, δ); a surrogate for
  /// the number of components of the compactified Jacobian.
  int component_surrogate = 1;
  std::vector<IdealMember> lemma_2_0;
  /// M = C and every member a chain translate.
  bool boundary_fully_described = false;
  /// Witnessed members without 0 are closed under Γ'.
  bool theorem_1_1_ok = true;
  /// 1 + Γ(O') is reached by t - β.
  bool theorem_1_2_ok = true;
  std::vector<std::string> discrepancies;
  std::vector<std::string> notes;
};

BoundaryReport boundary_report(const NumericalSemigroup& s, const ClassifierOptions& options = {});

}  // namespace cjac

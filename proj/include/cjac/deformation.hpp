#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cjac/beta.hpp"
#include "cjac/family.hpp"
#include "cjac/lattice.hpp"
#include "cjac/semigroup.hpp"
#include "cjac/value_set.hpp"

namespace cjac {

/// Coordinates of (∂_βO + C)/C: one row per generator, entry e is the
/// coefficient of t^e for 0 ≤ e < v0.
struct FamilyMatrix {
  int v0 = 0;
  std::vector<std::vector<BetaScalar>> rows;
};

/// Rows ∂_β·t^{k_j} truncated at t^{v0}, j = 0 … γ-1. Throws NotAUnit unless
/// the t⁰ coefficient of ∂_β is nonzero.
FamilyMatrix family_module(const FamilyElement& d, const NumericalSemigroup& s);

struct FlatLimit {
  /// Value set of the limit module, [v0, ∞) included.
  ValueSet delta;
  /// Reduced echelon basis of the limit subspace of k^{v0}, ordered by
  /// leading (lowest) t-exponent.
  std::vector<std::vector<Rational>> basis;
  /// Row replacements performed by the β-order reduction.
  int iterations = 0;
};

/// The β = 0 member of the family of subspaces spanned by the rows. Throws
/// RankDrop when the rows are not generically independent, NonTermination
/// when the iteration guard trips, and VerificationMismatch when a limit
/// postcondition fails (Γ-stability, colength δ, Filt membership).
FlatLimit flat_limit(const FamilyMatrix& m, const NumericalSemigroup& s);

/// flat_limit(family_module(d, s), s)
FlatLimit limit_of(const FamilyElement& d, const NumericalSemigroup& s);

/// ∂_β = t - β; its limit is the translate 1 + Γ(O').
FamilyElement witness_1_2(const NumericalSemigroup& s);

/// Scheduled chain family for Γ whose small elements are 0, k, …, (γ-1)k
/// with (γ-1)k < v0 ≤ γk, reaching any Δ ∈ Filt(C, δ). Each residue chain
/// e, e+k, … of Δ below v0 receives one β-power; chains are ordered
/// earliest-deadline first. Unverified.
FamilyElement chain_family(const NumericalSemigroup& s, const ValueSet& delta);

/// Family with limit Δ for rk(M/M² + C) = 1. Throws HypothesisFails when the
/// rank differs or Δ ∉ Filt(C, δ) ∩ E(C, δ), VerificationMismatch when the
/// limit differs from Δ.
FamilyElement witness_2_6(const NumericalSemigroup& s, const ValueSet& delta);

enum class FChoice { Auto, TimesT, OverT };

struct Witness13 {
  FamilyElement family;
  /// Γ(fO + M), verified to be the limit of (f + β)O + C.
  ValueSet limit;
  FChoice choice = FChoice::Auto;
};

/// f = t·g^{γ-1} (TimesT) or t⁻¹·g^{γ-1} (OverT) with g = t^{k_1}; the
/// family f + β. M = C returns ∂_β = 1. Throws HypothesisFails when
/// rk(M/M² + C) ≠ 1 or the chosen f leaves colength δ.
Witness13 witness_1_3(const NumericalSemigroup& s, FChoice choice = FChoice::Auto);

struct Witness32 {
  /// Γ' = Γ ∪ {v0 - 1}.
  NumericalSemigroup ring;
  FamilyElement family;
  /// Δ - 1, the verified limit over Γ'.
  ValueSet target;
  /// h = min Δ < k_1.
  bool low_branch = false;
};

/// Family over Γ' whose limit is Δ - 1. Requires v0 = k_{γ-1} + k_1 and
/// min Δ ≥ 1; throws HypothesisFails otherwise, including when Δ - 1 falls
/// outside Filt over Γ'.
Witness32 witness_3_2(const NumericalSemigroup& s, const ValueSet& delta);

struct SearchBudget {
  int terms = 0;            // 0: γ + 2
  int max_beta_degree = 0;  // 0: v0
  int max_exponent = 0;     // 0: 2·v0
  long max_candidates = 200000;
  int threads = 1;

  static SearchBudget defaults(const NumericalSemigroup& s);
  /// Small budget used by boundary reports over a survey range.
  static SearchBudget survey(const NumericalSemigroup& s);
};

struct Exhausted {
  SearchBudget budget;
  long candidates = 0;
  /// Every candidate of the budgeted space was tried.
  bool complete = false;
  /// Distinct limits reached, in enumeration order.
  std::vector<ValueSet> reached;
};

using SearchResult = std::variant<FamilyElement, Exhausted>;

/// Families t^{min Δ} + Σ ±β^{p_i} t^{e_i} with 0 < p_1 < p_2 < …, exponents
/// distinct and drawn from {x - k_j ≥ 0 : x ∈ Δ, x < v0} ∪ {0}, one of
/// them 0. Candidates are tried by term count, then lexicographically;
/// the first one whose limit is Δ wins regardless of thread timing.
SearchResult search_witness(const NumericalSemigroup& s, const ValueSet& delta, const SearchBudget& budget);
SearchResult search_witness(const NumericalSemigroup& s, const ValueSet& delta);

/// True iff Δ ∉ Filt(C, δ), which rules out every free family. Throws
/// WrongColength.
bool certified_not_in_K(const NumericalSemigroup& s, const ValueSet& delta);

/// Δ is a Γ-closed set of colength δ with [v0, ∞) ⊆ Δ.
bool in_E(const NumericalSemigroup& s, const ValueSet& delta);

}  // namespace cjac

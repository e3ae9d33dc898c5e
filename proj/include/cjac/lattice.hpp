#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cjac/semigroup.hpp"
#include "cjac/value_set.hpp"

namespace cjac {

/// Γ + Δ ⊆ Δ, checked on the window where it can fail.
bool is_closed_under(const ValueSet& delta, const NumericalSemigroup& s);

/// "not Γ-closed: x + g = y is missing" for the first failure below the
/// tail, nullopt when Δ is Γ-closed.
std::optional<std::string> closure_diagnostic(const NumericalSemigroup& s, const ValueSet& delta);

/// The monomial points of E(C, d): Γ-closed Δ with [v0, ∞) ⊆ Δ ⊆ ℕ and
/// colength d. Sorted by `enumeration_less`.
std::vector<ValueSet> enumerate_E(const NumericalSemigroup& s, int d);

/// Γ-closed Δ with [v0, ∞) ⊆ Δ ⊆ bound and #(bound ∖ Δ) = d. Empty when no
/// such set exists for the given d.
std::vector<ValueSet> enumerate_E_bounded(const NumericalSemigroup& s, const ValueSet& bound, int d);

/// The canonical filtration F = F_0 ⊋ F_1 ⊋ … ⊋ C where F_j = Δ ∩ [a_j, ∞)
/// and a_0 < a_1 < … enumerate Δ. Ends at the first piece inside [v0, ∞).
std::vector<ValueSet> filtration(const NumericalSemigroup& s, const ValueSet& delta);

/// Δ ∈ Filt(C, δ): a_j ≥ k_j for 0 ≤ j ≤ γ - 1. Δ must have colength δ.
/// Closure under Γ is not required, so printed data can be tested as given.
bool in_filt(const NumericalSemigroup& s, const ValueSet& delta);

/// Same membership decided through the filtration pieces:
/// F_j ∈ E(C, t^{k_j}O~, δ + j - k_j) for every j ≤ γ - 1.
bool in_filt_by_intersection(const NumericalSemigroup& s, const ValueSet& delta);

/// A cofinite set of integers bounded below, stored as base + shift with
/// min(base) = 0.
struct ShiftedValueSet {
  ValueSet base;
  int shift = 0;

  bool contains(long n) const { return base.contains(n - shift); }
  int min() const { return shift; }
};

/// Δ* = {n ∈ ℤ : n + Δ ⊆ Γ}. Antitone, and dual(Γ) = Γ.
ShiftedValueSet dual(const NumericalSemigroup& s, const ShiftedValueSet& delta);
ShiftedValueSet dual(const NumericalSemigroup& s, const ValueSet& delta);

/// {n ≥ 0 : n + Δ ⊆ Δ}, an overring-semigroup of Γ when Δ is Γ-closed.
NumericalSemigroup endomorphism_semigroup(const ValueSet& delta);

enum class ConductorIdeal { C, tC };

/// rk(M / M² + J) for the monomial ring: elements of Γ in [1, v0] that are
/// neither sums of two positive elements nor in J.
int rank_M_mod(const NumericalSemigroup& s, ConductorIdeal j);

/// Translate so min(Δ) = 0; monomial modules are isomorphic iff these agree.
ValueSet iso_normalize(const ValueSet& delta);

/// Every isomorphism class of monomial fractional ideal, as normal forms
/// Δ ⊇ Γ with min 0.
std::vector<ValueSet> iso_classes(const NumericalSemigroup& s);

/// The filtration pieces I_j = {k_j, k_{j+1}, …} of Γ, j = 0 … γ.
std::vector<ValueSet> ideal_filtration(const NumericalSemigroup& s);

}  // namespace cjac

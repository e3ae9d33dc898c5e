#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cjac/value_set.hpp"

namespace cjac {

/// A numerical semigroup Γ ⊆ ℕ: the t-orders of the local ring O of a
/// unibranch singularity. Immutable after construction.
///
/// Notation used throughout the library:
///   v0     conductor, least c with [c, ∞) ⊆ Γ
///   delta  #(ℕ ∖ Γ)
///   gamma  v0 - delta, the number of elements of Γ below v0
///   k_j    the j-th smallest element of Γ (k_0 = 0); smalls() holds k_j < v0
class NumericalSemigroup {
 public:
  static constexpr int kMaxConductor = 64;

  /// ℕ itself.
  NumericalSemigroup();

  static NumericalSemigroup from_generators(std::span<const int> generators);
  /// Γ given by its members below `tail` plus [tail, ∞). Throws
  /// InvalidElementSet when 0 is missing or the set is not additively closed.
  static NumericalSemigroup from_value_set(const ValueSet& elements);
  /// "3,7,8" (generators) or "{0,5,7}+[9,)" (element set).
  static NumericalSemigroup parse(std::string_view text);

  bool contains(long n) const noexcept {
    if (n < 0) return false;
    if (n >= v0_) return true;
    return member_[static_cast<std::size_t>(n)];
  }

  /// Minimal generators, ascending.
  const std::vector<int>& generators() const noexcept { return generators_; }
  int conductor() const noexcept { return v0_; }
  int delta() const noexcept { return delta_; }
  int gamma() const noexcept { return v0_ - delta_; }
  /// k_0 = 0 < k_1 < … < k_{γ-1}, the members below v0.
  const std::vector<int>& smalls() const noexcept { return smalls_; }
  /// k_j for any j ≥ 0; for j ≥ γ this is v0 + (j - γ).
  int element(int j) const noexcept;
  /// k_1, the smallest positive element.
  int multiplicity() const noexcept { return element(1); }
  std::vector<int> gaps() const;
  bool is_natural() const noexcept { return v0_ == 0; }
  /// Decision bound B = 2·v0 + max(generators): every sum or shift the
  /// library evaluates stays below it.
  int membership_bound() const noexcept { return 2 * v0_ + generators_.back(); }

  ValueSet as_value_set() const;
  /// Comma-separated minimal generators.
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.v0_ == b.v0_ && a.member_ == b.member_;
  }

 private:
  explicit NumericalSemigroup(std::vector<bool> below_conductor);

  std::vector<bool> member_;  // over [0, v0)
  std::vector<int> generators_;
  std::vector<int> smalls_;
  int v0_ = 0;
  int delta_ = 0;
};

/// For a set containing 0, the first pair (a, b) of members with a + b missing.
std::optional<std::pair<int, int>> closure_defect(const ValueSet& elements);

/// The tower O ⊂ O' ⊂ O'' ⊂ … ⊂ O~ as semigroups Γ⁰ = Γ, Γ¹, …, ℕ.
struct PartialNormalizationChain {
  std::vector<NumericalSemigroup> rings;

  std::vector<int> conductors() const;
  std::vector<int> deltas() const;
};

/// j ∈ [0, v0): j ∈ Γ ⇔ v0 - 1 - j ∉ Γ.
bool is_gorenstein(const NumericalSemigroup& s);
/// #{j ∈ [0, v0) : j ∉ Γ and v0 - 1 - j ∉ Γ}; equals 2δ - v0.
int symmetry_defect(const NumericalSemigroup& s);
/// v0 = k_{γ-1} + k_1. False for ℕ.
bool multiplicity_condition(const NumericalSemigroup& s);
/// k_i = i·k_1 for every 1 ≤ i ≤ γ (k_γ being v0). False for ℕ.
bool smalls_are_multiples(const NumericalSemigroup& s);
/// Γ ∪ [v0 - 1, ∞), the value semigroup of O' = O + t⁻¹C.
NumericalSemigroup partial_normalization(const NumericalSemigroup& s);
PartialNormalizationChain normalization_chain(const NumericalSemigroup& s);
/// Δ_W = {j ≥ 0 : v0 - 1 - j ∉ Γ}, the value set of the dualizing module.
ValueSet canonical_value_set(const NumericalSemigroup& s);
/// Embedding dimension ≤ 2 in the monomial model.
bool is_planar(const NumericalSemigroup& s);

}  // namespace cjac

#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cjac {

/// A cofinite subset of the nonnegative integers, the value set Γ(F) of a
/// fractional module F. Stored with the minimal tail: every n >= tail() is a
/// member and, unless the set is all of ℕ, tail() - 1 is not.
class ValueSet {
 public:
  /// All of ℕ.
  ValueSet() = default;

  /// Elements may be listed in any order and may reach past `tail`.
  static ValueSet from_elements(std::span<const int> elements, int tail);
  static ValueSet interval(int start);
  /// Text format "{5,9,11,13,14}+[16,)".
  static ValueSet parse(std::string_view text);

  bool contains(long n) const noexcept {
    if (n < 0) return false;
    if (n >= tail_) return true;
    return below_[static_cast<std::size_t>(n)];
  }

  int tail() const noexcept { return tail_; }
  int min() const noexcept;
  /// #(ℕ ∖ Δ)
  int colength() const noexcept;
  /// Count of members in [0, bound).
  int count_below(int bound) const noexcept;
  std::vector<int> elements_below(int bound) const;
  std::vector<int> gaps() const;

  /// Δ + shift; the result must stay inside ℕ.
  ValueSet translated(int shift) const;
  /// Δ ∩ [start, ∞)
  ValueSet tail_from(int start) const;
  bool is_subset_of(const ValueSet& other) const noexcept;

  /// Printed with finite part below `tail_at` (clamped up to the minimal tail).
  std::string to_string(int tail_at = -1) const;

  friend bool operator==(const ValueSet&, const ValueSet&) = default;

 private:
  std::vector<bool> below_;
  int tail_ = 0;
};

/// Enumeration order: lexicographic comparison of the sorted element lists.
bool enumeration_less(const ValueSet& a, const ValueSet& b);

}  // namespace cjac

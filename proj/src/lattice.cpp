#include "cjac/lattice.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "cjac/error.hpp"

namespace cjac {

namespace {

// Depth-first enumeration of Γ-closed subsets S of `allowed` (positions below
// v0) with |S| = target. Positions are decided in ascending order with
// "include" tried first, which yields `enumeration_less` order. A position is
// forced in when it is a Γ-translate of a chosen one; a forced position that
// is not allowed kills the branch.
std::vector<ValueSet> enumerate_closed_subsets(const NumericalSemigroup& s, const std::vector<bool>& allowed,
                                               const std::vector<bool>& required, int target) {
  const int v0 = s.conductor();
  std::vector<ValueSet> out;
  std::vector<int> picked;

  // remaining_allowed[p] = number of allowed positions in [p, v0)
  std::vector<int> remaining_allowed(static_cast<std::size_t>(v0) + 1, 0);
  for (int p = v0 - 1; p >= 0; --p) {
    remaining_allowed[static_cast<std::size_t>(p)] =
        remaining_allowed[static_cast<std::size_t>(p) + 1] + (allowed[static_cast<std::size_t>(p)] ? 1 : 0);
  }

  auto forced = [&](int y) {
    for (int x : picked) {
      if (s.contains(y - x)) return true;
    }
    return false;
  };

  std::function<void(int)> visit = [&](int pos) {
    const int count = static_cast<int>(picked.size());
    if (count > target) return;
    if (count + remaining_allowed[static_cast<std::size_t>(pos)] < target) return;
    if (pos == v0) {
      if (count == target) out.push_back(ValueSet::from_elements(picked, v0));
      return;
    }
    const bool must = required[static_cast<std::size_t>(pos)] || forced(pos);
    if (!allowed[static_cast<std::size_t>(pos)]) {
      if (!must) visit(pos + 1);
      return;
    }
    picked.push_back(pos);
    visit(pos + 1);
    picked.pop_back();
    if (!must) visit(pos + 1);
  };
  visit(0);
  return out;
}

}  // namespace

bool is_closed_under(const ValueSet& delta, const NumericalSemigroup& s) {
  const int tail = delta.tail();
  for (int x = 0; x < tail; ++x) {
    if (!delta.contains(x)) continue;
    for (int g = 1; x + g < tail; ++g) {
      if (s.contains(g) && !delta.contains(x + g)) return false;
    }
  }
  return true;
}

std::vector<ValueSet> enumerate_E(const NumericalSemigroup& s, int d) {
  const int v0 = s.conductor();
  if (d < 0 || d > v0) {
    throw Error(ErrorCode::DOutOfRange,
                "d = " + std::to_string(d) + " outside [0, " + std::to_string(v0) + "]");
  }
  std::vector<bool> allowed(static_cast<std::size_t>(v0), true);
  std::vector<bool> required(static_cast<std::size_t>(v0), false);
  return enumerate_closed_subsets(s, allowed, required, v0 - d);
}

std::vector<ValueSet> enumerate_E_bounded(const NumericalSemigroup& s, const ValueSet& bound, int d) {
  const int v0 = s.conductor();
  if (bound.tail() > v0) {
    throw Error(ErrorCode::NotContainingConductor,
                "bound " + bound.to_string() + " does not contain [" + std::to_string(v0) + ",∞)");
  }
  std::vector<bool> allowed(static_cast<std::size_t>(v0));
  int room = 0;
  for (int p = 0; p < v0; ++p) {
    allowed[static_cast<std::size_t>(p)] = bound.contains(p);
    room += bound.contains(p) ? 1 : 0;
  }
  if (d < 0 || d > room) return {};
  std::vector<bool> required(static_cast<std::size_t>(v0), false);
  return enumerate_closed_subsets(s, allowed, required, room - d);
}

std::vector<ValueSet> filtration(const NumericalSemigroup& s, const ValueSet& delta) {
  const int v0 = s.conductor();
  std::vector<ValueSet> out;
  for (int a : delta.elements_below(std::max(delta.tail(), v0) + 1)) {
    out.push_back(delta.tail_from(a));
    if (a >= v0) break;
  }
  return out;
}

bool in_filt(const NumericalSemigroup& s, const ValueSet& delta) {
  if (delta.colength() != s.delta()) {
    throw Error(ErrorCode::WrongColength, "colength " + std::to_string(delta.colength()) + " ≠ δ = " +
                                              std::to_string(s.delta()));
  }
  const auto a = delta.elements_below(delta.tail() + s.gamma() + 1);
  for (int j = 0; j < s.gamma(); ++j) {
    if (a[static_cast<std::size_t>(j)] < s.element(j)) return false;
  }
  return true;
}

bool in_filt_by_intersection(const NumericalSemigroup& s, const ValueSet& delta) {
  if (delta.colength() != s.delta()) {
    throw Error(ErrorCode::WrongColength, "colength " + std::to_string(delta.colength()) + " ≠ δ = " +
                                              std::to_string(s.delta()));
  }
  const auto pieces = filtration(s, delta);
  for (int j = 0; j < s.gamma(); ++j) {
    if (static_cast<std::size_t>(j) >= pieces.size()) return false;
    const int kj = s.element(j);
    const auto members = enumerate_E_bounded(s, ValueSet::interval(kj), s.delta() + j - kj);
    if (std::find(members.begin(), members.end(), pieces[static_cast<std::size_t>(j)]) == members.end()) {
      return false;
    }
  }
  return true;
}

ShiftedValueSet dual(const NumericalSemigroup& s, const ShiftedValueSet& delta) {
  const int v0 = s.conductor();
  const int m = delta.min();
  std::vector<int> members;
  for (int n = -m; n < v0 - m; ++n) {
    bool ok = true;
    for (int x = m; x < v0 - n && ok; ++x) {
      if (delta.contains(x) && !s.contains(n + x)) ok = false;
    }
    if (ok) members.push_back(n);
  }
  const int lowest = members.empty() ? v0 - m : members.front();
  for (int& n : members) n -= lowest;
  return {ValueSet::from_elements(members, v0 - m - lowest), lowest};
}

ShiftedValueSet dual(const NumericalSemigroup& s, const ValueSet& delta) {
  return dual(s, ShiftedValueSet{delta.translated(-delta.min()), delta.min()});
}

NumericalSemigroup endomorphism_semigroup(const ValueSet& delta) {
  const int m = delta.min();
  const int tail = delta.tail();
  const int bound = std::max(tail - m, 0);
  std::vector<int> members;
  for (int n = 0; n < bound; ++n) {
    bool ok = true;
    for (int x = m; x < tail && ok; ++x) {
      if (delta.contains(x) && !delta.contains(x + n)) ok = false;
    }
    if (ok) members.push_back(n);
  }
  return NumericalSemigroup::from_value_set(ValueSet::from_elements(members, bound));
}

int rank_M_mod(const NumericalSemigroup& s, ConductorIdeal j) {
  const int v0 = s.conductor();
  const int ideal_start = j == ConductorIdeal::C ? v0 : v0 + 1;
  int count = 0;
  for (int x = 1; x <= v0; ++x) {
    if (!s.contains(x) || x >= ideal_start) continue;
    bool sum = false;
    for (int a = 1; a <= x / 2 && !sum; ++a) sum = s.contains(a) && s.contains(x - a);
    if (!sum) ++count;
  }
  return count;
}

ValueSet iso_normalize(const ValueSet& delta) { return delta.translated(-delta.min()); }

std::vector<ValueSet> iso_classes(const NumericalSemigroup& s) {
  const int v0 = s.conductor();
  std::vector<bool> allowed(static_cast<std::size_t>(v0), true);
  std::vector<bool> required(static_cast<std::size_t>(v0), false);
  for (int k : s.smalls()) required[static_cast<std::size_t>(k)] = true;
  std::vector<ValueSet> out;
  for (int size = s.gamma(); size <= v0; ++size) {
    auto level = enumerate_closed_subsets(s, allowed, required, size);
    out.insert(out.end(), level.begin(), level.end());
  }
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

std::vector<ValueSet> ideal_filtration(const NumericalSemigroup& s) {
  std::vector<ValueSet> out;
  const auto base = s.as_value_set();
  for (int j = 0; j <= s.gamma(); ++j) out.push_back(base.tail_from(s.element(j)));
  return out;
}

std::optional<std::string> closure_diagnostic(const NumericalSemigroup& s, const ValueSet& delta) {
  for (int x = 0; x < delta.tail(); ++x) {
    if (!delta.contains(x)) continue;
    for (int g = 1; x + g < delta.tail(); ++g) {
      if (s.contains(g) && !delta.contains(x + g)) {
        return "not Γ-closed: " + std::to_string(x) + " + " + std::to_string(g) + " = " + std::to_string(x + g) +
               " is missing";
      }
    }
  }
  return std::nullopt;
}

}  // namespace cjac

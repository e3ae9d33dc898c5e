// Brute-force reference computations. They share no code with the library
// beyond the value types used to compare results.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "cjac/beta.hpp"
#include "cjac/family.hpp"
#include "cjac/semigroup.hpp"
#include "cjac/value_set.hpp"

namespace oracle {

using cjac::BetaPoly;
using cjac::Rational;

// Membership in ⟨gens⟩ on [0, bound) by the coin-problem recurrence.
inline std::vector<bool> span(const std::vector<int>& gens, int bound) {
  std::vector<bool> in(static_cast<std::size_t>(bound), false);
  in[0] = true;
  for (int n = 1; n < bound; ++n) {
    for (int g : gens) {
      if (g <= n && in[static_cast<std::size_t>(n - g)]) in[static_cast<std::size_t>(n)] = true;
    }
  }
  return in;
}

struct Invariants {
  int v0 = 0;
  int delta = 0;
  std::vector<int> gaps;
  std::vector<int> smalls;
};

inline Invariants invariants(const std::vector<int>& gens) {
  const int bound = 4 * gens.front() * gens.back() + 4;
  const auto in = span(gens, bound);
  Invariants out;
  int last_gap = -1;
  for (int n = 0; n < bound; ++n) {
    if (!in[static_cast<std::size_t>(n)]) {
      out.gaps.push_back(n);
      last_gap = n;
    }
  }
  out.v0 = last_gap + 1;
  out.delta = static_cast<int>(out.gaps.size());
  for (int n = 0; n < out.v0; ++n) {
    if (in[static_cast<std::size_t>(n)]) out.smalls.push_back(n);
  }
  return out;
}

// Every subset S ⊆ [1, n) with S ∪ {0} ∪ [n, ∞) additively closed, as
// membership words over [0, n). Conductor ≤ n.
inline std::vector<std::vector<bool>> closed_words(int n) {
  std::vector<std::vector<bool>> out;
  if (n == 0) return {{}};
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<bool> w(static_cast<std::size_t>(n), false);
    w[0] = true;
    for (int i = 1; i < n; ++i) w[static_cast<std::size_t>(i)] = (mask >> (i - 1)) & 1u;
    bool ok = true;
    for (int a = 1; a < n && ok; ++a) {
      for (int b = a; a + b < n && ok; ++b) {
        if (w[static_cast<std::size_t>(a)] && w[static_cast<std::size_t>(b)] && !w[static_cast<std::size_t>(a + b)]) {
          ok = false;
        }
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

inline int conductor_of(const std::vector<bool>& w) {
  int c = static_cast<int>(w.size());
  while (c > 0 && w[static_cast<std::size_t>(c - 1)]) --c;
  return c;
}

// Γ-closed Δ with [v0, ∞) ⊆ Δ and #(ℕ ∖ Δ) = d, as sorted text.
inline std::set<std::string> value_sets(const cjac::NumericalSemigroup& s, int d) {
  const int v0 = s.conductor();
  std::set<std::string> out;
  if (v0 == 0) {
    if (d == 0) out.insert(cjac::ValueSet::interval(0).to_string());
    return out;
  }
  for (unsigned mask = 0; mask < (1u << v0); ++mask) {
    std::vector<int> el;
    for (int i = 0; i < v0; ++i) {
      if ((mask >> i) & 1u) el.push_back(i);
    }
    if (v0 - static_cast<int>(el.size()) != d) continue;
    bool ok = true;
    for (int x : el) {
      for (int g = 1; x + g < v0 && ok; ++g) {
        if (s.contains(g) && !((mask >> (x + g)) & 1u)) ok = false;
      }
    }
    if (ok) out.insert(cjac::ValueSet::from_elements(el, v0).to_string());
  }
  return out;
}

// a_j ≥ k_j on the first γ elements.
inline bool filt(const cjac::NumericalSemigroup& s, const cjac::ValueSet& d) {
  int j = 0;
  for (int a = 0; j < s.gamma(); ++a) {
    if (!d.contains(a)) continue;
    if (a < s.element(j)) return false;
    ++j;
  }
  return true;
}

// Determinant of a square matrix of polynomials by cofactor expansion.
inline BetaPoly det(const std::vector<std::vector<BetaPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return BetaPoly(Rational(1));
  if (n == 1) return m[0][0];
  BetaPoly out;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<BetaPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BetaPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    BetaPoly term = m[0][c] * det(minor);
    if (c % 2 == 1) term *= Rational(-1);
    out += term;
  }
  return out;
}

// Limit value set of the rows ∂·t^{k_j} (truncated at v0) as β → 0, read
// off the Plücker coordinates: among the maximal minors of least β-order,
// the lexicographically first column set is the pivot set of the limit.
// `d` must have polynomial coefficients.
inline cjac::ValueSet plucker_limit(const cjac::FamilyElement& d, const cjac::NumericalSemigroup& s) {
  const int v0 = s.conductor();
  const int g = s.gamma();
  std::vector<std::vector<BetaPoly>> rows;
  for (int k : s.smalls()) {
    std::vector<BetaPoly> row(static_cast<std::size_t>(v0));
    for (const auto& [e, c] : d.terms()) {
      if (e + k < v0) row[static_cast<std::size_t>(e + k)] = c.numerator();
    }
    rows.push_back(std::move(row));
  }
  int best_order = -1;
  std::vector<int> best;
  std::vector<int> cols(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) cols[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<std::vector<BetaPoly>> m;
    for (const auto& r : rows) {
      std::vector<BetaPoly> sub;
      for (int c : cols) sub.push_back(r[static_cast<std::size_t>(c)]);
      m.push_back(std::move(sub));
    }
    const BetaPoly p = det(m);
    if (!p.is_zero() && (best_order < 0 || p.valuation() < best_order)) {
      best_order = p.valuation();
      best = cols;
    }
    // next combination in lexicographic order
    int i = g - 1;
    while (i >= 0 && cols[static_cast<std::size_t>(i)] == v0 - g + i) --i;
    if (i < 0) break;
    ++cols[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < g; ++j) cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
  }
  return cjac::ValueSet::from_elements(best, v0);
}

}  // namespace oracle

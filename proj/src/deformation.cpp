#include "cjac/deformation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

#include "cjac/error.hpp"

namespace cjac {

namespace {

using PolyRow = std::vector<BetaPoly>;
using QRow = std::vector<Rational>;

int lowest_nonzero(const QRow& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

int row_valuation(const PolyRow& row) {
  int v = -1;
  for (const auto& p : row) {
    if (p.is_zero()) continue;
    const int pv = p.valuation();
    if (v < 0 || pv < v) v = pv;
  }
  return v;
}

QRow evaluate(const PolyRow& row, const Rational& beta) {
  QRow out;
  out.reserve(row.size());
  for (const auto& p : row) out.push_back(p.evaluate(beta));
  return out;
}

QRow at_zero(const PolyRow& row) {
  QRow out;
  out.reserve(row.size());
  for (const auto& p : row) out.push_back(p.at_zero());
  return out;
}

// Clears the unit denominators of a row; scaling by a unit of k[β]_(β)
// leaves the family of subspaces unchanged.
PolyRow clear_denominators(const std::vector<BetaScalar>& row) {
  BetaPoly lcm(Rational(1));
  for (const auto& c : row) {
    if (c.is_polynomial()) continue;
    const BetaPoly g = BetaPoly::gcd(lcm, c.denominator());
    BetaPoly q, r;
    BetaPoly::divide(c.denominator(), g, q, r);
    lcm = lcm * q;
  }
  PolyRow out;
  out.reserve(row.size());
  for (const auto& c : row) {
    BetaPoly q, r;
    BetaPoly::divide(lcm, c.denominator(), q, r);
    out.push_back(c.numerator() * q);
  }
  return out;
}

// Echelon form keyed by lowest nonzero column. Pivot rows are kept fully
// reduced so the basis comes out in reduced form.
struct Echelon {
  std::vector<int> columns;
  std::vector<QRow> rows;

  // Reduces v against the pivots; `comb` receives the same operations.
  void reduce(QRow& v, QRow* comb, const std::vector<QRow>* combs) const {
    for (std::size_t p = 0; p < rows.size(); ++p) {
      const Rational factor = v[static_cast<std::size_t>(columns[p])];
      if (factor == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= factor * rows[p][i];
      if (comb != nullptr) {
        for (std::size_t i = 0; i < comb->size(); ++i) (*comb)[i] -= factor * (*combs)[p][i];
      }
    }
  }

  void insert(QRow v, int column, QRow* comb, std::vector<QRow>* combs) {
    const Rational lead = v[static_cast<std::size_t>(column)];
    for (auto& x : v) x /= lead;
    if (comb != nullptr) {
      for (auto& x : *comb) x /= lead;
    }
    for (std::size_t p = 0; p < rows.size(); ++p) {
      const Rational factor = rows[p][static_cast<std::size_t>(column)];
      if (factor == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) rows[p][i] -= factor * v[i];
      if (comb != nullptr) {
        for (std::size_t i = 0; i < comb->size(); ++i) (*combs)[p][i] -= factor * (*comb)[i];
      }
    }
    columns.push_back(column);
    rows.push_back(std::move(v));
    if (comb != nullptr) combs->push_back(*comb);
  }
};

int rank_of(const std::vector<QRow>& rows) {
  Echelon e;
  for (QRow v : rows) {
    e.reduce(v, nullptr, nullptr);
    const int c = lowest_nonzero(v);
    if (c >= 0) e.insert(std::move(v), c, nullptr, nullptr);
  }
  return static_cast<int>(e.rows.size());
}

// Rank over k(β), decided by evaluation: a nonzero maximal minor has degree
// at most rows·degree, so it cannot vanish at more points than that.
int generic_rank(const std::vector<PolyRow>& rows, int degree) {
  const int points = static_cast<int>(rows.size()) * std::max(degree, 1) + 1;
  int best = 0;
  for (int p = 1; p <= points; ++p) {
    std::vector<QRow> values;
    for (const auto& r : rows) values.push_back(evaluate(r, Rational(p)));
    best = std::max(best, rank_of(values));
    if (best == static_cast<int>(rows.size())) break;
  }
  return best;
}

ValueSet expected_from_orders(const std::vector<int>& orders, int v0) {
  return ValueSet::from_elements(orders, v0);
}

void check_limit(const NumericalSemigroup& s, const FlatLimit& out) {
  const int v0 = s.conductor();
  if (static_cast<int>(out.basis.size()) != s.gamma()) {
    throw Error(ErrorCode::VerificationMismatch, "limit dimension differs from γ (flat-limit defect)");
  }
  Echelon e;
  for (const auto& b : out.basis) e.insert(b, lowest_nonzero(b), nullptr, nullptr);
  for (const auto& b : out.basis) {
    for (int k : s.smalls()) {
      if (k == 0) continue;
      QRow shifted(static_cast<std::size_t>(v0), Rational(0));
      for (int i = 0; i + k < v0; ++i) shifted[static_cast<std::size_t>(i + k)] = b[static_cast<std::size_t>(i)];
      e.reduce(shifted, nullptr, nullptr);
      if (lowest_nonzero(shifted) >= 0) {
        throw Error(ErrorCode::VerificationMismatch, "limit is not Γ-stable (flat-limit defect)");
      }
    }
  }
  if (out.delta.colength() != s.delta()) {
    throw Error(ErrorCode::VerificationMismatch, "limit colength differs from δ (flat-limit defect)");
  }
  if (!in_filt(s, out.delta)) {
    throw Error(ErrorCode::VerificationMismatch,
                "limit " + out.delta.to_string() + " violates a_j ≥ k_j (flat-limit defect)");
  }
}

ValueSet module_value_set(const NumericalSemigroup& s, int f) {
  // Γ(fO + M) ∪ [v0, ∞)
  const int v0 = s.conductor();
  std::vector<int> members;
  for (int k : s.smalls()) {
    if (k > 0) members.push_back(k);
    if (f + k < v0) members.push_back(f + k);
  }
  return ValueSet::from_elements(members, v0);
}

}  // namespace

FamilyMatrix family_module(const FamilyElement& d, const NumericalSemigroup& s) {
  if (!d.is_unit()) {
    throw Error(ErrorCode::NotAUnit, "t⁰ coefficient of " + (d.is_zero() ? std::string("0") : d.to_string()) +
                                         " vanishes identically");
  }
  FamilyMatrix m;
  m.v0 = s.conductor();
  for (int k : s.smalls()) {
    std::vector<BetaScalar> row(static_cast<std::size_t>(m.v0));
    for (const auto& [e, c] : d.terms()) {
      if (e + k < m.v0) row[static_cast<std::size_t>(e + k)] = c;
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

FlatLimit flat_limit(const FamilyMatrix& m, const NumericalSemigroup& s) {
  const int v0 = s.conductor();
  const int gamma = s.gamma();
  FlatLimit out;
  if (static_cast<int>(m.rows.size()) != gamma) {
    throw Error(ErrorCode::RankDrop, std::to_string(m.rows.size()) + " rows for γ = " + std::to_string(gamma));
  }
  if (gamma == 0) {
    out.delta = ValueSet();
    return out;
  }

  std::vector<PolyRow> rows;
  int degree = 0;
  for (const auto& r : m.rows) {
    if (static_cast<int>(r.size()) != v0) {
      throw Error(ErrorCode::PreconditionFailed, "row width differs from v0");
    }
    rows.push_back(clear_denominators(r));
    for (const auto& p : rows.back()) degree = std::max(degree, p.degree());
  }
  if (generic_rank(rows, degree) < gamma) {
    throw Error(ErrorCode::RankDrop, "rows are not generically independent");
  }

  const long guard = static_cast<long>(gamma) * v0 * std::max(degree, 1) + 1;
  std::vector<QRow> values;
  while (true) {
    values.clear();
    for (auto& r : rows) {
      const int v = row_valuation(r);
      if (v < 0) throw Error(ErrorCode::RankDrop, "row reduced to zero");
      if (v > 0) {
        for (auto& p : r) p = p.shifted_down(v);
      }
      values.push_back(at_zero(r));
    }

    Echelon e;
    std::vector<QRow> combs;
    std::optional<QRow> dependency;
    for (std::size_t i = 0; i < values.size() && !dependency; ++i) {
      QRow v = values[i];
      QRow comb(values.size(), Rational(0));
      comb[i] = 1;
      e.reduce(v, &comb, &combs);
      const int c = lowest_nonzero(v);
      if (c < 0) {
        dependency = std::move(comb);
      } else {
        e.insert(std::move(v), c, &comb, &combs);
      }
    }
    if (!dependency) {
      std::vector<std::pair<int, QRow>> ordered;
      for (std::size_t p = 0; p < e.rows.size(); ++p) ordered.emplace_back(e.columns[p], e.rows[p]);
      std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<int> orders;
      for (auto& [c, row] : ordered) {
        orders.push_back(c);
        out.basis.push_back(std::move(row));
      }
      out.delta = expected_from_orders(orders, v0);
      break;
    }

    if (++out.iterations > guard) {
      throw Error(ErrorCode::NonTermination, "β-order reduction exceeded " + std::to_string(guard) + " steps");
    }
    // Replace the involved row of highest t-order (lowest index on ties).
    int target = -1;
    int target_order = -1;
    for (std::size_t i = 0; i < dependency->size(); ++i) {
      if ((*dependency)[i] == 0) continue;
      const int order = lowest_nonzero(values[i]);
      if (order > target_order) {
        target = static_cast<int>(i);
        target_order = order;
      }
    }
    PolyRow combined(static_cast<std::size_t>(v0));
    for (std::size_t i = 0; i < dependency->size(); ++i) {
      const Rational& c = (*dependency)[i];
      if (c == 0) continue;
      for (int col = 0; col < v0; ++col) {
        combined[static_cast<std::size_t>(col)].add_scaled(c, rows[i][static_cast<std::size_t>(col)]);
      }
    }
    rows[static_cast<std::size_t>(target)] = std::move(combined);
  }

  check_limit(s, out);
  return out;
}

FlatLimit limit_of(const FamilyElement& d, const NumericalSemigroup& s) {
  return flat_limit(family_module(d, s), s);
}

FamilyElement witness_1_2(const NumericalSemigroup&) {
  FamilyElement d = FamilyElement::term(0, 1);
  d.add(0, BetaScalar::beta_power(1, Rational(-1)));
  return d;
}

bool in_E(const NumericalSemigroup& s, const ValueSet& delta) {
  return delta.tail() <= s.conductor() && delta.colength() == s.delta() && is_closed_under(delta, s);
}

FamilyElement chain_family(const NumericalSemigroup& s, const ValueSet& delta) {
  if (delta == s.as_value_set()) return FamilyElement::one();
  if (!in_E(s, delta)) {
    throw Error(ErrorCode::HypothesisFails, delta.to_string() + " is not in E(C, δ)");
  }
  if (!in_filt(s, delta)) {
    throw Error(ErrorCode::HypothesisFails, delta.to_string() + " is not in Filt(C, δ)");
  }
  const int v0 = s.conductor();
  const int gamma = s.gamma();
  const int k = s.multiplicity();
  for (int i = 0; i < gamma; ++i) {
    if (s.element(i) != i * k) {
      throw Error(ErrorCode::HypothesisFails, "small elements are not multiples of k_1");
    }
  }

  struct Chain {
    int start;
    int length;
    bool early;
  };
  const int threshold = v0 - (gamma - 1) * k;
  std::vector<Chain> chains;
  for (int e : delta.elements_below(v0)) {
    if (e >= k && delta.contains(e - k)) continue;
    chains.push_back({e, (v0 - e + k - 1) / k, e % k >= threshold});
  }
  std::stable_sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) { return a.early && !b.early; });

  FamilyElement d;
  int used = 0;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const int exponent = chains[i].start - used * k;
    if (exponent < 0) {
      throw Error(ErrorCode::VerificationMismatch,
                  "chain schedule infeasible at start " + std::to_string(chains[i].start) + " (construction defect)");
    }
    d.add(exponent, BetaScalar::beta_power(static_cast<int>(i)));
    used += chains[i].length;
  }
  d.add(0, BetaScalar::beta_power(static_cast<int>(chains.size())));
  return d;
}

FamilyElement witness_2_6(const NumericalSemigroup& s, const ValueSet& delta) {
  const int rank = rank_M_mod(s, ConductorIdeal::C);
  if (rank != 1) {
    throw Error(ErrorCode::HypothesisFails, "rk(M/M² + C) = " + std::to_string(rank) + ", not 1");
  }
  FamilyElement d = chain_family(s, delta);
  const auto limit = limit_of(d, s);
  if (limit.delta != delta) {
    throw Error(ErrorCode::VerificationMismatch, "chain family " + d.to_string() + " reaches " +
                                                     limit.delta.to_string() + ", not " + delta.to_string() +
                                                     " (construction defect)");
  }
  return d;
}

Witness13 witness_1_3(const NumericalSemigroup& s, FChoice choice) {
  if (s.gamma() <= 1) {
    return {FamilyElement::one(), s.as_value_set(), choice};
  }
  const int rank = rank_M_mod(s, ConductorIdeal::C);
  if (rank != 1) {
    throw Error(ErrorCode::HypothesisFails, "rk(M/M² + C) = " + std::to_string(rank) + ", not 1");
  }
  const int k = s.multiplicity();
  const int top = (s.gamma() - 1) * k;
  const ValueSet times_t = module_value_set(s, top + 1);
  const ValueSet over_t = module_value_set(s, top - 1);
  const bool over_ok = over_t.colength() == s.delta();

  FChoice picked = choice;
  if (choice == FChoice::Auto) {
    picked = FChoice::TimesT;
    if (over_ok && iso_normalize(times_t) == partial_normalization(s).as_value_set()) picked = FChoice::OverT;
  }
  const int f = picked == FChoice::TimesT ? top + 1 : top - 1;
  const ValueSet expected = picked == FChoice::TimesT ? times_t : over_t;
  if (expected.colength() != s.delta()) {
    throw Error(ErrorCode::HypothesisFails,
                "f = t^" + std::to_string(f) + " gives colength " + std::to_string(expected.colength()));
  }
  FamilyElement d = FamilyElement::term(0, f);
  d.add(0, BetaScalar::beta_power(1));
  const auto limit = limit_of(d, s);
  if (limit.delta != expected) {
    throw Error(ErrorCode::VerificationMismatch, "(f + β)O + C reaches " + limit.delta.to_string() + ", not fO + M = " +
                                                     expected.to_string() + " (construction defect)");
  }
  return {d, expected, picked};
}

Witness32 witness_3_2(const NumericalSemigroup& s, const ValueSet& delta) {
  if (!multiplicity_condition(s)) {
    throw Error(ErrorCode::HypothesisFails, "v0 ≠ k_{γ-1} + k_1");
  }
  if (!in_E(s, delta) || !in_filt(s, delta)) {
    throw Error(ErrorCode::HypothesisFails, delta.to_string() + " is not in Filt(C, δ)");
  }
  if (delta.min() == 0) {
    throw Error(ErrorCode::HypothesisFails, "min Δ = 0, so Δ - 1 leaves ℕ");
  }
  Witness32 out{partial_normalization(s), FamilyElement(), delta.translated(-1), delta.min() < s.multiplicity()};
  if (!in_filt(out.ring, out.target)) {
    throw Error(ErrorCode::HypothesisFails, "Δ - 1 = " + out.target.to_string() + " is not in Filt over Γ'");
  }
  out.family = chain_family(out.ring, out.target);
  const auto limit = limit_of(out.family, out.ring);
  if (limit.delta != out.target) {
    throw Error(ErrorCode::VerificationMismatch, "family over Γ' reaches " + limit.delta.to_string() + ", not " +
                                                     out.target.to_string() + " (construction defect)");
  }
  return out;
}

SearchBudget SearchBudget::defaults(const NumericalSemigroup& s) {
  SearchBudget b;
  b.terms = s.gamma() + 2;
  b.max_beta_degree = std::max(s.conductor(), 1);
  b.max_exponent = 2 * s.conductor();
  return b;
}

SearchBudget SearchBudget::survey(const NumericalSemigroup&) {
  SearchBudget b;
  b.terms = 3;
  b.max_beta_degree = 3;
  b.max_exponent = 0;
  b.max_candidates = 2000;
  return b;
}

namespace {

SearchBudget resolved(const NumericalSemigroup& s, SearchBudget b) {
  const SearchBudget d = SearchBudget::defaults(s);
  if (b.terms <= 0) b.terms = d.terms;
  if (b.max_beta_degree <= 0) b.max_beta_degree = d.max_beta_degree;
  if (b.max_exponent <= 0) b.max_exponent = d.max_exponent;
  if (b.threads <= 0) b.threads = 1;
  return b;
}

struct Candidate {
  std::vector<int> exponents;  // after the leading t^{e0}
  std::vector<int> powers;
  std::vector<int> signs;  // ±1
};

FamilyElement build(int e0, const Candidate& c) {
  FamilyElement d = FamilyElement::term(0, e0);
  for (std::size_t i = 0; i < c.exponents.size(); ++i) d.add(c.exponents[i], BetaScalar::beta_power(c.powers[i], Rational(c.signs[i])));
  return d;
}

}  // namespace

SearchResult search_witness(const NumericalSemigroup& s, const ValueSet& delta) {
  return search_witness(s, delta, SearchBudget::defaults(s));
}

SearchResult search_witness(const NumericalSemigroup& s, const ValueSet& delta, const SearchBudget& requested) {
  const SearchBudget budget = resolved(s, requested);
  const int v0 = s.conductor();
  const int e0 = delta.min();

  std::set<int> pool{0};
  for (int x : delta.elements_below(v0)) {
    for (int k : s.smalls()) {
      if (x - k >= 0) pool.insert(x - k);
    }
  }
  std::vector<int> exponents;
  for (int e : pool) {
    if (e != e0 && e < v0 && e <= budget.max_exponent) exponents.push_back(e);
  }

  Exhausted report;
  report.budget = budget;
  std::set<std::string> seen;
  std::vector<Candidate> block;
  std::optional<FamilyElement> found;
  const std::size_t block_size = 64 * static_cast<std::size_t>(budget.threads);

  auto flush = [&]() {
    std::vector<std::optional<ValueSet>> limits(block.size());
    auto work = [&](std::size_t first) {
      for (std::size_t i = first; i < block.size(); i += static_cast<std::size_t>(budget.threads)) {
        limits[i] = limit_of(build(e0, block[i]), s).delta;
      }
    };
    if (budget.threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool_threads;
      for (int t = 0; t < budget.threads; ++t) pool_threads.emplace_back(work, static_cast<std::size_t>(t));
      for (auto& t : pool_threads) t.join();
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
      ++report.candidates;
      if (seen.insert(limits[i]->to_string()).second) report.reached.push_back(*limits[i]);
      if (*limits[i] == delta) {
        found = build(e0, block[i]);
        break;
      }
    }
    block.clear();
  };

  long generated = 0;
  bool capped = false;
  Candidate current;
  std::vector<bool> used(exponents.size(), false);

  // Exponent tuples lexicographically, then β-power tuples, then sign
  // tuples with + before -.
  std::function<bool(int)> signs = [&](int slot) -> bool {
    if (slot == static_cast<int>(current.exponents.size())) {
      if (generated >= budget.max_candidates) {
        capped = true;
        return false;
      }
      ++generated;
      block.push_back(current);
      if (block.size() >= block_size) flush();
      return !found;
    }
    for (int sign : {1, -1}) {
      current.signs[static_cast<std::size_t>(slot)] = sign;
      if (!signs(slot + 1)) return false;
    }
    return true;
  };
  std::function<bool(int, int)> powers = [&](int slot, int low) -> bool {
    if (slot == static_cast<int>(current.exponents.size())) {
      current.signs.assign(current.exponents.size(), 1);
      return signs(0);
    }
    const int remaining = static_cast<int>(current.exponents.size()) - slot;
    for (int p = low; p + remaining - 1 <= budget.max_beta_degree; ++p) {
      current.powers[static_cast<std::size_t>(slot)] = p;
      if (!powers(slot + 1, p + 1)) return false;
    }
    return true;
  };
  std::function<bool(int, int)> choose = [&](int slot, int size) -> bool {
    if (slot == size) {
      const bool has_zero =
          e0 == 0 || std::find(current.exponents.begin(), current.exponents.end(), 0) != current.exponents.end();
      if (!has_zero) return true;
      current.powers.assign(static_cast<std::size_t>(size), 0);
      return powers(0, 1);
    }
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      current.exponents.push_back(exponents[i]);
      const bool go_on = choose(slot + 1, size);
      current.exponents.pop_back();
      used[i] = false;
      if (!go_on) return false;
    }
    return true;
  };

  for (int size = 0; size < budget.terms && !found && !capped; ++size) {
    if (size > budget.max_beta_degree) break;
    if (!choose(0, size)) break;
  }
  if (!found && !block.empty()) flush();
  if (found) return *found;
  report.complete = !capped;
  return report;
}

bool certified_not_in_K(const NumericalSemigroup& s, const ValueSet& delta) { return !in_filt(s, delta); }

}  // namespace cjac

#include "cjac/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>

#include "cjac/error.hpp"

namespace cjac {

NumericalSemigroup::NumericalSemigroup() : generators_{1}, smalls_{} {}

NumericalSemigroup::NumericalSemigroup(std::vector<bool> below) {
  int tail = static_cast<int>(below.size());
  while (tail > 0 && below[static_cast<std::size_t>(tail - 1)]) --tail;
  below.resize(static_cast<std::size_t>(tail));
  member_ = std::move(below);
  v0_ = tail;
  if (v0_ > kMaxConductor) {
    throw Error(ErrorCode::ConductorTooLarge,
                "conductor " + std::to_string(v0_) + " exceeds " + std::to_string(kMaxConductor));
  }
  for (int n = 0; n < v0_; ++n) {
    if (member_[static_cast<std::size_t>(n)]) {
      smalls_.push_back(n);
    } else {
      ++delta_;
    }
  }
  if (v0_ == 0) {
    generators_ = {1};
    return;
  }
  const int m = element(1);
  for (int g = 1; g < v0_ + m; ++g) {
    if (!contains(g)) continue;
    bool decomposable = false;
    for (int a = 1; a <= g / 2 && !decomposable; ++a) {
      decomposable = contains(a) && contains(g - a);
    }
    if (!decomposable) generators_.push_back(g);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> generators) {
  if (generators.empty()) {
    throw Error(ErrorCode::EmptyGenerators, "no generators given");
  }
  int g = 0;
  for (int a : generators) {
    if (a <= 0) {
      throw Error(ErrorCode::NonPositiveGenerator, "generator " + std::to_string(a) + " is not positive");
    }
    g = std::gcd(g, a);
  }
  if (g != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd of generators is " + std::to_string(g));
  }
  const int smallest = *std::min_element(generators.begin(), generators.end());
  // A run of `smallest` consecutive members starting at s forces [s, ∞) ⊆ Γ,
  // so scanning kMaxConductor + smallest positions decides whether v0 fits.
  const int scan = kMaxConductor + 2 * smallest + 1;
  std::vector<bool> member(static_cast<std::size_t>(scan), false);
  member[0] = true;
  for (int n = 1; n < scan; ++n) {
    for (int a : generators) {
      if (a <= n && member[static_cast<std::size_t>(n - a)]) {
        member[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  int run = 0;
  for (int n = 0; n < scan; ++n) {
    run = member[static_cast<std::size_t>(n)] ? run + 1 : 0;
    if (run == smallest) {
      const int start = n - smallest + 1;
      member.resize(static_cast<std::size_t>(start));
      return NumericalSemigroup(std::move(member));
    }
  }
  throw Error(ErrorCode::ConductorTooLarge,
              "conductor exceeds " + std::to_string(kMaxConductor));
}

std::optional<std::pair<int, int>> closure_defect(const ValueSet& elements) {
  const int tail = elements.tail();
  for (int a = 0; a < tail; ++a) {
    if (!elements.contains(a)) continue;
    for (int b = a; a + b < tail; ++b) {
      if (elements.contains(b) && !elements.contains(a + b)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

NumericalSemigroup NumericalSemigroup::from_value_set(const ValueSet& elements) {
  if (!elements.contains(0)) {
    throw Error(ErrorCode::InvalidElementSet, "0 is not a member");
  }
  if (auto defect = closure_defect(elements)) {
    const auto [a, b] = *defect;
    throw Error(ErrorCode::InvalidElementSet,
                "not additively closed: " + std::to_string(a) + " + " + std::to_string(b) + " = " +
                    std::to_string(a + b) + " is missing");
  }
  std::vector<bool> below(static_cast<std::size_t>(elements.tail()));
  for (int n = 0; n < elements.tail(); ++n) below[static_cast<std::size_t>(n)] = elements.contains(n);
  return NumericalSemigroup(std::move(below));
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text[first] == '{') {
    return from_value_set(ValueSet::parse(text));
  }
  std::vector<int> gens;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError(pos, "expected an integer generator");
    gens.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
  }
  return from_generators(gens);
}

int NumericalSemigroup::element(int j) const noexcept {
  if (j < gamma()) return smalls_[static_cast<std::size_t>(j)];
  return v0_ + (j - gamma());
}

std::vector<int> NumericalSemigroup::gaps() const {
  std::vector<int> out;
  for (int n = 0; n < v0_; ++n) {
    if (!contains(n)) out.push_back(n);
  }
  return out;
}

ValueSet NumericalSemigroup::as_value_set() const { return ValueSet::from_elements(smalls_, v0_); }

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ',';
    os << generators_[i];
  }
  return os.str();
}

std::vector<int> PartialNormalizationChain::conductors() const {
  std::vector<int> out;
  for (const auto& r : rings) out.push_back(r.conductor());
  return out;
}

std::vector<int> PartialNormalizationChain::deltas() const {
  std::vector<int> out;
  for (const auto& r : rings) out.push_back(r.delta());
  return out;
}

bool is_gorenstein(const NumericalSemigroup& s) {
  const int v0 = s.conductor();
  for (int j = 0; j < v0; ++j) {
    if (s.contains(j) == s.contains(v0 - 1 - j)) return false;
  }
  return true;
}

int symmetry_defect(const NumericalSemigroup& s) {
  const int v0 = s.conductor();
  int count = 0;
  for (int j = 0; j < v0; ++j) {
    if (!s.contains(j) && !s.contains(v0 - 1 - j)) ++count;
  }
  return count;
}

bool multiplicity_condition(const NumericalSemigroup& s) {
  if (s.is_natural()) return false;
  return s.conductor() == s.element(s.gamma() - 1) + s.multiplicity();
}

bool smalls_are_multiples(const NumericalSemigroup& s) {
  if (s.is_natural()) return false;
  const int k1 = s.multiplicity();
  for (int i = 1; i <= s.gamma(); ++i) {
    if (s.element(i) != i * k1) return false;
  }
  return true;
}

NumericalSemigroup partial_normalization(const NumericalSemigroup& s) {
  if (s.is_natural()) {
    throw Error(ErrorCode::AlreadyNormal, "Γ = ℕ has no partial normalization");
  }
  auto below = s.smalls();
  const auto widened = ValueSet::from_elements(below, s.conductor() - 1);
  return NumericalSemigroup::from_value_set(widened);
}

PartialNormalizationChain normalization_chain(const NumericalSemigroup& s) {
  PartialNormalizationChain chain;
  chain.rings.push_back(s);
  while (!chain.rings.back().is_natural()) {
    chain.rings.push_back(partial_normalization(chain.rings.back()));
  }
  return chain;
}

ValueSet canonical_value_set(const NumericalSemigroup& s) {
  const int v0 = s.conductor();
  std::vector<int> elements;
  for (int j = 0; j < v0; ++j) {
    if (!s.contains(v0 - 1 - j)) elements.push_back(j);
  }
  return ValueSet::from_elements(elements, v0);
}

bool is_planar(const NumericalSemigroup& s) { return s.generators().size() <= 2; }

}  // namespace cjac

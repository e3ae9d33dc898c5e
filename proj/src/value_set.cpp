#include "cjac/value_set.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cjac/error.hpp"

namespace cjac {

namespace {

// Shrinks `tail` while the position just below it is a member.
void normalize(std::vector<bool>& below, int& tail) {
  while (tail > 0 && below[static_cast<std::size_t>(tail - 1)]) {
    --tail;
  }
  below.resize(static_cast<std::size_t>(tail));
}

}  // namespace

ValueSet ValueSet::from_elements(std::span<const int> elements, int tail) {
  if (tail < 0) {
    throw Error(ErrorCode::InvalidElementSet, "negative tail start");
  }
  ValueSet out;
  out.tail_ = tail;
  out.below_.assign(static_cast<std::size_t>(tail), false);
  for (int e : elements) {
    if (e < 0) {
      throw Error(ErrorCode::InvalidElementSet, "negative element " + std::to_string(e));
    }
    if (e < tail) out.below_[static_cast<std::size_t>(e)] = true;
  }
  normalize(out.below_, out.tail_);
  return out;
}

ValueSet ValueSet::interval(int start) { return from_elements({}, start); }

ValueSet ValueSet::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(pos, std::string("expected '") + c + "'");
    }
    ++pos;
  };
  auto number = [&] {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || value < 0) {
      throw ParseError(pos, "expected a nonnegative integer");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };

  std::vector<int> elements;
  expect('{');
  skip_ws();
  if (pos < text.size() && text[pos] != '}') {
    elements.push_back(number());
    skip_ws();
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      elements.push_back(number());
      skip_ws();
    }
  }
  expect('}');
  expect('+');
  expect('[');
  const int tail = number();
  expect(',');
  expect(')');
  skip_ws();
  if (pos != text.size()) throw ParseError(pos, "trailing characters");
  return from_elements(elements, tail);
}

int ValueSet::min() const noexcept {
  for (int n = 0; n < tail_; ++n) {
    if (below_[static_cast<std::size_t>(n)]) return n;
  }
  return tail_;
}

int ValueSet::colength() const noexcept { return tail_ - count_below(tail_); }

int ValueSet::count_below(int bound) const noexcept {
  int count = 0;
  for (int n = 0; n < bound; ++n) {
    if (contains(n)) ++count;
  }
  return count;
}

std::vector<int> ValueSet::elements_below(int bound) const {
  std::vector<int> out;
  for (int n = 0; n < bound; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

std::vector<int> ValueSet::gaps() const {
  std::vector<int> out;
  for (int n = 0; n < tail_; ++n) {
    if (!below_[static_cast<std::size_t>(n)]) out.push_back(n);
  }
  return out;
}

ValueSet ValueSet::translated(int shift) const {
  if (min() + shift < 0) {
    throw Error(ErrorCode::InvalidElementSet, "translate leaves ℕ");
  }
  std::vector<int> elements;
  for (int e : elements_below(tail_)) elements.push_back(e + shift);
  return from_elements(elements, tail_ + shift);
}

ValueSet ValueSet::tail_from(int start) const {
  std::vector<int> elements;
  for (int e : elements_below(tail_)) {
    if (e >= start) elements.push_back(e);
  }
  return from_elements(elements, std::max(tail_, start));
}

bool ValueSet::is_subset_of(const ValueSet& other) const noexcept {
  const int bound = std::max(tail_, other.tail_);
  for (int n = 0; n < bound; ++n) {
    if (contains(n) && !other.contains(n)) return false;
  }
  return true;
}

std::string ValueSet::to_string(int tail_at) const {
  const int tail = std::max(tail_at, tail_);
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements_below(tail)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << "}+[" << tail << ",)";
  return os.str();
}

bool enumeration_less(const ValueSet& a, const ValueSet& b) {
  const int bound = std::max(a.tail(), b.tail());
  for (int n = 0; n < bound; ++n) {
    const bool in_a = a.contains(n);
    if (in_a != b.contains(n)) return in_a;
  }
  return false;
}

}  // namespace cjac

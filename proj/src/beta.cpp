#include "cjac/beta.hpp"

#include <sstream>

#include "cjac/error.hpp"

namespace cjac {

std::string to_string(const Rational& q) { return q.get_str(); }

BetaPoly::BetaPoly(Rational constant) {
  coeffs_.push_back(std::move(constant));
  trim();
}

BetaPoly BetaPoly::monomial(Rational coefficient, int degree) {
  BetaPoly p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = std::move(coefficient);
  p.trim();
  return p;
}

void BetaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int BetaPoly::valuation() const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

const Rational& BetaPoly::coefficient(int i) const {
  static const Rational zero(0);
  if (i < 0 || i > degree()) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational BetaPoly::evaluate(const Rational& beta) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * beta + *it;
  return acc;
}

BetaPoly BetaPoly::shifted_down(int k) const {
  BetaPoly out;
  if (k >= static_cast<int>(coeffs_.size())) return out;
  out.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
  return out;
}

BetaPoly BetaPoly::substitute_scaled(const Rational& c) const {
  BetaPoly out = *this;
  Rational power(1);
  for (auto& a : out.coeffs_) {
    a *= power;
    power *= c;
  }
  out.trim();
  return out;
}

BetaPoly BetaPoly::monic() const {
  if (is_zero()) return *this;
  BetaPoly out = *this;
  const Rational lead = leading();
  for (auto& a : out.coeffs_) a /= lead;
  return out;
}

BetaPoly& BetaPoly::operator+=(const BetaPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

BetaPoly& BetaPoly::operator-=(const BetaPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

BetaPoly& BetaPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

void BetaPoly::add_scaled(const Rational& c, const BetaPoly& other) {
  if (c == 0) return;
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += c * other.coeffs_[i];
  trim();
}

BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
  BetaPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.trim();
  return out;
}

void BetaPoly::divide(const BetaPoly& a, const BetaPoly& b, BetaPoly& quotient, BetaPoly& remainder) {
  if (b.is_zero()) throw std::domain_error("BetaPoly division by zero");
  quotient = BetaPoly();
  remainder = a;
  const int db = b.degree();
  while (!remainder.is_zero() && remainder.degree() >= db) {
    const int shift = remainder.degree() - db;
    const Rational factor = remainder.leading() / b.leading();
    const auto term = BetaPoly::monomial(factor, shift);
    quotient += term;
    remainder -= term * b;
  }
}

BetaPoly BetaPoly::gcd(BetaPoly a, BetaPoly b) {
  while (!b.is_zero()) {
    BetaPoly q, r;
    divide(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

BetaScalar::BetaScalar(Rational constant) : num_(std::move(constant)) {}

BetaScalar::BetaScalar(BetaPoly numerator) : num_(std::move(numerator)) {}

BetaScalar::BetaScalar(BetaPoly numerator, BetaPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero() || den_.at_zero() == 0) {
    throw Error(ErrorCode::NotAUnit, "denominator vanishes at β = 0");
  }
  normalize();
}

BetaScalar BetaScalar::beta_power(int degree, Rational coefficient) {
  return BetaScalar(BetaPoly::monomial(std::move(coefficient), degree));
}

void BetaScalar::normalize() {
  if (num_.is_zero()) {
    den_ = BetaPoly(Rational(1));
    return;
  }
  const BetaPoly g = BetaPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    BetaPoly q, r;
    BetaPoly::divide(num_, g, q, r);
    num_ = q;
    BetaPoly::divide(den_, g, q, r);
    den_ = q;
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ *= Rational(1 / lead);
    den_ *= Rational(1 / lead);
  }
}

bool BetaScalar::is_unit() const { return num_.at_zero() != 0; }

Rational BetaScalar::at_zero() const { return num_.at_zero() / den_.at_zero(); }

BetaScalar BetaScalar::substitute_scaled(const Rational& c) const {
  return BetaScalar(num_.substitute_scaled(c), den_.substitute_scaled(c));
}

BetaScalar operator+(const BetaScalar& a, const BetaScalar& b) {
  if (a.den_ == b.den_) return BetaScalar(a.num_ + b.num_, a.den_);
  return BetaScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BetaScalar operator-(const BetaScalar& a, const BetaScalar& b) {
  if (a.den_ == b.den_) return BetaScalar(a.num_ - b.num_, a.den_);
  return BetaScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

BetaScalar operator*(const BetaScalar& a, const BetaScalar& b) {
  return BetaScalar(a.num_ * b.num_, a.den_ * b.den_);
}

BetaScalar operator/(const BetaScalar& a, const BetaScalar& b) {
  if (!b.is_unit()) throw Error(ErrorCode::NotAUnit, "division by a non-unit of k[β]_(β)");
  return BetaScalar(a.num_ * b.den_, a.den_ * b.num_);
}

namespace {

std::string poly_string(const BetaPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p.coefficient(i);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (i == 1) os << "*b";
    if (i > 1) os << "*b^" << i;
  }
  return os.str();
}

}  // namespace

std::string BetaScalar::to_string() const {
  if (is_polynomial()) return poly_string(num_);
  return "(" + poly_string(num_) + ")/(" + poly_string(den_) + ")";
}

}  // namespace cjac

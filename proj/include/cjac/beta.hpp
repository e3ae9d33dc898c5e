#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cjac {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Polynomial in the deformation parameter β with rational coefficients;
/// coefficient i multiplies β^i. Always trimmed: no trailing zeros.
class BetaPoly {
 public:
  BetaPoly() = default;
  explicit BetaPoly(Rational constant);
  static BetaPoly monomial(Rational coefficient, int degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Order of vanishing at β = 0; -1 for the zero polynomial.
  int valuation() const noexcept;
  const Rational& coefficient(int i) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational at_zero() const { return coeffs_.empty() ? Rational(0) : coeffs_.front(); }
  Rational evaluate(const Rational& beta) const;
  const Rational& leading() const { return coeffs_.back(); }

  /// Divide by β^k; the polynomial must be divisible.
  BetaPoly shifted_down(int k) const;
  /// p(c·β)
  BetaPoly substitute_scaled(const Rational& c) const;
  BetaPoly monic() const;

  BetaPoly& operator+=(const BetaPoly& other);
  BetaPoly& operator-=(const BetaPoly& other);
  BetaPoly& operator*=(const Rational& c);
  /// this += c · other
  void add_scaled(const Rational& c, const BetaPoly& other);

  friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
  friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }
  friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b);
  friend BetaPoly operator*(BetaPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const BetaPoly& a, const BetaPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: a = q·b + r with deg r < deg b.
  static void divide(const BetaPoly& a, const BetaPoly& b, BetaPoly& quotient, BetaPoly& remainder);
  /// Monic gcd; gcd(0, 0) = 0.
  static BetaPoly gcd(BetaPoly a, BetaPoly b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// An element of the local ring k[β]_(β): a reduced fraction p/q with q monic
/// and q(0) ≠ 0. Scalars of this kind are the coefficients of a family ∂_β.
class BetaScalar {
 public:
  BetaScalar() = default;
  BetaScalar(Rational constant);  // NOLINT(google-explicit-constructor)
  BetaScalar(BetaPoly numerator);  // NOLINT(google-explicit-constructor)
  /// Throws NotAUnit when the denominator vanishes at β = 0.
  BetaScalar(BetaPoly numerator, BetaPoly denominator);
  static BetaScalar beta_power(int degree, Rational coefficient = 1);

  const BetaPoly& numerator() const noexcept { return num_; }
  const BetaPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  /// β-adic valuation; -1 for zero.
  int valuation() const noexcept { return num_.valuation(); }
  /// Unit of the local ring: nonzero value at β = 0.
  bool is_unit() const;
  Rational at_zero() const;
  BetaScalar substitute_scaled(const Rational& c) const;

  friend BetaScalar operator+(const BetaScalar& a, const BetaScalar& b);
  friend BetaScalar operator-(const BetaScalar& a, const BetaScalar& b);
  friend BetaScalar operator*(const BetaScalar& a, const BetaScalar& b);
  /// b must be a unit of the local ring.
  friend BetaScalar operator/(const BetaScalar& a, const BetaScalar& b);
  friend bool operator==(const BetaScalar& a, const BetaScalar& b) = default;

  std::string to_string() const;

 private:
  void normalize();
  BetaPoly num_;
  BetaPoly den_{Rational(1)};
};

}  // namespace cjac

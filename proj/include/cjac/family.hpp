#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cjac/beta.hpp"

namespace cjac {

/// ∂_β = Σ c_e(β)·t^e, a finite t-expansion with coefficients in k[β]_(β).
/// Terms with zero coefficient are never stored.
class FamilyElement {
 public:
  /// The zero element.
  FamilyElement() = default;
  static FamilyElement one();
  static FamilyElement monomial(const BetaScalar& coefficient, int exponent);
  /// β^beta_degree · t^exponent
  static FamilyElement term(int beta_degree, int exponent, Rational coefficient = 1);

  /// Family DSL, e.g. "t^2 + b*t + b^2". Terms are joined by '+' or '-', each
  /// term a '*'-product of factors: rational literal, b, b^D, t, t^E.
  static FamilyElement parse(std::string_view text);

  /// Adds c·t^exponent to the current coefficient.
  void add(int exponent, const BetaScalar& coefficient);

  const std::map<int, BetaScalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BetaScalar coefficient(int exponent) const;
  /// Unit of the series ring over the β-fraction field: the t⁰ coefficient is
  /// not identically zero.
  bool is_unit() const;
  int lowest_exponent() const;
  int highest_exponent() const;
  /// Largest β-degree over numerators and denominators.
  int max_beta_degree() const;

  FamilyElement scaled(const BetaScalar& unit) const;
  /// ∂_{cβ}
  FamilyElement substitute_scaled(const Rational& c) const;

  /// Canonical DSL text: descending t-exponent, then ascending β-degree.
  /// Throws PreconditionFailed for non-polynomial coefficients, which the DSL
  /// cannot express.
  std::string to_string() const;

  friend bool operator==(const FamilyElement&, const FamilyElement&) = default;

 private:
  std::map<int, BetaScalar> terms_;
};

}  // namespace cjac

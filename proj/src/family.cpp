#include "cjac/family.hpp"

#include <cctype>
#include <sstream>

#include "cjac/error.hpp"

namespace cjac {

FamilyElement FamilyElement::one() { return monomial(BetaScalar(Rational(1)), 0); }

FamilyElement FamilyElement::monomial(const BetaScalar& coefficient, int exponent) {
  FamilyElement f;
  f.add(exponent, coefficient);
  return f;
}

FamilyElement FamilyElement::term(int beta_degree, int exponent, Rational coefficient) {
  return monomial(BetaScalar::beta_power(beta_degree, std::move(coefficient)), exponent);
}

void FamilyElement::add(int exponent, const BetaScalar& coefficient) {
  if (exponent < 0) {
    throw Error(ErrorCode::PreconditionFailed, "negative t-exponent " + std::to_string(exponent));
  }
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    if (!coefficient.is_zero()) terms_.emplace(exponent, coefficient);
    return;
  }
  it->second = it->second + coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

BetaScalar FamilyElement::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BetaScalar() : it->second;
}

bool FamilyElement::is_unit() const { return terms_.count(0) != 0; }

int FamilyElement::lowest_exponent() const { return terms_.empty() ? -1 : terms_.begin()->first; }

int FamilyElement::highest_exponent() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

int FamilyElement::max_beta_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max({d, c.numerator().degree(), c.denominator().degree()});
  }
  return d;
}

FamilyElement FamilyElement::scaled(const BetaScalar& unit) const {
  FamilyElement out;
  for (const auto& [e, c] : terms_) out.add(e, c * unit);
  return out;
}

FamilyElement FamilyElement::substitute_scaled(const Rational& c) const {
  FamilyElement out;
  for (const auto& [e, coeff] : terms_) out.add(e, coeff.substitute_scaled(c));
  return out;
}

std::string FamilyElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!c.is_polynomial()) {
      throw Error(ErrorCode::PreconditionFailed, "coefficient " + c.to_string() + " is not a polynomial in b");
    }
    const BetaPoly& p = c.numerator();
    for (int d = 0; d <= p.degree(); ++d) {
      Rational q = p.coefficient(d);
      if (q == 0) continue;
      const bool negative = q < 0;
      if (negative) q = -q;
      if (first) {
        if (negative) os << "- ";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      std::string factors;
      auto append = [&factors](const std::string& f) {
        if (!factors.empty()) factors += '*';
        factors += f;
      };
      if (q != 1 || (d == 0 && e == 0)) append(q.get_str());
      if (d == 1) append("b");
      if (d > 1) append("b^" + std::to_string(d));
      if (e == 1) append("t");
      if (e > 1) append("t^" + std::to_string(e));
      os << factors;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FamilyElement run() {
    FamilyElement out;
    skip();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty family");
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      first = false;
      parse_term(out, negative);
      skip();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  long integer() {
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000) throw ParseError(start, "integer too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected an integer");
    return value;
  }

  int exponent() {
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    return static_cast<int>(integer());
  }

  void parse_term(FamilyElement& out, bool negative) {
    Rational coefficient(negative ? -1 : 1);
    int beta = 0;
    int t = 0;
    while (true) {
      skip();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t start = pos_;
        mpz_class num(static_cast<unsigned long>(integer()));
        mpz_class den(1);
        if (peek() == '/') {
          ++pos_;
          den = static_cast<unsigned long>(integer());
          if (den == 0) throw ParseError(start, "zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        coefficient *= q;
      } else if (c == 'b') {
        ++pos_;
        beta += exponent();
      } else if (c == 't') {
        ++pos_;
        t += exponent();
      } else {
        throw ParseError(pos_, c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'");
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    out.add(t, BetaScalar::beta_power(beta, coefficient));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilyElement FamilyElement::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace cjac

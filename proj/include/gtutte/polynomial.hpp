#pragma once

#include <map>
#include <json.hpp>
#include <string>
#include <utility>

#include "gtutte/rational.hpp"

namespace gtutte {

/// Sparse univariate polynomial in z with integer (possibly negative) exponents.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(const Rational& constant);
  static LaurentPolynomial monomial(int exponent, const Rational& coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int exponent) const;
  void add_term(int exponent, const Rational& coefficient);

  // Both return 0 for the zero polynomial.
  int min_exponent() const;
  int max_exponent() const;

  /// Throws DivisionByZero at z = 0 when a negative exponent is present.
  Rational evaluate(const Rational& z) const;
  LaurentPolynomial shifted(int by) const;
  LaurentPolynomial pow(unsigned exponent) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& scalar);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::string& var = "z") const;

 private:
  Terms terms_;
};

/// Sparse polynomial in x and y with nonnegative exponents, keyed (xexp, yexp).
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Rational>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(const Rational& constant);
  static BivariatePolynomial monomial(int xexp, int yexp, const Rational& coefficient = 1);
  static BivariatePolynomial x() { return monomial(1, 0); }
  static BivariatePolynomial y() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int xexp, int yexp) const;
  void add_term(int xexp, int yexp, const Rational& coefficient);
  int degree_x() const;
  int degree_y() const;

  Rational evaluate(const Rational& a, const Rational& b) const;
  BivariatePolynomial pow(unsigned exponent) const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator-=(const BivariatePolynomial& other);
  BivariatePolynomial& operator*=(const Rational& scalar);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Terms terms_;
};

/// num(z) / den(z). Not reduced; equality is by cross-multiplication.
struct RationalFunction {
  LaurentPolynomial num;
  LaurentPolynomial den{Rational(1)};

  RationalFunction() = default;
  RationalFunction(LaurentPolynomial n, LaurentPolynomial d = LaurentPolynomial(Rational(1)));

  /// Throws DivisionByZero when den(z) = 0.
  Rational evaluate(const Rational& z) const;
  bool equivalent(const RationalFunction& other) const;
};

/// P(X(z), Y(z)) for Laurent substitutions.
LaurentPolynomial substitute(const BivariatePolynomial& p, const LaurentPolynomial& x, const LaurentPolynomial& y);

/// P(X(z), Y(z)) as a single fraction over den_x^dx * den_y^dy.
RationalFunction substitute(const BivariatePolynomial& p, const RationalFunction& x, const RationalFunction& y);

/// sum c_ij * xnum^i * xden^(degree-i) * y^j, i.e. xden^degree * P(xnum/xden, y).
/// Requires degree >= degree_x(P).
BivariatePolynomial homogenized_substitute(const BivariatePolynomial& p, const BivariatePolynomial& xnum,
                                           const BivariatePolynomial& xden, const BivariatePolynomial& y,
                                           int degree);

/// P(x, c) as a polynomial in x (all y exponents 0).
BivariatePolynomial fix_y(const BivariatePolynomial& p, const Rational& c);

nlohmann::json to_json(const BivariatePolynomial& p);
nlohmann::json to_json(const LaurentPolynomial& p);
BivariatePolynomial bivariate_from_json(const nlohmann::json& j);
LaurentPolynomial laurent_from_json(const nlohmann::json& j);

}  // namespace gtutte

#include "gtutte/polynomial.hpp"

#include <algorithm>
#include <vector>

#include "gtutte/error.hpp"

namespace gtutte {

namespace {

template <typename Key>
void add_into(std::map<Key, Rational>& terms, const Key& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string signed_term(bool first, const Rational& c, const std::string& monomial) {
  std::string out;
  Rational mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (monomial.empty()) return out + gtutte::to_string(mag);
  if (mag != 1) out += gtutte::to_string(mag) + "*";
  return out + monomial;
}

std::string power_string(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

Rational rational_from_json(const nlohmann::json& t) {
  Rational q(Integer(t.at("num").get<std::string>(), 10), Integer(t.at("den").get<std::string>(), 10));
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in polynomial JSON");
  q.canonicalize();
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(const Rational& constant) { add_into(terms_, 0, constant); }

LaurentPolynomial LaurentPolynomial::monomial(int exponent, const Rational& coefficient) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

Rational LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(int exponent, const Rational& coefficient) {
  add_into(terms_, exponent, coefficient);
}

int LaurentPolynomial::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPolynomial::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Rational LaurentPolynomial::evaluate(const Rational& z) const {
  if (z == 0) {
    if (min_exponent() < 0) throw Error(ErrorKind::DivisionByZero, "negative power of z at z = 0");
    return coefficient(0);
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * power(z, e);
  return sum;
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
  LaurentPolynomial result(Rational(1));
  LaurentPolynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_into(terms_, e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_into(terms_, e, Rational(-c));
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= scalar;
  }
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) add_into(out.terms_, ea + eb, Rational(ca * cb));
  return out;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    out += signed_term(first, c, power_string(var, e));
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// BivariatePolynomial

BivariatePolynomial::BivariatePolynomial(const Rational& constant) { add_into(terms_, {0, 0}, constant); }

BivariatePolynomial BivariatePolynomial::monomial(int xexp, int yexp, const Rational& coefficient) {
  BivariatePolynomial p;
  p.add_term(xexp, yexp, coefficient);
  return p;
}

Rational BivariatePolynomial::coefficient(int xexp, int yexp) const {
  auto it = terms_.find({xexp, yexp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePolynomial::add_term(int xexp, int yexp, const Rational& coefficient) {
  add_into(terms_, {xexp, yexp}, coefficient);
}

int BivariatePolynomial::degree_x() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BivariatePolynomial::degree_y() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

Rational BivariatePolynomial::evaluate(const Rational& a, const Rational& b) const {
  std::vector<Rational> apow(degree_x() + 1), bpow(degree_y() + 1);
  apow[0] = bpow[0] = 1;
  for (std::size_t i = 1; i < apow.size(); ++i) apow[i] = apow[i - 1] * a;
  for (std::size_t i = 1; i < bpow.size(); ++i) bpow[i] = bpow[i - 1] * b;
  Rational sum = 0;
  for (const auto& [k, c] : terms_) sum += c * apow[k.first] * bpow[k.second];
  return sum;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned exponent) const {
  BivariatePolynomial result(Rational(1));
  BivariatePolynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [k, c] : other.terms_) add_into(terms_, k, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
  for (const auto& [k, c] : other.terms_) add_into(terms_, k, Rational(-c));
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [k, c] : terms_) c *= scalar;
  }
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      add_into(out.terms_, {ka.first + kb.first, ka.second + kb.second}, Rational(ca * cb));
  return out;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Descending order reads more naturally than the storage order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string mono = power_string("x", k.first);
    const std::string ypart = power_string("y", k.second);
    if (!mono.empty() && !ypart.empty()) mono += "*";
    mono += ypart;
    out += signed_term(first, c, mono);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// RationalFunction and substitution

RationalFunction::RationalFunction(LaurentPolynomial n, LaurentPolynomial d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
}

Rational RationalFunction::evaluate(const Rational& z) const {
  const Rational d = den.evaluate(z);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes at z = " + gtutte::to_string(z));
  return num.evaluate(z) / d;
}

bool RationalFunction::equivalent(const RationalFunction& other) const {
  return num * other.den == other.num * den;
}

LaurentPolynomial substitute(const BivariatePolynomial& p, const LaurentPolynomial& x, const LaurentPolynomial& y) {
  std::vector<LaurentPolynomial> xp{LaurentPolynomial(Rational(1))}, yp{LaurentPolynomial(Rational(1))};
  for (int i = 1; i <= p.degree_x(); ++i) xp.push_back(xp.back() * x);
  for (int j = 1; j <= p.degree_y(); ++j) yp.push_back(yp.back() * y);
  LaurentPolynomial out;
  for (const auto& [k, c] : p.terms()) out += xp[k.first] * yp[k.second] * c;
  return out;
}

RationalFunction substitute(const BivariatePolynomial& p, const RationalFunction& x, const RationalFunction& y) {
  const int dx = p.degree_x(), dy = p.degree_y();
  auto powers = [](const LaurentPolynomial& base, int n) {
    std::vector<LaurentPolynomial> v{LaurentPolynomial(Rational(1))};
    for (int i = 1; i <= n; ++i) v.push_back(v.back() * base);
    return v;
  };
  const auto xn = powers(x.num, dx), xd = powers(x.den, dx);
  const auto yn = powers(y.num, dy), yd = powers(y.den, dy);
  LaurentPolynomial num;
  for (const auto& [k, c] : p.terms()) {
    num += xn[k.first] * xd[dx - k.first] * yn[k.second] * yd[dy - k.second] * c;
  }
  return RationalFunction(num, xd[dx] * yd[dy]);
}

BivariatePolynomial homogenized_substitute(const BivariatePolynomial& p, const BivariatePolynomial& xnum,
                                           const BivariatePolynomial& xden, const BivariatePolynomial& y,
                                           int degree) {
  if (p.degree_x() > degree) {
    throw Error(ErrorKind::DimensionMismatch, "x-degree exceeds the homogenizing degree");
  }
  std::vector<BivariatePolynomial> np{BivariatePolynomial(Rational(1))}, dp{BivariatePolynomial(Rational(1))},
      yp{BivariatePolynomial(Rational(1))};
  for (int i = 1; i <= degree; ++i) {
    np.push_back(np.back() * xnum);
    dp.push_back(dp.back() * xden);
  }
  for (int j = 1; j <= p.degree_y(); ++j) yp.push_back(yp.back() * y);
  BivariatePolynomial out;
  for (const auto& [k, c] : p.terms()) out += np[k.first] * dp[degree - k.first] * yp[k.second] * c;
  return out;
}

BivariatePolynomial fix_y(const BivariatePolynomial& p, const Rational& c) {
  BivariatePolynomial out;
  for (const auto& [k, coeff] : p.terms()) out.add_term(k.first, 0, coeff * power(c, k.second));
  return out;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const BivariatePolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : p.terms()) {
    arr.push_back({{"xexp", k.first}, {"yexp", k.second}, {"num", c.get_num().get_str()},
                   {"den", c.get_den().get_str()}});
  }
  return arr;
}

nlohmann::json to_json(const LaurentPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    arr.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return arr;
}

BivariatePolynomial bivariate_from_json(const nlohmann::json& j) {
  BivariatePolynomial p;
  for (const auto& t : j) p.add_term(t.at("xexp").get<int>(), t.at("yexp").get<int>(), rational_from_json(t));
  return p;
}

LaurentPolynomial laurent_from_json(const nlohmann::json& j) {
  LaurentPolynomial p;
  for (const auto& t : j) p.add_term(t.at("exp").get<int>(), rational_from_json(t));
  return p;
}

}  // namespace gtutte

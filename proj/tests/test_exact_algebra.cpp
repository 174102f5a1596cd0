#include <doctest.h>

#include <random>

#include "gtutte/error.hpp"
#include "gtutte/matrix.hpp"
#include "gtutte/polynomial.hpp"
#include "gtutte/rational.hpp"

using namespace gtutte;

namespace {

ExactMatrix vandermonde(const std::vector<Rational>& nodes) {
  ExactMatrix v(nodes.size(), nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j, p *= nodes[i]) v(i, j) = p;
  }
  return v;
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  ExactMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      m(r, c) = q;
    }
  return m;
}

BivariatePolynomial p2_tutte() {
  BivariatePolynomial p;
  p.add_term(2, 1, 1);
  p.add_term(1, 1, -2);
  p.add_term(1, 0, 1);
  p.add_term(0, 1, 1);
  return p;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2/-4")) == "1/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK(to_string(parse_rational(" 5 ")) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK(power(ratio(2, 3), -2) == ratio(9, 4));
  CHECK_THROWS_AS(power(Rational(0), -1), Error);
  CHECK(binomial(6, 2) == 15);
}

TEST_CASE("bareiss_solve examples") {
  auto x = bareiss_solve(ExactMatrix::identity(3), {5, -2, 7});
  CHECK(x == std::vector<Rational>{5, -2, 7});

  auto a = ExactMatrix::from_rows({{2, 1}, {1, 1}});
  CHECK(bareiss_solve(a, {3, 2}) == std::vector<Rational>{1, 1});

  CHECK(bareiss_solve(vandermonde({1, 2, 3}), {6, 11, 18}) == std::vector<Rational>{3, 2, 1});
}

TEST_CASE("bareiss_solve needs a pivot search and rejects singular systems") {
  auto a = ExactMatrix::from_rows({{0, 0, 1}, {0, 2, 0}, {ratio(1, 3), 0, 0}});
  CHECK(bareiss_solve(a, {4, 6, 1}) == std::vector<Rational>{3, 3, 4});

  auto singular = ExactMatrix::from_rows({{1, 2}, {2, 4}});
  try {
    bareiss_solve(singular, {1, 1});
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularMatrix);
  }
  CHECK_THROWS_AS(bareiss_solve(ExactMatrix(2, 3), {1, 1}), Error);
}

TEST_CASE("bareiss_solve solutions satisfy Ax = b exactly") {
  std::mt19937 rng(7);
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    auto a = random_matrix(rng, n);
    if (det_exact(a) == 0) continue;
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = Rational(static_cast<long>(trial) - static_cast<long>(i), 3);
    for (auto& q : b) q.canonicalize();
    auto x = bareiss_solve(a, b);
    for (std::size_t r = 0; r < n; ++r) {
      Rational s = 0;
      for (std::size_t c = 0; c < n; ++c) s += a(r, c) * x[c];
      CHECK(s == b[r]);
    }
    for (const auto& q : x) {
      Rational copy = q;
      copy.canonicalize();
      CHECK(copy == q);
      CHECK(q.get_den() > 0);
    }
    ++solved;
  }
  CHECK(solved > 30);
}

TEST_CASE("det_exact examples and multiplicativity") {
  CHECK(det_exact(ExactMatrix::identity(4)) == 1);
  CHECK(det_exact(ExactMatrix::from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(det_exact(ExactMatrix::from_rows({{1, 5, 2}, {0, 3, 1}, {1, 5, 2}})) == 0);
  CHECK(det_exact(ExactMatrix::from_rows({{ratio(1, 2), 1}, {1, 4}})) == 1);
  CHECK_THROWS_AS(det_exact(ExactMatrix(2, 3)), Error);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 4;
    auto a = random_matrix(rng, n), b = random_matrix(rng, n);
    CHECK(det_exact(a * b) == det_exact(a) * det_exact(b));
  }
}

TEST_CASE("rank_exact") {
  CHECK(rank_exact(ExactMatrix::from_rows({{1, 2, 3}, {2, 4, 6}})) == 1);
  CHECK(rank_exact(ExactMatrix::from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}})) == 2);
  CHECK(rank_exact(ExactMatrix::identity(3)) == 3);
}

TEST_CASE("vandermonde_solve examples") {
  LaurentPolynomial one_plus_z;
  one_plus_z.add_term(0, 1);
  one_plus_z.add_term(1, 1);
  CHECK(vandermonde_solve({0, 1}, {1, 2}) == one_plus_z);

  LaurentPolynomial quad;
  quad.add_term(0, 3);
  quad.add_term(1, 2);
  quad.add_term(2, 1);
  CHECK(vandermonde_solve({1, 2, 3}, {6, 11, 18}, 0) == quad);

  // z^-1 + 2 takes the values 3 and 5/2 at the nodes 1 and 2.
  LaurentPolynomial shifted;
  shifted.add_term(-1, 1);
  shifted.add_term(0, 2);
  auto got = vandermonde_solve({1, 2}, {3, ratio(5, 2)}, -1);
  CHECK(got == shifted);
  CHECK(got.evaluate(1) == 3);
  CHECK(got.evaluate(2) == ratio(5, 2));

  try {
    vandermonde_solve({1, 1}, {2, 3});
    FAIL("expected DuplicateNode");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateNode);
  }
}

TEST_CASE("vandermonde_solve interpolates exactly at every node") {
  std::vector<Rational> nodes{ratio(-3, 2), ratio(1, 5), 2, 7, ratio(-1, 3)};
  std::vector<Rational> values{1, -4, ratio(2, 9), 0, 13};
  for (int offset : {-3, 0, 2}) {
    auto p = vandermonde_solve(nodes, values, offset);
    for (std::size_t i = 0; i < nodes.size(); ++i) CHECK(p.evaluate(nodes[i]) == values[i]);
    CHECK(p.min_exponent() >= offset);
    CHECK(p.max_exponent() <= offset + 4);
  }
}

TEST_CASE("polynomial evaluation and substitution") {
  const auto p = p2_tutte();
  CHECK(p.evaluate(1, 1) == 1);
  CHECK(BivariatePolynomial::x().pow(5).evaluate(2, 2) == 32);
  CHECK(p.to_string() == "x^2*y - 2*x*y + x + y");

  // x -> 1 + 2/z
  LaurentPolynomial x_sub;
  x_sub.add_term(0, 1);
  x_sub.add_term(-1, 2);
  auto r = substitute(BivariatePolynomial::x(), x_sub, LaurentPolynomial::monomial(1));
  CHECK(r == x_sub);
  CHECK(r.to_string() == "2*z^-1 + 1");

  // Rational-function substitution of x -> 1/(z-1), y -> z into x*y.
  LaurentPolynomial zm1;
  zm1.add_term(1, 1);
  zm1.add_term(0, -1);
  RationalFunction xr(LaurentPolynomial(Rational(1)), zm1);
  RationalFunction yr(LaurentPolynomial::monomial(1));
  auto f = substitute(BivariatePolynomial::monomial(1, 1), xr, yr);
  CHECK(f.evaluate(3) == ratio(3, 2));
  CHECK_THROWS_AS(f.evaluate(1), Error);
  CHECK(f.equivalent(RationalFunction(LaurentPolynomial::monomial(1), zm1)));
}

TEST_CASE("homogenized substitution clears the x denominator") {
  // (1+y)^1 * T((x+y)/(1+y), y^2) with T = x gives x + y.
  BivariatePolynomial xnum = BivariatePolynomial::x() + BivariatePolynomial::y();
  BivariatePolynomial xden = BivariatePolynomial(Rational(1)) + BivariatePolynomial::y();
  auto got = homogenized_substitute(BivariatePolynomial::x(), xnum, xden, BivariatePolynomial::y().pow(2), 1);
  CHECK(got == xnum);
  CHECK_THROWS_AS(homogenized_substitute(BivariatePolynomial::x().pow(2), xnum, xden, xden, 1), Error);
  CHECK(fix_y(p2_tutte(), 1) == BivariatePolynomial::x().pow(2) - BivariatePolynomial::x() + BivariatePolynomial(1));
}

TEST_CASE("polynomial JSON round trip is canonical") {
  auto p = p2_tutte();
  p.add_term(3, 0, ratio(-1, 3));
  auto j = to_json(p);
  CHECK(j.dump() ==
        R"([{"den":"1","num":"1","xexp":0,"yexp":1},{"den":"1","num":"1","xexp":1,"yexp":0},)"
        R"({"den":"1","num":"-2","xexp":1,"yexp":1},{"den":"1","num":"1","xexp":2,"yexp":1},)"
        R"({"den":"3","num":"-1","xexp":3,"yexp":0}])");
  CHECK(bivariate_from_json(j) == p);

  LaurentPolynomial l;
  l.add_term(-2, ratio(4, 6));
  l.add_term(3, -1);
  CHECK(to_json(l).dump() == R"([{"den":"3","exp":-2,"num":"2"},{"den":"1","exp":3,"num":"-1"}])");
  CHECK(laurent_from_json(to_json(l)) == l);
}

TEST_CASE("zero coefficients are never stored") {
  BivariatePolynomial p;
  p.add_term(1, 1, 3);
  p.add_term(1, 1, -3);
  CHECK(p.is_zero());
  CHECK((p2_tutte() - p2_tutte()).is_zero());
  LaurentPolynomial l = LaurentPolynomial::monomial(2, 5);
  l *= 0;
  CHECK(l.is_zero());
}

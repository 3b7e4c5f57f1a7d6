#include <doctest.h>

#include <array>

#include "p4kit/errors.hpp"
#include "p4kit/matrix.hpp"
#include "p4kit/polynomial.hpp"

using namespace p4kit;

TEST_CASE("field inverse and rejection of composite moduli") {
  PrimeField f;
  for (std::uint32_t a = 1; a < 2000; a += 37) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_int(-1) == 31990);
  CHECK(f.to_signed(31990) == -1);
  CHECK_THROWS_AS(PrimeField(32000), UsageError);
  CHECK_THROWS_AS(f.inv(0), UsageError);
}

TEST_CASE("grevlex examples") {
  auto m = [](std::array<int, 3> e) { return Monomial::from_exponents(e); };
  // x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2
  CHECK(m({2, 0, 0}) > m({1, 1, 0}));
  CHECK(m({1, 1, 0}) > m({0, 2, 0}));
  CHECK(m({0, 2, 0}) > m({1, 0, 1}));
  CHECK(m({1, 0, 1}) > m({0, 1, 1}));
  CHECK(m({0, 1, 1}) > m({0, 0, 2}));
  // degree first
  CHECK(m({0, 0, 3}) > m({2, 0, 0}));
  std::array<int, 3> a{1, 2, 0}, b{2, 0, 1};
  CHECK(compare_grevlex(a, b) == 1);
  std::array<int, 2> c{1, 1};
  CHECK_THROWS_AS(compare_grevlex(a, c), UsageError);
  auto ms = monomials_of_degree(3, 2);
  REQUIRE(ms.size() == 6);
  for (std::size_t i = 1; i < ms.size(); ++i) CHECK(ms[i - 1] > ms[i]);
}

TEST_CASE("monomial divisibility and lcm") {
  auto x = Monomial::variable(0, 2) * Monomial::variable(3);
  auto y = Monomial::variable(0) * Monomial::variable(3, 4);
  CHECK(Monomial::variable(0).divides(x));
  CHECK_FALSE(x.divides(y));
  CHECK(x.lcm(y) == Monomial::variable(0, 2) * Monomial::variable(3, 4));
  CHECK(x.gcd(y) == Monomial::variable(0) * Monomial::variable(3));
  CHECK((x.lcm(y) / x) == Monomial::variable(3, 3));
  CHECK_THROWS_AS(Monomial::variable(0, 100) * Monomial::variable(1, 100),
                  DegreeError);
}

TEST_CASE("polynomial arithmetic") {
  auto R = make_ring(31991, 3);
  auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  auto sq = (x + y) * (x + y);
  CHECK(sq == x * x + x * y.scaled(2) + y * y);
  CHECK((sq - sq).is_zero());
  CHECK(sq.derivative(0) == x.scaled(2) + y.scaled(2));
  CHECK_THROWS_AS(x + x * y, DegreeError);
  CHECK(sq.degree() == 2);
  CHECK_FALSE(Polynomial(R).degree().has_value());
}

TEST_CASE("graded matrices check degrees and shapes") {
  auto R = make_ring(31991, 3);
  auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  auto m = GradedMatrix::from_entries(R, {{0}}, {{1, 2}}, {x, x * y});
  CHECK(m.dual().rows() == 2);
  CHECK_THROWS_AS(GradedMatrix::from_entries(R, {{0}}, {{1, 1}}, {x, x * y}),
                  DegreeError);
  CHECK_THROWS_AS(GradedMatrix::from_entries(R, {{0}}, {{1}}, {x, y}),
                  ShapeError);
  CHECK_THROWS_AS(compose(m, m), ShapeError);
}

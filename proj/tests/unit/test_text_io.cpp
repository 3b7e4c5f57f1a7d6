#include <doctest.h>

#include "../support/oracle.hpp"
#include "p4kit/errors.hpp"
#include "p4kit/monad_data.hpp"
#include "p4kit/text_io.hpp"

using namespace p4kit;

TEST_CASE("polynomials survive printing and parsing") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    RingPtr ring = make_ring(t % 2 ? 31991 : 101, 2 + t % 4);
    Polynomial f = oracle::random_poly(ring, static_cast<int>(rng.next() % 6), rng, 6);
    f = f.scaled(rng.element(ring->field));
    CHECK(parse_polynomial(ring, to_string(f)) == f);
  }
}

TEST_CASE("coefficients are reduced mod p and products expand") {
  RingPtr ring = make_ring();
  auto x = [&](int i) { return Polynomial::variable(ring, i); };
  CHECK(parse_polynomial(ring, "31992*x0") == x(0));
  CHECK(parse_polynomial(ring, "-x1 + x1") == Polynomial(ring));
  CHECK(parse_polynomial(ring, "(x0 + x1)^2") == x(0) * x(0) + x(0) * x(1).scaled(2) + x(1) * x(1));
  CHECK(parse_polynomial(ring, "x2*(x3 - x4)") == x(2) * x(3) - x(2) * x(4));
}

TEST_CASE("parse errors carry line and column") {
  RingPtr ring = make_ring();
  try {
    parse_ideal(ring, "x0\n# comment\nx1 + * x2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_polynomial(ring, "x7"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(ring, "x0^2 + x1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(ring, "x0^2 + x1"), UsageError);
  CHECK_THROWS_AS(parse_matrix(ring, "rows 0 cols 1\nx0, x1\n"), UsageError);
}

TEST_CASE("ideal and matrix files round trip") {
  RingPtr ring = make_ring();
  for (const GradedMatrix& m : {monad_f0(ring), monad_f2(ring), monad_phi(ring), monad_psi(ring)}) {
    GradedMatrix back = parse_matrix(ring, format_matrix(m));
    CHECK(back == m);
    CHECK(back.target() == m.target());
    CHECK(back.source() == m.source());
  }
  auto gens = monad_f0(ring).row(0);
  CHECK(parse_ideal(ring, format_ideal(gens)) == gens);
}

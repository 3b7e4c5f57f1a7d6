#include <doctest.h>

#include "../support/oracle.hpp"
#include "p4kit/errors.hpp"
#include "p4kit/groebner.hpp"
#include "p4kit/hilbert.hpp"
#include "p4kit/idealops.hpp"

using namespace p4kit;

namespace {

Polynomial var(const RingPtr& r, int i) { return Polynomial::variable(r, i); }

struct Fixture {
  const char* name;
  std::int64_t d, pi, chi, k2;
  std::vector<Polynomial> gens;
};

std::vector<Fixture> surface_fixtures(const RingPtr& r) {
  auto x = [&](int i) { return var(r, i); };
  Polynomial cubic = x(1) * x(1) * x(1) + x(2) * x(2) * x(2) + x(3) * x(3) * x(3) + x(4) * x(4) * x(4);
  Polynomial q1 = x(0) * x(0) + x(1) * x(2) + x(3) * x(4);
  Polynomial q2 = x(1) * x(1) - x(2) * x(3) + x(4) * x(0) + x(2) * x(2);
  return {
      {"plane", 1, 0, 1, 9, {x(0), x(1)}},
      {"quadric surface", 2, 0, 1, 8, {x(0), q1 - x(0) * x(0)}},
      {"cubic surface", 3, 1, 1, 3, {x(0), cubic}},
      {"quartic del Pezzo", 4, 1, 1, 4, {q1, q2}},
  };
}

}  // namespace

TEST_CASE("Hilbert function from the series matches brute-force counts") {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    RingPtr ring = make_ring(31991, 2 + t % 3);
    auto gens = oracle::random_ideal(ring, rng, 3, 3, 3);
    HilbertSeries hs = hilbert_series(buchberger(gens));
    for (int d = 0; d <= 7; ++d) {
      std::int64_t total = static_cast<std::int64_t>(oracle::MonomialBasis(ring->nvars, d).size());
      CHECK(hs.function(d) == total - static_cast<std::int64_t>(oracle::dim(gens, ring->nvars, d)));
    }
    // Beyond the regularity the polynomial and the function agree.
    CHECK(hs.function(40) == hs.polynomial(40));
  }
}

TEST_CASE("surface fixtures: degree, genus, chi and the numerical identities") {
  RingPtr ring = make_ring();
  for (const Fixture& f : surface_fixtures(ring)) {
    CAPTURE(f.name);
    Ideal sat = saturate(Ideal(ring, f.gens));
    HilbertSeries hs = sat.quotient_series();
    SurfaceNumbers n = surface_numbers(hs);
    CHECK(n.d == f.d);
    CHECK(n.pi == f.pi);
    CHECK(n.chi == f.chi);
    CHECK(k2_from_invariants(n.d, n.pi, n.chi) == f.k2);
    CHECK(double_point_residual(n.d, n.pi, n.chi, f.k2) == 0);
    // Riemann-Roch for I_X against binom(m+4,4) - P_X(m); these are regular
    // surfaces with p_g = 0.
    for (int m = -3; m <= 8; ++m) CHECK(rr_chi_ideal(m, n.d, n.pi, 0, 0) == binomial_poly(m + 4, 4) - hs.polynomial(m));
  }
}

TEST_CASE("invariant formulas of the elliptic surfaces and their link partners") {
  // (d, pi, chi) -> K^2 and the double point formula.
  CHECK(k2_from_invariants(12, 13, 3) == 0);
  CHECK(double_point_residual(12, 13, 3, 0) == 0);
  CHECK(k2_from_invariants(10, 10, 4) == 4);
  CHECK(double_point_residual(10, 10, 4, 4) == 0);
  CHECK(speciality_formula(12, 13, 1, 3) == 2);
  // Wrong self-intersections are detected.
  CHECK(double_point_residual(12, 13, 3, 1) != 0);
  CHECK(double_point_residual(10, 10, 4, 0) != 0);
}

TEST_CASE("curve numbers and genus addition") {
  RingPtr ring = make_ring();
  auto x = [&](int i) { return var(ring, i); };
  // Twisted cubic in the hyperplane x4 = 0.
  std::vector<Polynomial> cubic{x(4), x(0) * x(2) - x(1) * x(1), x(1) * x(3) - x(2) * x(2),
                                x(0) * x(3) - x(1) * x(2)};
  CurveNumbers c = curve_numbers(Ideal(ring, cubic).quotient_series());
  CHECK(c.degree == 3);
  CHECK(c.pa == 0);
  // Elliptic quartic: two quadrics in a hyperplane.
  std::vector<Polynomial> quartic{x(4), x(0) * x(1) - x(2) * x(3), x(0) * x(0) + x(1) * x(1) + x(2) * x(3) + x(3) * x(3)};
  CurveNumbers e = curve_numbers(Ideal(ring, quartic).quotient_series());
  CHECK(e.degree == 4);
  CHECK(e.pa == 1);
  // Two skew lines, and a line meeting a conic once.
  Ideal skew = intersect(Ideal(ring, {x(0), x(1), x(2)}), Ideal(ring, {x(2), x(3), x(4)}));
  CHECK(curve_numbers(skew.quotient_series()).pa == genus_addition(0, 0, 0));
  CHECK(genus_addition(0, 0, 0) == -1);
  CHECK(genus_addition(0, 0, 1) == 0);
  CHECK_THROWS_AS(surface_numbers(skew.quotient_series()), DimensionError);
}

TEST_CASE("binomial polynomial at negative arguments") {
  CHECK(binomial_poly(-1, 4) == 1);
  CHECK(binomial_poly(-2, 3) == -4);
  CHECK(binomial_poly(6, 4) == 15);
  CHECK(binomial_poly(3, 4) == 0);
}

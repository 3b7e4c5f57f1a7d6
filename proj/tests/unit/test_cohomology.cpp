#include <doctest.h>

#include "p4kit/cohomology.hpp"
#include "p4kit/construct.hpp"
#include "p4kit/hilbert.hpp"

using namespace p4kit;

namespace {

Polynomial var(const RingPtr& r, int i) { return Polynomial::variable(r, i); }

std::int64_t binom(std::int64_t n, int k) { return n < k ? 0 : binomial_poly(n, k); }

// Ranks of all multiplication maps; they do not depend on the chosen bases.
std::vector<std::size_t> mult_ranks(const PrimeField& f, const FinitePieces& p) {
  std::vector<std::size_t> out;
  for (const auto& [key, m] : p.mult) out.push_back(rank(f, m));
  return out;
}

}  // namespace

TEST_CASE("cohomology of O(d) on P4 is given by binomials") {
  RingPtr ring = make_ring();
  SheafCohomology sc(GradedModule::free(ring, {{0}}));
  for (int d = -9; d <= 5; ++d) {
    CAPTURE(d);
    CHECK(sc.h(0, d) == binom(d + 4, 4));
    CHECK(sc.h(1, d) == 0);
    CHECK(sc.h(2, d) == 0);
    CHECK(sc.h(3, d) == 0);
    CHECK(sc.h(4, d) == binom(-d - 1, 4));
  }
  CHECK(sc.h(0, 2) == 15);
  CHECK(sc.h(4, -7) == 15);
  for (int k = 1; k <= 5; ++k)
    for (int e = -6; e <= 6; ++e) CHECK(sc.ext_dim(k, e) == 0);
}

TEST_CASE("Ext^5 of the residue field is one-dimensional in degree 0") {
  RingPtr ring = make_ring();
  std::vector<Polynomial> vars;
  for (int i = 0; i < 5; ++i) vars.push_back(var(ring, i));
  SheafCohomology sc(GradedModule::quotient_ring(ring, vars));
  for (int k = 0; k <= 5; ++k)
    for (int e = -8; e <= 8; ++e) CHECK(sc.ext_dim(k, e) == (k == 5 && e == 0 ? 1 : 0));
  CHECK(hilbert_function(sc.ext_module(5), -2, 2) == std::vector<std::int64_t>{0, 0, 1, 0, 0});
}

TEST_CASE("a plane and a complete intersection are arithmetically Cohen-Macaulay") {
  RingPtr ring = make_ring();
  auto x = [&](int i) { return var(ring, i); };
  Ideal plane = saturate(Ideal(ring, {x(0), x(1)}));
  CohomologyTable t = cohomology_table(plane, -2, 5);
  for (int j = -2; j <= 5; ++j) {
    CHECK(t.at(1, j) == 0);
    CHECK(t.at(2, j) == 0);
    CHECK(t.at(3, j) == 0);
    CHECK(t.at(0, j) == binom(j + 4, 4) - binom(j + 2, 2));
  }
  Ideal ci = saturate(Ideal(ring, {x(0) * x(1) - x(2) * x(3), x(0) * x(0) + x(2) * x(4) + x(3) * x(3)}));
  SheafCohomology sc = SheafCohomology::of_ideal(ci);
  for (int i = 1; i <= 2; ++i) {
    FinitePieces p = sc.intermediate_pieces(i, -2, 6);
    for (int d = -2; d <= 6; ++d) CHECK(p.dim(d) == 0);
  }
}

TEST_CASE("two planes meeting in a point: duality routes agree") {
  RingPtr ring = make_ring();
  auto x = [&](int i) { return var(ring, i); };
  Ideal two = saturate(Ideal(ring, {x(0) * x(2), x(0) * x(3), x(1) * x(2), x(1) * x(3)}));
  SheafCohomology sc = SheafCohomology::of_ideal(two);
  for (int k = 0; k <= 5; ++k)
    for (int e = -6; e <= 6; ++e) CHECK(sc.ext_dim(k, e) == sc.ext_dim_by_kernels(k, e));
  // 0 -> O_X -> O_P + O_P' -> O_pt -> 0 gives h^1(O_X(d)) = 1 for d < 0
  // and 0 otherwise; this is h^2(I_X(d)).
  FinitePieces h2 = sc.intermediate_pieces(2, -3, 4);
  for (int d = -3; d <= 4; ++d) CHECK(h2.dim(d) == (d < 0 ? 1 : 0));
  for (int d = -3; d <= 4; ++d) CHECK(sc.h(1, d) == 0);
  for (int k = 1; k <= 4; ++k) {
    FinitePieces a = sc.ext_pieces(k, -6, 6), b = sc.ext_pieces_by_kernels(k, -6, 6);
    for (int e = -6; e <= 6; ++e) CHECK(a.dim(e) == b.dim(e));
    CHECK(mult_ranks(ring->field, a) == mult_ranks(ring->field, b));
  }
  // Euler characteristic columns.
  CohomologyTable t = cohomology_table(two, -1, 4);
  HilbertSeries hs = two.quotient_series();
  for (int j = -1; j <= 4; ++j) CHECK(t.euler(j) == binom(j + 4, 4) - hs.polynomial(j));
}

TEST_CASE("presenting a finite module from its pieces") {
  RingPtr ring = make_ring();
  GradedModule m = build_M(ring);
  FinitePieces p = module_pieces(m, -1, 4);
  GradedModule back = present_finite(ring, p);
  CHECK(hilbert_function(back, -1, 4) == hilbert_function(m, -1, 4));
  CHECK(betti_table(minimal_free_resolution(back)) == expected_betti_M());
  // The dual of the dual is the original.
  FinitePieces pp = p.dual().dual();
  CHECK(pp.dims == p.dims);
  CHECK(mult_ranks(ring->field, pp) == mult_ranks(ring->field, p));
}

TEST_CASE("Chern classes from Betti numbers") {
  // 0 -> O -> O(1)^5 -> T -> 0 gives c(T) = (1 + t)^5.
  BettiTable tangent;
  tangent.add(0, -1, 5);
  tangent.add(1, 0, 1);
  CHECK(chern_classes(tangent, 4) == std::vector<std::int64_t>{1, 5, 10, 10, 5});
  BettiTable line;
  line.add(0, -3, 1);
  CHECK(chern_classes(line, 2) == std::vector<std::int64_t>{1, 3, 0});
}

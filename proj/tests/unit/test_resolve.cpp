#include <doctest.h>

#include "p4kit/construct.hpp"
#include "p4kit/errors.hpp"
#include "p4kit/hilbert.hpp"
#include "p4kit/monad_data.hpp"
#include "p4kit/resolve.hpp"

using namespace p4kit;

namespace {

std::vector<Polynomial> variables(const RingPtr& ring) {
  std::vector<Polynomial> v;
  for (int i = 0; i < ring->nvars; ++i) v.push_back(Polynomial::variable(ring, i));
  return v;
}

// Hilbert function from the Betti numbers: sum (-1)^i b_ij dim S_{d-j}.
std::int64_t betti_hf(const BettiTable& t, int nvars, int d) {
  std::int64_t s = 0;
  for (const auto& [key, count] : t.entries()) {
    auto [step, twist] = key;
    std::int64_t free = static_cast<std::int64_t>(GradedFreeModule{{twist}}.dimension_in_degree(nvars, d));
    s += (step % 2 ? -1 : 1) * count * free;
  }
  return s;
}

void check_complex(const Resolution& r) {
  for (std::size_t k = 0; k + 1 < r.maps.size(); ++k) CHECK(compose(r.maps[k], r.maps[k + 1]).is_zero());
}

}  // namespace

TEST_CASE("Koszul relation of two variables") {
  RingPtr ring = make_ring(31991, 3);
  auto x = variables(ring);
  GradedMatrix a = GradedMatrix::from_entries(ring, {{0}}, {{1, 1}}, {x[0], x[1]});
  GradedMatrix s = minimal_generators(syzygies(a));
  REQUIRE(s.cols() == 1);
  CHECK(s.source().twists == std::vector<int>{2});
  CHECK(compose(a, s).is_zero());
  CHECK((s.at(0, 0) == x[1] || s.at(0, 0) == -x[1]));
}

TEST_CASE("Koszul complex on five variables") {
  RingPtr ring = make_ring();
  Resolution r = minimal_free_resolution(GradedModule::quotient_ring(ring, variables(ring)));
  BettiTable t = betti_table(r);
  const int binom[] = {1, 5, 10, 10, 5, 1};
  for (int i = 0; i <= 5; ++i) CHECK(t.at(i, i) == binom[i]);
  CHECK(t.length() == 5);
  check_complex(r);
  // syzygies of the first step: 10 columns in degree 2
  GradedMatrix s = minimal_generators(syzygies(r.maps[0]));
  CHECK(s.cols() == 10);
  for (int tw : s.source().twists) CHECK(tw == 2);
}

TEST_CASE("resolutions of M and N have the printed shape") {
  RingPtr ring = make_ring();
  MonadModules mods = build_monad_modules(ring);
  Resolution rm = minimal_free_resolution(mods.m);
  Resolution rn = minimal_free_resolution(mods.n);
  CHECK(betti_table(rm) == expected_betti_M());
  CHECK(betti_table(rn) == expected_betti_N());
  check_complex(rm);
  check_complex(rn);
  // The Betti numbers reproduce the monomial count of the Hilbert function.
  for (const auto& [mod, res] : {std::pair{mods.m, &rm}, std::pair{mods.n, &rn}}) {
    auto hf = hilbert_function(mod, 0, 12);
    BettiTable t = betti_table(*res);
    for (int d = 0; d <= 12; ++d) CHECK(hf[d] == betti_hf(t, 5, d));
  }
}

TEST_CASE("resolving a syzygy module gives the tail of the resolution") {
  RingPtr ring = make_ring();
  Resolution rm = minimal_free_resolution(GradedModule(monad_f0(ring)));
  BettiTable full = betti_table(rm);
  for (int k = 1; k <= 3; ++k) {
    // coker(maps[k]) is the k-th syzygy module; its resolution is the tail.
    Resolution tail = minimal_free_resolution(GradedModule(rm.maps[k]));
    BettiTable t = betti_table(tail);
    for (const auto& [key, count] : full.entries())
      if (key.first >= k) CHECK(t.at(key.first - k, key.second) == count);
    CHECK(t.length() == full.length() - k);
  }
}

TEST_CASE("betti_table rejects a non-minimal resolution") {
  RingPtr ring = make_ring(31991, 3);
  auto x = variables(ring);
  Resolution r;
  r.f0 = GradedFreeModule{{0}};
  r.maps.push_back(GradedMatrix::from_entries(ring, {{0}}, {{1, 1}}, {x[0], x[0]}));
  r.maps.push_back(GradedMatrix::from_entries(ring, {{1, 1}}, {{1}},
                                              {Polynomial::constant(ring, 1), -Polynomial::constant(ring, 1)}));
  r.minimal = false;
  CHECK_THROWS_AS(betti_table(r), UsageError);
}

TEST_CASE("alternating ranks of the bundles") {
  CHECK(expected_betti_K().alternating_rank() == 5);
  CHECK(expected_betti_E().alternating_rank() == 4);
  CHECK(expected_betti_IX().alternating_rank() == 1);
}

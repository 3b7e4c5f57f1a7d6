#include <doctest.h>

#include <algorithm>
#include <array>

#include "../support/oracle.hpp"
#include "p4kit/groebner.hpp"
#include "p4kit/idealops.hpp"

using namespace p4kit;

namespace {

constexpr int kTopDegree = 7;

RingPtr small_ring(Rng& rng) { return make_ring(31991, 2 + static_cast<int>(rng.next() % 2)); }

void check_dims(const Ideal& computed, const std::function<std::size_t(int)>& expected) {
  for (int d = 0; d <= kTopDegree; ++d)
    CHECK(computed.dim_in_degree(d) == static_cast<std::int64_t>(expected(d)));
}

}  // namespace

TEST_CASE("membership agrees with the Macaulay matrix oracle") {
  Rng rng(101);
  int instances = 0, members = 0;
  for (; instances < 60; ++instances) {
    RingPtr ring = small_ring(rng);
    auto gens = oracle::random_ideal(ring, rng, 3, 3, 3);
    Ideal ideal(ring, gens);
    for (int t = 0; t < 6; ++t) {
      int d = 1 + static_cast<int>(rng.next() % 5);
      Polynomial f = oracle::random_poly(ring, d, rng, 4);
      if (t % 2 == 0) {
        // Mostly inside: a combination of multiples of generators.
        f = Polynomial(ring);
        for (const Polynomial& g : gens)
          if (*g.degree() <= d) f += g * oracle::random_poly(ring, d - *g.degree(), rng, 3);
        if (f.is_zero()) continue;
      }
      bool expected = oracle::member(gens, f);
      members += expected;
      CHECK(ideal.contains(f) == expected);
    }
    check_dims(ideal, [&](int d) { return oracle::dim(gens, ring->nvars, d); });
  }
  CHECK(members > 0);
}

TEST_CASE("intersection agrees with the oracle") {
  Rng rng(202);
  for (int instance = 0; instance < 50; ++instance) {
    RingPtr ring = small_ring(rng);
    auto a = oracle::random_ideal(ring, rng, 3, 3, 3);
    auto b = oracle::random_ideal(ring, rng, 3, 3, 3);
    Ideal c = intersect(Ideal(ring, a), Ideal(ring, b));
    check_dims(c, [&](int d) { return oracle::dim_intersection(a, b, ring->nvars, d); });
  }
}

TEST_CASE("quotient agrees with the oracle") {
  Rng rng(303);
  int proper = 0;
  for (int instance = 0; instance < 50; ++instance) {
    RingPtr ring = small_ring(rng);
    auto a = oracle::random_ideal(ring, rng, 3, 3, 3);
    auto b = oracle::random_ideal(ring, rng, 2, 2, 3);
    Ideal q = quotient(Ideal(ring, a), Ideal(ring, b));
    check_dims(q, [&](int d) { return oracle::dim_quotient(a, b, ring->nvars, d); });
    for (int d = 0; d <= kTopDegree; ++d)
      if (oracle::dim_quotient(a, b, ring->nvars, d) > oracle::dim(a, ring->nvars, d)) {
        ++proper;
        break;
      }
    // (I : J) J is inside I.
    for (const Polynomial& f : q.generators())
      for (const Polynomial& g : b) CHECK(oracle::member(a, f * g));
  }
  CHECK(proper >= 10);
}

TEST_CASE("saturation agrees with the oracle") {
  Rng rng(404);
  int nontrivial = 0;
  for (int instance = 0; instance < 50; ++instance) {
    RingPtr ring = small_ring(rng);
    auto a = oracle::random_ideal(ring, rng, 3, 3, 3);
    if (instance % 3 == 0) {
      // Force an irrelevant component: multiply by a power of the maximal ideal.
      std::vector<Polynomial> embedded;
      for (const Polynomial& f : a)
        for (int v = 0; v < ring->nvars; ++v) embedded.push_back(f * Polynomial::variable(ring, v));
      a = embedded;
    }
    Ideal s = saturate(Ideal(ring, a));
    const int n = ring->nvars;
    bool grew = false;
    for (int d = 0; d <= 5; ++d) {
      std::size_t k10 = oracle::dim_saturation(a, n, d, 10);
      REQUIRE(k10 == oracle::dim_saturation(a, n, d, 14));  // oracle is stable
      CHECK(s.dim_in_degree(d) == static_cast<std::int64_t>(k10));
      grew = grew || k10 > oracle::dim(a, n, d);
    }
    nontrivial += grew;
  }
  CHECK(nontrivial >= 10);
}

TEST_CASE("grevlex is multiplicative and refines degree") {
  Rng rng(505);
  auto random_monomial = [&](int n) {
    std::array<int, 5> e{};
    for (int i = 0; i < n; ++i) e[i] = static_cast<int>(rng.next() % 5);
    return Monomial::from_exponents(std::span<const int>(e.data(), n));
  };
  for (int t = 0; t < 2000; ++t) {
    const int n = 1 + static_cast<int>(rng.next() % 5);
    Monomial a = random_monomial(n), b = random_monomial(n), m = random_monomial(n);
    if (a == b) {
      CHECK(!(a < b));
      CHECK(a * m == b * m);
      continue;
    }
    CHECK((a < b) != (b < a));
    if (a.degree() != b.degree()) CHECK((a < b) == (a.degree() < b.degree()));
    if (a < b) CHECK(a * m < b * m);
    if (b < a) CHECK(b * m < a * m);
  }
}

TEST_CASE("reduced bases do not depend on generator order or scaling") {
  Rng rng(606);
  int shuffles = 0;
  for (int instance = 0; instance < 120; ++instance) {
    RingPtr ring = small_ring(rng);
    auto gens = oracle::random_ideal(ring, rng, 4, 3, 3);
    GroebnerBasis reference = buchberger(gens);
    auto ref = std::vector<SVec>(reference.elements().begin(), reference.elements().end());
    // Idempotence: the basis of a basis is itself.
    GroebnerBasis again = buchberger(reference.polynomials());
    CHECK(std::equal(ref.begin(), ref.end(), again.elements().begin(), again.elements().end()));
    for (int s = 0; s < 9; ++s, ++shuffles) {
      auto permuted = gens;
      for (std::size_t i = permuted.size(); i > 1; --i)
        std::swap(permuted[i - 1], permuted[rng.next() % i]);
      for (auto& f : permuted) f = f.scaled(rng.nonzero(ring->field));
      // A redundant combination must not change the result either.
      if (s % 3 == 0 && permuted.size() > 1 && permuted[0].degree() == permuted[1].degree())
        permuted.push_back(permuted[0] + permuted[1]);
      GroebnerBasis gb = buchberger(permuted);
      CHECK(std::equal(ref.begin(), ref.end(), gb.elements().begin(), gb.elements().end()));
      for (int d = 0; d <= 6; ++d) CHECK(gb.standard_count(d) == reference.standard_count(d));
    }
  }
  CHECK(shuffles >= 1000);
}

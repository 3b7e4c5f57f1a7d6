#include <doctest.h>

#include "p4kit/errors.hpp"
#include "p4kit/groebner.hpp"

using namespace p4kit;

TEST_CASE("basis of a two-generator ideal contains the cubic") {
  auto R = make_ring(31991, 3);
  auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  auto gb = buchberger({x * x, x * y + y * y});
  CHECK(gb.contains(y * y * y));
  CHECK_FALSE(gb.contains(y * y));
  CHECK(gb.size() == 3);
  CHECK(gb.normal_form(x * y).size() == 1);
  CHECK(gb.normal_form(x * y) == -(y * y));
}

TEST_CASE("inhomogeneous input is a usage error") {
  auto R = make_ring(31991, 3);
  SVec bad{{Monomial::variable(0), 0, 1}, {Monomial::variable(1, 2), 0, 1}};
  ModuleOrder o = ModuleOrder::position({{0}});
  CHECK_THROWS_AS(run_groebner(R->field, o, {bad}), UsageError);
}

TEST_CASE("twisted cubic has the expected reduced basis") {
  auto R = make_ring(31991, 4);
  auto v = [&](int i) { return Polynomial::variable(R, i); };
  std::vector<Polynomial> f{v(0) * v(2) - v(1) * v(1), v(1) * v(3) - v(2) * v(2),
                            v(0) * v(3) - v(1) * v(2)};
  auto gb = buchberger(f);
  CHECK(gb.size() == 3);
  for (int d = 0; d < 8; ++d) CHECK(gb.standard_count(d) == std::uint64_t(3 * d + 1));
  auto mins = minimal_generators(std::vector<Polynomial>{f[0], f[1], f[0] * v(0), f[2]});
  CHECK(mins.size() == 3);
}

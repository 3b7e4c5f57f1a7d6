#include "p4kit/monad_data.hpp"

#include "p4kit/errors.hpp"
#include "p4kit/text_io.hpp"

namespace p4kit {

namespace {

void require_p4(const RingPtr& ring) {
  if (ring->nvars != 5) throw UsageError("the monad data lives in 5 variables");
}

constexpr const char* kF2 = R"(rows 2 2 2 3 3 3 3 3 3 4 cols 3 4 4 4 4 4 4 5 5 5
x2,  x3^2, 0,     0,     x4^2, 0,     0,     0,     0,     0
-x1, 0,    x3^2,  0,     0,    x4^2,  0,     0,     0,     0
x0,  0,    0,     x3^2,  0,    0,     x4^2,  0,     0,     0
0,   -x1,  -x2,   0,     0,    0,     0,     x4^2,  0,     0
0,   x0,   0,     -x2,   0,    0,     0,     0,     x4^2,  0
0,   0,    x0,    x1,    0,    0,     0,     0,     0,     x4^2
0,   0,    0,     0,     -x1,  -x2,   0,     -x3^2, 0,     0
0,   0,    0,     0,     x0,   0,     -x2,   0,     -x3^2, 0
0,   0,    0,     0,     0,    x0,    x1,    0,     0,     -x3^2
0,   0,    0,     0,     0,    0,     0,     x0,    x1,    x2
)";

}  // namespace

GradedMatrix monad_f0(const RingPtr& ring) {
  require_p4(ring);
  return parse_matrix(ring, "rows 0 cols 1 1 1 2 2\nx0, x1, x2, x3^2, x4^2\n");
}

GradedMatrix monad_f2(const RingPtr& ring) {
  require_p4(ring);
  return parse_matrix(ring, kF2);
}

GradedMatrix monad_phi(const RingPtr& ring) {
  require_p4(ring);
  return parse_matrix(ring,
                      "rows 2 cols 2 2 2 3 3 3 3 3 3 4\n"
                      "1, 0, 0, 0, 0, -x0, 0, 0, x1, 0\n");
}

GradedMatrix monad_psi(const RingPtr& ring) {
  require_p4(ring);
  return parse_matrix(ring,
                      "rows 3 4 4 4 4 4 4 5 5 5 cols 4\n"
                      "0\n0\n0\n1\n0\n1\n0\n0\n0\n0\n");
}

GradedMatrix monad_psi_prime(const RingPtr& ring) {
  require_p4(ring);
  return parse_matrix(ring,
                      "rows 3 4 4 4 4 4 4 5 5 5 cols 5\n"
                      "0\nx1\n0\n0\nx0\n0\n0\n0\n0\n1\n");
}

}  // namespace p4kit

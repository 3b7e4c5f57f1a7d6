#pragma once

#include "p4kit/matrix.hpp"

namespace p4kit {

// Fixed matrices of the monad construction, over a ring with 5 variables.

// (x0, x1, x2, x3^2, x4^2) : S(-1)^3 + S(-2)^2 -> S.
GradedMatrix monad_f0(const RingPtr& ring);
// Second syzygy matrix of coker f0: F3 -> F2 with
// F2 = 3S(-2) + 6S(-3) + S(-4), F3 = S(-3) + 6S(-4) + 3S(-5).
GradedMatrix monad_f2(const RingPtr& ring);
// Row F2 -> S(-2) selecting the module N.
GradedMatrix monad_phi(const RingPtr& ring);
// Columns S(-4) -> F3 and S(-5) -> F3 giving the sections used for E and F.
GradedMatrix monad_psi(const RingPtr& ring);
GradedMatrix monad_psi_prime(const RingPtr& ring);

}  // namespace p4kit

#pragma once

#include <cstdint>
#include <vector>

#include "p4kit/groebner.hpp"

namespace p4kit {

// Hilbert series Q(t) / (1 - t)^n of a graded module, with Q stored as a
// Laurent polynomial: numerator[k] is the coefficient of t^(low + k).
struct HilbertSeries {
  int nvars = 0;
  int low = 0;
  std::vector<std::int64_t> numerator;

  bool is_zero() const;
  // Krull dimension (projective dimension + 1); 0 for finite length, -1 for
  // the zero module.
  int dimension() const;
  // Multiplicity: the reduced numerator evaluated at t = 1.
  std::int64_t degree() const;
  // Value of the Hilbert polynomial at m.
  std::int64_t polynomial(int m) const;
  // Value of the Hilbert function at m, by expanding the series.
  std::int64_t function(int m) const;
};

// Series of ambient / submodule for a complete Groebner basis. Throws
// UsageError for a truncated basis.
HilbertSeries hilbert_series(const GroebnerBasis& g);
HilbertSeries hilbert_series(const GradedModule& m);

// Dimensions of the graded pieces of a module in degrees from..to.
std::vector<std::int64_t> hilbert_function(const GradedModule& m, int from, int to);

// Numerator of S/(monomials), as coefficients of t^0, t^1, ...
std::vector<std::int64_t> monomial_numerator(std::vector<Monomial> gens);

struct SurfaceNumbers {
  std::int64_t d;
  std::int64_t pi;
  std::int64_t chi;
};

struct CurveNumbers {
  std::int64_t degree;
  std::int64_t pa;
};

// From the Hilbert polynomial of S/I for a surface (resp. curve) in P^4,
// with chi(O_X(m)) = (d/2) m^2 + (d/2 - pi + 1) m + chi. Throws
// DimensionError when the scheme has the wrong dimension.
SurfaceNumbers surface_numbers(const HilbertSeries& quotient);
CurveNumbers curve_numbers(const HilbertSeries& quotient);

// K^2 = (d^2 - 5d - 10 pi + 12 chi + 10) / 2; throws UsageError when the
// numerator is odd (inconsistent invariants).
std::int64_t k2_from_invariants(std::int64_t d, std::int64_t pi, std::int64_t chi);
// d^2 - 10d - 5 HK - 2K^2 + 12 chi with HK = 2 pi - 2 - d; zero for a smooth
// surface in P^4.
std::int64_t double_point_residual(std::int64_t d, std::int64_t pi,
                                   std::int64_t chi, std::int64_t k2);
// Arithmetic genus of the union of two curves meeting in c_dot_d points.
std::int64_t genus_addition(std::int64_t pc, std::int64_t pd, std::int64_t c_dot_d);
// chi(I_X(m)) for a surface with the given invariants.
std::int64_t rr_chi_ideal(std::int64_t m, std::int64_t d, std::int64_t pi,
                          std::int64_t q, std::int64_t pg);
// Speciality from pi - d + 3 + q - p_g.
std::int64_t speciality_formula(std::int64_t d, std::int64_t pi, std::int64_t q,
                                std::int64_t pg);

// binom(x, k) as a polynomial in x, valid for negative x.
std::int64_t binomial_poly(std::int64_t x, int k);

}  // namespace p4kit

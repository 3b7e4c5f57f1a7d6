#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace p4kit {

// Exponent vector packed into one 64-bit word: byte i (i < 7) holds the
// exponent of x_i, byte 7 the total degree. Exponents and degree stay below
// 128 so divisibility can be tested with a single subtraction.
//
// Graded reverse lexicographic order with x0 > x1 > ... : for equal degrees
// the monomial with the smaller exponent in the last differing variable is
// larger. With the packing above that is exactly "smaller low 56 bits", so
// flipping those bits yields an integer key that sorts in grevlex order.
class Monomial {
 public:
  static constexpr int kMaxVars = 7;
  static constexpr int kMaxDegree = 127;

  constexpr Monomial() = default;

  // Throws UsageError if there are too many variables, a negative exponent
  // or the degree exceeds kMaxDegree.
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(int index, int power = 1);
  static constexpr Monomial from_bits(std::uint64_t bits) {
    Monomial m;
    m.bits_ = bits;
    return m;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int degree() const { return static_cast<int>(bits_ >> 56); }
  constexpr int exponent(int var) const {
    return static_cast<int>((bits_ >> (8 * var)) & 0xFF);
  }
  std::vector<int> exponents(int nvars) const;

  constexpr bool divides(Monomial other) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    return (((other.bits_ | kHigh) - bits_) & kHigh) == kHigh;
  }
  // Product; throws DegreeError if the degree would exceed kMaxDegree.
  Monomial operator*(Monomial other) const;
  // Exact quotient; requires divisor.divides(*this).
  constexpr Monomial operator/(Monomial divisor) const {
    return from_bits(bits_ - divisor.bits_);
  }
  Monomial lcm(Monomial other) const;
  Monomial gcd(Monomial other) const;
  bool coprime(Monomial other) const { return gcd(other).degree() == 0; }

  // Larger key == larger in grevlex.
  constexpr std::uint64_t grevlex_key() const {
    return bits_ ^ 0x00FFFFFFFFFFFFFFULL;
  }

  friend constexpr bool operator==(Monomial a, Monomial b) {
    return a.bits_ == b.bits_;
  }
  // Grevlex comparison.
  friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
    return a.grevlex_key() <=> b.grevlex_key();
  }

 private:
  std::uint64_t bits_ = 0;
};

// Grevlex comparison on explicit exponent vectors; throws UsageError on
// length mismatch. Returns -1, 0 or 1.
int compare_grevlex(std::span<const int> a, std::span<const int> b);

// All monomials of the given degree in nvars variables, in decreasing
// grevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

// binom(degree + nvars - 1, nvars - 1), zero for negative degrees.
std::uint64_t count_monomials(int nvars, int degree);

std::uint64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace p4kit

template <>
struct std::hash<p4kit::Monomial> {
  std::size_t operator()(p4kit::Monomial m) const noexcept {
    std::uint64_t x = m.bits() * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

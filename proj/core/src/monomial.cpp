#include "p4kit/monomial.hpp"

#include <algorithm>
#include <string>

#include "p4kit/errors.hpp"

namespace p4kit {

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw UsageError("at most " + std::to_string(kMaxVars) +
                     " variables are supported");
  std::uint64_t bits = 0;
  int degree = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw UsageError("negative exponent");
    degree += exponents[i];
    if (degree > kMaxDegree) throw DegreeError("monomial degree too large");
    bits |= static_cast<std::uint64_t>(exponents[i]) << (8 * i);
  }
  bits |= static_cast<std::uint64_t>(degree) << 56;
  return from_bits(bits);
}

Monomial Monomial::variable(int index, int power) {
  if (index < 0 || index >= kMaxVars) throw UsageError("variable out of range");
  if (power < 0 || power > kMaxDegree) throw DegreeError("bad power");
  return from_bits((static_cast<std::uint64_t>(power) << (8 * index)) |
                   (static_cast<std::uint64_t>(power) << 56));
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> e(nvars);
  for (int i = 0; i < nvars; ++i) e[i] = exponent(i);
  return e;
}

Monomial Monomial::operator*(Monomial other) const {
  if (degree() + other.degree() > kMaxDegree)
    throw DegreeError("monomial degree overflow");
  return from_bits(bits_ + other.bits_);
}

Monomial Monomial::lcm(Monomial other) const {
  std::uint64_t bits = 0;
  int degree = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = std::max(exponent(i), other.exponent(i));
    degree += e;
    bits |= static_cast<std::uint64_t>(e) << (8 * i);
  }
  if (degree > kMaxDegree) throw DegreeError("monomial degree overflow");
  return from_bits(bits | static_cast<std::uint64_t>(degree) << 56);
}

Monomial Monomial::gcd(Monomial other) const {
  std::uint64_t bits = 0;
  int degree = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = std::min(exponent(i), other.exponent(i));
    degree += e;
    bits |= static_cast<std::uint64_t>(e) << (8 * i);
  }
  return from_bits(bits | static_cast<std::uint64_t>(degree) << 56);
}

int compare_grevlex(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size())
    throw UsageError("grevlex comparison of monomials in different rings");
  auto cmp = Monomial::from_exponents(a) <=> Monomial::from_exponents(b);
  return cmp < 0 ? -1 : (cmp > 0 ? 1 : 0);
}

namespace {

void enumerate(int var, int nvars, int remaining, std::vector<int>& exps,
               std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    exps[var] = remaining;
    out.push_back(Monomial::from_exponents(exps));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    enumerate(var + 1, nvars, remaining - e, exps, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars <= 0) return out;
  std::vector<int> exps(nvars, 0);
  out.reserve(count_monomials(nvars, degree));
  enumerate(0, nvars, degree, exps, out);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t count_monomials(int nvars, int degree) {
  if (degree < 0) return 0;
  return binomial(degree + nvars - 1, nvars - 1);
}

}  // namespace p4kit

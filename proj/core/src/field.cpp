#include "p4kit/field.hpp"

#include <string>

#include "p4kit/errors.hpp"

namespace p4kit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw UsageError("characteristic " + std::to_string(p) +
                     " is not a prime below 2^31");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw UsageError("division by zero in prime field");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::int64_t PrimeField::to_signed(std::uint32_t a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_
                    : static_cast<std::int64_t>(a);
}

}  // namespace p4kit

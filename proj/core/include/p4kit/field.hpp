#pragma once

#include <cstdint>

namespace p4kit {

// Arithmetic in Z/p for a prime p < 2^31. Elements are canonical
// representatives in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 31991;

  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  // Throws UsageError for a == 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  // Reduces an arbitrary signed integer into [0, p).
  std::uint32_t from_int(std::int64_t v) const;
  // Symmetric lift into (-p/2, p/2], used for printing.
  std::int64_t to_signed(std::uint32_t a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace p4kit

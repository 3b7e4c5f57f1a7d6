#pragma once

#include <cstdint>
#include <random>

#include "p4kit/field.hpp"

namespace p4kit {

// Seeded source of "general" choices. Reduction by % keeps the stream
// identical across standard libraries, unlike the distribution classes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint32_t element(const PrimeField& field) {
    return static_cast<std::uint32_t>(engine_() % field.characteristic());
  }
  std::uint32_t nonzero(const PrimeField& field) {
    return static_cast<std::uint32_t>(1 + engine_() % (field.characteristic() - 1));
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace p4kit

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "p4kit/field.hpp"
#include "p4kit/monomial.hpp"

namespace p4kit {

// The polynomial ring F_p[x0, ..., x_{n-1}] with grevlex order.
struct Ring {
  PrimeField field;
  int nvars;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field == b.field && a.nvars == b.nvars;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

// Throws UsageError for a non-prime p or an unsupported variable count.
RingPtr make_ring(std::uint32_t p = PrimeField::kDefaultCharacteristic,
                  int nvars = 5);

struct Term {
  Monomial mono;
  std::uint32_t coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse homogeneous polynomial. Terms are kept sorted by decreasing grevlex
// order with no zero coefficients; all terms share one total degree.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  // Collects like terms and sorts. Throws DegreeError if the surviving terms
  // have different degrees.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial monomial(RingPtr ring, Monomial m, std::uint32_t c = 1);

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; nullopt for the zero polynomial.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().mono.degree();
  }
  const Term& leading_term() const { return terms_.front(); }
  // Coefficient of m, zero if absent.
  std::uint32_t coefficient(Monomial m) const;

  Polynomial operator-() const;
  Polynomial scaled(std::uint32_t c) const;
  Polynomial times(Monomial m) const;
  Polynomial derivative(int var) const;
  // Divides every coefficient by the leading one.
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& other) {
    return *this = *this + other;
  }
  Polynomial& operator-=(const Polynomial& other) {
    return *this = *this - other;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Throws UsageError if the polynomials live in different rings.
void require_same_ring(const Ring& a, const Ring& b);

// f(images[0], ..., images[n-1]). The images share a ring and a degree.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

}  // namespace p4kit

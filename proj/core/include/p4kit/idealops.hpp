#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "p4kit/groebner.hpp"
#include "p4kit/hilbert.hpp"
#include "p4kit/rng.hpp"

namespace p4kit {

// Homogeneous ideal with a lazily computed, shared Groebner basis.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators, bool saturated = false);
  explicit Ideal(std::vector<Polynomial> generators, bool saturated = false);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  // True only when produced by saturate() (or asserted by the caller).
  bool is_saturated() const { return saturated_; }

  const GroebnerBasis& gb() const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;
  bool is_unit() const;

  // dim_k (I)_m, and an echelon basis of it.
  std::int64_t dim_in_degree(int m) const;
  std::vector<Polynomial> basis_in_degree(int m) const;
  // Hilbert series of S/I.
  HilbertSeries quotient_series() const;
  std::vector<Polynomial> minimal_generators() const;

  Ideal with_saturated(bool flag) const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> gb;
  };
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  bool saturated_;
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal quotient(const Ideal& a, const Ideal& b);
// The irrelevant ideal (x0, ..., x_{n-1}).
Ideal irrelevant_ideal(const RingPtr& ring);
// I : m^infinity by iterated quotients.
Ideal saturate(const Ideal& a);

// Uniformly random combination of the echelon basis of I_m. Throws
// UsageError when the piece is zero.
Polynomial random_element(const Ideal& a, int degree, Rng& rng);
Polynomial random_form(const RingPtr& ring, int degree, Rng& rng);

struct EmbeddedIdeal {
  Ideal ideal;
  // The module is isomorphic to ideal(twist) in large degrees.
  int twist;
};

// Embeds a torsion-free rank-one module as an ideal of a codimension >= 2
// scheme using a minimal generator of Hom(C, S), then saturates. Throws
// UsageError if the rank is not one and DegeneracyError if Hom(C, S) is not
// generated by one element.
EmbeddedIdeal module_to_ideal(const GradedModule& c, std::uint64_t seed = 1);

enum class Verdict { kSmooth, kSingular, kIndeterminate };
std::string to_string(Verdict v);

struct SmoothnessCertificate {
  Verdict verdict = Verdict::kIndeterminate;
  std::uint32_t characteristic = 0;
  // Generators of I + (minors) actually used for the verdict.
  std::vector<Polynomial> singular_ideal;
  // Saturation of the singular ideal when the verdict is singular.
  std::optional<Ideal> singular_locus;
  // Degree D with (S/J)_D = 0, certifying that J is m-primary.
  std::optional<int> vanishing_degree;
  bool used_all_minors = false;
  std::string note;
};

// Jacobian criterion for a scheme of the given codimension. The singular
// ideal is I plus the codim x codim minors of the Jacobian of the minimal
// generators. Random combinations of the minors are tried first; a smooth
// verdict from them is sound because they generate a subideal. Throws
// DimensionError if V(I) does not have the expected codimension.
SmoothnessCertificate smoothness_certificate(const Ideal& ideal, int codim,
                                             std::uint64_t seed = 1);

// Generic rank of a matrix, by evaluation at a random point.
std::size_t generic_rank(const GradedMatrix& m, Rng& rng);

}  // namespace p4kit

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "p4kit/polynomial.hpp"

namespace p4kit {

// S(-d_1) + ... + S(-d_r), recorded by its twist list (d_1, ..., d_r).
struct GradedFreeModule {
  std::vector<int> twists;

  std::size_t rank() const { return twists.size(); }
  // Dimension of the degree-m piece in a ring with nvars variables.
  std::uint64_t dimension_in_degree(int nvars, int m) const;
  GradedFreeModule shifted(int k) const;  // twists + k, i.e. F(-k)
  GradedFreeModule dual() const;          // twists negated
  GradedFreeModule operator+(const GradedFreeModule& other) const;

  friend bool operator==(const GradedFreeModule&,
                         const GradedFreeModule&) = default;
};

// Degree-preserving map source -> target between graded free modules.
// Column j is the image of the j-th basis vector of the source; entry (i, j)
// is zero or homogeneous of degree source.twists[j] - target.twists[i].
class GradedMatrix {
 public:
  GradedMatrix(RingPtr ring, GradedFreeModule target, GradedFreeModule source);

  // Row-major entries; throws ShapeError on a size mismatch and DegreeError
  // on an entry of the wrong degree.
  static GradedMatrix from_entries(RingPtr ring, GradedFreeModule target,
                                   GradedFreeModule source,
                                   std::vector<Polynomial> entries);
  // Builds the matrix from columns, taking each source twist from the
  // degree of its column (columns must be nonzero and homogeneous).
  static GradedMatrix from_columns(
      RingPtr ring, GradedFreeModule target,
      const std::vector<std::vector<Polynomial>>& columns);
  static GradedMatrix identity(RingPtr ring, const GradedFreeModule& module);

  const RingPtr& ring() const { return ring_; }
  const GradedFreeModule& target() const { return target_; }
  const GradedFreeModule& source() const { return source_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }

  const Polynomial& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols() + j];
  }
  void set(std::size_t i, std::size_t j, Polynomial p);
  std::vector<Polynomial> column(std::size_t j) const;
  std::vector<Polynomial> row(std::size_t i) const;
  bool is_zero() const;
  // True if some entry is a nonzero constant.
  bool has_unit_entry() const;

  // Hom(-, S): transpose with negated twists.
  GradedMatrix dual() const;
  GradedMatrix select_columns(std::span<const std::size_t> cols) const;
  GradedMatrix select_rows(std::span<const std::size_t> rows) const;
  // [this | other]; targets must agree.
  GradedMatrix concat_columns(const GradedMatrix& other) const;
  // Direct sum of the sources and targets.
  GradedMatrix direct_sum(const GradedMatrix& other) const;
  // Shifts both source and target twists by k.
  GradedMatrix shifted(int k) const;

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b);

 private:
  RingPtr ring_;
  GradedFreeModule target_;
  GradedFreeModule source_;
  std::vector<Polynomial> entries_;
};

// this ∘ other: requires a.source() == b.target(); throws ShapeError.
GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b);

// Degree of a homogeneous module element given as a column of polynomials
// over a free module; nullopt for zero. Throws DegreeError when the nonzero
// entries disagree.
std::optional<int> column_degree(const GradedFreeModule& module,
                                 std::span<const Polynomial> column);

// A finitely presented graded module: the cokernel of its presentation.
class GradedModule {
 public:
  explicit GradedModule(GradedMatrix presentation)
      : presentation_(std::move(presentation)) {}
  // The free module itself (empty presentation).
  static GradedModule free(RingPtr ring, GradedFreeModule generators);
  // S/I with I generated by the given forms.
  static GradedModule quotient_ring(RingPtr ring,
                                    const std::vector<Polynomial>& ideal);

  const GradedMatrix& presentation() const { return presentation_; }
  const GradedFreeModule& generators() const {
    return presentation_.target();
  }
  const RingPtr& ring() const { return presentation_.ring(); }
  GradedModule shifted(int k) const {
    return GradedModule(presentation_.shifted(k));
  }

 private:
  GradedMatrix presentation_;
};

}  // namespace p4kit

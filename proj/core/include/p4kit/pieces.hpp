#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "p4kit/linalg.hpp"
#include "p4kit/matrix.hpp"

namespace p4kit {

// Monomial basis of the degree-e piece of a graded free module, ordered by
// component and then by decreasing grevlex.
class PieceBasis {
 public:
  PieceBasis(int nvars, const GradedFreeModule& module, int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return terms_.size(); }
  const std::pair<Monomial, std::uint32_t>& term(std::size_t k) const {
    return terms_[k];
  }
  // Index of a term; throws UsageError if it is not in the piece.
  std::size_t index(Monomial m, std::uint32_t comp) const;

  Vec to_vector(const PrimeField& field,
                std::span<const Polynomial> column) const;
  std::vector<Polynomial> to_column(const RingPtr& ring, std::size_t rank,
                                    const Vec& v) const;

 private:
  int degree_;
  std::vector<std::pair<Monomial, std::uint32_t>> terms_;
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> by_comp_;
};

// The linear map a_e : source_e -> target_e, rows indexed by the target
// piece and columns by the source piece.
DenseMatrix piece_matrix(const GradedMatrix& a, int e);
DenseMatrix piece_matrix(const GradedMatrix& a, const PieceBasis& source,
                         const PieceBasis& target);

// Spanning vectors of the degree-e piece of the submodule generated by the
// columns of `gens` (in coordinates of the target piece).
std::vector<Vec> image_piece(const GradedMatrix& gens, const PieceBasis& target);

}  // namespace p4kit

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "p4kit/field.hpp"

namespace p4kit {

using Vec = std::vector<std::uint32_t>;

// Dense row-major matrix over F_p. Used for graded pieces and oracles, where
// sizes stay in the low thousands.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<std::uint32_t> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const std::uint32_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  void append_row(std::span<const std::uint32_t> r);
  DenseMatrix transposed() const;

  // In-place reduced row echelon form; returns the pivot columns. Zero rows
  // are dropped.
  std::vector<std::size_t> rref(const PrimeField& field);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

std::size_t rank(const PrimeField& field, DenseMatrix m);

// Basis of {v : m v = 0}.
std::vector<Vec> kernel(const PrimeField& field, const DenseMatrix& m);

// A subspace of F_p^n kept in reduced echelon form.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Reduces v against the basis (in place).
  void reduce(const PrimeField& field, Vec& v) const;
  // Adds v; returns false if it was already contained.
  bool insert(const PrimeField& field, Vec v);
  bool contains(const PrimeField& field, Vec v) const;

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Quotient Z/B of two nested subspaces with fixed coordinates.
class QuotientSpace {
 public:
  QuotientSpace(const PrimeField& field, std::size_t ambient,
                const std::vector<Vec>& z, const std::vector<Vec>& b);

  std::size_t dimension() const { return complement_.dimension(); }
  // Representatives of a basis of Z/B.
  const std::vector<Vec>& representatives() const {
    return complement_.basis();
  }
  // Coordinates of a vector of Z in the basis of Z/B; throws UsageError if
  // v is not in Z.
  Vec coordinates(Vec v) const;

 private:
  const PrimeField* field_;
  Subspace sub_;
  Subspace complement_;
};

}  // namespace p4kit

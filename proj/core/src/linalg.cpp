#include "p4kit/linalg.hpp"

#include <algorithm>

#include "p4kit/errors.hpp"

namespace p4kit {

void DenseMatrix::append_row(std::span<const std::uint32_t> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw ShapeError("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {

// row_a -= f * row_b over the given column range.
void axpy(const PrimeField& field, std::uint32_t* a, const std::uint32_t* b,
          std::uint32_t f, std::size_t from, std::size_t to) {
  const std::uint64_t p = field.characteristic();
  const std::uint64_t nf = p - f;
  for (std::size_t j = from; j < to; ++j)
    if (b[j]) a[j] = static_cast<std::uint32_t>((a[j] + nf * b[j]) % p);
}

}  // namespace

std::vector<std::size_t> DenseMatrix::rref(const PrimeField& field) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && at(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      std::swap_ranges(row(sel).begin(), row(sel).end(), row(r).begin());
    std::uint32_t inv = field.inv(at(r, c));
    for (std::size_t j = c; j < cols_; ++j) at(r, j) = field.mul(at(r, j), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      axpy(field, &at(i, 0), &at(r, 0), at(i, c), c, cols_);
    }
    pivots.push_back(c);
    ++r;
  }
  data_.resize(r * cols_);
  rows_ = r;
  return pivots;
}

std::size_t rank(const PrimeField& field, DenseMatrix m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) m = m.transposed();
  return m.rref(field).size();
}

std::vector<Vec> kernel(const PrimeField& field, const DenseMatrix& m) {
  const std::size_t n = m.cols();
  DenseMatrix r = m;
  auto pivots = r.rref(field);
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = field.neg(r.at(k, f));
    out.push_back(std::move(v));
  }
  return out;
}

void Subspace::reduce(const PrimeField& field, Vec& v) const {
  if (v.size() != ambient_) throw ShapeError("vector length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::uint32_t c = v[pivots_[k]];
    if (c) axpy(field, v.data(), rows_[k].data(), c, pivots_[k], ambient_);
  }
}

bool Subspace::insert(const PrimeField& field, Vec v) {
  reduce(field, v);
  auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x; });
  if (it == v.end()) return false;
  std::size_t piv = static_cast<std::size_t>(it - v.begin());
  std::uint32_t inv = field.inv(v[piv]);
  for (auto& x : v) x = field.mul(x, inv);
  for (auto& row : rows_)
    if (row[piv]) axpy(field, row.data(), v.data(), row[piv], piv, ambient_);
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  rows_.insert(rows_.begin() + (pos - pivots_.begin()), std::move(v));
  pivots_.insert(pos, piv);
  return true;
}

bool Subspace::contains(const PrimeField& field, Vec v) const {
  reduce(field, v);
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

QuotientSpace::QuotientSpace(const PrimeField& field, std::size_t ambient,
                             const std::vector<Vec>& z,
                             const std::vector<Vec>& b)
    : field_(&field), sub_(ambient), complement_(ambient) {
  for (const Vec& v : b) sub_.insert(field, v);
  for (Vec v : z) {
    sub_.reduce(field, v);
    complement_.insert(field, std::move(v));
  }
}

Vec QuotientSpace::coordinates(Vec v) const {
  sub_.reduce(*field_, v);
  Vec coords(complement_.dimension(), 0);
  const auto& piv = complement_.pivots();
  for (std::size_t k = 0; k < piv.size(); ++k) coords[k] = v[piv[k]];
  Vec check = v;
  complement_.reduce(*field_, check);
  if (std::any_of(check.begin(), check.end(), [](std::uint32_t x) { return x; }))
    throw UsageError("vector outside the numerator subspace");
  return coords;
}

}  // namespace p4kit

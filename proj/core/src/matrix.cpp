#include "p4kit/matrix.hpp"

#include <string>

#include "p4kit/errors.hpp"

namespace p4kit {

std::uint64_t GradedFreeModule::dimension_in_degree(int nvars, int m) const {
  std::uint64_t total = 0;
  for (int d : twists) total += count_monomials(nvars, m - d);
  return total;
}

GradedFreeModule GradedFreeModule::shifted(int k) const {
  GradedFreeModule out{twists};
  for (int& d : out.twists) d += k;
  return out;
}

GradedFreeModule GradedFreeModule::dual() const {
  GradedFreeModule out{twists};
  for (int& d : out.twists) d = -d;
  return out;
}

GradedFreeModule GradedFreeModule::operator+(
    const GradedFreeModule& other) const {
  GradedFreeModule out{twists};
  out.twists.insert(out.twists.end(), other.twists.begin(),
                    other.twists.end());
  return out;
}

GradedMatrix::GradedMatrix(RingPtr ring, GradedFreeModule target,
                           GradedFreeModule source)
    : ring_(std::move(ring)),
      target_(std::move(target)),
      source_(std::move(source)),
      entries_(target_.rank() * source_.rank(), Polynomial(ring_)) {}

GradedMatrix GradedMatrix::from_entries(RingPtr ring, GradedFreeModule target,
                                        GradedFreeModule source,
                                        std::vector<Polynomial> entries) {
  GradedMatrix m(std::move(ring), std::move(target), std::move(source));
  if (entries.size() != m.entries_.size())
    throw ShapeError("expected " + std::to_string(m.entries_.size()) +
                     " matrix entries, got " + std::to_string(entries.size()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m.set(i, j, std::move(entries[i * m.cols() + j]));
  return m;
}

GradedMatrix GradedMatrix::from_columns(
    RingPtr ring, GradedFreeModule target,
    const std::vector<std::vector<Polynomial>>& columns) {
  GradedFreeModule source;
  for (const auto& col : columns) {
    if (col.size() != target.rank())
      throw ShapeError("column length does not match target rank");
    auto d = column_degree(target, col);
    if (!d) throw DegreeError("zero column has no well-defined twist");
    source.twists.push_back(*d);
  }
  GradedMatrix m(ring, std::move(target), std::move(source));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) m.set(i, j, columns[j][i]);
  return m;
}

GradedMatrix GradedMatrix::identity(RingPtr ring,
                                    const GradedFreeModule& module) {
  GradedMatrix m(ring, module, module);
  for (std::size_t i = 0; i < module.rank(); ++i)
    m.set(i, i, Polynomial::constant(ring, 1));
  return m;
}

void GradedMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
  if (i >= rows() || j >= cols()) throw ShapeError("matrix index out of range");
  require_same_ring(*ring_, *p.ring());
  if (!p.is_zero() && *p.degree() != source_.twists[j] - target_.twists[i])
    throw DegreeError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                      ") has degree " + std::to_string(*p.degree()) +
                      ", twists require " +
                      std::to_string(source_.twists[j] - target_.twists[i]));
  entries_[i * cols() + j] = std::move(p);
}

std::vector<Polynomial> GradedMatrix::column(std::size_t j) const {
  std::vector<Polynomial> out;
  out.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) out.push_back(at(i, j));
  return out;
}

std::vector<Polynomial> GradedMatrix::row(std::size_t i) const {
  return {entries_.begin() + i * cols(), entries_.begin() + (i + 1) * cols()};
}

bool GradedMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool GradedMatrix::has_unit_entry() const {
  for (const auto& e : entries_)
    if (!e.is_zero() && *e.degree() == 0) return true;
  return false;
}

GradedMatrix GradedMatrix::dual() const {
  GradedMatrix m(ring_, source_.dual(), target_.dual());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) m.entries_[j * rows() + i] = at(i, j);
  return m;
}

GradedMatrix GradedMatrix::select_columns(
    std::span<const std::size_t> cols_sel) const {
  GradedFreeModule src;
  for (std::size_t j : cols_sel) src.twists.push_back(source_.twists.at(j));
  GradedMatrix m(ring_, target_, std::move(src));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols_sel.size(); ++k)
      m.entries_[i * m.cols() + k] = at(i, cols_sel[k]);
  return m;
}

GradedMatrix GradedMatrix::select_rows(
    std::span<const std::size_t> rows_sel) const {
  GradedFreeModule tgt;
  for (std::size_t i : rows_sel) tgt.twists.push_back(target_.twists.at(i));
  GradedMatrix m(ring_, std::move(tgt), source_);
  for (std::size_t k = 0; k < rows_sel.size(); ++k)
    for (std::size_t j = 0; j < cols(); ++j)
      m.entries_[k * cols() + j] = at(rows_sel[k], j);
  return m;
}

GradedMatrix GradedMatrix::concat_columns(const GradedMatrix& other) const {
  if (!(target_ == other.target_))
    throw ShapeError("concatenated matrices must share a target");
  GradedMatrix m(ring_, target_, source_ + other.source_);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j)
      m.entries_[i * m.cols() + j] = at(i, j);
    for (std::size_t j = 0; j < other.cols(); ++j)
      m.entries_[i * m.cols() + cols() + j] = other.at(i, j);
  }
  return m;
}

GradedMatrix GradedMatrix::direct_sum(const GradedMatrix& other) const {
  GradedMatrix m(ring_, target_ + other.target_, source_ + other.source_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      m.entries_[i * m.cols() + j] = at(i, j);
  for (std::size_t i = 0; i < other.rows(); ++i)
    for (std::size_t j = 0; j < other.cols(); ++j)
      m.entries_[(rows() + i) * m.cols() + cols() + j] = other.at(i, j);
  return m;
}

GradedMatrix GradedMatrix::shifted(int k) const {
  GradedMatrix m = *this;
  m.target_ = target_.shifted(k);
  m.source_ = source_.shifted(k);
  return m;
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  return a.target_ == b.target_ && a.source_ == b.source_ &&
         a.entries_ == b.entries_;
}

GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b) {
  if (!(a.source() == b.target()))
    throw ShapeError("composition twist mismatch");
  require_same_ring(*a.ring(), *b.ring());
  GradedMatrix m(a.ring(), a.target(), b.source());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k) {
      Polynomial acc(a.ring());
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a.at(i, j).is_zero() || b.at(j, k).is_zero()) continue;
        acc += a.at(i, j) * b.at(j, k);
      }
      m.set(i, k, std::move(acc));
    }
  return m;
}

std::optional<int> column_degree(const GradedFreeModule& module,
                                 std::span<const Polynomial> column) {
  if (column.size() != module.rank())
    throw ShapeError("column length does not match module rank");
  std::optional<int> deg;
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (column[i].is_zero()) continue;
    int d = *column[i].degree() + module.twists[i];
    if (deg && *deg != d) throw DegreeError("inhomogeneous module element");
    deg = d;
  }
  return deg;
}

GradedModule GradedModule::free(RingPtr ring, GradedFreeModule generators) {
  return GradedModule(GradedMatrix(std::move(ring), std::move(generators), {}));
}

GradedModule GradedModule::quotient_ring(RingPtr ring,
                                         const std::vector<Polynomial>& ideal) {
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& f : ideal)
    if (!f.is_zero()) cols.push_back({f});
  return GradedModule(
      GradedMatrix::from_columns(std::move(ring), GradedFreeModule{{0}}, cols));
}

}  // namespace p4kit

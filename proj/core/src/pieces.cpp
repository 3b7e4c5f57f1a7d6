#include "p4kit/pieces.hpp"

#include "p4kit/errors.hpp"

namespace p4kit {

PieceBasis::PieceBasis(int nvars, const GradedFreeModule& module, int degree)
    : degree_(degree), by_comp_(module.rank()) {
  for (std::size_t c = 0; c < module.rank(); ++c) {
    int d = degree - module.twists[c];
    if (d < 0) continue;
    for (Monomial m : monomials_of_degree(nvars, d)) {
      by_comp_[c].emplace(m.bits(), terms_.size());
      terms_.push_back({m, static_cast<std::uint32_t>(c)});
    }
  }
}

std::size_t PieceBasis::index(Monomial m, std::uint32_t comp) const {
  auto it = by_comp_.at(comp).find(m.bits());
  if (it == by_comp_[comp].end())
    throw UsageError("term outside the graded piece");
  return it->second;
}

Vec PieceBasis::to_vector(const PrimeField& field,
                          std::span<const Polynomial> column) const {
  Vec v(terms_.size(), 0);
  for (std::size_t c = 0; c < column.size(); ++c)
    for (const Term& t : column[c].terms()) {
      auto& x = v[index(t.mono, static_cast<std::uint32_t>(c))];
      x = field.add(x, t.coeff);
    }
  return v;
}

std::vector<Polynomial> PieceBasis::to_column(const RingPtr& ring,
                                              std::size_t rank,
                                              const Vec& v) const {
  std::vector<std::vector<Term>> parts(rank);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) parts[terms_[k].second].push_back({terms_[k].first, v[k]});
  std::vector<Polynomial> out;
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

DenseMatrix piece_matrix(const GradedMatrix& a, const PieceBasis& source,
                         const PieceBasis& target) {
  const PrimeField& field = a.ring()->field;
  DenseMatrix m(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    auto [mono, comp] = source.term(j);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (const Term& t : a.at(i, comp).terms()) {
        std::size_t r = target.index(t.mono * mono, static_cast<std::uint32_t>(i));
        m.at(r, j) = field.add(m.at(r, j), t.coeff);
      }
  }
  return m;
}

DenseMatrix piece_matrix(const GradedMatrix& a, int e) {
  const int n = a.ring()->nvars;
  return piece_matrix(a, PieceBasis(n, a.source(), e),
                      PieceBasis(n, a.target(), e));
}

std::vector<Vec> image_piece(const GradedMatrix& gens, const PieceBasis& target) {
  PieceBasis source(gens.ring()->nvars, gens.source(), target.degree());
  DenseMatrix m = piece_matrix(gens, source, target);
  DenseMatrix t = m.transposed();
  t.rref(gens.ring()->field);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < t.rows(); ++i)
    out.emplace_back(t.row(i).begin(), t.row(i).end());
  return out;
}

}  // namespace p4kit

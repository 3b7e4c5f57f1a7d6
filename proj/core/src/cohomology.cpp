#include "p4kit/cohomology.hpp"

#include <sstream>

#include "p4kit/errors.hpp"
#include "p4kit/pieces.hpp"

namespace p4kit {

FinitePieces FinitePieces::dual() const {
  FinitePieces out;
  out.nvars = nvars;
  out.lo = -hi;
  out.hi = -lo;
  for (const auto& [d, n] : dims) out.dims[-d] = n;
  for (const auto& [key, m] : mult) {
    auto [d, v] = key;
    out.mult[{-d - 1, v}] = m.transposed();
  }
  return out;
}

namespace {

Vec unit_vector(std::size_t n, std::size_t j) {
  Vec v(n, 0);
  v[j] = 1;
  return v;
}

Vec apply(const PrimeField& field, const DenseMatrix& m, const Vec& v) {
  Vec out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (v[j] && m.at(i, j)) acc = (acc + std::uint64_t(m.at(i, j)) * v[j]) % field.characteristic();
    out[i] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

}  // namespace

GradedModule present_finite(const RingPtr& ring, const FinitePieces& v) {
  const PrimeField& field = ring->field;
  const int n = v.nvars;
  struct Gen {
    int degree;
    Vec vec;
  };
  std::vector<Gen> gens;
  for (int d = v.lo; d <= v.hi; ++d) {
    std::size_t dim = v.dim(d);
    if (dim == 0) continue;
    Subspace image(dim);
    for (int x = 0; x < n; ++x) {
      auto it = v.mult.find({d - 1, x});
      if (it == v.mult.end()) continue;
      DenseMatrix t = it->second.transposed();
      for (std::size_t c = 0; c < t.rows(); ++c)
        image.insert(field, Vec(t.row(c).begin(), t.row(c).end()));
    }
    for (std::size_t j = 0; j < dim; ++j)
      if (image.insert(field, unit_vector(dim, j))) gens.push_back({d, unit_vector(dim, j)});
  }
  GradedFreeModule free;
  for (const Gen& g : gens) free.twists.push_back(g.degree);
  if (gens.empty()) return GradedModule(GradedMatrix(ring, free, GradedFreeModule{}));

  auto act = [&](Monomial m, const Gen& g) -> Vec {
    Vec cur = g.vec;
    int d = g.degree;
    for (int x = 0; x < n; ++x)
      for (int e = 0; e < m.exponent(x); ++e) {
        auto it = v.mult.find({d, x});
        ++d;
        if (it == v.mult.end()) return Vec(v.dim(d + 0), 0);
        cur = apply(field, it->second, cur);
      }
    return cur;
  };

  std::vector<std::vector<Polynomial>> relations;
  for (int big = v.lo; big <= v.hi + 1; ++big) {
    PieceBasis fb(n, free, big);
    if (fb.size() == 0) continue;
    const std::size_t dim = v.dim(big);
    DenseMatrix phi(dim, fb.size());
    for (std::size_t c = 0; c < fb.size(); ++c) {
      auto [m, g] = fb.term(c);
      if (dim == 0) break;
      Vec img = act(m, gens[g]);
      for (std::size_t r = 0; r < dim; ++r) phi.at(r, c) = img[r];
    }
    Subspace implied(fb.size());
    if (!relations.empty()) {
      auto known = GradedMatrix::from_columns(ring, free, relations);
      for (Vec& w : image_piece(known, fb)) implied.insert(field, std::move(w));
    }
    for (Vec& k : kernel(field, phi))
      if (implied.insert(field, k)) relations.push_back(fb.to_column(ring, free.rank(), k));
  }
  if (relations.empty()) return GradedModule(GradedMatrix(ring, free, GradedFreeModule{}));
  return GradedModule(GradedMatrix::from_columns(ring, free, relations));
}

SheafCohomology::SheafCohomology(RingPtr ring, Resolution res, GroebnerBasis gb)
    : ring_(std::move(ring)), res_(std::move(res)), pres_gb_(std::move(gb)) {}

namespace {

GroebnerBasis presentation_gb(const RingPtr& ring, const Resolution& r) {
  std::vector<std::vector<Polynomial>> cols;
  if (!r.maps.empty())
    for (std::size_t j = 0; j < r.maps[0].cols(); ++j) cols.push_back(r.maps[0].column(j));
  return buchberger(ring, r.f0, cols);
}

}  // namespace

SheafCohomology::SheafCohomology(const GradedModule& m)
    : SheafCohomology(m.ring(), minimal_free_resolution(m, m.ring()->nvars + 1),
                      GroebnerBasis(m.ring(), {}, {}, {}, true, 0)) {
  pres_gb_ = presentation_gb(ring_, res_);
}

SheafCohomology SheafCohomology::of_ideal(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  auto gens = ideal.minimal_generators();
  if (gens.empty()) throw UsageError("zero ideal has no ideal sheaf cohomology here");
  Resolution quot = minimal_free_resolution(GradedModule::quotient_ring(ring, gens),
                                            ring->nvars + 2);
  Resolution res;
  res.minimal = true;
  res.f0 = quot.maps.at(0).source();
  res.maps.assign(quot.maps.begin() + 1, quot.maps.end());
  GroebnerBasis gb = presentation_gb(ring, res);
  return SheafCohomology(ring, std::move(res), std::move(gb));
}

GradedFreeModule SheafCohomology::dual_module(int k) const {
  if (k < 0 || k > static_cast<int>(res_.maps.size())) return {};
  return res_.module(static_cast<std::size_t>(k)).dual().shifted(nvars());
}

GradedMatrix SheafCohomology::dual_map(int k) const {
  const int len = static_cast<int>(res_.maps.size());
  if (k >= 0 && k < len) return res_.maps[k].dual().shifted(nvars());
  return GradedMatrix(ring_, dual_module(k + 1), dual_module(k));
}

std::int64_t SheafCohomology::ext_dim(int k, int e) const {
  if (k < 0 || k > static_cast<int>(res_.maps.size())) return 0;
  // Hom is generated in high degree (by the relations of the presentation)
  // and is only needed in low degrees, where dense ranks are cheap.
  if (k == 0) return ext_dim_by_kernels(k, e);
  std::lock_guard guard(ext_cache_->lock);
  auto it = ext_cache_->gbs.find(k);
  if (it == ext_cache_->gbs.end()) {
    GradedModule ext = ext_module(k);
    std::optional<GroebnerBasis> gb;
    if (ext.generators().rank() > 0) {
      std::vector<std::vector<Polynomial>> cols;
      for (std::size_t j = 0; j < ext.presentation().cols(); ++j)
        cols.push_back(ext.presentation().column(j));
      gb = buchberger(ring_, ext.generators(), cols);
    }
    it = ext_cache_->gbs.emplace(k, std::move(gb)).first;
  }
  return it->second ? static_cast<std::int64_t>(it->second->standard_count(e)) : 0;
}

std::int64_t SheafCohomology::ext_dim_by_kernels(int k, int e) const {
  if (k < 0 || k > static_cast<int>(res_.maps.size())) return 0;
  std::int64_t total =
      static_cast<std::int64_t>(dual_module(k).dimension_in_degree(nvars(), e));
  if (total == 0) return 0;
  auto map_rank = [&](int j) -> std::int64_t {
    GradedMatrix d = dual_map(j);
    if (d.rows() == 0 || d.cols() == 0) return 0;
    return static_cast<std::int64_t>(rank(ring_->field, piece_matrix(d, e)));
  };
  return total - map_rank(k) - map_rank(k - 1);
}

std::int64_t SheafCohomology::module_dim(int d) const {
  return static_cast<std::int64_t>(pres_gb_.standard_count(d));
}

std::int64_t SheafCohomology::h(int i, int d) const {
  const int n = nvars();
  if (i < 0 || i > n - 1) return 0;
  if (i >= 1) return ext_dim(n - 1 - i, -d);
  return module_dim(d) - ext_dim(n, -d) + ext_dim(n - 1, -d);
}

GradedModule SheafCohomology::ext_module(int k) const {
  const int len = static_cast<int>(res_.maps.size());
  if (k < 0 || k > len)
    return GradedModule(GradedMatrix(ring_, GradedFreeModule{}, GradedFreeModule{}));
  GradedFreeModule fk = dual_module(k);
  if (k == len) return subquotient(GradedMatrix::identity(ring_, fk), dual_map(k - 1));
  // The kernel generators form a Groebner basis in the induced order, so
  // the quotient is computed in that order.
  GradedMatrix dk = dual_map(k);
  GradedMatrix z = syzygies(dk);
  if (z.cols() == 0)
    return GradedModule(GradedMatrix(ring_, GradedFreeModule{}, GradedFreeModule{}));
  return subquotient(z, dual_map(k - 1), schreyer_order(dk));
}

FinitePieces module_pieces(const GradedModule& m, int lo, int hi) {
  const RingPtr& ring = m.ring();
  const int n = ring->nvars;
  FinitePieces out;
  out.nvars = n;
  out.lo = lo;
  out.hi = hi;
  const GradedFreeModule& gens = m.generators();
  std::optional<GroebnerBasis> gb;
  if (m.presentation().cols() > 0) gb = buchberger(m.presentation());
  auto standard = [&](Monomial mono, std::uint32_t comp) {
    if (!gb) return true;
    for (const SVec& g : gb->elements())
      if (g.front().comp == comp && g.front().mono.divides(mono)) return false;
    return true;
  };
  // Standard terms per degree, and their positions among them.
  std::map<int, PieceBasis> bases;
  std::map<int, std::vector<std::size_t>> position;
  for (int e = lo; e <= hi; ++e) {
    PieceBasis basis(n, gens, e);
    std::vector<std::size_t> pos(basis.size(), SIZE_MAX);
    std::size_t count = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto [mono, comp] = basis.term(j);
      if (standard(mono, comp)) pos[j] = count++;
    }
    out.dims[e] = count;
    bases.emplace(e, std::move(basis));
    position.emplace(e, std::move(pos));
  }
  for (int e = lo; e < hi; ++e) {
    const std::size_t d0 = out.dims[e], d1 = out.dims[e + 1];
    if (d0 == 0 || d1 == 0) continue;
    const PieceBasis& b0 = bases.at(e);
    const PieceBasis& b1 = bases.at(e + 1);
    const auto& p0 = position.at(e);
    const auto& p1 = position.at(e + 1);
    for (int x = 0; x < n; ++x) {
      DenseMatrix mat(d1, d0);
      const Monomial xv = Monomial::variable(x);
      for (std::size_t j = 0; j < b0.size(); ++j) {
        if (p0[j] == SIZE_MAX) continue;
        auto [mono, comp] = b0.term(j);
        SVec v{{mono * xv, comp, 1}};
        if (gb) v = gb->normal_form(v);
        for (const ModTerm& t : v) mat.at(p1[b1.index(t.mono, t.comp)], p0[j]) = t.coeff;
      }
      out.mult[{e, x}] = std::move(mat);
    }
  }
  return out;
}

FinitePieces SheafCohomology::ext_pieces(int k, int lo, int hi) const {
  return module_pieces(ext_module(k), lo, hi);
}

FinitePieces SheafCohomology::ext_pieces_by_kernels(int k, int lo, int hi) const {
  const PrimeField& field = ring_->field;
  const int n = nvars();
  FinitePieces out;
  out.nvars = n;
  out.lo = lo;
  out.hi = hi;
  GradedFreeModule fk = dual_module(k);
  GradedMatrix dk = dual_map(k), dprev = dual_map(k - 1);
  std::map<int, QuotientSpace> spaces;
  std::map<int, PieceBasis> bases;
  for (int e = lo; e <= hi; ++e) {
    PieceBasis basis(n, fk, e);
    std::vector<Vec> z, b;
    if (basis.size() > 0) {
      if (dk.rows() == 0) {
        for (std::size_t j = 0; j < basis.size(); ++j) z.push_back(unit_vector(basis.size(), j));
      } else {
        z = kernel(field, piece_matrix(dk, basis, PieceBasis(n, dk.target(), e)));
      }
      if (dprev.cols() > 0) {
        DenseMatrix im = piece_matrix(dprev, PieceBasis(n, dprev.source(), e), basis);
        DenseMatrix t = im.transposed();
        for (std::size_t r = 0; r < t.rows(); ++r) b.emplace_back(t.row(r).begin(), t.row(r).end());
      }
    }
    spaces.emplace(e, QuotientSpace(field, basis.size(), z, b));
    out.dims[e] = spaces.at(e).dimension();
    bases.emplace(e, std::move(basis));
  }
  for (int e = lo; e < hi; ++e) {
    const QuotientSpace& from = spaces.at(e);
    const QuotientSpace& to = spaces.at(e + 1);
    if (from.dimension() == 0 || to.dimension() == 0) continue;
    const PieceBasis& b0 = bases.at(e);
    const PieceBasis& b1 = bases.at(e + 1);
    for (int x = 0; x < n; ++x) {
      DenseMatrix m(to.dimension(), from.dimension());
      const Monomial xv = Monomial::variable(x);
      for (std::size_t c = 0; c < from.dimension(); ++c) {
        const Vec& rep = from.representatives()[c];
        Vec img(b1.size(), 0);
        for (std::size_t j = 0; j < rep.size(); ++j) {
          if (!rep[j]) continue;
          auto [mono, comp] = b0.term(j);
          img[b1.index(mono * xv, comp)] = rep[j];
        }
        Vec coords = to.coordinates(std::move(img));
        for (std::size_t r = 0; r < coords.size(); ++r) m.at(r, c) = coords[r];
      }
      out.mult[{e, x}] = std::move(m);
    }
  }
  return out;
}

FinitePieces SheafCohomology::intermediate_pieces(int i, int lo, int hi) const {
  return ext_pieces(nvars() - 1 - i, -hi, -lo).dual();
}

std::int64_t CohomologyTable::at(int i, int j) const {
  auto it = values_.find({i, j});
  return it == values_.end() ? 0 : it->second;
}

std::int64_t CohomologyTable::euler(int j) const {
  std::int64_t s = 0;
  for (int i = 0; i <= imax_; ++i) s += (i % 2 == 0 ? 1 : -1) * at(i, j);
  return s;
}

std::string CohomologyTable::to_text() const {
  std::ostringstream os;
  auto cell = [&](const std::string& s) {
    os << std::string(s.size() < 5 ? 5 - s.size() : 1, ' ') << s;
  };
  for (int i = imax_; i >= 0; --i) {
    os << "h" << i << " |";
    for (int j = jmin_; j <= jmax_; ++j) {
      std::int64_t v = at(i, j);
      cell(v ? std::to_string(v) : ".");
    }
    os << '\n';
  }
  os << "   +" << std::string(5 * (jmax_ - jmin_ + 1), '-') << "\n  j ";
  for (int j = jmin_; j <= jmax_; ++j) cell(std::to_string(j));
  os << '\n';
  return os.str();
}

CohomologyTable cohomology_table(const Ideal& saturated, int jmin, int jmax) {
  return cohomology_table(saturated, SheafCohomology::of_ideal(saturated), jmin, jmax);
}

CohomologyTable cohomology_table(const Ideal& saturated, const SheafCohomology& sc, int jmin,
                                 int jmax) {
  const int n = saturated.ring()->nvars;
  CohomologyTable t(jmin, jmax, n - 1);
  for (int j = jmin; j <= jmax; ++j) {
    t.set(0, j, saturated.dim_in_degree(j));
    for (int i = 1; i <= n - 1; ++i) t.set(i, j, sc.h(i, j));
  }
  return t;
}

std::vector<std::int64_t> chern_classes(const BettiTable& t, int max_degree) {
  std::vector<std::int64_t> c(max_degree + 1, 0);
  c[0] = 1;
  for (const auto& [key, count] : t.entries()) {
    auto [step, twist] = key;
    const std::int64_t a = -twist;  // S(-twist) = O(a)
    for (int k = 0; k < count; ++k) {
      if (step % 2 == 0) {
        // multiply by (1 + a t)
        for (int d = max_degree; d >= 1; --d) c[d] += a * c[d - 1];
      } else {
        // divide by (1 + a t)
        for (int d = 1; d <= max_degree; ++d) c[d] -= a * c[d - 1];
      }
    }
  }
  return c;
}

}  // namespace p4kit

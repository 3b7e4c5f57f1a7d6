#include "p4kit/idealops.hpp"

#include <algorithm>
#include <map>

#include "p4kit/errors.hpp"
#include "p4kit/linalg.hpp"
#include "p4kit/pieces.hpp"
#include "p4kit/resolve.hpp"

namespace p4kit {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators, bool saturated)
    : ring_(std::move(ring)), saturated_(saturated), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(*ring_, *g.ring());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal::Ideal(std::vector<Polynomial> generators, bool saturated)
    : Ideal(generators.empty() ? throw UsageError("ideal without ring")
                               : generators.front().ring(),
            std::move(generators), saturated) {}

const GroebnerBasis& Ideal::gb() const {
  std::call_once(cache_->once, [this] {
    std::vector<std::vector<Polynomial>> cols;
    for (const auto& g : generators_) cols.push_back({g});
    cache_->gb.emplace(buchberger(ring_, GradedFreeModule{{0}}, cols));
  });
  return *cache_->gb;
}

bool Ideal::contains(const Polynomial& f) const { return gb().contains(f); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [this](const Polynomial& f) { return contains(f); });
}

bool Ideal::equals(const Ideal& other) const {
  return contains(other) && other.contains(*this);
}

bool Ideal::is_unit() const { return gb().is_unit_ideal(); }

std::int64_t Ideal::dim_in_degree(int m) const {
  if (m < 0) return 0;
  return static_cast<std::int64_t>(count_monomials(ring_->nvars, m) -
                                   gb().standard_count(m));
}

std::vector<Polynomial> Ideal::basis_in_degree(int m) const {
  if (m < 0 || generators_.empty()) return {};
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& g : gb().polynomials()) cols.push_back({g});
  GradedMatrix gens = GradedMatrix::from_columns(ring_, GradedFreeModule{{0}}, cols);
  PieceBasis target(ring_->nvars, GradedFreeModule{{0}}, m);
  std::vector<Polynomial> out;
  for (const Vec& v : image_piece(gens, target))
    out.push_back(target.to_column(ring_, 1, v)[0]);
  return out;
}

HilbertSeries Ideal::quotient_series() const { return hilbert_series(gb()); }

std::vector<Polynomial> Ideal::minimal_generators() const {
  return p4kit::minimal_generators(generators_);
}

Ideal Ideal::with_saturated(bool flag) const {
  Ideal copy = *this;
  copy.saturated_ = flag;
  return copy;
}

Ideal sum(const Ideal& a, const Ideal& b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

namespace {

std::vector<Polynomial> first_entries(const std::vector<std::vector<Polynomial>>& cols) {
  std::vector<Polynomial> out;
  for (const auto& c : cols) out.push_back(c[0]);
  return out;
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring();
  if (a.generators().empty()) return a;
  if (b.generators().empty()) return b;
  auto zero = Polynomial(ring);
  auto one = Polynomial::constant(ring, 1);
  std::vector<std::vector<Polynomial>> cols{{one, one, one}};
  for (const auto& f : a.generators()) cols.push_back({f, zero, zero});
  for (const auto& g : b.generators()) cols.push_back({zero, g, zero});
  auto tails = eliminate_top(ring, GradedFreeModule{{0, 0}}, GradedFreeModule{{0}}, cols);
  return Ideal(ring, first_entries(tails));
}

Ideal quotient(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring();
  const auto& js = b.generators();
  if (js.empty()) return Ideal(ring, {Polynomial::constant(ring, 1)});
  if (a.generators().empty()) return a;
  const std::size_t s = js.size();
  GradedFreeModule top;
  for (const auto& g : js) top.twists.push_back(-*g.degree());
  std::vector<std::vector<Polynomial>> cols;
  std::vector<Polynomial> v = js;
  v.push_back(Polynomial::constant(ring, 1));
  cols.push_back(std::move(v));
  for (const auto& f : a.generators())
    for (std::size_t k = 0; k < s; ++k) {
      std::vector<Polynomial> c(s + 1, Polynomial(ring));
      c[k] = f;
      cols.push_back(std::move(c));
    }
  auto tails = eliminate_top(ring, top, GradedFreeModule{{0}}, cols);
  return Ideal(ring, first_entries(tails));
}

Ideal irrelevant_ideal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring->nvars; ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

Ideal saturate(const Ideal& a) {
  if (a.is_saturated()) return a;
  Ideal m = irrelevant_ideal(a.ring());
  Ideal current = Ideal(a.ring(), a.gb().polynomials());
  while (true) {
    Ideal next = quotient(current, m);
    if (current.contains(next)) return current.with_saturated(true);
    current = Ideal(a.ring(), next.gb().polynomials());
  }
}

Polynomial random_element(const Ideal& a, int degree, Rng& rng) {
  auto basis = a.basis_in_degree(degree);
  if (basis.empty())
    throw UsageError("graded piece of degree " + std::to_string(degree) + " is zero");
  Polynomial f(a.ring());
  for (const auto& b : basis) f += b.scaled(rng.element(a.ring()->field));
  return f;
}

Polynomial random_form(const RingPtr& ring, int degree, Rng& rng) {
  std::vector<Term> terms;
  for (Monomial m : monomials_of_degree(ring->nvars, degree))
    terms.push_back({m, rng.element(ring->field)});
  return Polynomial::from_terms(ring, std::move(terms));
}

namespace {

std::uint32_t evaluate(const Polynomial& f, const std::vector<std::uint32_t>& pt) {
  const PrimeField& field = f.field();
  std::uint32_t v = 0;
  for (const Term& t : f.terms()) {
    std::uint32_t x = t.coeff;
    for (std::size_t i = 0; i < pt.size(); ++i)
      x = field.mul(x, field.pow(pt[i], static_cast<std::uint64_t>(t.mono.exponent(int(i)))));
    v = field.add(v, x);
  }
  return v;
}

}  // namespace

std::size_t generic_rank(const GradedMatrix& m, Rng& rng) {
  const PrimeField& field = m.ring()->field;
  std::vector<std::uint32_t> pt(m.ring()->nvars);
  for (auto& x : pt) x = rng.element(field);
  DenseMatrix d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d.at(i, j) = evaluate(m.at(i, j), pt);
  return rank(field, d);
}

EmbeddedIdeal module_to_ideal(const GradedModule& c, std::uint64_t seed) {
  const RingPtr& ring = c.ring();
  Rng rng(seed);
  GradedMatrix p = prune_presentation(c.presentation());
  const std::size_t r = p.rows();
  std::size_t prank = p.cols() == 0 ? 0 : generic_rank(p, rng);
  if (r - prank != 1)
    throw UsageError("module has generic rank " + std::to_string(r - prank) +
                     ", expected 1");
  std::vector<std::vector<Polynomial>> homs;
  GradedFreeModule dual_target = p.target().dual();
  if (p.cols() == 0) {
    if (r != 1) throw UsageError("free module of rank != 1");
    homs.push_back({Polynomial::constant(ring, 1)});
  } else {
    GradedMatrix h = minimal_generators(syzygies(p.dual()));
    int best = INT32_MAX;
    for (int t : h.source().twists) best = std::min(best, t);
    std::vector<std::size_t> lowest;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h.source().twists[j] == best) lowest.push_back(j);
    if (lowest.empty()) throw DegeneracyError("Hom(C, S) is zero");
    std::vector<Polynomial> g(r, Polynomial(ring));
    for (std::size_t j : lowest) {
      std::uint32_t c0 = lowest.size() == 1 ? 1 : rng.nonzero(ring->field);
      auto col = h.column(j);
      for (std::size_t i = 0; i < r; ++i) g[i] += col[i].scaled(c0);
    }
    homs.push_back(std::move(g));
  }
  const auto& g = homs.front();
  auto d = column_degree(dual_target, g);
  const int delta = *d;
  Ideal image(ring, g);
  HilbertSeries quot = image.quotient_series();
  if (quot.dimension() > ring->nvars - 2)
    throw DegeneracyError("embedding has a common factor");
  // Injectivity: C and image(delta) have the same Hilbert polynomial.
  HilbertSeries hc = hilbert_series(GradedModule(p));
  for (int m = 0; m < 6; ++m) {
    int k = m + 20;
    std::int64_t img = binomial_poly(k + delta + ring->nvars - 1, ring->nvars - 1) -
                       quot.polynomial(k + delta);
    if (img != hc.polynomial(k))
      throw DegeneracyError("homomorphism to S is not injective");
  }
  return {saturate(image), delta};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kSmooth:
      return "smooth";
    case Verdict::kSingular:
      return "singular";
    case Verdict::kIndeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

namespace {

// Stops the engine once some graded piece of S/J vanishes.
struct VanishingWatch {
  int nvars;
  std::optional<int> degree;

  bool operator()(int d, std::span<const SVec> basis) {
    std::vector<Monomial> leads;
    std::vector<char> pure(nvars, 0);
    for (const SVec& v : basis) {
      Monomial m = v.front().mono;
      leads.push_back(m);
      for (int i = 0; i < nvars; ++i)
        if (m.exponent(i) == m.degree()) pure[i] = 1;
    }
    if (std::find(pure.begin(), pure.end(), 0) != pure.end()) return false;
    for (Monomial m : monomials_of_degree(nvars, d)) {
      bool standard = true;
      for (Monomial l : leads)
        if (l.divides(m)) {
          standard = false;
          break;
        }
      if (standard) return false;
    }
    degree = d;
    return true;
  }
};

}  // namespace

SmoothnessCertificate smoothness_certificate(const Ideal& ideal, int codim,
                                             std::uint64_t seed) {
  const RingPtr& ring = ideal.ring();
  const int n = ring->nvars;
  if (ideal.quotient_series().dimension() != n - codim)
    throw DimensionError("scheme does not have codimension " + std::to_string(codim));
  if (codim != 2 && codim != 1)
    throw UsageError("smoothness check supports codimension 1 and 2");

  auto gens = ideal.minimal_generators();
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& f : gens) {
    std::vector<Polynomial> row;
    for (int v = 0; v < n; ++v) row.push_back(f.derivative(v));
    jac.push_back(std::move(row));
  }
  std::map<int, std::vector<Polynomial>> minors;  // by degree
  if (codim == 1) {
    for (const auto& row : jac)
      for (const auto& e : row)
        if (!e.is_zero()) minors[*e.degree()].push_back(e);
  } else {
    for (std::size_t i = 0; i < jac.size(); ++i)
      for (std::size_t j = i + 1; j < jac.size(); ++j)
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b) {
            Polynomial m = jac[i][a] * jac[j][b] - jac[i][b] * jac[j][a];
            if (!m.is_zero()) minors[*m.degree()].push_back(std::move(m));
          }
  }

  SmoothnessCertificate cert;
  cert.characteristic = ring->field.characteristic();
  cert.note = "Jacobian criterion over F_" + std::to_string(cert.characteristic) +
              "; certifies smoothness of the reduction mod p";

  auto attempt = [&](std::vector<Polynomial> extra) {
    std::vector<Polynomial> all = gens;
    all.insert(all.end(), extra.begin(), extra.end());
    VanishingWatch watch{n, std::nullopt};
    GBOptions opts;
    opts.after_degree = std::ref(watch);
    GroebnerBasis g = buchberger(all, opts);
    cert.singular_ideal = all;
    if (watch.degree) {
      cert.vanishing_degree = watch.degree;
      return true;
    }
    HilbertSeries hs = hilbert_series(g);
    if (hs.dimension() <= 0) {
      cert.vanishing_degree = static_cast<int>(hs.numerator.size()) + hs.low;
      return true;
    }
    return false;
  };

  Rng rng(seed);
  std::vector<Polynomial> combos;
  for (const auto& [deg, list] : minors) {
    std::size_t k = std::min<std::size_t>(list.size(), 3);
    for (std::size_t c = 0; c < k; ++c) {
      Polynomial f(ring);
      for (const auto& m : list) f += m.scaled(rng.element(ring->field));
      if (!f.is_zero()) combos.push_back(std::move(f));
    }
  }
  if (attempt(combos)) {
    cert.verdict = Verdict::kSmooth;
    return cert;
  }
  std::vector<Polynomial> every;
  for (const auto& [deg, list] : minors) every.insert(every.end(), list.begin(), list.end());
  cert.used_all_minors = true;
  if (attempt(every)) {
    cert.verdict = Verdict::kSmooth;
    return cert;
  }
  cert.verdict = Verdict::kSingular;
  cert.singular_locus = saturate(Ideal(ring, cert.singular_ideal));
  return cert;
}

}  // namespace p4kit

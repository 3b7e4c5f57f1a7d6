#include "p4kit/hilbert.hpp"

#include <algorithm>

#include "p4kit/errors.hpp"

namespace p4kit {

std::int64_t binomial_poly(std::int64_t x, int k) {
  if (k < 0) return 0;
  // Exact: the running product of i consecutive integers is divisible by i!.
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (x - i) / (i + 1);
  return r;
}

namespace {

using Poly = std::vector<std::int64_t>;

void add_shifted(Poly& a, const Poly& b, int shift, std::int64_t sign) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] += sign * b[k];
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](Monomial a, Monomial b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.bits() < b.bits();
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (Monomial m : gens) {
    bool redundant = false;
    for (Monomial k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

Poly numerator_rec(std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().degree() == 0) return {};
  // Pairwise coprime generators form a regular sequence.
  std::uint64_t seen = 0;
  bool coprime = true;
  for (Monomial m : gens) {
    std::uint64_t support = 0;
    for (int v = 0; v < Monomial::kMaxVars; ++v)
      if (m.exponent(v)) support |= 1ull << v;
    if (support & seen) {
      coprime = false;
      break;
    }
    seen |= support;
  }
  if (coprime) {
    Poly r{1};
    for (Monomial m : gens) {
      Poly next = r;
      add_shifted(next, r, m.degree(), -1);
      r = std::move(next);
    }
    trim(r);
    return r;
  }
  // Pivot on the variable occurring in most generators, at the smallest
  // positive exponent.
  int counts[Monomial::kMaxVars] = {};
  int min_exp[Monomial::kMaxVars];
  std::fill(std::begin(min_exp), std::end(min_exp), 1 << 20);
  for (Monomial m : gens)
    for (int v = 0; v < Monomial::kMaxVars; ++v)
      if (int e = m.exponent(v); e > 0) {
        ++counts[v];
        min_exp[v] = std::min(min_exp[v], e);
      }
  int best = static_cast<int>(std::max_element(std::begin(counts), std::end(counts)) -
                              std::begin(counts));
  Monomial p = Monomial::variable(best, min_exp[best]);
  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  for (Monomial m : gens) colon.push_back(m.lcm(p) / p);
  Poly r = numerator_rec(std::move(plus));
  add_shifted(r, numerator_rec(std::move(colon)), p.degree(), 1);
  trim(r);
  return r;
}

}  // namespace

std::vector<std::int64_t> monomial_numerator(std::vector<Monomial> gens) {
  return numerator_rec(std::move(gens));
}

bool HilbertSeries::is_zero() const {
  return std::all_of(numerator.begin(), numerator.end(),
                     [](std::int64_t c) { return c == 0; });
}

namespace {

// Divides by (1 - t) as often as possible; returns the count.
int reduce_numerator(std::vector<std::int64_t>& q, int limit) {
  int k = 0;
  while (k < limit) {
    std::int64_t s = 0;
    for (auto c : q) s += c;
    if (s != 0 || q.empty()) break;
    // q = (1 - t) r  =>  r_j = sum_{i <= j} q_i
    std::vector<std::int64_t> r(q.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t j = 0; j + 1 < q.size(); ++j) r[j] = (acc += q[j]);
    q = std::move(r);
    ++k;
  }
  return k;
}

}  // namespace

int HilbertSeries::dimension() const {
  if (is_zero()) return -1;
  auto q = numerator;
  return nvars - reduce_numerator(q, nvars);
}

std::int64_t HilbertSeries::degree() const {
  if (is_zero()) return 0;
  auto q = numerator;
  reduce_numerator(q, nvars);
  std::int64_t s = 0;
  for (auto c : q) s += c;
  return s;
}

std::int64_t HilbertSeries::polynomial(int m) const {
  if (is_zero()) return 0;
  auto q = numerator;
  int dim = nvars - reduce_numerator(q, nvars);
  if (dim == 0) return 0;
  std::int64_t v = 0;
  for (std::size_t k = 0; k < q.size(); ++k)
    v += q[k] * binomial_poly(m - (low + static_cast<int>(k)) + dim - 1, dim - 1);
  return v;
}

std::int64_t HilbertSeries::function(int m) const {
  std::int64_t v = 0;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    int e = m - (low + static_cast<int>(k));
    if (e < 0) continue;
    v += numerator[k] * binomial_poly(e + nvars - 1, nvars - 1);
  }
  return v;
}

HilbertSeries hilbert_series(const GroebnerBasis& g) {
  if (!g.is_complete()) throw UsageError("Hilbert series needs a complete basis");
  HilbertSeries hs;
  hs.nvars = g.ring()->nvars;
  const auto& tw = g.ambient().twists;
  if (tw.empty()) return hs;
  hs.low = *std::min_element(tw.begin(), tw.end());
  for (std::size_t c = 0; c < tw.size(); ++c) {
    std::vector<Monomial> leads;
    for (const SVec& v : g.elements())
      if (v.front().comp == c) leads.push_back(v.front().mono);
    add_shifted(hs.numerator, monomial_numerator(std::move(leads)), tw[c] - hs.low, 1);
  }
  trim(hs.numerator);
  return hs;
}

HilbertSeries hilbert_series(const GradedModule& m) {
  return hilbert_series(buchberger(m.ring(), m.generators(), [&] {
    std::vector<std::vector<Polynomial>> cols;
    for (std::size_t j = 0; j < m.presentation().cols(); ++j)
      cols.push_back(m.presentation().column(j));
    return cols;
  }()));
}

std::vector<std::int64_t> hilbert_function(const GradedModule& m, int from, int to) {
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t j = 0; j < m.presentation().cols(); ++j)
    cols.push_back(m.presentation().column(j));
  GBOptions opts;
  opts.max_degree = to;
  GroebnerBasis g = buchberger(m.ring(), m.generators(), cols, opts);
  std::vector<std::int64_t> out;
  for (int d = from; d <= to; ++d)
    out.push_back(static_cast<std::int64_t>(g.standard_count(d)));
  return out;
}

SurfaceNumbers surface_numbers(const HilbertSeries& q) {
  if (q.dimension() != 3)
    throw DimensionError("expected a surface, got Krull dimension " +
                         std::to_string(q.dimension()));
  std::int64_t p0 = q.polynomial(0), p1 = q.polynomial(1), p2 = q.polynomial(2);
  std::int64_t d = p2 - 2 * p1 + p0;
  return {d, d + 1 + p0 - p1, p0};
}

CurveNumbers curve_numbers(const HilbertSeries& q) {
  if (q.dimension() != 2)
    throw DimensionError("expected a curve, got Krull dimension " +
                         std::to_string(q.dimension()));
  std::int64_t p0 = q.polynomial(0), p1 = q.polynomial(1);
  return {p1 - p0, 1 - p0};
}

std::int64_t k2_from_invariants(std::int64_t d, std::int64_t pi, std::int64_t chi) {
  std::int64_t twice = d * d - 5 * d - 10 * pi + 12 * chi + 10;
  if (twice % 2 != 0) throw UsageError("inconsistent invariants: K^2 not integral");
  return twice / 2;
}

std::int64_t double_point_residual(std::int64_t d, std::int64_t pi,
                                   std::int64_t chi, std::int64_t k2) {
  std::int64_t hk = 2 * pi - 2 - d;
  return d * d - 10 * d - 5 * hk - 2 * k2 + 12 * chi;
}

std::int64_t genus_addition(std::int64_t pc, std::int64_t pd, std::int64_t c_dot_d) {
  return pc + pd + c_dot_d - 1;
}

std::int64_t rr_chi_ideal(std::int64_t m, std::int64_t d, std::int64_t pi,
                          std::int64_t q, std::int64_t pg) {
  return binomial_poly(m + 4, 4) - binomial_poly(m + 1, 2) * d + m * (pi - 1) - 1 +
         q - pg;
}

std::int64_t speciality_formula(std::int64_t d, std::int64_t pi, std::int64_t q,
                                std::int64_t pg) {
  return pi - d + 3 + q - pg;
}

}  // namespace p4kit

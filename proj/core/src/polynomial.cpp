#include "p4kit/polynomial.hpp"

#include <algorithm>
#include <string>

#include "p4kit/errors.hpp"

namespace p4kit {

RingPtr make_ring(std::uint32_t p, int nvars) {
  if (nvars < 1 || nvars > Monomial::kMaxVars)
    throw UsageError("unsupported number of variables: " +
                     std::to_string(nvars));
  return std::make_shared<const Ring>(Ring{PrimeField(p), nvars});
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw UsageError("operands belong to different rings");
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PrimeField& f = ring->field;
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    std::uint32_t c = t.coeff % f.characteristic();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = f.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({t.mono, c});
    }
  }
  if (!out.empty() && out.front().mono.degree() != out.back().mono.degree())
    throw DegreeError("inhomogeneous polynomial");
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  std::uint32_t v = ring->field.from_int(c);
  std::vector<Term> t;
  if (v != 0) t.push_back({Monomial(), v});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->nvars)
    throw UsageError("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, std::uint32_t c) {
  std::vector<Term> t;
  c %= ring->field.characteristic();
  if (c != 0) t.push_back({m, c});
  return Polynomial(std::move(ring), std::move(t));
}

std::uint32_t Polynomial::coefficient(Monomial m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, Monomial key) { return t.mono > key; });
  return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

Polynomial Polynomial::operator-() const { return scaled(field().neg(1)); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
  c %= field().characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out(terms_);
  for (Term& t : out) t.coeff = field().mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times(Monomial m) const {
  std::vector<Term> out(terms_);
  for (Term& t : out) t.mono = t.mono * m;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    int e = t.mono.exponent(var);
    if (e == 0) continue;
    std::uint32_t c = field().mul(t.coeff, field().from_int(e));
    if (c == 0) continue;
    out.push_back({t.mono / Monomial::variable(var), c});
  }
  // Differentiation by one variable preserves the relative grevlex order of
  // the surviving terms only up to ties, so re-sort.
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(leading_term().coeff));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (*a.degree() != *b.degree())
    throw DegreeError("sum of polynomials of degrees " +
                      std::to_string(*a.degree()) + " and " +
                      std::to_string(*b.degree()));
  const PrimeField& f = a.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const Term& s = a.terms_[i];
    const Term& t = b.terms_[j];
    if (s.mono == t.mono) {
      std::uint32_t c = f.add(s.coeff, t.coeff);
      if (c != 0) out.push_back({s.mono, c});
      ++i;
      ++j;
    } else if (s.mono > t.mono) {
      out.push_back(s);
      ++i;
    } else {
      out.push_back(t);
      ++j;
    }
  }
  out.insert(out.end(), a.terms_.begin() + i, a.terms_.end());
  out.insert(out.end(), b.terms_.begin() + j, b.terms_.end());
  return Polynomial(a.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  const PrimeField& f = a.field();
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_)
      out.push_back({s.mono * t.mono, f.mul(s.coeff, t.coeff)});
  return Polynomial::from_terms(a.ring_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  if (static_cast<int>(images.size()) != f.ring()->nvars)
    throw UsageError("substitute: one image per variable required");
  if (images.empty()) throw UsageError("substitute: no images");
  const RingPtr& target = images.front().ring();
  // powers[i][e] = images[i]^e, built on demand.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * images[i]);
    return p[e];
  };
  Polynomial out(target);
  for (const Term& t : f.terms()) {
    Polynomial acc = Polynomial::constant(target, 1).scaled(t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (int e = t.mono.exponent(static_cast<int>(i))) acc = acc * power(i, e);
    out += acc;
  }
  return out;
}

}  // namespace p4kit

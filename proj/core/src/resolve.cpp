#include "p4kit/resolve.hpp"

#include <algorithm>
#include <sstream>

#include "p4kit/errors.hpp"

namespace p4kit {

namespace {

std::vector<std::vector<Polynomial>> eliminate_impl(
    const RingPtr& ring, const GradedFreeModule& top,
    const GradedFreeModule& tail,
    const std::vector<std::vector<Polynomial>>& columns,
    const GBOptions& options, std::vector<Monomial> tail_weights,
    std::vector<int> tail_ties, const ModuleOrder* top_order = nullptr) {
  const std::size_t rt = top.rank(), rs = tail.rank();
  GradedFreeModule all = top + tail;
  std::vector<int> blocks(rt, 0), ties(rt);
  std::vector<Monomial> weights(rt);
  for (std::size_t i = 0; i < rt; ++i) {
    ties[i] = top_order ? top_order->tie(static_cast<std::uint32_t>(i)) : static_cast<int>(i);
    if (top_order) weights[i] = top_order->weight(static_cast<std::uint32_t>(i));
  }
  blocks.resize(rt + rs, 1);
  weights.insert(weights.end(), tail_weights.begin(), tail_weights.end());
  ties.insert(ties.end(), tail_ties.begin(), tail_ties.end());
  ModuleOrder order = ModuleOrder::make(all.twists, std::move(blocks),
                                        std::move(weights), std::move(ties));
  std::vector<SVec> gens;
  gens.reserve(columns.size());
  for (const auto& col : columns) {
    if (col.size() != rt + rs) throw ShapeError("column length mismatch");
    column_degree(all, col);
    gens.push_back(to_svec(order, ring->field, col));
  }
  GBRun run = run_groebner(ring->field, order, std::move(gens), options);
  std::vector<std::vector<Polynomial>> out;
  for (const SVec& v : run.basis) {
    if (v.front().comp < rt) continue;
    SVec shifted = v;
    for (ModTerm& t : shifted) t.comp -= static_cast<std::uint32_t>(rt);
    out.push_back(from_svec(ring, rs, shifted));
  }
  return out;
}

std::vector<std::vector<Polynomial>> nonzero_columns(const GradedMatrix& m) {
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto c = m.column(j);
    if (std::any_of(c.begin(), c.end(), [](const Polynomial& p) { return !p.is_zero(); }))
      cols.push_back(std::move(c));
  }
  return cols;
}

}  // namespace

std::vector<std::vector<Polynomial>> eliminate_top(
    const RingPtr& ring, const GradedFreeModule& top,
    const GradedFreeModule& tail,
    const std::vector<std::vector<Polynomial>>& columns,
    const GBOptions& options) {
  std::vector<int> ties(tail.rank());
  for (std::size_t k = 0; k < ties.size(); ++k) ties[k] = static_cast<int>(k);
  return eliminate_impl(ring, top, tail, columns, options,
                        std::vector<Monomial>(tail.rank()), std::move(ties));
}

GradedMatrix syzygies(const GradedMatrix& a) {
  return syzygies(a, ModuleOrder::position(a.target()));
}

GradedMatrix syzygies(const GradedMatrix& a, const ModuleOrder& top_order) {
  const RingPtr& ring = a.ring();
  if (top_order.rank() != a.rows()) throw ShapeError("order does not fit the target");
  const std::size_t rt = a.rows(), nc = a.cols();
  std::vector<Monomial> weights(nc);
  std::vector<int> ties(nc);
  std::vector<std::vector<Polynomial>> columns;
  columns.reserve(nc);
  for (std::size_t k = 0; k < nc; ++k) {
    auto col = a.column(k);
    SVec v = to_svec(top_order, ring->field, col);
    // Schreyer-style weights: compare syzygy terms through the leading terms
    // of the images, which keeps the elimination close to Schreyer's order.
    if (v.empty()) {
      ties[k] = static_cast<int>(rt * nc + k);
    } else {
      weights[k] = v.front().mono;
      ties[k] = static_cast<int>(v.front().comp * nc + k);
    }
    for (std::size_t j = 0; j < nc; ++j)
      col.push_back(j == k ? Polynomial::constant(ring, 1) : Polynomial(ring));
    columns.push_back(std::move(col));
  }
  auto tails = eliminate_impl(ring, a.target(), a.source(), columns, {},
                              std::move(weights), std::move(ties), &top_order);
  if (tails.empty()) return GradedMatrix(ring, a.source(), GradedFreeModule{});
  return GradedMatrix::from_columns(ring, a.source(), tails);
}

ModuleOrder schreyer_order(const GradedMatrix& a) {
  ModuleOrder pos = ModuleOrder::position(a.target());
  const std::size_t rt = a.rows(), nc = a.cols();
  std::vector<Monomial> weights(nc);
  std::vector<int> ties(nc);
  for (std::size_t k = 0; k < nc; ++k) {
    SVec v = to_svec(pos, a.ring()->field, a.column(k));
    if (v.empty()) {
      ties[k] = static_cast<int>(rt * nc + k);
    } else {
      weights[k] = v.front().mono;
      ties[k] = static_cast<int>(v.front().comp * nc + k);
    }
  }
  return ModuleOrder::make(a.source().twists, std::vector<int>(nc, 0), std::move(weights),
                           std::move(ties));
}

GradedMatrix syzygies(const GroebnerBasis& g) {
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t i = 0; i < g.size(); ++i) cols.push_back(g.element(i));
  if (cols.empty()) return GradedMatrix(g.ring(), GradedFreeModule{}, GradedFreeModule{});
  return syzygies(GradedMatrix::from_columns(g.ring(), g.ambient(), cols));
}

GradedMatrix prune_presentation(const GradedMatrix& p) {
  const RingPtr& ring = p.ring();
  auto cols = nonzero_columns(p);
  GradedMatrix m = cols.empty()
                       ? GradedMatrix(ring, p.target(), GradedFreeModule{})
                       : GradedMatrix::from_columns(ring, p.target(), cols);
  while (true) {
    std::optional<std::pair<std::size_t, std::size_t>> unit;
    for (std::size_t i = 0; i < m.rows() && !unit; ++i)
      for (std::size_t j = 0; j < m.cols() && !unit; ++j)
        if (!m.at(i, j).is_zero() && m.at(i, j).degree() == 0) unit = {i, j};
    if (!unit) break;
    auto [ui, uj] = *unit;
    const std::uint32_t inv = ring->field.inv(m.at(ui, uj).leading_term().coeff);
    GradedFreeModule target, source;
    std::vector<std::size_t> rows, colsk;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != ui) {
        rows.push_back(i);
        target.twists.push_back(m.target().twists[i]);
      }
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (j != uj) {
        colsk.push_back(j);
        source.twists.push_back(m.source().twists[j]);
      }
    GradedMatrix next(ring, target, source);
    for (std::size_t a = 0; a < rows.size(); ++a) {
      const Polynomial& pivot_col = m.at(rows[a], uj);
      for (std::size_t b = 0; b < colsk.size(); ++b) {
        Polynomial e = m.at(rows[a], colsk[b]);
        if (!pivot_col.is_zero() && !m.at(ui, colsk[b]).is_zero())
          e -= (pivot_col * m.at(ui, colsk[b])).scaled(inv);
        next.set(a, b, std::move(e));
      }
    }
    auto nz = nonzero_columns(next);
    m = nz.empty() ? GradedMatrix(ring, target, GradedFreeModule{})
                   : GradedMatrix::from_columns(ring, target, nz);
  }
  if (m.cols() == 0) return m;
  return minimal_generators(m);
}

GradedModule subquotient(const GradedMatrix& z, const GradedMatrix& r) {
  return subquotient(z, r, ModuleOrder::position(z.target()));
}

GradedModule subquotient(const GradedMatrix& z, const GradedMatrix& r,
                         const ModuleOrder& target_order) {
  const RingPtr& ring = z.ring();
  if (z.target() != r.target()) throw ShapeError("subquotient targets differ");
  GradedMatrix both = z.concat_columns(r);
  GradedMatrix s = syzygies(both, target_order);
  std::vector<std::size_t> keep(z.cols());
  for (std::size_t k = 0; k < keep.size(); ++k) keep[k] = k;
  GradedMatrix proj = s.cols() == 0 ? GradedMatrix(ring, z.source(), GradedFreeModule{})
                                    : s.select_rows(keep);
  return GradedModule(prune_presentation(proj));
}

void BettiTable::add(int step, int twist, int count) {
  if (count == 0) return;
  entries_[{step, twist}] += count;
  if (entries_[{step, twist}] == 0) entries_.erase({step, twist});
}

int BettiTable::at(int step, int twist) const {
  auto it = entries_.find({step, twist});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::rank(int step) const {
  int r = 0;
  for (const auto& [k, v] : entries_)
    if (k.first == step) r += v;
  return r;
}

int BettiTable::length() const {
  int len = 0;
  for (const auto& [k, v] : entries_) len = std::max(len, k.first);
  return len;
}

int BettiTable::alternating_rank() const {
  int r = 0;
  for (const auto& [k, v] : entries_) r += (k.first % 2 == 0 ? v : -v);
  return r;
}

BettiTable BettiTable::shifted_steps(int k) const {
  BettiTable out;
  for (const auto& [key, v] : entries_) out.add(key.first + k, key.second, v);
  return out;
}

std::string BettiTable::to_text() const {
  if (entries_.empty()) return "(zero)\n";
  int min_step = entries_.begin()->first.first, max_step = min_step;
  int min_row = entries_.begin()->first.second - min_step, max_row = min_row;
  for (const auto& [k, v] : entries_) {
    min_step = std::min(min_step, k.first);
    max_step = std::max(max_step, k.first);
    min_row = std::min(min_row, k.second - k.first);
    max_row = std::max(max_row, k.second - k.first);
  }
  std::ostringstream os;
  auto cell = [&](const std::string& s) {
    os << std::string(s.size() < 4 ? 4 - s.size() : 1, ' ') << s;
  };
  os << "       ";
  for (int s = min_step; s <= max_step; ++s) cell(std::to_string(s));
  os << "\ntotal:";
  os << ' ';
  for (int s = min_step; s <= max_step; ++s) cell(std::to_string(rank(s)));
  os << '\n';
  for (int r = min_row; r <= max_row; ++r) {
    std::string label = std::to_string(r) + ":";
    os << std::string(label.size() < 7 ? 7 - label.size() : 0, ' ') << label;
    for (int s = min_step; s <= max_step; ++s) {
      int v = at(s, r + s);
      cell(v ? std::to_string(v) : ".");
    }
    os << '\n';
  }
  return os.str();
}

std::string BettiTable::summary() const {
  std::ostringstream os;
  int last = -1000;
  bool first_in_step = true;
  for (const auto& [k, v] : entries_) {
    if (k.first != last) {
      if (last != -1000) os << "; ";
      last = k.first;
      first_in_step = true;
    }
    if (!first_in_step) os << "+";
    first_in_step = false;
    if (v != 1) os << v;
    os << "S";
    if (k.second > 0) os << "(-" << k.second << ")";
    if (k.second < 0) os << "(" << -k.second << ")";
  }
  return os.str();
}

Resolution minimal_free_resolution(const GradedModule& m, int max_steps) {
  Resolution res;
  GradedMatrix d = prune_presentation(m.presentation());
  res.f0 = d.target();
  res.minimal = true;
  if (d.cols() == 0) return res;
  res.maps.push_back(d);
  for (int step = 1; step < max_steps; ++step) {
    GradedMatrix s = syzygies(d);
    if (s.cols() == 0) break;
    s = minimal_generators(s);
    if (s.cols() == 0) break;
    res.maps.push_back(s);
    d = std::move(s);
  }
  return res;
}

BettiTable betti_table(const Resolution& r) {
  if (!r.minimal) throw UsageError("Betti table needs a minimal resolution");
  BettiTable t;
  for (std::size_t step = 0; step <= r.maps.size(); ++step)
    for (int d : r.module(step).twists) t.add(static_cast<int>(step), d, 1);
  return t;
}

BettiTable ideal_betti_table(const std::vector<Polynomial>& ideal) {
  if (ideal.empty()) throw UsageError("empty generator list");
  Resolution r = minimal_free_resolution(
      GradedModule::quotient_ring(ideal.front().ring(), ideal));
  BettiTable t = betti_table(r);
  BettiTable out;
  for (const auto& [k, v] : t.entries())
    if (k.first >= 1) out.add(k.first - 1, k.second, v);
  return out;
}

}  // namespace p4kit

#include "p4kit/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "p4kit/errors.hpp"

namespace p4kit {

ModuleOrder ModuleOrder::position(const GradedFreeModule& module) {
  std::vector<int> ties(module.rank());
  std::iota(ties.begin(), ties.end(), 0);
  return make(module.twists, std::vector<int>(module.rank(), 0),
              std::vector<Monomial>(module.rank()), std::move(ties));
}

ModuleOrder ModuleOrder::make(std::vector<int> twists, std::vector<int> blocks,
                              std::vector<Monomial> weights,
                              std::vector<int> ties) {
  if (blocks.size() != twists.size() || weights.size() != twists.size() ||
      ties.size() != twists.size())
    throw ShapeError("module order data of inconsistent lengths");
  ModuleOrder o;
  o.twists_ = std::move(twists);
  o.blocks_ = std::move(blocks);
  o.weights_ = std::move(weights);
  o.ties_ = std::move(ties);
  return o;
}

void ModuleOrder::normalize(SVec& v, const PrimeField& field) const {
  std::sort(v.begin(), v.end(), [this](const ModTerm& a, const ModTerm& b) {
    return key(a.mono, a.comp) > key(b.mono, b.comp);
  });
  SVec out;
  out.reserve(v.size());
  for (const ModTerm& t : v) {
    std::uint32_t c = t.coeff % field.characteristic();
    if (!out.empty() && out.back().mono == t.mono && out.back().comp == t.comp) {
      out.back().coeff = field.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({t.mono, t.comp, c});
    }
  }
  v = std::move(out);
}

namespace {

struct TermId {
  std::uint64_t mono;
  std::uint32_t comp;
  friend bool operator==(const TermId&, const TermId&) = default;
};

struct TermIdHash {
  std::size_t operator()(const TermId& t) const noexcept {
    std::uint64_t x = t.mono * 0x9E3779B97F4A7C15ULL ^
                      (static_cast<std::uint64_t>(t.comp) * 0xC2B2AE3D27D4EB4FULL);
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

struct Product {
  Monomial mult;
  const SVec* poly;
};

struct SparseRow {
  std::vector<std::uint32_t> cols;
  std::vector<std::uint32_t> vals;
  bool empty() const { return cols.empty(); }
};

// Leading-term lookup for reducer selection.
class ReducerIndex {
 public:
  explicit ReducerIndex(std::size_t rank) : by_comp_(rank) {}
  void add(std::uint32_t idx, Monomial lead, std::uint32_t comp) {
    by_comp_[comp].push_back({lead, idx});
  }
  int find(Monomial m, std::uint32_t comp) const {
    for (const auto& [lead, idx] : by_comp_[comp])
      if (lead.divides(m)) return static_cast<int>(idx);
    return -1;
  }
  const std::vector<std::pair<Monomial, std::uint32_t>>& component(
      std::uint32_t comp) const {
    return by_comp_[comp];
  }

 private:
  std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> by_comp_;
};

// Sparse Macaulay matrix after symbolic preprocessing. Columns are sorted by
// decreasing term order, so the leading entry of a row is its first one.
struct Macaulay {
  std::vector<TermId> column_terms;
  std::vector<SparseRow> reducers;  // multiples of basis elements, monic
  std::vector<SparseRow> initial;   // rows handed in by the caller
};

Macaulay build_macaulay(const ModuleOrder& order, const PrimeField& field,
                        std::span<const SVec> basis, const ReducerIndex& index,
                        std::span<const Product> initial, bool cover_leads) {
  std::unordered_map<TermId, std::uint32_t, TermIdHash> term_index;
  std::vector<TermId> terms;
  std::vector<char> covered;
  auto reg = [&](Monomial m, std::uint32_t comp) -> std::uint32_t {
    TermId id{m.bits(), comp};
    auto [it, inserted] =
        term_index.emplace(id, static_cast<std::uint32_t>(terms.size()));
    if (inserted) {
      terms.push_back(id);
      covered.push_back(0);
    }
    return it->second;
  };

  for (const Product& p : initial) {
    bool first = true;
    for (const ModTerm& t : *p.poly) {
      std::uint32_t id = reg(p.mult * t.mono, t.comp);
      if (first && cover_leads) covered[id] = 1;
      first = false;
    }
  }
  std::vector<Product> reducer_products;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (covered[i]) continue;
    Monomial m = Monomial::from_bits(terms[i].mono);
    int g = index.find(m, terms[i].comp);
    if (g < 0) continue;
    covered[i] = 1;
    const SVec& b = basis[g];
    Product r{m / b.front().mono, &b};
    reducer_products.push_back(r);
    for (const ModTerm& t : b) reg(r.mult * t.mono, t.comp);
  }

  std::vector<TermKey> keys(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    keys[i] = order.key(Monomial::from_bits(terms[i].mono), terms[i].comp);
  std::vector<std::uint32_t> perm(terms.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::uint32_t a, std::uint32_t b) { return keys[a] > keys[b]; });
  std::vector<std::uint32_t> col_of(terms.size());
  Macaulay mac;
  mac.column_terms.resize(terms.size());
  for (std::size_t c = 0; c < perm.size(); ++c) {
    col_of[perm[c]] = static_cast<std::uint32_t>(c);
    mac.column_terms[c] = terms[perm[c]];
  }

  auto make_row = [&](const Product& p, bool monic) {
    SparseRow row;
    row.cols.reserve(p.poly->size());
    row.vals.reserve(p.poly->size());
    std::uint32_t scale = 1;
    if (monic && p.poly->front().coeff != 1)
      scale = field.inv(p.poly->front().coeff);
    for (const ModTerm& t : *p.poly) {
      row.cols.push_back(col_of[term_index.at({(p.mult * t.mono).bits(), t.comp})]);
      row.vals.push_back(scale == 1 ? t.coeff : field.mul(t.coeff, scale));
    }
    return row;
  };
  mac.reducers.reserve(reducer_products.size());
  for (const Product& p : reducer_products)
    mac.reducers.push_back(make_row(p, true));
  mac.initial.reserve(initial.size());
  for (const Product& p : initial) mac.initial.push_back(make_row(p, false));
  return mac;
}

// Dense-accumulator row reduction against a table of monic pivot rows.
class RowReducer {
 public:
  RowReducer(const PrimeField& field, std::size_t ncols)
      : field_(field),
        p_(field.characteristic()),
        lazy_(field.characteristic() < (1u << 20)),
        acc_(ncols, 0) {}

  // Reduces every entry that has a pivot; if keep_lead the first entry is
  // left alone. Returns the remainder (not normalized).
  SparseRow reduce(const SparseRow& row,
                   const std::vector<const SparseRow*>& pivots,
                   bool keep_lead = false) {
    SparseRow out;
    if (row.empty()) return out;
    for (std::size_t k = 0; k < row.cols.size(); ++k)
      acc_[row.cols[k]] = row.vals[k];
    std::size_t start = row.cols.front();
    if (keep_lead) {
      out.cols.push_back(row.cols.front());
      out.vals.push_back(row.vals.front());
      acc_[start] = 0;
      ++start;
    }
    const std::size_t ncols = acc_.size();
    for (std::size_t col = start; col < ncols; ++col) {
      std::uint64_t v = acc_[col];
      if (v == 0) continue;
      acc_[col] = 0;
      v %= p_;
      if (v == 0) continue;
      const SparseRow* piv = pivots[col];
      if (piv == nullptr) {
        out.cols.push_back(static_cast<std::uint32_t>(col));
        out.vals.push_back(static_cast<std::uint32_t>(v));
        continue;
      }
      const std::uint64_t f = p_ - v;
      const std::size_t n = piv->cols.size();
      const std::uint32_t* pc = piv->cols.data();
      const std::uint32_t* pv = piv->vals.data();
      if (lazy_) {
        for (std::size_t k = 1; k < n; ++k) acc_[pc[k]] += f * pv[k];
      } else {
        for (std::size_t k = 1; k < n; ++k)
          acc_[pc[k]] = (acc_[pc[k]] + f * pv[k] % p_) % p_;
      }
    }
    return out;
  }

  void make_monic(SparseRow& row) const {
    if (row.empty() || row.vals.front() == 1) return;
    std::uint32_t inv = field_.inv(row.vals.front());
    for (auto& v : row.vals) v = field_.mul(v, inv);
  }

 private:
  const PrimeField& field_;
  std::uint64_t p_;
  bool lazy_;
  std::vector<std::uint64_t> acc_;
};

SVec row_to_svec(const SparseRow& row, const std::vector<TermId>& col_terms) {
  SVec v;
  v.reserve(row.cols.size());
  for (std::size_t k = 0; k < row.cols.size(); ++k) {
    const TermId& t = col_terms[row.cols[k]];
    v.push_back({Monomial::from_bits(t.mono), t.comp, row.vals[k]});
  }
  return v;
}

std::atomic<unsigned> g_workers{1};

// Reduces every row against a fixed pivot table. Rows are independent, so
// they are split over the allowed workers; the output does not depend on the
// split.
std::vector<SparseRow> reduce_rows(const PrimeField& field, std::size_t ncols,
                                   const std::vector<SparseRow>& rows,
                                   const std::vector<const SparseRow*>& table) {
  std::vector<SparseRow> out(rows.size());
  const std::size_t workers =
      std::min<std::size_t>(g_workers.load(), rows.size() / 32 + 1);
  if (workers <= 1) {
    RowReducer reducer(field, ncols);
    for (std::size_t i = 0; i < rows.size(); ++i) out[i] = reducer.reduce(rows[i], table);
    return out;
  }
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      RowReducer reducer(field, ncols);
      for (std::size_t i = w; i < rows.size(); i += workers)
        out[i] = reducer.reduce(rows[i], table);
    });
  }
  for (auto& t : threads) t.join();
  return out;
}

// Sequential echelon form of remainders followed by back substitution.
// `produced[i]` records whether remainders[i] contributed a new pivot.
std::vector<SparseRow> echelonize(RowReducer& reducer, std::size_t ncols,
                                  const std::vector<SparseRow>& remainders,
                                  std::vector<char>* produced) {
  std::deque<SparseRow> rows;
  std::vector<const SparseRow*> table(ncols, nullptr);
  if (produced) produced->assign(remainders.size(), 0);
  for (std::size_t i = 0; i < remainders.size(); ++i) {
    if (remainders[i].empty()) continue;
    SparseRow r = reducer.reduce(remainders[i], table);
    if (r.empty()) continue;
    reducer.make_monic(r);
    rows.push_back(std::move(r));
    table[rows.back().cols.front()] = &rows.back();
    if (produced) (*produced)[i] = 1;
  }
  std::vector<SparseRow*> by_lead;
  for (auto& r : rows) by_lead.push_back(&r);
  std::sort(by_lead.begin(), by_lead.end(), [](SparseRow* a, SparseRow* b) {
    return a->cols.front() > b->cols.front();
  });
  for (SparseRow* r : by_lead) {
    if (r->cols.size() > 1) *r = reducer.reduce(*r, table, true);
  }
  std::vector<SparseRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(r));
  return out;
}

struct Lead {
  Monomial mono;
  std::uint32_t comp;
  int degree;
};

struct Pair {
  std::uint32_t i;
  std::uint32_t j;
  Monomial lcm;
  std::uint32_t comp;
  int degree;
};

class Engine {
 public:
  Engine(const PrimeField& field, const ModuleOrder& order)
      : field_(field), order_(order), index_(order.rank()),
        ideal_case_(order.rank() == 1) {}

  GBRun run(std::vector<SVec> gens, const GBOptions& options);

 private:
  void add_element(SVec v);
  std::vector<SVec> reduce_pairs(std::vector<Pair> batch);
  std::vector<SVec> reduce_inputs(const std::vector<const SVec*>& inputs,
                                  std::vector<char>& produced);
  void interreduce(std::vector<std::size_t> members);

  const PrimeField& field_;
  const ModuleOrder& order_;
  std::vector<SVec> basis_;
  std::vector<Lead> leads_;
  ReducerIndex index_;
  std::vector<Pair> pairs_;
  bool ideal_case_;
};

void Engine::add_element(SVec v) {
  const std::uint32_t h = static_cast<std::uint32_t>(basis_.size());
  Lead lh{v.front().mono, v.front().comp, order_.degree(v.front().mono, v.front().comp)};

  // Gebauer-Moeller: drop old pairs whose lcm is a proper multiple of the
  // new lead through both of its partners.
  std::erase_if(pairs_, [&](const Pair& p) {
    if (p.comp != lh.comp || !lh.mono.divides(p.lcm)) return false;
    return leads_[p.i].mono.lcm(lh.mono) != p.lcm &&
           leads_[p.j].mono.lcm(lh.mono) != p.lcm;
  });

  struct Cand {
    std::uint32_t g;
    Monomial lcm;
    bool coprime;
    bool alive;
  };
  std::vector<Cand> cand;
  for (const auto& [lead, g] : index_.component(lh.comp)) {
    Monomial l = lead.lcm(lh.mono);
    cand.push_back({g, l, ideal_case_ && lead.coprime(lh.mono), true});
  }
  std::sort(cand.begin(), cand.end(), [](const Cand& a, const Cand& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    return a.lcm.bits() < b.lcm.bits();
  });
  // Criterion M: lcm properly divisible by another new pair's lcm.
  for (std::size_t a = 0; a < cand.size(); ++a) {
    for (std::size_t b = 0; b < cand.size(); ++b) {
      if (cand[b].lcm.degree() >= cand[a].lcm.degree()) break;
      if (cand[b].lcm.divides(cand[a].lcm)) {
        cand[a].alive = false;
        break;
      }
    }
  }
  // Criterion F plus the product criterion among equal lcms.
  for (std::size_t a = 0; a < cand.size();) {
    std::size_t b = a;
    bool any_coprime = false;
    while (b < cand.size() && cand[b].lcm == cand[a].lcm) {
      any_coprime = any_coprime || cand[b].coprime;
      ++b;
    }
    bool kept = false;
    for (std::size_t k = a; k < b; ++k) {
      if (!cand[k].alive) continue;
      if (any_coprime || kept) {
        cand[k].alive = false;
      } else {
        kept = true;
      }
    }
    a = b;
  }
  for (const Cand& c : cand) {
    if (!c.alive) continue;
    pairs_.push_back({c.g, h, c.lcm, lh.comp, order_.degree(c.lcm, lh.comp)});
  }

  basis_.push_back(std::move(v));
  leads_.push_back(lh);
  index_.add(h, lh.mono, lh.comp);
}

std::vector<SVec> Engine::reduce_pairs(std::vector<Pair> batch) {
  std::vector<Product> products;
  std::unordered_set<TermId, TermIdHash> seen;  // (multiplier, element)
  auto push = [&](Monomial mult, std::uint32_t idx) {
    if (seen.insert({mult.bits(), idx}).second)
      products.push_back({mult, &basis_[idx]});
  };
  for (const Pair& p : batch) {
    push(p.lcm / leads_[p.i].mono, p.i);
    push(p.lcm / leads_[p.j].mono, p.j);
  }
  Macaulay mac = build_macaulay(order_, field_, basis_, index_, products, true);
  const std::size_t ncols = mac.column_terms.size();
  RowReducer reducer(field_, ncols);
  std::vector<const SparseRow*> table(ncols, nullptr);
  for (const SparseRow& r : mac.reducers) table[r.cols.front()] = &r;
  std::vector<SparseRow> todo;
  for (SparseRow& r : mac.initial) {
    if (table[r.cols.front()] == nullptr) {
      reducer.make_monic(r);
      table[r.cols.front()] = &r;
    } else {
      todo.push_back(r);
    }
  }
  std::vector<SparseRow> remainders;
  for (SparseRow& rem : reduce_rows(field_, ncols, todo, table))
    if (!rem.empty()) remainders.push_back(std::move(rem));
  std::vector<SparseRow> fresh = echelonize(reducer, ncols, remainders, nullptr);
  std::vector<SVec> out;
  for (const SparseRow& r : fresh) out.push_back(row_to_svec(r, mac.column_terms));
  return out;
}

std::vector<SVec> Engine::reduce_inputs(const std::vector<const SVec*>& inputs,
                                        std::vector<char>& produced) {
  std::vector<Product> products;
  for (const SVec* v : inputs) products.push_back({Monomial(), v});
  Macaulay mac = build_macaulay(order_, field_, basis_, index_, products, false);
  const std::size_t ncols = mac.column_terms.size();
  RowReducer reducer(field_, ncols);
  std::vector<const SparseRow*> table(ncols, nullptr);
  for (const SparseRow& r : mac.reducers) table[r.cols.front()] = &r;
  std::vector<SparseRow> remainders = reduce_rows(field_, ncols, mac.initial, table);
  std::vector<SparseRow> fresh = echelonize(reducer, ncols, remainders, &produced);
  std::vector<SVec> out;
  for (const SparseRow& r : fresh) out.push_back(row_to_svec(r, mac.column_terms));
  return out;
}

// Makes the given same-degree basis elements (distinct leads) tail-reduced
// against each other.
void Engine::interreduce(std::vector<std::size_t> members) {
  if (members.size() < 2) return;
  std::unordered_map<TermId, std::uint32_t, TermIdHash> term_index;
  std::vector<TermId> terms;
  for (std::size_t m : members)
    for (const ModTerm& t : basis_[m])
      if (term_index.emplace(TermId{t.mono.bits(), t.comp},
                             static_cast<std::uint32_t>(terms.size()))
              .second)
        terms.push_back({t.mono.bits(), t.comp});
  std::vector<std::uint32_t> perm(terms.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return order_.key(Monomial::from_bits(terms[a].mono), terms[a].comp) >
           order_.key(Monomial::from_bits(terms[b].mono), terms[b].comp);
  });
  std::vector<std::uint32_t> col_of(terms.size());
  std::vector<TermId> col_terms(terms.size());
  for (std::size_t c = 0; c < perm.size(); ++c) {
    col_of[perm[c]] = static_cast<std::uint32_t>(c);
    col_terms[c] = terms[perm[c]];
  }
  std::vector<SparseRow> rows(members.size());
  for (std::size_t k = 0; k < members.size(); ++k)
    for (const ModTerm& t : basis_[members[k]]) {
      rows[k].cols.push_back(col_of[term_index.at({t.mono.bits(), t.comp})]);
      rows[k].vals.push_back(t.coeff);
    }
  RowReducer reducer(field_, terms.size());
  std::vector<const SparseRow*> table(terms.size(), nullptr);
  for (const SparseRow& r : rows) table[r.cols.front()] = &r;
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows[a].cols.front() > rows[b].cols.front();
  });
  for (std::size_t k : order)
    if (rows[k].cols.size() > 1) rows[k] = reducer.reduce(rows[k], table, true);
  for (std::size_t k = 0; k < members.size(); ++k)
    basis_[members[k]] = row_to_svec(rows[k], col_terms);
}

GBRun Engine::run(std::vector<SVec> gens, const GBOptions& options) {
  struct Input {
    std::size_t index;
    int degree;
  };
  std::vector<Input> inputs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    order_.normalize(gens[i], field_);
    if (gens[i].empty()) continue;
    int d = order_.degree(gens[i].front().mono, gens[i].front().comp);
    for (const ModTerm& t : gens[i]) {
      if (t.comp >= order_.rank())
        throw ShapeError("module element component out of range");
      if (order_.degree(t.mono, t.comp) != d)
        throw UsageError("inhomogeneous generator passed to Groebner engine");
    }
    inputs.push_back({i, d});
  }
  std::stable_sort(inputs.begin(), inputs.end(),
                   [](const Input& a, const Input& b) { return a.degree < b.degree; });

  GBRun result;
  std::size_t next_input = 0;
  while (true) {
    std::optional<int> degree;
    for (const Pair& p : pairs_)
      if (!degree || p.degree < *degree) degree = p.degree;
    if (next_input < inputs.size() &&
        (!degree || inputs[next_input].degree < *degree))
      degree = inputs[next_input].degree;
    if (!degree) break;
    if (options.max_degree && *degree > *options.max_degree) {
      result.complete = false;
      break;
    }
    const int d = *degree;
    std::vector<std::size_t> fresh_members;

    std::vector<Pair> batch;
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.degree != d) return false;
      batch.push_back(p);
      return true;
    });
    if (!batch.empty()) {
      for (SVec& v : reduce_pairs(std::move(batch))) {
        fresh_members.push_back(basis_.size());
        add_element(std::move(v));
      }
    }

    std::vector<const SVec*> now;
    std::vector<std::size_t> now_index;
    while (next_input < inputs.size() && inputs[next_input].degree == d) {
      now.push_back(&gens[inputs[next_input].index]);
      now_index.push_back(inputs[next_input].index);
      ++next_input;
    }
    if (!now.empty()) {
      std::vector<char> produced;
      for (SVec& v : reduce_inputs(now, produced)) {
        fresh_members.push_back(basis_.size());
        add_element(std::move(v));
      }
      for (std::size_t k = 0; k < now.size(); ++k)
        if (produced[k]) result.minimal_inputs.push_back(now_index[k]);
    }
    interreduce(fresh_members);
    result.degree_reached = d;
    if (options.after_degree && options.after_degree(d, basis_)) {
      result.complete = false;
      break;
    }
  }
  std::sort(result.minimal_inputs.begin(), result.minimal_inputs.end());

  std::vector<std::size_t> perm(basis_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (leads_[a].degree != leads_[b].degree)
      return leads_[a].degree < leads_[b].degree;
    return order_.key(leads_[a].mono, leads_[a].comp) >
           order_.key(leads_[b].mono, leads_[b].comp);
  });
  result.basis.reserve(basis_.size());
  for (std::size_t k : perm) result.basis.push_back(std::move(basis_[k]));
  return result;
}

}  // namespace

namespace {

std::mutex g_cache_mutex;
std::optional<std::filesystem::path> g_cache_dir;

// Two FNV-1a streams with different offsets give a 128-bit content key.
struct KeyHasher {
  std::uint64_t a = 0xcbf29ce484222325ULL, b = 0x84222325cbf29ce4ULL;
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      std::uint8_t byte = static_cast<std::uint8_t>(v >> (8 * i));
      a = (a ^ byte) * 0x100000001b3ULL;
      b = (b ^ byte) * 0x100000001b3ULL;
      b ^= b >> 29;
    }
  }
  std::string hex() const {
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(a),
                  static_cast<unsigned long long>(b));
    return buf;
  }
};

std::string cache_key(const PrimeField& field, const ModuleOrder& order,
                      const std::vector<SVec>& gens, const GBOptions& options) {
  KeyHasher h;
  h.add(field.characteristic());
  h.add(order.rank());
  for (std::uint32_t c = 0; c < order.rank(); ++c) {
    h.add(static_cast<std::uint64_t>(static_cast<std::int64_t>(order.twist(c))));
    h.add(static_cast<std::uint64_t>(order.block(c)));
    h.add(order.weight(c).bits());
    h.add(static_cast<std::uint64_t>(order.tie(c)));
  }
  h.add(options.max_degree ? static_cast<std::uint64_t>(*options.max_degree) + 1 : 0);
  h.add(options.track_minimal);
  h.add(gens.size());
  for (const SVec& v : gens) {
    h.add(v.size());
    for (const ModTerm& t : v) {
      h.add(t.mono.bits());
      h.add(t.comp);
      h.add(t.coeff);
    }
  }
  return h.hex();
}

std::optional<GBRun> cache_load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string magic;
  GBRun run;
  std::size_t nmin = 0, nbasis = 0;
  if (!(in >> magic) || magic != "p4kit-gb-1") return std::nullopt;
  if (!(in >> run.complete >> run.degree_reached >> nmin)) return std::nullopt;
  run.minimal_inputs.resize(nmin);
  for (auto& m : run.minimal_inputs) in >> m;
  in >> nbasis;
  run.basis.resize(nbasis);
  for (SVec& v : run.basis) {
    std::size_t n = 0;
    in >> n;
    v.resize(n);
    for (ModTerm& t : v) {
      std::uint64_t bits = 0;
      in >> bits >> t.comp >> t.coeff;
      t.mono = Monomial::from_bits(bits);
    }
  }
  if (!in) return std::nullopt;
  return run;
}

void cache_store(const std::filesystem::path& file, const GBRun& run) {
  std::ostringstream out;
  out << "p4kit-gb-1\n" << run.complete << ' ' << run.degree_reached << ' '
      << run.minimal_inputs.size();
  for (auto m : run.minimal_inputs) out << ' ' << m;
  out << '\n' << run.basis.size() << '\n';
  for (const SVec& v : run.basis) {
    out << v.size();
    for (const ModTerm& t : v) out << ' ' << t.mono.bits() << ' ' << t.comp << ' ' << t.coeff;
    out << '\n';
  }
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  // Write then rename so concurrent readers never see a partial entry.
  auto tmp = file;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream f(tmp);
    if (!f) return;
    f << out.str();
    if (!f) return;
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

// Only runs slower than this are worth a file.
constexpr double kCacheThresholdSeconds = 0.05;

}  // namespace

void set_worker_count(unsigned workers) { g_workers = std::max(1u, workers); }
unsigned worker_count() { return g_workers.load(); }

void set_gb_cache_dir(std::optional<std::filesystem::path> dir) {
  std::lock_guard lock(g_cache_mutex);
  g_cache_dir = std::move(dir);
}

std::optional<std::filesystem::path> gb_cache_dir() {
  std::lock_guard lock(g_cache_mutex);
  return g_cache_dir;
}

GBRun run_groebner(const PrimeField& field, const ModuleOrder& order,
                   std::vector<SVec> generators, const GBOptions& options) {
  // Runs with a callback are not cached; the callback may stop them early.
  std::optional<std::filesystem::path> dir;
  if (!options.after_degree) dir = gb_cache_dir();
  std::filesystem::path file;
  if (dir) {
    std::string key = cache_key(field, order, generators, options);
    file = *dir / key.substr(0, 2) / (key + ".gb");
    if (auto hit = cache_load(file)) return std::move(*hit);
  }
  auto start = std::chrono::steady_clock::now();
  Engine engine(field, order);
  GBRun run = engine.run(std::move(generators), options);
  if (dir && std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >=
                 kCacheThresholdSeconds)
    cache_store(file, run);
  return run;
}

SVec reduce_modulo(const PrimeField& field, const ModuleOrder& order,
                   const SVec& f, std::span<const SVec> basis) {
  if (f.empty()) return {};
  ReducerIndex index(order.rank());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].empty())
      index.add(static_cast<std::uint32_t>(i), basis[i].front().mono,
                basis[i].front().comp);
  SVec sorted = f;
  order.normalize(sorted, field);
  if (sorted.empty()) return {};
  Product p{Monomial(), &sorted};
  Macaulay mac = build_macaulay(order, field, basis, index,
                                std::span<const Product>(&p, 1), false);
  RowReducer reducer(field, mac.column_terms.size());
  std::vector<const SparseRow*> table(mac.column_terms.size(), nullptr);
  for (const SparseRow& r : mac.reducers) table[r.cols.front()] = &r;
  SparseRow rem = reducer.reduce(mac.initial.front(), table);
  return row_to_svec(rem, mac.column_terms);
}

SVec to_svec(const ModuleOrder& order, const PrimeField& field,
             std::span<const Polynomial> column) {
  if (column.size() != order.rank())
    throw ShapeError("column length does not match module rank");
  SVec v;
  for (std::size_t i = 0; i < column.size(); ++i)
    for (const Term& t : column[i].terms())
      v.push_back({t.mono, static_cast<std::uint32_t>(i), t.coeff});
  order.normalize(v, field);
  return v;
}

std::vector<Polynomial> from_svec(const RingPtr& ring, std::size_t rank,
                                  const SVec& v) {
  std::vector<std::vector<Term>> parts(rank);
  for (const ModTerm& t : v) parts.at(t.comp).push_back({t.mono, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

int svec_degree(const ModuleOrder& order, const SVec& v) {
  if (v.empty()) throw UsageError("degree of zero module element");
  return order.degree(v.front().mono, v.front().comp);
}

GroebnerBasis::GroebnerBasis(RingPtr ring, GradedFreeModule ambient,
                             ModuleOrder order, std::vector<SVec> elements,
                             bool complete, int degree_reached)
    : ring_(std::move(ring)),
      ambient_(std::move(ambient)),
      order_(std::move(order)),
      elements_(std::move(elements)),
      complete_(complete),
      degree_reached_(degree_reached) {}

std::vector<Polynomial> GroebnerBasis::element(std::size_t i) const {
  return from_svec(ring_, ambient_.rank(), elements_.at(i));
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  if (ambient_.rank() != 1) throw ShapeError("not an ideal basis");
  std::vector<Polynomial> out;
  for (const SVec& v : elements_) out.push_back(from_svec(ring_, 1, v)[0]);
  return out;
}

SVec GroebnerBasis::normal_form(const SVec& f) const {
  return reduce_modulo(ring_->field, order_, f, elements_);
}

std::vector<Polynomial> GroebnerBasis::normal_form(
    std::span<const Polynomial> column) const {
  SVec v = to_svec(order_, ring_->field, column);
  return from_svec(ring_, ambient_.rank(), normal_form(v));
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  return normal_form(std::span<const Polynomial>(&f, 1))[0];
}

bool GroebnerBasis::contains(std::span<const Polynomial> column) const {
  SVec v = to_svec(order_, ring_->field, column);
  if (v.empty()) return true;
  if (!complete_ && svec_degree(order_, v) > degree_reached_)
    throw UsageError("membership test above the truncation degree");
  return normal_form(v).empty();
}

bool GroebnerBasis::contains(const Polynomial& f) const {
  return contains(std::span<const Polynomial>(&f, 1));
}

std::uint64_t GroebnerBasis::standard_count(int degree) const {
  const int n = ring_->nvars;
  std::uint64_t count = 0;
  for (std::size_t c = 0; c < ambient_.rank(); ++c) {
    int d = degree - ambient_.twists[c];
    if (d < 0) continue;
    std::vector<Monomial> leads;
    for (const SVec& v : elements_)
      if (v.front().comp == c && v.front().mono.degree() <= d)
        leads.push_back(v.front().mono);
    if (leads.empty()) {
      count += count_monomials(n, d);
      continue;
    }
    for (Monomial m : monomials_of_degree(n, d)) {
      bool standard = true;
      for (Monomial l : leads)
        if (l.divides(m)) {
          standard = false;
          break;
        }
      if (standard) ++count;
    }
  }
  return count;
}

bool GroebnerBasis::is_unit_ideal() const {
  for (std::size_t c = 0; c < ambient_.rank(); ++c) {
    bool found = false;
    for (const SVec& v : elements_)
      if (v.front().comp == c && v.front().mono.degree() == 0) found = true;
    if (!found) return false;
  }
  return true;
}

GroebnerBasis buchberger(const RingPtr& ring, const GradedFreeModule& ambient,
                         const std::vector<std::vector<Polynomial>>& columns,
                         const GBOptions& options,
                         std::optional<ModuleOrder> order) {
  ModuleOrder ord = order ? *order : ModuleOrder::position(ambient);
  if (ord.rank() != ambient.rank())
    throw ShapeError("module order rank does not match ambient module");
  std::vector<SVec> gens;
  gens.reserve(columns.size());
  for (const auto& col : columns) {
    column_degree(ambient, col);  // homogeneity check
    gens.push_back(to_svec(ord, ring->field, col));
  }
  GBRun run = run_groebner(ring->field, ord, std::move(gens), options);
  return GroebnerBasis(ring, ambient, std::move(ord), std::move(run.basis),
                       run.complete, run.degree_reached);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& ideal_generators,
                         const GBOptions& options) {
  if (ideal_generators.empty())
    throw UsageError("ideal needs at least one generator (possibly zero)");
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& f : ideal_generators) cols.push_back({f});
  return buchberger(ideal_generators.front().ring(), GradedFreeModule{{0}},
                    cols, options);
}

GroebnerBasis buchberger(const GradedMatrix& columns, const GBOptions& options) {
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t j = 0; j < columns.cols(); ++j)
    cols.push_back(columns.column(j));
  return buchberger(columns.ring(), columns.target(), cols, options);
}

std::vector<std::size_t> minimal_generator_indices(
    const RingPtr& ring, const GradedFreeModule& ambient,
    const std::vector<std::vector<Polynomial>>& columns) {
  ModuleOrder ord = ModuleOrder::position(ambient);
  std::vector<SVec> gens;
  std::optional<int> top;
  for (const auto& col : columns) {
    auto d = column_degree(ambient, col);
    if (d && (!top || *d > *top)) top = d;
    gens.push_back(to_svec(ord, ring->field, col));
  }
  GBOptions opts;
  opts.track_minimal = true;
  // Minimality in degree d only sees the basis up to degree d.
  opts.max_degree = top;
  return run_groebner(ring->field, ord, std::move(gens), opts).minimal_inputs;
}

GradedMatrix minimal_generators(const GradedMatrix& columns) {
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t j = 0; j < columns.cols(); ++j)
    cols.push_back(columns.column(j));
  auto keep = minimal_generator_indices(columns.ring(), columns.target(), cols);
  return columns.select_columns(keep);
}

std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& f) {
  if (f.empty()) return {};
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& p : f) cols.push_back({p});
  auto keep = minimal_generator_indices(f.front().ring(), GradedFreeModule{{0}}, cols);
  std::vector<Polynomial> out;
  for (std::size_t k : keep) out.push_back(f[k]);
  return out;
}

}  // namespace p4kit

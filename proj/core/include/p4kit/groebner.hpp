#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "p4kit/matrix.hpp"
#include "p4kit/polynomial.hpp"

namespace p4kit {

// A term of a free-module element: coeff * mono * e_comp.
struct ModTerm {
  Monomial mono;
  std::uint32_t comp;
  std::uint32_t coeff;

  friend bool operator==(const ModTerm&, const ModTerm&) = default;
};

// Sparse module element, terms sorted by decreasing module order.
using SVec = std::vector<ModTerm>;

// Sort key of a module term; larger key == larger term.
struct TermKey {
  std::uint64_t hi;
  std::uint64_t lo;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

// Monomial order on a graded free module. Every basis vector e_j carries a
// block index, a weight monomial W_j and a tie rank. Terms compare by block
// (smaller block is larger), then by grevlex on m * W_j, then by tie rank
// (smaller rank is larger).
//
// * position order: one block, W_j = 1, tie = j (term over position);
// * Schreyer order: W_j = leading monomial of the image of e_j;
// * elimination: the blocks put every term of one summand above another.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  static ModuleOrder position(const GradedFreeModule& module);
  static ModuleOrder make(std::vector<int> twists, std::vector<int> blocks,
                          std::vector<Monomial> weights, std::vector<int> ties);

  std::size_t rank() const { return twists_.size(); }
  int twist(std::uint32_t comp) const { return twists_[comp]; }
  int block(std::uint32_t comp) const { return blocks_[comp]; }
  Monomial weight(std::uint32_t comp) const { return weights_[comp]; }
  int tie(std::uint32_t comp) const { return ties_[comp]; }
  const std::vector<int>& twists() const { return twists_; }

  TermKey key(Monomial m, std::uint32_t comp) const {
    std::uint64_t mk = (m * weights_[comp]).grevlex_key();
    return {(static_cast<std::uint64_t>(0xFFFFFFFFu - blocks_[comp]) << 32) |
                (mk >> 32),
            (mk << 32) | (0xFFFFFFFFu - static_cast<std::uint32_t>(ties_[comp]))};
  }
  int degree(Monomial m, std::uint32_t comp) const {
    return m.degree() + twists_[comp];
  }
  // Orders the terms of v (in place) and merges duplicates.
  void normalize(SVec& v, const PrimeField& field) const;

  friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;

 private:
  std::vector<int> twists_;
  std::vector<int> blocks_;
  std::vector<Monomial> weights_;
  std::vector<int> ties_;
};

struct GBOptions {
  // Stop after this degree; the result is then a truncated basis, exact in
  // all degrees <= max_degree.
  std::optional<int> max_degree;
  // Record which inputs are minimal generators of the submodule.
  bool track_minimal = false;
  // Called after each completed degree; returning true stops the run.
  std::function<bool(int degree, std::span<const SVec> basis)> after_degree;
};

struct GBRun {
  std::vector<SVec> basis;  // reduced, monic, sorted by (degree, lead)
  std::vector<std::size_t> minimal_inputs;
  bool complete = true;
  int degree_reached = 0;
};

// Homogeneous Buchberger with the normal selection strategy and the
// Gebauer-Moeller criteria. All S-pairs of one degree are reduced together
// as one sparse Macaulay matrix. Throws UsageError for inhomogeneous input.
GBRun run_groebner(const PrimeField& field, const ModuleOrder& order,
                   std::vector<SVec> generators, const GBOptions& options = {});

// Upper bound on the threads used for the row reductions of one degree.
// The result does not depend on it. Default 1.
void set_worker_count(unsigned workers);
unsigned worker_count();

// Content-addressed store of finished runs, keyed by field, order, inputs
// and options. Off when no directory is set (the default).
void set_gb_cache_dir(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> gb_cache_dir();

// Full reduction of f modulo a Groebner basis (leading coefficients of the
// basis need not be 1).
SVec reduce_modulo(const PrimeField& field, const ModuleOrder& order,
                   const SVec& f, std::span<const SVec> basis);

// Conversions between polynomial columns and sparse module elements.
SVec to_svec(const ModuleOrder& order, const PrimeField& field,
             std::span<const Polynomial> column);
std::vector<Polynomial> from_svec(const RingPtr& ring, std::size_t rank,
                                  const SVec& v);
int svec_degree(const ModuleOrder& order, const SVec& v);

// A Groebner basis of a submodule of a graded free module (an ideal when the
// ambient module has rank one).
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, GradedFreeModule ambient, ModuleOrder order,
                std::vector<SVec> elements, bool complete, int degree_reached);

  const RingPtr& ring() const { return ring_; }
  const GradedFreeModule& ambient() const { return ambient_; }
  const ModuleOrder& order() const { return order_; }
  std::span<const SVec> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_complete() const { return complete_; }
  int degree_reached() const { return degree_reached_; }

  std::vector<Polynomial> element(std::size_t i) const;
  // Polynomials of a rank-one basis.
  std::vector<Polynomial> polynomials() const;

  SVec normal_form(const SVec& f) const;
  std::vector<Polynomial> normal_form(std::span<const Polynomial> column) const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(std::span<const Polynomial> column) const;
  bool contains(const Polynomial& f) const;

  // Number of standard (non-leading) terms of the given module degree, i.e.
  // the dimension of (ambient / submodule) in that degree.
  std::uint64_t standard_count(int degree) const;

  // True if the submodule is the whole ambient module.
  bool is_unit_ideal() const;

 private:
  RingPtr ring_;
  GradedFreeModule ambient_;
  ModuleOrder order_;
  std::vector<SVec> elements_;
  bool complete_;
  int degree_reached_;
};

// Reduced Groebner basis of the submodule generated by the columns.
GroebnerBasis buchberger(const RingPtr& ring, const GradedFreeModule& ambient,
                         const std::vector<std::vector<Polynomial>>& columns,
                         const GBOptions& options = {},
                         std::optional<ModuleOrder> order = std::nullopt);
GroebnerBasis buchberger(const std::vector<Polynomial>& ideal_generators,
                         const GBOptions& options = {});
GroebnerBasis buchberger(const GradedMatrix& columns,
                         const GBOptions& options = {});

// Subset of the columns (in order) minimally generating their span.
std::vector<std::size_t> minimal_generator_indices(
    const RingPtr& ring, const GradedFreeModule& ambient,
    const std::vector<std::vector<Polynomial>>& columns);
GradedMatrix minimal_generators(const GradedMatrix& columns);
std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& f);

}  // namespace p4kit

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "p4kit/idealops.hpp"
#include "p4kit/linalg.hpp"
#include "p4kit/resolve.hpp"

namespace p4kit {

// A finite stretch of a graded module known through its pieces: dimensions
// and the matrices of multiplication by each variable, V_d -> V_{d+1}.
struct FinitePieces {
  int nvars = 0;
  int lo = 0;
  int hi = -1;
  std::map<int, std::size_t> dims;
  std::map<std::pair<int, int>, DenseMatrix> mult;  // (degree, variable)

  std::size_t dim(int d) const {
    auto it = dims.find(d);
    return it == dims.end() ? 0 : it->second;
  }
  // Graded dual with V^*_d = (V_{-d})^*.
  FinitePieces dual() const;
};

// Pieces of a presented module on [lo, hi] in the basis of standard terms.
FinitePieces module_pieces(const GradedModule& m, int lo, int hi);

// Presentation of a finite-length module from its pieces, assuming it
// vanishes outside [lo, hi].
GradedModule present_finite(const RingPtr& ring, const FinitePieces& v);

// Sheaf cohomology of ~M on P^{n-1} by local duality:
//   h^i(~M(d)) = dim Ext^{n-1-i}(M, S(-n))_{-d}   for 1 <= i <= n-1,
//   h^0(~M(d)) = dim M_d - dim Ext^n_{-d} + dim Ext^{n-1}_{-d}.
class SheafCohomology {
 public:
  explicit SheafCohomology(const GradedModule& m);
  // The ideal sheaf of V(I): the ideal itself as a module.
  static SheafCohomology of_ideal(const Ideal& ideal);

  const Resolution& resolution() const { return res_; }
  int nvars() const { return ring_->nvars; }

  // dim Ext^k(M, S(-n))_e, from the Hilbert function of the Ext module for
  // k >= 1.
  std::int64_t ext_dim(int k, int e) const;
  // The same number as rank data of the dual complex in degree e.
  std::int64_t ext_dim_by_kernels(int k, int e) const;
  std::int64_t module_dim(int d) const;
  std::int64_t h(int i, int d) const;

  // Ext^k(M, S(-n)) as a presented module.
  GradedModule ext_module(int k) const;
  // Pieces of Ext^k on [lo, hi], from the presented Ext module.
  FinitePieces ext_pieces(int k, int lo, int hi) const;
  // The same pieces as kernel modulo image of the dual complex in each
  // degree, by dense linear algebra. Slower; kept as a cross-check.
  FinitePieces ext_pieces_by_kernels(int k, int lo, int hi) const;
  // H^i_*(~M) on [lo, hi] as the graded dual of Ext^{n-1-i}.
  FinitePieces intermediate_pieces(int i, int lo, int hi) const;

 private:
  SheafCohomology(RingPtr ring, Resolution res, GroebnerBasis presentation_gb);
  // delta_k : F_k^*(-n) -> F_{k+1}^*(-n)
  GradedMatrix dual_map(int k) const;
  GradedFreeModule dual_module(int k) const;

  RingPtr ring_;
  Resolution res_;
  GroebnerBasis pres_gb_;
  // Groebner bases of the Ext presentations, shared between copies.
  struct ExtCache {
    std::mutex lock;
    std::map<int, std::optional<GroebnerBasis>> gbs;
  };
  std::shared_ptr<ExtCache> ext_cache_ = std::make_shared<ExtCache>();
};

// Table of h^i(I_X(j)).
class CohomologyTable {
 public:
  CohomologyTable(int jmin, int jmax, int imax)
      : jmin_(jmin), jmax_(jmax), imax_(imax) {}
  void set(int i, int j, std::int64_t v) { values_[{i, j}] = v; }
  std::int64_t at(int i, int j) const;
  int jmin() const { return jmin_; }
  int jmax() const { return jmax_; }
  int imax() const { return imax_; }
  // Σ (-1)^i h^i(j)
  std::int64_t euler(int j) const;
  // Rows i = imax..0, columns j; zero entries print as '.'.
  std::string to_text() const;

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

 private:
  int jmin_, jmax_, imax_;
  std::map<std::pair<int, int>, std::int64_t> values_;
};

// h^0 from the saturation, higher h^i by duality.
CohomologyTable cohomology_table(const Ideal& saturated, int jmin, int jmax);
// Same, reusing the cohomology object of the ideal.
CohomologyTable cohomology_table(const Ideal& saturated, const SheafCohomology& sc, int jmin,
                                 int jmax);

// Alternating product of (1 - a t)^{±β} over a Betti table, truncated at
// t^max_degree: the Chern polynomial of the sheaf of the resolved module.
std::vector<std::int64_t> chern_classes(const BettiTable& t, int max_degree);

}  // namespace p4kit

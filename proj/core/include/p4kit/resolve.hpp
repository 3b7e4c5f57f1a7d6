#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p4kit/groebner.hpp"
#include "p4kit/matrix.hpp"

namespace p4kit {

// Submodule elimination. Each generator is a column of the free module
// top + tail; the top summand dominates the order. Returns the tail parts of
// the Groebner basis elements whose top part vanishes, i.e. a Groebner basis
// of (generated submodule) ∩ tail.
std::vector<std::vector<Polynomial>> eliminate_top(
    const RingPtr& ring, const GradedFreeModule& top,
    const GradedFreeModule& tail,
    const std::vector<std::vector<Polynomial>>& columns,
    const GBOptions& options = {});

// Columns generating the kernel of a (not necessarily minimal). The target
// order only steers the computation; the default is the position order.
GradedMatrix syzygies(const GradedMatrix& a);
GradedMatrix syzygies(const GradedMatrix& a, const ModuleOrder& target_order);
// Order on the source of a induced through a (weights are the leading
// monomials of the columns). The syzygies of a are a Groebner basis for it,
// which makes it the right order for computing with them afterwards.
ModuleOrder schreyer_order(const GradedMatrix& a);
GradedMatrix syzygies(const GroebnerBasis& g);

// Minimal presentation of coker(p): unit entries are eliminated together with
// the generator they make redundant, then the relations are minimalized.
GradedMatrix prune_presentation(const GradedMatrix& p);

// Presentation of (im z + im r) / im r on the generators given by z.
GradedModule subquotient(const GradedMatrix& z, const GradedMatrix& r);
GradedModule subquotient(const GradedMatrix& z, const GradedMatrix& r,
                         const ModuleOrder& target_order);

class BettiTable {
 public:
  BettiTable() = default;
  void add(int step, int twist, int count);
  int at(int step, int twist) const;
  const std::map<std::pair<int, int>, int>& entries() const { return entries_; }
  // Total rank of the step-th free module.
  int rank(int step) const;
  int length() const;
  // Σ (-1)^i rank(F_i).
  int alternating_rank() const;
  // Steps shifted by k (e.g. ideal vs quotient ring conventions).
  BettiTable shifted_steps(int k) const;

  // Grid with rows indexed by twist - step and one column per step.
  std::string to_text() const;
  // Compact "0:1 1:3,2 ..." style summary used in reports: per step the
  // list "count*S(-twist)".
  std::string summary() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, int> entries_;
};

// 0 <- coker(maps[0]) <- F_0 <- F_1 <- ... ; maps[k] : F_{k+1} -> F_k.
struct Resolution {
  GradedFreeModule f0;
  std::vector<GradedMatrix> maps;
  bool minimal = false;

  GradedFreeModule module(std::size_t step) const {
    return step == 0 ? f0 : maps.at(step - 1).source();
  }
};

Resolution minimal_free_resolution(const GradedModule& m, int max_steps = 6);

// Throws UsageError for a non-minimal resolution.
BettiTable betti_table(const Resolution& r);

// Betti table of a homogeneous ideal itself (generators in step 0).
BettiTable ideal_betti_table(const std::vector<Polynomial>& ideal);

}  // namespace p4kit

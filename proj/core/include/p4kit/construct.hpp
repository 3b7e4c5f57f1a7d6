#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "p4kit/cohomology.hpp"
#include "p4kit/idealops.hpp"
#include "p4kit/resolve.hpp"

namespace p4kit {

struct Check {
  std::string stage;
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct Retry {
  std::string stage;
  int attempt = 0;
  std::string reason;
};

struct SurfaceInvariants {
  std::int64_t d = 0, pi = 0, chi = 0, pg = 0, q = 0, k2 = 0;
  // Speciality from pi - d + 3 + q - p_g and from h^2(I_X(1)).
  std::int64_t s_formula = 0, s_table = 0;
};

// Outcome of a pipeline: every assertion with expected and computed values,
// reseeds, tables and the stage outputs to persist. The JSON form leaves out
// timings so reruns compare byte for byte.
class Report {
 public:
  Report(std::string pipeline, std::uint64_t seed, std::uint32_t characteristic);

  bool expect(const std::string& stage, const std::string& name,
              const std::string& expected, const std::string& computed);
  bool expect(const std::string& stage, const std::string& name,
              std::int64_t expected, std::int64_t computed);
  bool expect_true(const std::string& stage, const std::string& name, bool value);
  void note(const std::string& key, const std::string& value);
  void retry(const std::string& stage, int attempt, const std::string& reason);
  void table(const std::string& name, const std::string& text);
  void artifact(const std::string& name, const std::string& contents);
  void timing(const std::string& stage, double seconds);
  void set_invariants(const SurfaceInvariants& inv) { invariants_ = inv; }
  void fail(const std::string& stage, const std::string& message);

  bool pass() const;
  const std::string& pipeline() const { return pipeline_; }
  std::uint64_t seed() const { return seed_; }
  std::uint32_t characteristic() const { return characteristic_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<Retry>& retries() const { return retries_; }
  const std::map<std::string, std::string>& artifacts() const { return artifacts_; }
  const std::optional<SurfaceInvariants>& invariants() const { return invariants_; }
  const std::vector<std::pair<std::string, double>>& timings() const { return timings_; }

  std::string to_json() const;
  std::string to_text() const;

 private:
  std::string pipeline_;
  std::uint64_t seed_;
  std::uint32_t characteristic_;
  std::vector<Check> checks_;
  std::vector<Retry> retries_;
  std::vector<std::pair<std::string, std::string>> notes_;
  std::vector<std::pair<std::string, std::string>> tables_;
  std::map<std::string, std::string> artifacts_;
  std::vector<std::pair<std::string, double>> timings_;
  std::optional<SurfaceInvariants> invariants_;
  std::vector<std::string> failures_;
};

// Seed for attempt k of a named stage; a pure function of its inputs.
std::uint64_t stage_seed(std::uint64_t seed, const std::string& stage, int attempt);

// Modules of the monad construction.
struct MonadModules {
  GradedModule m;
  GradedModule n;
  GradedMatrix f3;  // minimal syzygies of f2 (F4 -> F3)
  GradedMatrix z;   // minimal syzygies of phi * f2
  GradedModule k;
  GradedModule e;
};

GradedModule build_M(const RingPtr& ring);
GradedModule build_N(const RingPtr& ring);
MonadModules build_monad_modules(const RingPtr& ring);
// F = coker(S(-5) -> E) through psi'.
GradedModule build_F(const RingPtr& ring, const MonadModules& mods);

// Locally free on P^{n-1}: Ext^i(M, S) has finite length for i >= 1.
bool is_locally_free(const GradedModule& m);

// Expected tables, as printed in the construction.
BettiTable expected_betti_M();
BettiTable expected_betti_N();
BettiTable expected_betti_K();
BettiTable expected_betti_E();
BettiTable expected_betti_IX();
// h^i(I_X(j)) for j in [-1, 3].
CohomologyTable expected_cohomology_IX();

// Degree, genus, Euler characteristic, p_g, q, K^2 and speciality of a
// smooth surface from its saturated ideal and cohomology table.
SurfaceInvariants surface_invariants(const Ideal& saturated, const CohomologyTable& t);

// Residual of I in the complete intersection: (ci) : I.
Ideal link(const Ideal& ci, const Ideal& i);

struct PipelineOptions {
  std::uint64_t seed = 1;
  std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;
  int max_retries = 8;
  // Forces the first k draws of the general map to be degenerate, to
  // exercise the reseed path.
  int degenerate_draws = 0;
  bool rank3_check = true;
  bool bridge = true;
  // Liaison only: replay the worked example data for the first stage.
  bool example = false;
};

struct MonadResult {
  Report report;
  std::optional<Ideal> ix;
};

struct LiaisonResult {
  Report report;
  std::optional<Ideal> x;
};

MonadResult monad_pipeline(const PipelineOptions& options);
LiaisonResult liaison_pipeline(const PipelineOptions& options);

// The two special lines on a cubic surface X0 in a hyperplane that is
// singular along a line: the double line, and the image of the directrix,
// which is the unique line on X0 missing the double line. Throws
// DegeneracyError when a random chart or hyperplane was special.
struct ScrollLines {
  Ideal double_line;
  Ideal directrix;
};
ScrollLines scroll_lines(const Ideal& x0, std::uint64_t seed);

// Line through the support of a scheme whose curve part is a line, possibly
// with embedded points.
Ideal reduced_line(const Ideal& j, Rng& rng);

struct BridgeResult {
  Ideal x0;
  Ideal t;
  Ideal line;
  Ideal double_line;
};

// Residual cubic X0 of X in its quintics and the (5,5)-link T of X + X0;
// assertions go to the report.
std::optional<BridgeResult> bridge_link(const Ideal& ix, std::uint64_t seed, Report& report,
                                        int max_retries = 8);

// Data of the worked example of the liaison construction over the given ring:
// h0, I_L, U0, U1, D, D2 and the five quartics g1..g5 as printed, with the
// printed g3 replaced by its corrected form.
struct LiaisonExample {
  Polynomial h0;
  Ideal l, u0, u1, d, d2;
  std::vector<Polynomial> quartics;
  Polynomial g3_printed;
};
LiaisonExample liaison_example(const RingPtr& ring);

}  // namespace p4kit

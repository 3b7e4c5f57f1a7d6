// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Expected values are written out here from the published displays rather
// than taken from the library, and key numbers are recomputed from the
// persisted ideals instead of trusting the pipeline reports.

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "../support/oracle.hpp"
#include "p4kit/construct.hpp"
#include "p4kit/groebner.hpp"
#include "p4kit/text_io.hpp"

using namespace p4kit;

namespace {

constexpr std::array<std::uint64_t, 3> kSeeds{1, 2, 3};

const char* const kBettiM =
    "S; 3S(-1)+2S(-2); 3S(-2)+6S(-3)+S(-4); S(-3)+6S(-4)+3S(-5); 2S(-5)+3S(-6); S(-7)";
const char* const kBettiN =
    "S(-2); S(-3)+5S(-4); 7S(-5)+7S(-6); 2S(-6)+11S(-7)+3S(-8); 4S(-8)+5S(-9); 2S(-10)";
const char* const kBettiK =
    "S(-4)+8S(-5)+4S(-6); 2S(-6)+10S(-7)+3S(-8); 4S(-8)+5S(-9); 2S(-10)";
const char* const kBettiE = "8S(-5)+4S(-6); 2S(-6)+10S(-7)+3S(-8); 4S(-8)+5S(-9); 2S(-10)";
const char* const kBettiIX =
    "5S(-5)+4S(-6); 2S(-6)+10S(-7)+3S(-8); 4S(-8)+5S(-9); 2S(-10)";

// h^i I_X(j) for j = -1..3, rows i = 0..4.
const std::array<std::array<std::int64_t, 5>, 5> kTableIX{{
    {0, 0, 0, 0, 0},
    {0, 0, 0, 1, 4},
    {0, 1, 2, 1, 0},
    {15, 3, 0, 0, 0},
    {0, 0, 0, 0, 0},
}};

// Collects failures of one criterion.
class Tally {
 public:
  void require(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  void equal(std::int64_t expected, std::int64_t computed, const std::string& what) {
    require(expected == computed,
            what + ": expected " + std::to_string(expected) + ", got " + std::to_string(computed));
  }
  void equal(const std::string& expected, const std::string& computed, const std::string& what) {
    require(expected == computed, what + ": expected \"" + expected + "\", got \"" + computed + "\"");
  }
  bool ok() const { return failures_.empty() && count_ > 0; }
  int count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

const Check* find_check(const Report& r, const std::string& stage, const std::string& name) {
  for (const Check& c : r.checks())
    if (c.stage == stage && c.name == name) return &c;
  return nullptr;
}

// The computed value of a named check, compared with a literal.
void report_value(Tally& t, const Report& r, const std::string& stage, const std::string& name,
                  const std::string& expected) {
  const Check* c = find_check(r, stage, name);
  std::string where = r.pipeline() + " seed " + std::to_string(r.seed()) + " [" + stage + "] " + name;
  if (!c) {
    t.require(false, where + ": missing from report");
    return;
  }
  t.equal(expected, c->computed, where);
  t.require(c->pass, where + ": marked failing");
}

std::string artifact(const Report& r, const std::string& name) {
  auto it = r.artifacts().find(name);
  return it == r.artifacts().end() ? std::string() : it->second;
}

std::optional<Ideal> artifact_ideal(const RingPtr& ring, const Report& r, const std::string& name) {
  std::string text = artifact(r, name);
  if (text.empty()) return std::nullopt;
  return Ideal(ring, parse_ideal(ring, text));
}

struct Runs {
  std::map<std::uint64_t, MonadResult> monad;
  std::map<std::uint64_t, LiaisonResult> liaison;
  std::optional<LiaisonResult> example;

  const Report& monad_report(std::uint64_t seed) {
    auto it = monad.find(seed);
    if (it == monad.end()) {
      PipelineOptions o;
      o.seed = seed;
      it = monad.emplace(seed, monad_pipeline(o)).first;
    }
    return it->second.report;
  }
  const Report& liaison_report(std::uint64_t seed) {
    auto it = liaison.find(seed);
    if (it == liaison.end()) {
      PipelineOptions o;
      o.seed = seed;
      it = liaison.emplace(seed, liaison_pipeline(o)).first;
    }
    return it->second.report;
  }
  const Report& example_report() {
    if (!example) {
      PipelineOptions o;
      o.example = true;
      example = liaison_pipeline(o);
    }
    return example->report;
  }
};

// ---- criteria ----

void criterion_1(Tally& t) {
  RingPtr ring = make_ring();
  GradedModule m = build_M(ring);
  Resolution r = minimal_free_resolution(m);
  t.equal(kBettiM, betti_table(r).summary(), "Betti table of M");
  for (std::size_t k = 1; k < r.maps.size(); ++k)
    t.require(compose(r.maps[k - 1], r.maps[k]).is_zero(), "d^2 = 0 in the resolution of M");
}

void criterion_2(Tally& t) {
  RingPtr ring = make_ring();
  Resolution r = minimal_free_resolution(build_N(ring));
  t.equal(kBettiN, betti_table(r).summary(), "Betti table of N");
}

void criterion_3(Tally& t, Runs& runs) {
  const Report& r = runs.monad_report(1);
  report_value(t, r, "K", "Betti table", kBettiK);
  report_value(t, r, "E", "Betti table", kBettiE);
  report_value(t, r, "X", "Betti table of I_X", kBettiIX);
  report_value(t, r, "K", "rank", "5");
  report_value(t, r, "E", "rank", "4");
  report_value(t, r, "X", "rank of I_X by alternating sum", "1");
  // Recompute from the persisted presentations.
  RingPtr ring = make_ring();
  for (auto [name, expected, rank] : std::array<std::tuple<const char*, const char*, int>, 2>{
           {{"K.mat", kBettiK, 5}, {"E.mat", kBettiE, 4}}}) {
    std::string text = artifact(r, name);
    t.require(!text.empty(), std::string(name) + " persisted");
    if (text.empty()) continue;
    BettiTable b = betti_table(minimal_free_resolution(GradedModule(parse_matrix(ring, text))));
    t.equal(expected, b.summary(), std::string("Betti table recomputed from ") + name);
    t.equal(rank, b.alternating_rank(), std::string("alternating rank of ") + name);
  }
  if (auto ix = artifact_ideal(ring, r, "IX.ideal")) {
    BettiTable b = ideal_betti_table(ix->generators());
    t.equal(kBettiIX, b.summary(), "Betti table recomputed from IX.ideal");
    t.equal(1, b.alternating_rank(), "alternating rank of I_X");
  } else {
    t.require(false, "IX.ideal persisted");
  }
}

void criterion_4(Tally& t, Runs& runs) {
  RingPtr ring = make_ring();
  for (std::uint64_t seed : kSeeds) {
    const Report& r = runs.monad_report(seed);
    const std::string tag = "monad seed " + std::to_string(seed);
    t.require(r.pass(), tag + ": report passes");
    report_value(t, r, "X", "X smooth mod p", "smooth");
    report_value(t, r, "X", "(d,pi,chi)", "(12,13,3)");
    report_value(t, r, "X", "p_g = h3 I_X(0)", "3");
    report_value(t, r, "X", "q = h2 I_X(0)", "1");
    report_value(t, r, "X", "K^2", "0");
    report_value(t, r, "X", "s = h2 I_X(1)", "2");
    report_value(t, r, "X", "h0 I_X(5)", "5");
    const auto& inv = r.invariants();
    t.require(inv && inv->d == 12 && inv->pi == 13 && inv->chi == 3 && inv->pg == 3 &&
                  inv->q == 1 && inv->k2 == 0 && inv->s_table == 2,
              tag + ": invariants (12,13,3,3,1,0,2)");
    // Independent recomputation of the table from the persisted ideal.
    auto ix = artifact_ideal(ring, r, "IX.ideal");
    t.require(ix.has_value(), tag + ": IX.ideal persisted");
    if (!ix) continue;
    Ideal sat = saturate(*ix);
    t.require(sat.equals(*ix), tag + ": persisted I_X is saturated");
    t.equal(5, sat.dim_in_degree(5), tag + ": h0 I_X(5)");
    CohomologyTable c = cohomology_table(sat, -1, 3);
    for (int i = 0; i <= 4; ++i)
      for (int j = -1; j <= 3; ++j)
        t.equal(kTableIX[i][j + 1], c.at(i, j),
                tag + ": h" + std::to_string(i) + " I_X(" + std::to_string(j) + ")");
  }
}

void criterion_5(Tally& t, Runs& runs) {
  const Report& r = runs.monad_report(1);
  report_value(t, r, "X", "Hilbert function of H2_* I_X in degrees 0..3", "1,2,1,0");
  report_value(t, r, "X", "Betti table of H2_* I_X = that of M", kBettiM);
  report_value(t, r, "X", "generator degrees of H1_* I_X", "2");
  report_value(t, r, "X", "Hilbert function of H1_* I_X in degrees 1..3", "0,1,4");
  // Recompute the Hartshorne-Rao modules from the ideal.
  RingPtr ring = make_ring();
  auto ix = artifact_ideal(ring, r, "IX.ideal");
  t.require(ix.has_value(), "IX.ideal persisted");
  if (!ix) return;
  SheafCohomology sc = SheafCohomology::of_ideal(*ix);
  FinitePieces h2 = sc.intermediate_pieces(2, -2, 5);
  std::string hf2;
  for (int d = -2; d <= 5; ++d) hf2 += (d > -2 ? "," : "") + std::to_string(h2.dim(d));
  t.equal("0,0,1,2,1,0,0,0", hf2, "H2_* I_X in degrees -2..5");
  GradedModule m2 = present_finite(ring, h2);
  t.equal(hilbert_function(build_M(ring), -2, 5) == hilbert_function(m2, -2, 5) ? "equal" : "differ",
          "equal", "Hilbert functions of H2_* I_X and M");
  FinitePieces h1 = sc.intermediate_pieces(1, 0, 5);
  std::string hf1;
  for (int d = 0; d <= 5; ++d) hf1 += (d > 0 ? "," : "") + std::to_string(h1.dim(d));
  // The displayed values are 1, 4 in degrees 2, 3. Beyond the displayed
  // window h^1 I_X(j) = chi(O_X(j)) - h^0 O(j) + h^0 I_X(j) gives 75 - 70 + 0
  // and 123 - 126 + 5, and N has the same Hilbert function.
  t.equal("0,0,1,4,5,2", hf1, "H1_* I_X in degrees 0..5");
  std::string hfn;
  for (std::int64_t v : hilbert_function(build_N(ring), 0, 5)) hfn += (hfn.empty() ? "" : ",") + std::to_string(v);
  t.equal(hfn, hf1, "Hilbert functions of H1_* I_X and N");
  GradedModule m1 = present_finite(ring, h1);
  t.equal("2", [&] {
    std::string s;
    for (int d : m1.generators().twists) s += (s.empty() ? "" : ",") + std::to_string(d);
    return s;
  }(), "generator degrees of H1_* I_X");
}

void criterion_6(Tally& t, Runs& runs) {
  RingPtr ring = make_ring();
  for (std::uint64_t seed : kSeeds) {
    const Report& r = runs.monad_report(seed);
    const std::string tag = "monad seed " + std::to_string(seed);
    report_value(t, r, "bridge", "degree of X0", "3");
    report_value(t, r, "bridge", "hyperplanes containing X0", "1");
    report_value(t, r, "bridge", "V(quintics) = X + X0", "true");
    report_value(t, r, "bridge", "C0 = X . X0 (degree, p_a)", "(12,13)");
    report_value(t, r, "bridge", "T smooth mod p", "smooth");
    report_value(t, r, "bridge", "T (d,pi,chi)", "(10,10,4)");
    report_value(t, r, "bridge", "X meets L nowhere", "true");
    auto ix = artifact_ideal(ring, r, "IX.ideal");
    auto x0 = artifact_ideal(ring, r, "X0.ideal");
    auto l = artifact_ideal(ring, r, "L.ideal");
    auto tt = artifact_ideal(ring, r, "T.ideal");
    t.require(ix && x0 && l && tt, tag + ": bridge ideals persisted");
    if (!(ix && x0 && l && tt)) continue;
    t.require(saturate(sum(*ix, *l)).is_unit(), tag + ": saturate(I_X + I_L) = (1)");
    SurfaceNumbers s0 = surface_numbers(x0->quotient_series());
    t.equal(3, s0.d, tag + ": degree of X0");
    t.equal(1, x0->dim_in_degree(1), tag + ": X0 lies in a hyperplane");
    // The residual of X in its quintics.
    Ideal quintics(ring, ix->basis_in_degree(5));
    t.require(quotient(quintics, *ix).equals(*x0), tag + ": X0 = (quintics) : I_X");
    CurveNumbers c0 = curve_numbers(saturate(sum(*ix, *x0)).quotient_series());
    t.equal(12, c0.degree, tag + ": deg(X . X0)");
    t.equal(13, c0.pa, tag + ": p_a(X . X0)");
    SurfaceNumbers st = surface_numbers(tt->quotient_series());
    t.equal("(10,10,4)", "(" + std::to_string(st.d) + "," + std::to_string(st.pi) + "," +
                             std::to_string(st.chi) + ")",
            tag + ": T (d,pi,chi) recomputed");
    t.require(smoothness_certificate(*tt, 2, seed + 100).verdict == Verdict::kSmooth,
              tag + ": T smooth mod p, rechecked");
  }
}

void criterion_7(Tally& t, Runs& runs) {
  const Report& ex = runs.example_report();
  t.require(ex.pass(), "example report passes");
  report_value(t, ex, "U0, U1, D", "h0 I_{U0+D}(3)", "3");
  report_value(t, ex, "U0, U1, D", "h0 I_{U1+U0+D2}(4)", "5");
  RingPtr ring = make_ring();
  {
    LiaisonExample data = liaison_example(ring);
    t.equal(3, intersect(data.u0, data.d).dim_in_degree(3), "example h0 I_{U0+D}(3), recomputed");
    Ideal w = intersect(intersect(data.u1, data.u0), data.d2);
    t.equal(5, w.dim_in_degree(4), "example h0 I_{U1+U0+D2}(4), recomputed");
    bool in = true;
    for (const Polynomial& g : data.quartics) in = in && w.contains(g);
    t.require(in, "example quartics lie in I_{U1+U0+D2}");
  }
  for (std::uint64_t seed : kSeeds) {
    const Report& r = runs.liaison_report(seed);
    const std::string tag = "liaison seed " + std::to_string(seed);
    t.require(r.pass(), tag + ": report passes");
    report_value(t, r, "T", "h0 I_T(4)", "3");
    report_value(t, r, "T", "h1 I_T(4)", "1");
    report_value(t, r, "Y", "h0 I_{D,H0}(2)", "2");
    report_value(t, r, "Y", "h0 I_Y(5)", "5");
    report_value(t, r, "Y", "h0 I_{Y.H,H}(5) for general H through L", "7");
    report_value(t, r, "C", "Hilbert polynomial of C1 is 6m+3", "true");
    report_value(t, r, "C", "length of C1 . D", "12");
    report_value(t, r, "X", "X smooth mod p", "smooth");
    report_value(t, r, "X", "(d,pi,chi)", "(12,13,3)");
    report_value(t, r, "X", "p_g = h3 I_X(0)", "3");
    report_value(t, r, "X", "q = h2 I_X(0)", "1");
    report_value(t, r, "X", "K^2", "0");
    auto c1 = artifact_ideal(ring, r, "C1.ideal");
    auto d = artifact_ideal(ring, r, "D.ideal");
    auto y = artifact_ideal(ring, r, "Y.ideal");
    auto tt = artifact_ideal(ring, r, "T.ideal");
    t.require(c1 && d && y && tt, tag + ": liaison ideals persisted");
    if (!(c1 && d && y && tt)) continue;
    HilbertSeries hc = c1->quotient_series();
    bool six_m_3 = true;
    for (int m = 0; m <= 8; ++m) six_m_3 = six_m_3 && hc.polynomial(m) == 6 * m + 3;
    t.require(six_m_3, tag + ": C1 has Hilbert polynomial 6m+3, recomputed");
    HilbertSeries meet = saturate(sum(*c1, *d)).quotient_series();
    t.equal(12, meet.polynomial(20), tag + ": |C1 . D|, recomputed");
    t.equal(5, y->dim_in_degree(5), tag + ": h0 I_Y(5), recomputed");
    t.equal(3, tt->dim_in_degree(4), tag + ": h0 I_T(4), recomputed");
  }
}

void criterion_8(Tally& t, Runs& runs) {
  RingPtr ring = make_ring();
  for (std::uint64_t seed : kSeeds) {
    const Report& r = runs.liaison_report(seed);
    const std::string tag = "liaison seed " + std::to_string(seed);
    report_value(t, r, "Y", "quintics of I_Y cut out Y", "true");
    auto y = artifact_ideal(ring, r, "Y.ideal");
    t.require(y.has_value(), tag + ": Y.ideal persisted");
    if (!y) continue;
    std::vector<Polynomial> q = y->basis_in_degree(5);
    t.equal(5, static_cast<std::int64_t>(q.size()), tag + ": h0 I_Y(5)");
    t.require(saturate(Ideal(ring, q)).equals(saturate(*y)), tag + ": saturate((H0 I_Y(5))) = I_Y");
  }
}

// Formula identities on one smooth surface. Known K^2, when given, is an
// independent input; otherwise the value from the self-intersection formula
// is only checked for consistency.
void formula_suite(Tally& t, const std::string& tag, const Ideal& ideal,
                   std::optional<std::int64_t> known_k2) {
  Ideal sat = saturate(ideal);
  HilbertSeries hs = sat.quotient_series();
  SurfaceNumbers n = surface_numbers(hs);
  CohomologyTable c = cohomology_table(sat, -1, 5);
  const std::int64_t pg = c.at(3, 0), q = c.at(2, 0);
  t.equal(n.chi, pg - q + 1, tag + ": chi from the Hilbert polynomial = p_g - q + 1");
  const std::int64_t k2 = k2_from_invariants(n.d, n.pi, n.chi);
  if (known_k2) t.equal(*known_k2, k2, tag + ": K^2 from the self-intersection formula");
  t.equal(0, double_point_residual(n.d, n.pi, n.chi, k2), tag + ": double point formula");
  for (int j = -1; j <= 5; ++j) {
    const std::string at = tag + ": j = " + std::to_string(j);
    t.equal(binomial_poly(j + 4, 4) - hs.polynomial(j), c.euler(j),
            at + ": sum (-1)^i h^i I(j) = chi(I(j))");
    t.equal(rr_chi_ideal(j, n.d, n.pi, q, pg), c.euler(j), at + ": Riemann-Roch");
  }
}

void criterion_9(Tally& t, Runs& runs) {
  RingPtr ring = make_ring();
  auto x = [&](int i) { return Polynomial::variable(ring, i); };
  // Fixtures with classical K^2.
  formula_suite(t, "plane", Ideal(ring, {x(3), x(4)}), 9);
  formula_suite(t, "cubic surface",
                Ideal(ring, {x(4), x(0) * x(0) * x(0) + x(1) * x(1) * x(1) + x(2) * x(2) * x(2) +
                                       x(3) * x(3) * x(3)}),
                3);
  for (std::uint64_t seed : kSeeds) {
    const Report& m = runs.monad_report(seed);
    const Report& l = runs.liaison_report(seed);
    const std::string s = " seed " + std::to_string(seed);
    // X is minimal elliptic, so K^2 = 0; T has K^2 = 4.
    for (auto [report, name, k2] : std::array<std::tuple<const Report*, const char*, int>, 4>{
             {{&m, "IX.ideal", 0}, {&m, "T.ideal", 4}, {&l, "X.ideal", 0}, {&l, "T.ideal", 4}}}) {
      auto i = artifact_ideal(ring, *report, name);
      t.require(i.has_value(), report->pipeline() + s + ": " + name + " persisted");
      if (i) formula_suite(t, report->pipeline() + s + " " + name, *i, k2);
    }
    // The smooth cubic surface of the liaison construction.
    if (auto x0 = artifact_ideal(ring, l, "X0.ideal")) formula_suite(t, "liaison" + s + " X0", *x0, 3);
    report_value(t, l, "C", "p_a(C) = p_a(D) + p_a(C1) + C1.D - 1", "10");
    // Genus addition for C = C1 + D, recomputed.
    auto c1 = artifact_ideal(ring, l, "C1.ideal");
    auto d = artifact_ideal(ring, l, "D.ideal");
    if (c1 && d) {
      std::int64_t meet = saturate(sum(*c1, *d)).quotient_series().polynomial(20);
      CurveNumbers a = curve_numbers(c1->quotient_series()), b = curve_numbers(d->quotient_series());
      CurveNumbers u = curve_numbers(intersect(*c1, *d).quotient_series());
      t.equal(genus_addition(a.pa, b.pa, meet), u.pa, "liaison" + s + ": genus of C1 + D");
    }
  }
  // Genus addition on small fixtures: disjoint lines and a line meeting a conic.
  Ideal l1(ring, {x(0), x(1), x(2)}), l2(ring, {x(2), x(3), x(4)});
  t.equal(genus_addition(0, 0, 0), curve_numbers(intersect(l1, l2).quotient_series()).pa,
          "two skew lines");
  Ideal conic(ring, {x(3), x(4), x(0) * x(1) - x(2) * x(2)}), line(ring, {x(1), x(2), x(4)});
  t.equal(genus_addition(0, 0, 1), curve_numbers(intersect(conic, line).quotient_series()).pa,
          "line meeting a conic");
}

void criterion_10(Tally& t) {
  Rng rng(20261019);
  auto ring_for = [&] { return make_ring(31991, 2 + static_cast<int>(rng.next() % 2)); };
  constexpr int kTop = 5;
  int instances = 0;
  for (int k = 0; k < 60; ++k, ++instances) {
    RingPtr ring = ring_for();
    auto a = oracle::random_ideal(ring, rng, 3, 3, 3);
    Ideal ia(ring, a);
    for (int s = 0; s < 4; ++s) {
      Polynomial f = oracle::random_poly(ring, 1 + static_cast<int>(rng.next() % kTop), rng, 4);
      if (s % 2 == 0) {
        Polynomial g(ring);
        for (const Polynomial& h : a)
          if (*h.degree() <= *f.degree()) g += h * oracle::random_poly(ring, *f.degree() - *h.degree(), rng, 3);
        if (!g.is_zero()) f = g;
      }
      t.require(ia.contains(f) == oracle::member(a, f), "membership");
    }
  }
  for (int k = 0; k < 60; ++k, ++instances) {
    RingPtr ring = ring_for();
    auto a = oracle::random_ideal(ring, rng, 3, 3, 3), b = oracle::random_ideal(ring, rng, 3, 3, 3);
    Ideal c = intersect(Ideal(ring, a), Ideal(ring, b));
    for (int d = 0; d <= kTop; ++d)
      t.equal(oracle::dim_intersection(a, b, ring->nvars, d), c.dim_in_degree(d), "intersection");
  }
  for (int k = 0; k < 60; ++k, ++instances) {
    RingPtr ring = ring_for();
    auto a = oracle::random_ideal(ring, rng, 3, 3, 3), b = oracle::random_ideal(ring, rng, 2, 2, 3);
    Ideal c = quotient(Ideal(ring, a), Ideal(ring, b));
    for (int d = 0; d <= kTop; ++d)
      t.equal(oracle::dim_quotient(a, b, ring->nvars, d), c.dim_in_degree(d), "quotient");
  }
  for (int k = 0; k < 60; ++k, ++instances) {
    RingPtr ring = ring_for();
    auto a = oracle::random_ideal(ring, rng, 3, 3, 3);
    if (k % 3 == 0) {
      std::vector<Polynomial> e;
      for (const Polynomial& f : a)
        for (int v = 0; v < ring->nvars; ++v) e.push_back(f * Polynomial::variable(ring, v));
      a = e;
    }
    Ideal s = saturate(Ideal(ring, a));
    for (int d = 0; d <= kTop; ++d)
      t.equal(oracle::dim_saturation(a, ring->nvars, d, 12), s.dim_in_degree(d), "saturation");
  }
  t.require(instances >= 200, "at least 200 random instances");

  int shuffles = 0;
  for (; shuffles < 1000; ++shuffles) {
    std::array<int, 3> ea{}, eb{}, em{};
    for (int i = 0; i < 3; ++i) {
      ea[i] = static_cast<int>(rng.next() % 5);
      eb[i] = static_cast<int>(rng.next() % 5);
      em[i] = static_cast<int>(rng.next() % 5);
    }
    Monomial a = Monomial::from_exponents(ea), b = Monomial::from_exponents(eb),
             m = Monomial::from_exponents(em);
    if (a < b) t.require(a * m < b * m, "grevlex multiplicativity");
    if (b < a) t.require(b * m < a * m, "grevlex multiplicativity");
    if (a.degree() != b.degree()) t.require((a < b) == (a.degree() < b.degree()), "grevlex degree");
  }
  int gb_shuffles = 0;
  for (int k = 0; k < 110; ++k) {
    RingPtr ring = ring_for();
    auto gens = oracle::random_ideal(ring, rng, 4, 3, 3);
    GroebnerBasis ref = buchberger(gens);
    for (int s = 0; s < 10; ++s, ++gb_shuffles) {
      auto p = gens;
      for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[rng.next() % i]);
      for (auto& f : p) f = f.scaled(rng.nonzero(ring->field));
      GroebnerBasis g = buchberger(p);
      t.require(std::equal(ref.elements().begin(), ref.elements().end(), g.elements().begin(),
                           g.elements().end()),
                "reduced basis independent of order and scaling");
    }
  }
  t.require(shuffles >= 1000 && gb_shuffles >= 1000, "at least 1000 shuffles of each kind");
}

void criterion_11(Tally& t, Runs& runs) {
  PipelineOptions o;
  o.seed = 1;
  t.require(monad_pipeline(o).report.to_json() == runs.monad_report(1).to_json(),
            "monad seed 1 JSON identical on rerun");
  t.require(liaison_pipeline(o).report.to_json() == runs.liaison_report(1).to_json(),
            "liaison seed 1 JSON identical on rerun");
  // A different worker count must not change the report either.
  set_worker_count(1);
  o.seed = 2;
  t.require(monad_pipeline(o).report.to_json() == runs.monad_report(2).to_json(),
            "monad seed 2 JSON identical with one worker");
  set_worker_count(0);
}

}  // namespace

int main() {
  Runs runs;
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"Betti table of M", criterion_1},
      {"Betti table of N", criterion_2},
      {"Betti tables of K, E, I_X and ranks 5, 4, 1", [&](Tally& t) { criterion_3(t, runs); }},
      {"monad pipeline invariants and cohomology, 3 seeds", [&](Tally& t) { criterion_4(t, runs); }},
      {"Hartshorne-Rao modules of X", [&](Tally& t) { criterion_5(t, runs); }},
      {"bridge link to T", [&](Tally& t) { criterion_6(t, runs); }},
      {"liaison pipeline, example and 3 seeds", [&](Tally& t) { criterion_7(t, runs); }},
      {"quintics cut out Y", [&](Tally& t) { criterion_8(t, runs); }},
      {"formula suite", [&](Tally& t) { criterion_9(t, runs); }},
      {"oracle suite", criterion_10},
      {"deterministic JSON reports", [&](Tally& t) { criterion_11(t, runs); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Tally t;
    std::string error;
    try {
      criteria[k].second(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = t.ok() && error.empty();
    failed += !ok;
    std::printf("criterion %2zu %s  %s (%d checks)\n", k + 1, ok ? "PASS" : "FAIL",
                criteria[k].first.c_str(), t.count());
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    for (std::size_t i = 0; i < t.failures().size() && i < 10; ++i)
      std::printf("    %s\n", t.failures()[i].c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

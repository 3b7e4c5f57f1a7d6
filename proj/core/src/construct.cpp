#include "p4kit/construct.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "p4kit/errors.hpp"
#include "p4kit/hilbert.hpp"
#include "p4kit/monad_data.hpp"
#include "p4kit/pieces.hpp"
#include "p4kit/text_io.hpp"

namespace p4kit {

// ---------------------------------------------------------------- report

Report::Report(std::string pipeline, std::uint64_t seed, std::uint32_t characteristic)
    : pipeline_(std::move(pipeline)), seed_(seed), characteristic_(characteristic) {}

bool Report::expect(const std::string& stage, const std::string& name,
                    const std::string& expected, const std::string& computed) {
  checks_.push_back({stage, name, expected, computed, expected == computed});
  return checks_.back().pass;
}

bool Report::expect(const std::string& stage, const std::string& name,
                    std::int64_t expected, std::int64_t computed) {
  return expect(stage, name, std::to_string(expected), std::to_string(computed));
}

bool Report::expect_true(const std::string& stage, const std::string& name, bool value) {
  return expect(stage, name, "true", value ? "true" : "false");
}

void Report::note(const std::string& key, const std::string& value) {
  notes_.emplace_back(key, value);
}

void Report::retry(const std::string& stage, int attempt, const std::string& reason) {
  retries_.push_back({stage, attempt, reason});
}

void Report::table(const std::string& name, const std::string& text) {
  tables_.emplace_back(name, text);
}

void Report::artifact(const std::string& name, const std::string& contents) {
  artifacts_[name] = contents;
}

void Report::timing(const std::string& stage, double seconds) {
  timings_.emplace_back(stage, seconds);
}

void Report::fail(const std::string& stage, const std::string& message) {
  failures_.push_back(stage + ": " + message);
}

bool Report::pass() const {
  if (!failures_.empty() || checks_.empty()) return false;
  for (const Check& c : checks_)
    if (!c.pass) return false;
  return true;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["pipeline"] = pipeline_;
  j["seed"] = seed_;
  j["characteristic"] = characteristic_;
  j["verdict"] = pass() ? "pass" : "fail";
  if (invariants_) {
    const auto& v = *invariants_;
    j["invariants"] = {{"d", v.d},   {"pi", v.pi}, {"chi", v.chi},       {"pg", v.pg},
                       {"q", v.q},   {"K2", v.k2}, {"s", v.s_table}, {"s_formula", v.s_formula}};
  }
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks_)
    checks.push_back({{"stage", c.stage},
                      {"name", c.name},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}});
  auto& retries = j["retries"] = nlohmann::ordered_json::array();
  for (const Retry& r : retries_)
    retries.push_back({{"stage", r.stage}, {"attempt", r.attempt}, {"reason", r.reason}});
  auto& notes = j["notes"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : notes_) notes[k] = v;
  auto& tables = j["tables"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : tables_) tables[k] = v;
  j["failures"] = failures_;
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << pipeline_ << " pipeline, seed " << seed_ << ", p = " << characteristic_ << "\n\n";
  for (const Check& c : checks_) {
    os << (c.pass ? "[pass] " : "[FAIL] ") << c.stage << ": " << c.name;
    if (c.expected == c.computed)
      os << " = " << c.expected << "\n";
    else
      os << ": expected " << c.expected << ", computed " << c.computed << "\n";
  }
  for (const std::string& f : failures_) os << "[FAIL] " << f << "\n";
  if (!retries_.empty()) {
    os << "\nreseeds:\n";
    for (const Retry& r : retries_)
      os << "  " << r.stage << " attempt " << r.attempt << ": " << r.reason << "\n";
  }
  if (!notes_.empty()) {
    os << "\nnotes:\n";
    for (const auto& [k, v] : notes_) os << "  " << k << ": " << v << "\n";
  }
  for (const auto& [k, v] : tables_) os << "\n" << k << ":\n" << v;
  if (invariants_) {
    const auto& v = *invariants_;
    os << "\ninvariants: d = " << v.d << ", pi = " << v.pi << ", chi = " << v.chi
       << ", pg = " << v.pg << ", q = " << v.q << ", K2 = " << v.k2 << ", s = " << v.s_table
       << " (formula " << v.s_formula << ")\n";
  }
  if (!timings_.empty()) {
    os << "\ntimings (s):\n";
    for (const auto& [k, t] : timings_) {
      std::ostringstream num;
      num.precision(3);
      num << std::fixed << t;
      os << "  " << k << " " << num.str() << "\n";
    }
  }
  os << "\nverdict: " << (pass() ? "pass" : "FAIL") << "\n";
  return os.str();
}

std::uint64_t stage_seed(std::uint64_t seed, const std::string& stage, int attempt) {
  // FNV-1a over the stage name, then splitmix64 finalization.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : stage) h = (h ^ c) * 1099511628211ull;
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (h + static_cast<std::uint64_t>(attempt) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------- helpers

namespace {

using Clock = std::chrono::steady_clock;

class StageTimer {
 public:
  explicit StageTimer(Report& r) : report_(r), start_(Clock::now()) {}
  void lap(const std::string& stage) {
    auto now = Clock::now();
    report_.timing(stage, std::chrono::duration<double>(now - start_).count());
    start_ = now;
  }

 private:
  Report& report_;
  Clock::time_point start_;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string hf_text(const GradedModule& m, int from, int to) {
  return join(hilbert_function(m, from, to));
}

BettiTable table_from(const std::vector<std::vector<std::pair<int, int>>>& steps) {
  BettiTable t;
  for (std::size_t s = 0; s < steps.size(); ++s)
    for (auto [twist, count] : steps[s]) t.add(static_cast<int>(s), twist, count);
  return t;
}

// Runs `body` with fresh stage seeds until it returns without throwing
// DegeneracyError; every failed draw is logged. Returns false when the
// attempts are used up.
bool with_retries(Report& report, const std::string& stage, std::uint64_t seed,
                  int max_retries, const std::function<void(std::uint64_t, int)>& body) {
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    try {
      body(stage_seed(seed, stage, attempt), attempt);
      return true;
    } catch (const DegeneracyError& e) {
      report.retry(stage, attempt, e.what());
    }
  }
  report.fail(stage, "no general draw in " + std::to_string(max_retries) + " attempts");
  return false;
}

std::string numbers_text(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string numbers_text(const SurfaceNumbers& n) {
  return "(" + std::to_string(n.d) + "," + std::to_string(n.pi) + "," + std::to_string(n.chi) +
         ")";
}

Polynomial lin(const RingPtr& ring, const std::vector<Polynomial>& forms,
               const std::vector<std::uint32_t>& coeffs) {
  Polynomial out(ring);
  for (std::size_t i = 0; i < forms.size(); ++i) out += forms[i].scaled(coeffs[i]);
  return out;
}

Polynomial random_combination(const RingPtr& ring, const std::vector<Polynomial>& forms,
                              Rng& rng) {
  std::vector<std::uint32_t> c;
  for (std::size_t i = 0; i < forms.size(); ++i) c.push_back(rng.element(ring->field));
  return lin(ring, forms, c);
}

// Quadratic form in the given linear forms with random coefficients.
Polynomial random_quadric(const RingPtr& ring, const std::vector<Polynomial>& forms, Rng& rng) {
  Polynomial out(ring);
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i; j < forms.size(); ++j)
      out += (forms[i] * forms[j]).scaled(rng.element(ring->field));
  return out;
}

bool linearly_independent(const RingPtr& ring, const std::vector<Polynomial>& forms, int degree) {
  GradedFreeModule one{{0}};
  PieceBasis basis(ring->nvars, one, degree);
  DenseMatrix m(forms.size(), basis.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    Vec v = basis.to_vector(ring->field, std::span<const Polynomial>(&forms[i], 1));
    for (std::size_t j = 0; j < v.size(); ++j) m.at(i, j) = v[j];
  }
  return rank(ring->field, m) == forms.size();
}

Ideal with_element(const Ideal& a, const Polynomial& f) {
  auto gens = a.generators();
  gens.push_back(f);
  return Ideal(a.ring(), gens);
}

void require_smooth(const Ideal& ideal, std::uint64_t seed, Report& report,
                    const std::string& stage, const std::string& what) {
  SmoothnessCertificate cert = smoothness_certificate(ideal, 2, seed);
  if (cert.verdict != Verdict::kSmooth)
    throw DegeneracyError(what + " is " + to_string(cert.verdict) + " mod p");
  report.expect(stage, what + " smooth mod p", "smooth", to_string(cert.verdict));
  if (cert.vanishing_degree)
    report.note(stage + "." + what + " singular ideal vanishing degree",
                std::to_string(*cert.vanishing_degree));
}

// Shared verification of an elliptic surface with the invariants of the
// construction: Betti and cohomology tables, numerical invariants, the
// Hartshorne-Rao modules and global generation of the canonical module.
void verify_elliptic_surface(Report& rep, const std::string& stage, const Ideal& ix,
                             const RingPtr& ring) {
  BettiTable betti = ideal_betti_table(ix.minimal_generators());
  rep.expect(stage, "Betti table of I_X", expected_betti_IX().summary(), betti.summary());
  rep.expect(stage, "rank of I_X by alternating sum", 1, betti.alternating_rank());
  rep.table(stage + " Betti table of I_X", betti.to_text());

  SurfaceNumbers sn = surface_numbers(ix.quotient_series());
  rep.expect(stage, "(d,pi,chi)", "(12,13,3)", numbers_text(sn));
  rep.expect(stage, "h0 I_X(5)", 5, ix.dim_in_degree(5));
  rep.expect(stage, "h0 I_X(4)", 0, ix.dim_in_degree(4));

  SheafCohomology sc = SheafCohomology::of_ideal(ix);
  CohomologyTable wide = cohomology_table(ix, sc, -1, 5);
  CohomologyTable narrow(-1, 3, 4);
  for (int i = 0; i <= 4; ++i)
    for (int j = -1; j <= 3; ++j) narrow.set(i, j, wide.at(i, j));
  rep.expect(stage, "cohomology table j in [-1,3]", expected_cohomology_IX().to_text(),
             narrow.to_text());
  rep.table(stage + " cohomology table h^i I_X(j)", wide.to_text());

  SurfaceInvariants inv = surface_invariants(ix, wide);
  rep.expect(stage, "p_g = h3 I_X(0)", 3, inv.pg);
  rep.expect(stage, "q = h2 I_X(0)", 1, inv.q);
  rep.expect(stage, "K^2", 0, inv.k2);
  rep.expect(stage, "s = h2 I_X(1)", 2, inv.s_table);
  rep.expect(stage, "s from pi - d + 3 + q - p_g", inv.s_table, inv.s_formula);
  rep.expect(stage, "chi = p_g - q + 1", inv.chi, inv.pg - inv.q + 1);
  rep.expect(stage, "double point formula residual", 0,
             double_point_residual(inv.d, inv.pi, inv.chi, inv.k2));
  bool rr = true;
  for (int j = -1; j <= 5; ++j)
    rr = rr && wide.euler(j) == rr_chi_ideal(j, inv.d, inv.pi, inv.q, inv.pg);
  rep.expect_true(stage, "sum (-1)^i h^i I_X(j) = Riemann-Roch for j in [-1,5]", rr);
  bool h4 = true;
  for (int j = -1; j <= 5; ++j) h4 = h4 && wide.at(4, j) == 0;
  rep.expect_true(stage, "h4 I_X(j) = 0 for j in [-1,5]", h4);

  bool h0 = true;
  for (int j = -1; j <= 5; ++j) h0 = h0 && sc.h(0, j) == wide.at(0, j);
  rep.expect_true(stage, "h0 by local duality = saturated count for j in [-1,5]", h0);

  GradedModule h2 = present_finite(ring, sc.intermediate_pieces(2, -2, 6));
  rep.expect(stage, "Hilbert function of H2_* I_X in degrees 0..3", "1,2,1,0",
             hf_text(h2, 0, 3));
  rep.expect(stage, "Betti table of H2_* I_X = that of M", expected_betti_M().summary(),
             betti_table(minimal_free_resolution(h2)).summary());
  GradedModule h1 = present_finite(ring, sc.intermediate_pieces(1, -2, 6));
  std::string gen_degrees;
  for (int t : h1.generators().twists) gen_degrees += (gen_degrees.empty() ? "" : ",") + std::to_string(t);
  rep.expect(stage, "generator degrees of H1_* I_X", "2", gen_degrees);
  rep.expect(stage, "Hilbert function of H1_* I_X in degrees 1..3", "0,1,4",
             hf_text(h1, 1, 3));
  rep.expect(stage, "h1 I_X(j) = 0 for j = 6, 7 (window is wide enough)", "0,0",
             join({sc.h(1, 6), sc.h(1, 7)}));

  // Canonical module Ext^1(I_X, S(-5)); its three sections generate it
  // everywhere iff adding them to the relations leaves finite length.
  GradedModule omega = sc.ext_module(1);
  rep.expect(stage, "h0 omega_X", 3, hilbert_function(omega, 0, 0)[0]);
  const GradedMatrix& p = omega.presentation();
  PieceBasis sections(ring->nvars, p.target(), 0);
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t c = 0; c < p.cols(); ++c) cols.push_back(p.column(c));
  for (std::size_t k = 0; k < sections.size(); ++k) {
    Vec v(sections.size(), 0);
    v[k] = 1;
    cols.push_back(sections.to_column(ring, p.target().rank(), v));
  }
  GradedModule rest(GradedMatrix::from_columns(ring, p.target(), cols));
  rep.expect_true(stage, "omega_X globally generated by its 3 sections",
                  hilbert_series(rest).dimension() <= 0);

  rep.set_invariants(inv);
}

}  // namespace

// ---------------------------------------------------------------- tables

BettiTable expected_betti_M() {
  return table_from({{{0, 1}},
                     {{1, 3}, {2, 2}},
                     {{2, 3}, {3, 6}, {4, 1}},
                     {{3, 1}, {4, 6}, {5, 3}},
                     {{5, 2}, {6, 3}},
                     {{7, 1}}});
}

BettiTable expected_betti_N() {
  return table_from({{{2, 1}},
                     {{3, 1}, {4, 5}},
                     {{5, 7}, {6, 7}},
                     {{6, 2}, {7, 11}, {8, 3}},
                     {{8, 4}, {9, 5}},
                     {{10, 2}}});
}

BettiTable expected_betti_K() {
  return table_from({{{4, 1}, {5, 8}, {6, 4}},
                     {{6, 2}, {7, 10}, {8, 3}},
                     {{8, 4}, {9, 5}},
                     {{10, 2}}});
}

BettiTable expected_betti_E() {
  return table_from({{{5, 8}, {6, 4}},
                     {{6, 2}, {7, 10}, {8, 3}},
                     {{8, 4}, {9, 5}},
                     {{10, 2}}});
}

BettiTable expected_betti_IX() {
  return table_from({{{5, 5}, {6, 4}},
                     {{6, 2}, {7, 10}, {8, 3}},
                     {{8, 4}, {9, 5}},
                     {{10, 2}}});
}

CohomologyTable expected_cohomology_IX() {
  CohomologyTable t(-1, 3, 4);
  t.set(3, -1, 15);
  t.set(3, 0, 3);
  t.set(2, 0, 1);
  t.set(2, 1, 2);
  t.set(2, 2, 1);
  t.set(1, 2, 1);
  t.set(1, 3, 4);
  return t;
}

SurfaceInvariants surface_invariants(const Ideal& saturated, const CohomologyTable& t) {
  SurfaceNumbers sn = surface_numbers(saturated.quotient_series());
  SurfaceInvariants v;
  v.d = sn.d;
  v.pi = sn.pi;
  v.chi = sn.chi;
  v.pg = t.at(3, 0);
  v.q = t.at(2, 0);
  v.k2 = k2_from_invariants(v.d, v.pi, v.chi);
  v.s_formula = speciality_formula(v.d, v.pi, v.q, v.pg);
  v.s_table = t.at(2, 1);
  return v;
}

Ideal link(const Ideal& ci, const Ideal& i) {
  // The residual in a complete intersection is unmixed, hence saturated.
  return quotient(ci, i).with_saturated(true);
}

// ---------------------------------------------------------------- lines

namespace {

Vec linear_coeffs(const Polynomial& f) {
  Vec v(static_cast<std::size_t>(f.ring()->nvars), 0);
  for (const Term& t : f.terms())
    for (int i = 0; i < f.ring()->nvars; ++i)
      if (t.mono.exponent(i) == 1) v[i] = t.coeff;
  return v;
}

Polynomial linear_form(const RingPtr& ring, const Vec& c) {
  Polynomial out(ring);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) out += Polynomial::variable(ring, static_cast<int>(i)).scaled(c[i]);
  return out;
}

DenseMatrix rows_of(const std::vector<Vec>& rows, std::size_t cols) {
  DenseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Linear span of the given points, as an ideal of linear forms.
Ideal ideal_of_points(const RingPtr& ring, const std::vector<Vec>& points) {
  std::vector<Polynomial> forms;
  for (const Vec& k : kernel(ring->field, rows_of(points, ring->nvars)))
    forms.push_back(linear_form(ring, k));
  return Ideal(ring, forms, true);
}

// Coordinates of a reduced point given by its saturated ideal.
Vec point_of(const Ideal& p) {
  const RingPtr& ring = p.ring();
  std::vector<Vec> rows;
  for (const Polynomial& f : p.basis_in_degree(1)) rows.push_back(linear_coeffs(f));
  auto k = kernel(ring->field, rows_of(rows, ring->nvars));
  if (k.size() != 1) throw DegeneracyError("not a reduced point");
  return k.front();
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  const RingPtr& ring = m[0][0].ring();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Polynomial out(ring);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Polynomial term = Polynomial::constant(ring, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Ideal saturate_by(const Ideal& a, const Polynomial& f) {
  Ideal cur = a;
  Ideal by(a.ring(), {f});
  for (;;) {
    Ideal next = quotient(cur, by);
    if (next.equals(cur)) return cur;
    cur = next;
  }
}

}  // namespace

Ideal reduced_line(const Ideal& j, Rng& rng) {
  const RingPtr& ring = j.ring();
  std::vector<Vec> points;
  for (int k = 0; k < 2; ++k) {
    Ideal cut = saturate(with_element(j, random_form(ring, 1, rng)));
    HilbertSeries hs = cut.quotient_series();
    if (hs.dimension() != 1 || hs.degree() != 1)
      throw DegeneracyError("hyperplane section of the curve is not one reduced point");
    points.push_back(point_of(cut));
  }
  Ideal line = ideal_of_points(ring, points);
  if (line.dim_in_degree(1) != ring->nvars - 2) throw DegeneracyError("points coincide");
  return line;
}

ScrollLines scroll_lines(const Ideal& x0, std::uint64_t seed) {
  const RingPtr& ring = x0.ring();
  const PrimeField& field = ring->field;
  if (ring->nvars != 5) throw UsageError("scroll_lines: surfaces in P^4 only");
  Rng rng(seed);
  SmoothnessCertificate cert = smoothness_certificate(x0, 2, seed);
  if (!cert.singular_locus) throw DegeneracyError("X0 has no singular locus");
  Ideal dl = reduced_line(*cert.singular_locus, rng);

  auto lin = x0.basis_in_degree(1);
  if (lin.size() != 1) throw UsageError("scroll_lines: X0 must span a hyperplane");
  std::optional<Polynomial> cubic;
  for (const Polynomial& g : x0.minimal_generators())
    if (g.degree() == 3) cubic = g;
  if (!cubic) throw UsageError("scroll_lines: X0 must be a cubic surface");

  // A random frame w_0..w_3 of the hyperplane.
  auto hk = kernel(field, rows_of({linear_coeffs(lin[0])}, 5));
  std::vector<Vec> w(4, Vec(5, 0));
  for (auto& col : w)
    for (const Vec& k : hk) {
      std::uint32_t c = rng.element(field);
      for (int i = 0; i < 5; ++i) col[i] = field.add(col[i], field.mul(c, k[i]));
    }
  if (rank(field, rows_of(w, 5)) != 4) throw DegeneracyError("frame of H0 is degenerate");

  // Lines through (z,0,a,b) and (0,z,c,d) in frame coordinates; the cubic
  // restricted to such a line gives four forms in z,a,b,c,d.
  RingPtr r7 = make_ring(field.characteristic(), 7);
  auto v = [&](int i) { return Polynomial::variable(r7, i); };
  std::vector<Polynomial> u = {v(0) * v(2), v(1) * v(2), v(0) * v(3) + v(1) * v(5),
                               v(0) * v(4) + v(1) * v(6)};
  std::vector<Polynomial> xs;
  for (int i = 0; i < 5; ++i) {
    Polynomial xi(r7);
    for (int j = 0; j < 4; ++j) xi += u[j].scaled(w[j][i]);
    xs.push_back(xi);
  }
  Polynomial restricted = substitute(*cubic, xs);
  RingPtr r5 = make_ring(field.characteristic(), 5);
  std::vector<std::vector<Term>> parts(4);
  for (const Term& t : restricted.terms()) {
    std::vector<int> e(5);
    for (int i = 0; i < 5; ++i) e[i] = t.mono.exponent(i + 2);
    parts[t.mono.exponent(0)].push_back({Monomial::from_exponents(e), t.coeff});
  }
  std::vector<Polynomial> fano;
  for (auto& p : parts) fano.push_back(Polynomial::from_terms(r5, std::move(p)));

  // Lines meeting the double line: det(v1, v2, p1, p2) = 0 with p1, p2 on it.
  std::vector<std::vector<Polynomial>> m;
  auto w5 = [&](int i) { return Polynomial::variable(r5, i); };
  Polynomial zero(r5);
  m.push_back({w5(0), zero, w5(1), w5(2)});
  m.push_back({zero, w5(0), w5(3), w5(4)});
  std::vector<Vec> dl_rows;
  for (const Polynomial& f : dl.basis_in_degree(1)) dl_rows.push_back(linear_coeffs(f));
  for (const Vec& p : kernel(field, rows_of(dl_rows, 5))) {
    DenseMatrix sys(5, 5);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 4; ++j) sys.at(i, j) = w[j][i];
      sys.at(i, 4) = p[i];
    }
    auto k = kernel(field, sys);
    if (k.size() != 1 || k[0][4] == 0) throw DegeneracyError("double line not in the hyperplane");
    std::vector<Polynomial> row;
    for (int j = 0; j < 4; ++j) row.push_back(Polynomial::constant(r5, field.to_signed(k[0][j])));
    m.push_back(row);
  }
  if (m.size() != 4) throw DegeneracyError("double line is not a line");
  Polynomial meets = determinant(m);

  Ideal isolated = saturate(saturate_by(saturate_by(Ideal(r5, fano), meets), w5(0)));
  HilbertSeries hs = isolated.quotient_series();
  if (hs.dimension() != 1 || hs.degree() != 1)
    throw DegeneracyError("lines missing the double line do not form one reduced point");
  Vec pt = point_of(isolated);
  if (pt[0] == 0) throw DegeneracyError("directrix outside the chart");
  Vec c1 = {pt[0], 0, pt[1], pt[2]}, c2 = {0, pt[0], pt[3], pt[4]};
  std::vector<Vec> ends(2, Vec(5, 0));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j) {
      ends[0][i] = field.add(ends[0][i], field.mul(w[j][i], c1[j]));
      ends[1][i] = field.add(ends[1][i], field.mul(w[j][i], c2[j]));
    }
  return {dl, ideal_of_points(ring, ends)};
}

// ---------------------------------------------------------------- monad

GradedModule build_M(const RingPtr& ring) { return GradedModule(monad_f0(ring)); }

GradedModule build_N(const RingPtr& ring) {
  return GradedModule(compose(monad_phi(ring), monad_f2(ring)));
}

MonadModules build_monad_modules(const RingPtr& ring) {
  GradedMatrix f2 = monad_f2(ring);
  GradedMatrix n = compose(monad_phi(ring), f2);
  GradedMatrix f3 = minimal_generators(syzygies(f2));
  GradedMatrix z = minimal_generators(syzygies(n));
  GradedModule k = subquotient(z, f3);
  GradedModule e = subquotient(z, f3.concat_columns(monad_psi(ring)));
  return {GradedModule(monad_f0(ring)), GradedModule(n), f3, z, k, e};
}

GradedModule build_F(const RingPtr&, const MonadModules& mods) {
  const RingPtr& ring = mods.z.ring();
  return subquotient(mods.z,
                     mods.f3.concat_columns(monad_psi(ring)).concat_columns(monad_psi_prime(ring)));
}

bool is_locally_free(const GradedModule& m) {
  SheafCohomology sc(m);
  const int n = m.ring()->nvars;
  for (int k = 1; k <= n; ++k) {
    GradedModule ext = sc.ext_module(k);
    if (ext.generators().rank() == 0) continue;
    if (hilbert_series(ext).dimension() > 0) return false;
  }
  return true;
}

MonadResult monad_pipeline(const PipelineOptions& opt) {
  if (!is_prime(opt.characteristic)) throw UsageError("characteristic must be prime");
  MonadResult out{Report("monad", opt.seed, opt.characteristic), std::nullopt};
  Report& rep = out.report;
  RingPtr ring = make_ring(opt.characteristic);
  StageTimer timer(rep);

  // M, its resolution and the second syzygy bundle B.
  GradedModule m = build_M(ring);
  BettiTable bm = betti_table(minimal_free_resolution(m));
  rep.expect("M", "Betti table", expected_betti_M().summary(), bm.summary());
  rep.expect("M", "Hilbert function in degrees 0..3", "1,2,1,0", hf_text(m, 0, 3));
  rep.expect("M", "length of resolution", 5, bm.length());
  rep.expect("M", "rank of B", 6, bm.rank(3) - bm.rank(4) + bm.rank(5));
  rep.table("Betti table of M", bm.to_text());
  rep.artifact("M.mat", format_matrix(m.presentation()));
  timer.lap("M");

  MonadModules mods = build_monad_modules(ring);
  BettiTable bn = betti_table(minimal_free_resolution(mods.n));
  rep.expect("N", "Betti table", expected_betti_N().summary(), bn.summary());
  rep.expect("N", "dimension (0 = finite length)", 0, hilbert_series(mods.n).dimension());
  rep.expect("N", "Hilbert function in degrees 2..3", "1,4", hf_text(mods.n, 2, 3));
  rep.expect_true("N", "S(-4) among the first syzygies", bn.at(1, 4) >= 1);
  rep.table("Betti table of N", bn.to_text());
  rep.artifact("N.mat", format_matrix(mods.n.presentation()));
  timer.lap("N");

  BettiTable bk = betti_table(minimal_free_resolution(mods.k));
  rep.expect("K", "Betti table", expected_betti_K().summary(), bk.summary());
  rep.expect("K", "rank", 5, bk.alternating_rank());
  rep.artifact("K.mat", format_matrix(mods.k.presentation()));
  BettiTable be = betti_table(minimal_free_resolution(mods.e));
  rep.expect("E", "Betti table", expected_betti_E().summary(), be.summary());
  rep.expect("E", "rank", 4, be.alternating_rank());
  rep.expect_true("E", "locally free", is_locally_free(mods.e));
  rep.table("Betti table of E", be.to_text());
  rep.artifact("E.mat", format_matrix(mods.e.presentation()));
  timer.lap("K, E");

  if (opt.rank3_check) {
    GradedModule f = build_F(ring, mods);
    BettiTable bf = betti_table(minimal_free_resolution(f.shifted(-5)));
    rep.expect("F", "rank", 3, bf.alternating_rank());
    rep.expect_true("F", "locally free", is_locally_free(f));
    auto c = chern_classes(bf, 3);
    rep.expect("F", "Chern classes (c1,c2,c3) of F(5)", "5,12,12",
               join({c[1], c[2], c[3]}));
    // Dependency locus of two general sections of F(5).
    const GradedMatrix& pf = f.presentation();
    with_retries(rep, "F sections", opt.seed, opt.max_retries, [&](std::uint64_t s, int) {
      Rng rng(s);
      GradedMatrix g(ring, pf.target(), GradedFreeModule{{5, 5}});
      for (std::size_t i = 0; i < pf.rows(); ++i) {
        if (pf.target().twists[i] != 5) continue;
        for (int j = 0; j < 2; ++j) g.set(i, j, Polynomial::constant(ring, rng.element(ring->field)));
      }
      GradedMatrix p = pf.concat_columns(g);
      Rng check(s ^ 0x5bd1e995u);
      if (generic_rank(p, check) + 1 != p.rows()) throw DegeneracyError("rank drop of the sections");
      EmbeddedIdeal emb = module_to_ideal(GradedModule(p), s);
      if (emb.twist != 0) throw DegeneracyError("dependency locus ideal is twisted");
      rep.expect("F", "Betti table of the dependency locus of two sections",
                 expected_betti_IX().summary(),
                 ideal_betti_table(emb.ideal.minimal_generators()).summary());
    });
    timer.lap("F");
  }

  // The general map 3O(-5) -> E and the ideal of its degeneracy locus.
  const GradedMatrix& pe = mods.e.presentation();
  std::optional<Ideal> ix;
  GradedMatrix general(ring, pe.target(), GradedFreeModule{{5, 5, 5}});
  bool ok = with_retries(rep, "general map", opt.seed, opt.max_retries,
                         [&](std::uint64_t s, int attempt) {
    Rng rng(s);
    GradedMatrix f(ring, pe.target(), GradedFreeModule{{5, 5, 5}});
    for (std::size_t i = 0; i < pe.rows(); ++i) {
      if (pe.target().twists[i] != 5) continue;
      for (int j = 0; j < 3; ++j)
        f.set(i, j, Polynomial::constant(ring, rng.element(ring->field)));
      if (attempt < opt.degenerate_draws) f.set(i, 2, f.at(i, 1));
    }
    GradedMatrix p = pe.concat_columns(f);
    Rng check(s ^ 0x5bd1e995u);
    if (generic_rank(p, check) + 1 != p.rows()) throw DegeneracyError("rank drop of the general map");
    EmbeddedIdeal emb = module_to_ideal(GradedModule(p), s);
    if (emb.twist != 0) throw DegeneracyError("cokernel is not I_X without twist");
    require_smooth(emb.ideal, s, rep, "X", "X");
    general = f;
    ix = emb.ideal;
  });
  timer.lap("X");
  if (!ok) return out;
  rep.artifact("f.mat", format_matrix(general));
  rep.artifact("IX.ideal", format_ideal(ix->minimal_generators()));
  verify_elliptic_surface(rep, "X", *ix, ring);
  timer.lap("X verification");

  if (opt.bridge) {
    bridge_link(*ix, stage_seed(opt.seed, "bridge", 0), rep, opt.max_retries);
    timer.lap("bridge");
  }
  out.ix = ix;
  return out;
}

std::optional<BridgeResult> bridge_link(const Ideal& ix, std::uint64_t seed, Report& rep,
                                        int max_retries) {
  const RingPtr& ring = ix.ring();
  const std::string st = "bridge";
  Ideal j(ring, ix.basis_in_degree(5));
  rep.expect(st, "number of quintics through X", 5, static_cast<std::int64_t>(j.generators().size()));
  Ideal jsat = saturate(j);
  HilbertSeries hj = jsat.quotient_series();
  rep.expect(st, "degree of V(quintics)", 15, hj.degree());
  Ideal x0 = quotient(jsat, ix).with_saturated(true);
  SurfaceNumbers n0 = surface_numbers(x0.quotient_series());
  rep.expect(st, "degree of X0", 3, n0.d);
  rep.expect(st, "hyperplanes containing X0", 1, x0.dim_in_degree(1));
  rep.expect_true(st, "V(quintics) = X + X0", jsat.equals(intersect(ix, x0)));

  std::optional<ScrollLines> lines;
  if (!with_retries(rep, "scroll lines", seed, max_retries, [&](std::uint64_t s, int) {
        lines = scroll_lines(x0, s);
      }))
    return std::nullopt;
  const Ideal& dl = lines->double_line;
  const Ideal& line = lines->directrix;
  CurveNumbers dn = curve_numbers(dl.quotient_series());
  rep.expect(st, "X0 singular along a line (degree, p_a)", "(1,0)", numbers_text(dn.degree, dn.pa));
  rep.expect_true(st, "directrix line L lies on X0", line.contains(x0));
  rep.expect_true(st, "L misses the double line", saturate(sum(line, dl)).is_unit());
  rep.expect_true(st, "X meets L nowhere", saturate(sum(ix, line)).is_unit());
  HilbertSeries xd = saturate(sum(ix, dl)).quotient_series();
  rep.expect(st, "points of X on the double line", 3, xd.dimension() == 1 ? xd.degree() : -1);
  CurveNumbers cn = curve_numbers(saturate(sum(ix, x0)).quotient_series());
  rep.expect(st, "C0 = X . X0 (degree, p_a)", "(12,13)", numbers_text(cn.degree, cn.pa));

  std::optional<BridgeResult> out;
  with_retries(rep, "bridge link", seed, max_retries, [&](std::uint64_t s, int) {
    Rng rng(s);
    Polynomial g1 = random_element(jsat, 5, rng), g2 = random_element(jsat, 5, rng);
    Ideal ci(ring, {g1, g2});
    if (ci.quotient_series().degree() != 25 || ci.quotient_series().dimension() != 3)
      throw DegeneracyError("quintics do not meet properly");
    Ideal t = link(ci, jsat);
    require_smooth(t, s, rep, st, "T");
    SurfaceNumbers nt = surface_numbers(t.quotient_series());
    rep.expect(st, "T (d,pi,chi)", "(10,10,4)", numbers_text(nt));
    rep.expect(st, "degrees add up in the (5,5) link", 25, nt.d + 15);
    rep.artifact("T.ideal", format_ideal(t.minimal_generators()));
    out = BridgeResult{x0, t, line, dl};
  });
  rep.artifact("X0.ideal", format_ideal(x0.minimal_generators()));
  rep.artifact("L.ideal", format_ideal(line.minimal_generators()));
  rep.artifact("double_line.ideal", format_ideal(dl.minimal_generators()));
  return out;
}

// ---------------------------------------------------------------- liaison

LiaisonExample liaison_example(const RingPtr& ring) {
  auto p = [&](const char* s) { return parse_polynomial(ring, s); };
  Polynomial h0 = p("x1");
  Polynomial q1 = p("x4*x0 - x2*x3"), q2 = p("x2^2 + x3^2 + x4^2");
  Polynomial qq1 = p("(x1 - x4)*(x4 - x0)"), qq2 = p("(x4 - x0)*(x1 + x0)"),
             qq3 = p("(x1 + x0)*(x1 - x4)");
  Polynomial f = q1 * p("x0") + q2 * p("x4");
  Polynomial x4 = p("x4"), x1 = p("x1"), x0 = p("x0"), x2 = p("x2"), x3 = p("x3");
  Polynomial h02 = h0 * h0;
  std::vector<Polynomial> g;
  g.push_back((x1 * x1 - x4 * x4) * h02);
  g.push_back((-(x1 * x1) + x4 * x4 + qq3) * h02);
  // Corrected: the printed form has +q2*Q3 + x4^2*q2, which is not in I_U0.
  g.push_back(h02 * q2 - (x0 * x4 + x1 * x4) * qq1 + (-q1 + x1 * x4 - x4 * x4) * qq2 -
              q2 * qq3 - x4 * x4 * q2);
  g.push_back((x1 * x1 - x4 * x4 - qq2 - qq3) * h02);
  g.push_back(q2 * h02 + (-(x1 * x4) + x4 * x4) * qq2 + (-(x2 * x3) + x4 * x4) * qq3 -
              x4 * x4 * q2);
  Polynomial printed = h02 * q2 - (x0 * x4 + x1 * x4) * qq1 +
                       (-q1 + x1 * x4 - x4 * x4) * qq2 + q2 * qq3 + x4 * x4 * q2;
  return {h0,
          Ideal(ring, {x0, x1, x4}),
          Ideal(ring, {qq1, qq2, qq3}),
          Ideal(ring, {h0, f}),
          Ideal(ring, {h0, q1, q2}),
          Ideal(ring, {h02, q1, q2}),
          g,
          printed};
}

LiaisonResult liaison_pipeline(const PipelineOptions& opt) {
  if (!is_prime(opt.characteristic)) throw UsageError("characteristic must be prime");
  LiaisonResult out{Report(opt.example ? "liaison-example" : "liaison", opt.seed,
                           opt.characteristic),
                    std::nullopt};
  Report& rep = out.report;
  RingPtr ring = make_ring(opt.characteristic);
  StageTimer timer(rep);

  struct Setup {
    Polynomial h0;
    std::vector<Polynomial> hs;  // h0, h1, h2 spanning I_L
    Ideal l, u0, u1, d, d2;
  };
  std::optional<Setup> su;

  // U0 (three planes through L), U1 (cubic in H0 through L), D, D2.
  bool ok = with_retries(rep, "U0, U1, D", opt.seed, opt.max_retries,
                         [&](std::uint64_t s, int) {
    Setup x{Polynomial(ring), {}, Ideal(ring, {}), Ideal(ring, {}), Ideal(ring, {}),
            Ideal(ring, {}), Ideal(ring, {})};
    if (opt.example) {
      LiaisonExample ex = liaison_example(ring);
      x.h0 = ex.h0;
      x.hs = {ex.h0, Polynomial::variable(ring, 0), Polynomial::variable(ring, 4)};
      x.l = ex.l;
      x.u0 = ex.u0;
      x.u1 = ex.u1;
      x.d = ex.d;
      x.d2 = ex.d2;
    } else {
      Rng rng(s);
      std::vector<Polynomial> h;
      for (int i = 0; i < 5; ++i) h.push_back(random_form(ring, 1, rng));
      if (!linearly_independent(ring, h, 1)) throw DegeneracyError("dependent linear forms");
      x.h0 = h[0];
      x.hs = {h[0], h[1], h[2]};
      std::vector<Polynomial> l3 = {h[0], h[1], h[2]};
      std::vector<Polynomial> ls;
      for (int i = 0; i < 3; ++i) ls.push_back(random_combination(ring, l3, rng));
      if (!linearly_independent(ring, ls, 1)) throw DegeneracyError("planes of U0 not general");
      x.l = Ideal(ring, l3);
      x.u0 = Ideal(ring, {ls[0] * ls[1], ls[1] * ls[2], ls[2] * ls[0]});
      std::vector<Polynomial> hyper = {h[1], h[2], h[3], h[4]};
      Polynomial q1 = random_quadric(ring, hyper, rng), q2 = random_quadric(ring, hyper, rng);
      std::vector<Polynomial> l2 = {h[1], h[2]};
      Polynomial f = q1 * random_combination(ring, l2, rng) +
                     q2 * random_combination(ring, l2, rng);
      x.u1 = Ideal(ring, {h[0], f});
      x.d = Ideal(ring, {h[0], q1, q2});
      x.d2 = Ideal(ring, {h[0] * h[0], q1, q2});
    }
    CurveNumbers dn = curve_numbers(x.d.quotient_series());
    if (dn.degree != 4 || dn.pa != 1) throw DegeneracyError("D is not an elliptic quartic");
    if (!saturate(sum(x.d, x.l)).is_unit()) throw DegeneracyError("D meets L");
    su = std::move(x);
  });
  timer.lap("U0, U1, D");
  if (!ok) return out;
  const Setup& s = *su;
  const std::string st0 = "U0, U1, D";
  CurveNumbers dn = curve_numbers(s.d.quotient_series());
  rep.expect(st0, "D (degree, p_a)", "(4,1)", numbers_text(dn.degree, dn.pa));
  rep.expect_true(st0, "D meets L nowhere", saturate(sum(s.d, s.l)).is_unit());
  rep.expect(st0, "degree of U0", 3, surface_numbers(s.u0.quotient_series()).d);
  rep.expect_true(st0, "L in U0 and U1", s.l.contains(s.u0) && s.l.contains(s.u1));
  rep.expect_true(st0, "D2 not in U1", !s.d2.contains(s.u1));
  rep.expect_true(st0, "D in U1", s.d.contains(s.u1));
  Ideal u0d = intersect(s.u0, s.d);
  rep.expect(st0, "h0 I_{U0+D}(3)", 3, u0d.dim_in_degree(3));
  rep.expect(st0, "h0 I_{U0}(2)", 3, s.u0.dim_in_degree(2));
  Ideal w = intersect(intersect(s.u1, s.u0), s.d2);
  rep.expect(st0, "h0 I_{U1+U0+D2}(4)", 5, w.dim_in_degree(4));
  if (opt.example) {
    LiaisonExample ex = liaison_example(ring);
    bool all_in = true;
    for (const Polynomial& g : ex.quartics) all_in = all_in && w.contains(g);
    rep.expect_true(st0, "g1..g5 lie in I_{U1+U0+D2}", all_in);
    rep.expect(st0, "g1..g5 span the quartics of I_{U1+U0+D2}", 5,
               Ideal(ring, ex.quartics).dim_in_degree(4));
    rep.note("g3 as printed lies in I_{U1+U0+D2}", w.contains(ex.g3_printed) ? "yes" : "no");
  }
  rep.artifact("L.ideal", format_ideal(s.l.generators()));
  rep.artifact("U0.ideal", format_ideal(s.u0.generators()));
  rep.artifact("U1.ideal", format_ideal(s.u1.generators()));
  rep.artifact("D.ideal", format_ideal(s.d.generators()));
  rep.artifact("D2.ideal", format_ideal(s.d2.generators()));
  timer.lap("U0, U1, D checks");

  // T, linked (4,4) to U0 + U1.
  Ideal u01 = intersect(s.u0, s.u1);
  std::optional<Ideal> t;
  ok = with_retries(rep, "T", opt.seed, opt.max_retries, [&](std::uint64_t seed, int) {
    Rng rng(seed);
    Ideal ci(ring, {random_element(w, 4, rng), random_element(w, 4, rng)});
    HilbertSeries hs = ci.quotient_series();
    if (hs.dimension() != 3 || hs.degree() != 16) throw DegeneracyError("quartics not a complete intersection");
    Ideal tt = link(ci, u01);
    require_smooth(tt, seed, rep, "T", "T");
    t = tt;
  });
  timer.lap("T");
  if (!ok) return out;
  SurfaceNumbers nt = surface_numbers(t->quotient_series());
  SurfaceNumbers nu = surface_numbers(u01.quotient_series());
  rep.expect("T", "T (d,pi,chi)", "(10,10,4)", numbers_text(nt));
  rep.expect("T", "degrees add up in the (4,4) link", 16, nt.d + nu.d);
  rep.expect("T", "genus difference in the (4,4) link", (4 + 4 - 4) * (nt.d - nu.d) / 2,
             nt.pi - nu.pi);
  rep.expect("T", "K^2 of T", 4, k2_from_invariants(nt.d, nt.pi, nt.chi));
  rep.expect_true("T", "D in T", s.d.contains(*t));
  SheafCohomology sct = SheafCohomology::of_ideal(*t);
  rep.expect("T", "h0 I_T(4)", 3, t->dim_in_degree(4));
  rep.expect("T", "h1 I_T(4)", 1, sct.h(1, 4));
  rep.artifact("T.ideal", format_ideal(t->minimal_generators()));
  timer.lap("T checks");

  // C = T . H0 = D + C1.
  Ideal c = saturate(with_element(*t, s.h0));
  CurveNumbers cn = curve_numbers(c.quotient_series());
  rep.expect("C", "C (degree, p_a)", "(10,10)", numbers_text(cn.degree, cn.pa));
  Ideal c1 = quotient(c, s.d).with_saturated(true);
  HilbertSeries h1 = c1.quotient_series();
  bool poly = h1.dimension() == 2;
  for (int m = 0; poly && m <= 6; ++m) poly = h1.polynomial(m) == 6 * m + 3;
  rep.expect_true("C", "Hilbert polynomial of C1 is 6m+3", poly);
  Ideal c1d = saturate(sum(c1, s.d));
  HilbertSeries hc1d = c1d.quotient_series();
  rep.expect("C", "C1 . D is a finite scheme", 1, hc1d.dimension());
  rep.expect("C", "length of C1 . D", 12, hc1d.degree());
  rep.expect("C", "p_a(C) = p_a(D) + p_a(C1) + C1.D - 1", cn.pa,
             genus_addition(1, curve_numbers(h1).pa, hc1d.degree()));
  std::int64_t pencil = c1.dim_in_degree(3) - Ideal(ring, {s.h0}).dim_in_degree(3);
  rep.expect("C", "cubics in H0 through C1", 2, pencil);
  rep.artifact("C1.ideal", format_ideal(c1.minimal_generators()));
  timer.lap("C");

  // X0, a general cubic of the pencil.
  std::optional<Ideal> x0;
  ok = with_retries(rep, "X0", opt.seed, opt.max_retries, [&](std::uint64_t seed, int) {
    Rng rng(seed);
    Ideal cand(ring, {s.h0, random_element(c1, 3, rng)}, true);
    if (cand.dim_in_degree(3) != 16) throw DegeneracyError("cubic is a multiple of h0");
    if (cand.equals(s.u1)) throw DegeneracyError("X0 = U1");
    if (s.d.contains(cand)) throw DegeneracyError("X0 contains D");
    require_smooth(cand, seed, rep, "X0", "X0");
    x0 = cand;
  });
  timer.lap("X0");
  if (!ok) return out;
  rep.expect_true("X0", "X0 != U1", !x0->equals(s.u1));
  rep.expect_true("X0", "X0 . D = C1 . D", saturate(sum(*x0, s.d)).equals(c1d));
  rep.expect_true("X0", "T . X0 = C1", saturate(sum(*t, *x0)).equals(c1));
  rep.artifact("X0.ideal", format_ideal(x0->generators()));

  // Y = T + X0 and its quintics.
  Ideal y = intersect(*t, *x0).with_saturated(true);
  rep.expect("Y", "h0 I_Y(5)", 5, y.dim_in_degree(5));
  rep.expect("Y", "h0 I_Y(4)", 0, y.dim_in_degree(4));
  SheafCohomology scy = SheafCohomology::of_ideal(y);
  rep.expect("Y", "h1 I_Y(4)", 2, scy.h(1, 4));
  rep.expect("Y", "h2 I_Y(4)", 0, scy.h(2, 4));
  rep.expect_true("Y", "quintics of I_Y cut out Y", saturate(Ideal(ring, y.basis_in_degree(5))).equals(y));
  rep.expect("Y", "h0 I_{D,H0}(2)", 2, s.d.dim_in_degree(2) - 5);
  {
    Rng rng(stage_seed(opt.seed, "H", 0));
    Polynomial h = random_combination(ring, s.hs, rng);
    Ideal yh = saturate(with_element(y, h));
    rep.expect("Y", "h0 I_{Y.H,H}(5) for general H through L", 7, yh.dim_in_degree(5) - 70);
  }
  SurfaceNumbers ny = surface_numbers(y.quotient_series());
  rep.artifact("Y.ideal", format_ideal(y.minimal_generators()));
  timer.lap("Y");

  // X, linked (5,5) to Y.
  std::optional<Ideal> x;
  std::optional<Ideal> ci5;
  ok = with_retries(rep, "X", opt.seed, opt.max_retries, [&](std::uint64_t seed, int) {
    Rng rng(seed);
    Ideal ci(ring, {random_element(y, 5, rng), random_element(y, 5, rng)});
    HilbertSeries hs = ci.quotient_series();
    if (hs.dimension() != 3 || hs.degree() != 25) throw DegeneracyError("quintics not a complete intersection");
    Ideal xx = link(ci, y);
    require_smooth(xx, seed, rep, "X", "X");
    x = xx;
    ci5 = ci;
  });
  timer.lap("X");
  if (!ok) return out;
  rep.expect_true("X", "linking back recovers Y", link(*ci5, *x).equals(y));
  SurfaceNumbers nx = surface_numbers(x->quotient_series());
  rep.expect("X", "degrees add up in the (5,5) link", 25, nx.d + ny.d);
  rep.expect("X", "genus difference in the (5,5) link", (5 + 5 - 4) * (nx.d - ny.d) / 2,
             nx.pi - ny.pi);
  rep.expect_true("X", "X meets L nowhere", saturate(sum(*x, s.l)).is_unit());
  rep.expect("X", "h0 I_{T+X0}(5) - h0 I_{T+X0+X}(5)", 3,
             y.dim_in_degree(5) - intersect(y, *x).dim_in_degree(5));
  rep.artifact("X.ideal", format_ideal(x->minimal_generators()));
  verify_elliptic_surface(rep, "X", *x, ring);
  timer.lap("X verification");
  out.x = x;
  return out;
}

}  // namespace p4kit

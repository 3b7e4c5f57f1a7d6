// Command-line front end: pipelines, and inspection of ideal and module files.
//
// Exit codes: 0 pass, 1 assertion failure, 2 usage or parse error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "p4kit/cohomology.hpp"
#include "p4kit/construct.hpp"
#include "p4kit/errors.hpp"
#include "p4kit/groebner.hpp"
#include "p4kit/hilbert.hpp"
#include "p4kit/idealops.hpp"
#include "p4kit/resolve.hpp"
#include "p4kit/text_io.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace p4kit;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  bool force = false;
  bool no_cache = false;
  unsigned jobs = 1;
  int verbosity = 0;
  int nvars = 5;
};

std::optional<fs::path> default_cache_dir() {
  if (const char* dir = std::getenv("P4KIT_CACHE_DIR"); dir && *dir) return fs::path(dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return fs::path(xdg) / "p4kit";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "p4kit";
  return std::nullopt;
}

void apply_runtime(const RunConfig& c) {
  set_worker_count(c.jobs);
  set_gb_cache_dir(c.no_cache ? std::nullopt : default_cache_dir());
}

bool json_output(const RunConfig& c) { return c.format == "json"; }

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  return read_file(path);
}

// A file holds a matrix when its first meaningful line is a `rows` header.
bool looks_like_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    return line.compare(start, 4, "rows") == 0;
  }
  return false;
}

Ideal load_ideal(const RingPtr& ring, const std::string& path) {
  auto gens = parse_ideal(ring, read_input(path));
  if (gens.empty()) throw UsageError(path + ": no generators");
  return Ideal(ring, gens);
}

std::pair<int, int> parse_range(const std::string& text) {
  auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw UsageError("range must look like lo:hi, got " + text);
  try {
    int lo = std::stoi(text.substr(0, colon));
    int hi = std::stoi(text.substr(colon + 1));
    if (lo > hi) throw UsageError("empty range " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("range must look like lo:hi, got " + text);
  }
}

json betti_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [key, count] : t.entries())
    entries.push_back({{"step", key.first}, {"twist", key.second}, {"count", count}});
  return {{"summary", t.summary()}, {"entries", entries}};
}

json table_json(const CohomologyTable& t) {
  json rows = json::object();
  for (int i = 0; i <= t.imax(); ++i) {
    json row = json::array();
    for (int j = t.jmin(); j <= t.jmax(); ++j) row.push_back(t.at(i, j));
    rows["h" + std::to_string(i)] = row;
  }
  return {{"jmin", t.jmin()}, {"jmax", t.jmax()}, {"values", rows}};
}

// ------------------------------------------------------------ pipelines

int finish_pipeline(const RunConfig& c, const Report& report) {
  if (!c.out.empty()) {
    fs::path dir = fs::path(c.out) / (report.pipeline() + "-seed" + std::to_string(report.seed()) +
                                      "-p" + std::to_string(report.characteristic()));
    if (fs::exists(dir)) {
      if (!c.force)
        throw UsageError("run directory " + dir.string() + " exists; pass --force to replace it");
      fs::remove_all(dir);
    }
    fs::create_directories(dir);
    write_file((dir / "report.json").string(), report.to_json());
    write_file((dir / "report.txt").string(), report.to_text());
    for (const auto& [name, contents] : report.artifacts())
      write_file((dir / name).string(), contents);
    if (c.verbosity > 0) std::cerr << "wrote " << dir.string() << "\n";
  }
  std::cout << (json_output(c) ? report.to_json() : report.to_text());
  return report.pass() ? kPass : kFail;
}

PipelineOptions pipeline_options(const RunConfig& c) {
  PipelineOptions o;
  o.seed = c.seed;
  o.characteristic = c.characteristic;
  return o;
}

// ------------------------------------------------------------ inspection

int cmd_betti(const RunConfig& c, const std::string& path) {
  RingPtr ring = make_ring(c.characteristic, c.nvars);
  std::string text = read_input(path);
  BettiTable t;
  std::string kind;
  if (looks_like_matrix(text)) {
    kind = "module";
    t = betti_table(minimal_free_resolution(GradedModule(parse_matrix(ring, text)), c.nvars + 1));
  } else {
    kind = "ideal";
    auto gens = parse_ideal(ring, text);
    if (gens.empty()) throw UsageError(path + ": no generators");
    t = ideal_betti_table(minimal_generators(gens));
  }
  if (json_output(c)) {
    json j = betti_json(t);
    j["kind"] = kind;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << t.to_text();
  }
  return kPass;
}

int cmd_hilbert(const RunConfig& c, const std::string& path, int from, int to) {
  RingPtr ring = make_ring(c.characteristic, c.nvars);
  std::string text = read_input(path);
  HilbertSeries hs;
  std::string kind;
  if (looks_like_matrix(text)) {
    kind = "module";
    hs = hilbert_series(GradedModule(parse_matrix(ring, text)));
  } else {
    kind = "quotient ring";
    hs = load_ideal(ring, path == "-" ? path : path).quotient_series();
  }
  std::vector<std::int64_t> values, poly;
  for (int m = from; m <= to; ++m) {
    values.push_back(hs.function(m));
    poly.push_back(hs.polynomial(m));
  }
  if (json_output(c)) {
    json j{{"kind", kind},
           {"dimension", hs.dimension()},
           {"degree", hs.degree()},
           {"numerator_low", hs.low},
           {"numerator", hs.numerator},
           {"from", from},
           {"function", values},
           {"polynomial", poly}};
    std::cout << j.dump(2) << "\n";
  } else {
    auto line = [](const std::vector<std::int64_t>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
      return s;
    };
    std::cout << "series of the " << kind << "\n"
              << "dimension: " << hs.dimension() << "\n"
              << "degree: " << hs.degree() << "\n"
              << "numerator (from t^" << hs.low << "): " << line(hs.numerator) << "\n"
              << "H(m), m = " << from << ".." << to << ": " << line(values) << "\n"
              << "P(m), m = " << from << ".." << to << ": " << line(poly) << "\n";
  }
  return kPass;
}

int cmd_cohomology(const RunConfig& c, const std::string& path, const std::string& range) {
  auto [lo, hi] = parse_range(range);
  RingPtr ring = make_ring(c.characteristic, c.nvars);
  Ideal sat = saturate(load_ideal(ring, path));
  CohomologyTable t = cohomology_table(sat, lo, hi);
  if (json_output(c))
    std::cout << table_json(t).dump(2) << "\n";
  else
    std::cout << t.to_text();
  return kPass;
}

int cmd_smooth(const RunConfig& c, const std::string& path, int codim) {
  RingPtr ring = make_ring(c.characteristic, c.nvars);
  Ideal sat = saturate(load_ideal(ring, path));
  SmoothnessCertificate cert = smoothness_certificate(sat, codim, c.seed);
  json j{{"verdict", to_string(cert.verdict)},
         {"characteristic", cert.characteristic},
         {"codimension", codim},
         {"caveat", "verdict holds for the reduction mod p"},
         {"used_all_minors", cert.used_all_minors},
         {"note", cert.note}};
  j["vanishing_degree"] = cert.vanishing_degree ? json(*cert.vanishing_degree) : json(nullptr);
  if (cert.singular_locus) {
    json gens = json::array();
    for (const Polynomial& f : cert.singular_locus->minimal_generators()) gens.push_back(to_string(f));
    j["singular_locus"] = gens;
  }
  if (json_output(c)) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(cert.verdict) << " mod " << cert.characteristic << "\n";
    if (cert.vanishing_degree)
      std::cout << "singular ideal vanishes in degree " << *cert.vanishing_degree << "\n";
    if (cert.singular_locus)
      std::cout << "singular locus:\n" << format_ideal(cert.singular_locus->minimal_generators());
    if (!cert.note.empty()) std::cout << cert.note << "\n";
  }
  return cert.verdict == Verdict::kSmooth ? kPass : kFail;
}

int cmd_link(const RunConfig& c, const std::string& ci_list, const std::string& path,
             const std::string& output) {
  RingPtr ring = make_ring(c.characteristic, c.nvars);
  std::vector<Polynomial> ci;
  std::stringstream names(ci_list);
  std::string name;
  while (std::getline(names, name, ','))
    for (const Polynomial& f : parse_ideal(ring, read_file(name))) ci.push_back(f);
  if (ci.empty()) throw UsageError("--ci names no polynomials");
  Ideal i = load_ideal(ring, path);
  Ideal ideal_ci(ring, ci);
  if (!i.contains(ideal_ci)) throw UsageError("the complete intersection does not contain the ideal");
  Ideal residual = link(ideal_ci, i);
  std::vector<Polynomial> gens = residual.minimal_generators();
  std::string text = format_ideal(gens);
  if (!output.empty()) write_file(output, text);
  if (json_output(c)) {
    json g = json::array();
    for (const Polynomial& f : gens) g.push_back(to_string(f));
    std::cout << json{{"generators", g}}.dump(2) << "\n";
  } else if (output.empty()) {
    std::cout << text;
  }
  return kPass;
}

json invariants_json(const SurfaceInvariants& v) {
  return {{"d", v.d},   {"pi", v.pi}, {"chi", v.chi}, {"pg", v.pg},
          {"q", v.q},   {"K2", v.k2}, {"s", v.s_table}, {"s_formula", v.s_formula}};
}

void print_invariants(const RunConfig& c, const json& inv, const json& extra) {
  if (json_output(c)) {
    json j = extra;
    j["invariants"] = inv;
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : extra.items()) std::cout << k << ": " << v.dump() << "\n";
  for (const auto& [k, v] : inv.items()) std::cout << k << " = " << v.dump() << "\n";
}

int cmd_invariants(const RunConfig& c, const std::string& path) {
  std::string text = read_input(path);
  auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    json report;
    try {
      report = json::parse(text);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("report is not valid JSON: ") + e.what());
    }
    if (!report.contains("invariants"))
      throw UsageError("report carries no invariants (the pipeline stopped early)");
    print_invariants(c, report["invariants"],
                     {{"pipeline", report.value("pipeline", "")},
                      {"seed", report.value("seed", 0)},
                      {"verdict", report.value("verdict", "")}});
    return report.value("verdict", "") == "pass" ? kPass : kFail;
  }
  RingPtr ring = make_ring(c.characteristic, c.nvars);
  auto gens = parse_ideal(ring, text);
  if (gens.empty()) throw UsageError(path + ": no generators");
  Ideal sat = saturate(Ideal(ring, gens));
  HilbertSeries hs = sat.quotient_series();
  if (hs.dimension() == 2) {
    CurveNumbers cn = curve_numbers(hs);
    print_invariants(c, {{"degree", cn.degree}, {"pa", cn.pa}}, {{"kind", "curve"}});
    return kPass;
  }
  if (hs.dimension() != 3) throw DimensionError("invariants are defined for curves and surfaces");
  CohomologyTable t = cohomology_table(sat, 0, 1);
  print_invariants(c, invariants_json(surface_invariants(sat, t)), {{"kind", "surface"}});
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases, resolutions and sheaf cohomology over F_p; the monad and "
               "liaison constructions of elliptic surfaces in P4"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--char", cfg.characteristic, "prime characteristic")
        ->check([](const std::string& s) -> std::string {
          try {
            unsigned long long v = std::stoull(s);
            if (v > 0xFFFFFFFFull || !is_prime(v)) return "characteristic must be a prime";
          } catch (const std::logic_error&) {
            return "characteristic must be a prime";
          }
          return {};
        });
    sub->add_option("--seed", cfg.seed, "seed for the general choices");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--no-cache", cfg.no_cache,
                  "do not read or write the Groebner basis cache (P4KIT_CACHE_DIR)");
    sub->add_option("--jobs", cfg.jobs, "worker threads for row reduction")
        ->check(CLI::Range(1u, 256u));
    sub->add_flag("-v,--verbose", cfg.verbosity, "progress on stderr");
  };
  auto add_pipeline = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--out", cfg.out, "parent directory of the run directory");
    sub->add_flag("--force", cfg.force, "replace an existing run directory");
  };
  auto add_vars = [&](CLI::App* sub) {
    sub->add_option("--vars", cfg.nvars, "number of variables x0..x(n-1)")->check(CLI::Range(1, 8));
  };

  auto* monad = app.add_subcommand("monad", "monad construction and its verification");
  add_pipeline(monad);
  int degenerate = 0;
  monad->add_option("--degenerate-draws", degenerate,
                    "force the first k draws of the general map to be degenerate");

  auto* liaison = app.add_subcommand("liaison", "liaison construction and its verification");
  add_pipeline(liaison);
  bool example = false;
  liaison->add_flag("--example", example, "use the worked example data for U0, U1 and D");

  std::string input = "-";
  auto* betti = app.add_subcommand("betti", "Betti table of an ideal or a presented module");
  add_common(betti);
  add_vars(betti);
  betti->add_option("file", input, "ideal or matrix file ('-' for stdin)")->required();

  int from = 0, to = 10;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function, polynomial and series");
  add_common(hilbert);
  add_vars(hilbert);
  hilbert->add_option("file", input, "ideal or matrix file ('-' for stdin)")->required();
  hilbert->add_option("--from", from, "first degree");
  hilbert->add_option("--to", to, "last degree");

  std::string range = "-1:3";
  auto* coh = app.add_subcommand("cohomology-table", "h^i of the ideal sheaf over a range");
  add_common(coh);
  add_vars(coh);
  coh->add_option("file", input, "ideal file ('-' for stdin)")->required();
  coh->add_option("--range", range, "twists lo:hi, e.g. --range=-1:3");

  int codim = 2;
  auto* smooth = app.add_subcommand("smooth-check", "Jacobian criterion certificate");
  add_common(smooth);
  add_vars(smooth);
  smooth->add_option("file", input, "ideal file ('-' for stdin)")->required();
  smooth->add_option("--codim", codim, "codimension of the scheme")->check(CLI::Range(1, 8));

  std::string ci_list, output;
  auto* linkcmd = app.add_subcommand("link", "residual ideal in a complete intersection");
  add_common(linkcmd);
  add_vars(linkcmd);
  linkcmd->add_option("--ci", ci_list, "comma-separated polynomial files")->required();
  linkcmd->add_option("file", input, "ideal file ('-' for stdin)")->required();
  linkcmd->add_option("-o,--output", output, "write the residual ideal here");

  auto* inv = app.add_subcommand("invariants",
                                 "invariants of a curve or surface, or of a JSON report");
  add_common(inv);
  add_vars(inv);
  inv->add_option("file", input, "ideal file or JSON report ('-' for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    apply_runtime(cfg);
    if (*monad) {
      PipelineOptions o = pipeline_options(cfg);
      o.degenerate_draws = degenerate;
      return finish_pipeline(cfg, monad_pipeline(o).report);
    }
    if (*liaison) {
      PipelineOptions o = pipeline_options(cfg);
      o.example = example;
      return finish_pipeline(cfg, liaison_pipeline(o).report);
    }
    if (*betti) return cmd_betti(cfg, input);
    if (*hilbert) return cmd_hilbert(cfg, input, from, to);
    if (*coh) return cmd_cohomology(cfg, input, range);
    if (*smooth) return cmd_smooth(cfg, input, codim);
    if (*linkcmd) return cmd_link(cfg, ci_list, input, output);
    if (*inv) return cmd_invariants(cfg, input);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

#include <doctest.h>

#include <set>

#include "p4kit/construct.hpp"
#include "p4kit/text_io.hpp"

using namespace p4kit;

TEST_CASE("stage seeds are pure and separate stages and attempts") {
  CHECK(stage_seed(7, "F", 0) == stage_seed(7, "F", 0));
  std::set<std::uint64_t> seen;
  for (std::uint64_t seed : {1, 2, 3})
    for (const char* stage : {"phi", "F", "X0", "T"})
      for (int attempt = 0; attempt < 4; ++attempt) seen.insert(stage_seed(seed, stage, attempt));
  CHECK(seen.size() == 3 * 4 * 4);
}

TEST_CASE("worked liaison example data") {
  RingPtr ring = make_ring();
  LiaisonExample ex = liaison_example(ring);
  REQUIRE(ex.quartics.size() == 5);
  // The corrected quartics lie in the ideal of U1 + U0 + D2; the printed g3
  // does not.
  Ideal w = intersect(intersect(ex.u1, ex.u0), ex.d2);
  for (const Polynomial& g : ex.quartics) {
    CHECK(g.degree() == 4);
    CHECK(w.contains(g));
  }
  CHECK_FALSE(w.contains(ex.g3_printed));
  CHECK(Ideal(ring, ex.quartics).dim_in_degree(4) == 5);
  // L is a line lying on U0 and U1.
  CHECK(ex.l.quotient_series().degree() == 1);
  CHECK(ex.u0.contains(ex.l) == false);
  CHECK(ex.l.contains(ex.u0));
  CHECK(ex.l.contains(ex.u1));
}

TEST_CASE("monad pipeline reruns are byte-identical and reseeds are recorded") {
  PipelineOptions opt;
  opt.seed = 5;
  opt.bridge = false;
  MonadResult a = monad_pipeline(opt);
  MonadResult b = monad_pipeline(opt);
  CHECK(a.report.pass());
  CHECK(a.report.to_json() == b.report.to_json());
  CHECK(a.report.to_json().find("seconds") == std::string::npos);

  // Persisted stage outputs parse back to the same text.
  RingPtr ring = make_ring();
  int parsed = 0;
  for (const auto& [name, text] : a.report.artifacts()) {
    CAPTURE(name);
    if (name.ends_with(".mat")) {
      CHECK(format_matrix(parse_matrix(ring, text)) == text);
      ++parsed;
    } else if (name.ends_with(".ideal")) {
      CHECK(format_ideal(parse_ideal(ring, text)) == text);
      ++parsed;
    }
  }
  CHECK(parsed >= 3);

  opt.degenerate_draws = 2;
  MonadResult c = monad_pipeline(opt);
  CHECK(c.report.pass());
  CHECK(c.report.retries().size() >= 2);
  opt.max_retries = 1;
  CHECK_FALSE(monad_pipeline(opt).report.pass());
}

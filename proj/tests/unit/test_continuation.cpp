#include <doctest.h>

#include "circlefol/continuation.hpp"
#include "circlefol/errors.hpp"
#include "support/test_helpers.hpp"

using namespace circlefol;

TEST_CASE("warm start at the same parameter solves immediately") {
  auto f = ModelRegistry::instance().create("linear", {{"omega", 0.3}, {"b", 0.5}});
  BootstrapConfig bcfg;
  bcfg.n_modes = 32;
  bcfg.order = 6;
  auto u = initial_guess(*f, bcfg);
  auto res0 = solve(*f, u, {});

  // Zeroth-order continuation reuses the triple verbatim.
  auto warm = continuation_step(res0.u, 0.5);
  auto res1 = solve(*f, warm, {});
  CHECK(res1.iterations == 0);
}

TEST_CASE("linear sweep converges fast at every point") {
  ContinuationConfig ccfg;
  ccfg.parameter = "b";
  ccfg.start = 0.4;
  ccfg.end = 0.6;
  ccfg.step = 0.1;
  SolverConfig scfg;
  scfg.tol = 1e-12;
  BootstrapConfig bcfg;
  bcfg.n_modes = 32;
  bcfg.order = 6;
  auto recs = run_continuation("linear", {{"omega", 0.3}}, ccfg, scfg, bcfg);
  CHECK(recs.size() == 3);
  for (const auto& r : recs) {
    CHECK(r.iterations <= 4);
    CHECK(r.report.residual_x0 < 1e-12);
  }
}

TEST_CASE("stronger coupling degrades the regularity window monotonically") {
  ContinuationConfig ccfg;
  ccfg.parameter = "c";
  ccfg.start = 0.02;
  ccfg.end = 0.3;
  ccfg.step = 0.04;
  ccfg.min_step_factor = 1.0 / 4.0;
  SolverConfig scfg;
  scfg.tol = 1e-10;
  scfg.max_iters = 6;
  BootstrapConfig bcfg;
  bcfg.n_modes = 64;
  bcfg.order = 10;
  std::vector<double> m_maxes;
  CHECK_THROWS_AS(
      run_continuation("forced_oscillator",
                       {{"omega", 0.377}, {"b", 0.5}, {"eps1", 0.05}, {"eps2", 0.1}}, ccfg, scfg,
                       bcfg, {},
                       [&](const ContinuationRecord& r) { m_maxes.push_back(r.report.m_max); }),
      StepTooSmall);
  REQUIRE(m_maxes.size() >= 3);
  for (size_t i = 1; i < m_maxes.size(); ++i) {
    CHECK(m_maxes[i] < m_maxes[i - 1]);
  }
}

TEST_CASE("continuation stops with StepTooSmall at a contraction boundary") {
  // Past b = 1 the normal dynamics stops contracting and every solve is
  // refused, so the step halves down to its floor.
  ContinuationConfig ccfg;
  ccfg.parameter = "b";
  ccfg.start = 0.9;
  ccfg.end = 1.1;
  ccfg.step = 0.05;
  SolverConfig scfg;
  scfg.tol = 1e-12;
  BootstrapConfig bcfg;
  bcfg.n_modes = 32;
  bcfg.order = 6;
  CHECK_THROWS_AS(run_continuation("linear", {{"omega", 0.3}}, ccfg, scfg, bcfg),
                  StepTooSmall);
}

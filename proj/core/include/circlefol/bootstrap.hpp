#pragma once

// Initial-guess construction from forward simulation: fit the attractor as a
// graph over the angle from a fan of settled orbits, read the internal
// dynamics off the angular image, and extract the stable bundle and its
// multiplier by backward power iteration of the Df cocycle.

#include "circlefol/map_model.hpp"
#include "circlefol/newton.hpp"

namespace circlefol {

struct BootstrapConfig {
  int n_modes = 64;
  int order = 10;
  double delta = 0.3;
  int n_seeds = 4096;      // fan size
  int burn_in = 48;        // settle iterations per seed
  double y_seed = 0.0;
  double max_gap = 0.05;   // largest tolerated angular gap in the settled cloud
  double blowup = 1e6;     // |y| beyond this aborts with NoAttractorFound
  int bundle_max_iters = 200;
  double bundle_tol = 1e-12;
};

// Throws NoAttractorFound when the orbit fan diverges or leaves angular gaps
// wider than max_gap, BundleIterationStalled when the bundle iteration does
// not settle.  The returned triple always passes validate_triple.
ConjugacyTriple initial_guess(const MapModel& f, const BootstrapConfig& cfg = {});

}  // namespace circlefol

#include "circlefol/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "circlefol/errors.hpp"

namespace circlefol {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double c0_norm(const PeriodicFunction& f) { return f.grid_max_abs(); }
}  // namespace

CocycleState CocycleState::initial(const PeriodicFunction& l, const CircleMap& a,
                                   const PeriodicFunction& eta) {
  return CocycleState{l, a, eta, 1};
}

void CocycleState::advance() {
  partial_sum += l_k * compose_with_circle_map(partial_sum, a_k);
  l_k = l_k * compose_with_circle_map(l_k, a_k);
  a_k = compose(a_k, a_k);
  terms *= 2;
}

PeriodicFunction cocycle_product(const PeriodicFunction& l, const CircleMap& a, long k) {
  if (k < 0) throw BadInput("cocycle_product requires k >= 0");
  if (k == 0) return PeriodicFunction::constant(1.0, l.n_modes());
  // Double-and-add on (l^{[k]}, a^{o k}) using l^{[j+k]} = l^{[j]}(a^{o k}) l^{[k]}.
  PeriodicFunction result = l;
  CircleMap result_map = a;  // a^{o k_result}
  bool have_result = false;
  PeriodicFunction pw = l;
  CircleMap pw_map = a;
  long bits = k;
  while (bits > 0) {
    if (bits & 1) {
      if (!have_result) {
        result = pw;
        result_map = pw_map;
        have_result = true;
      } else {
        // result covers j terms, pw covers i terms: l^{[j+i]} = l^{[i]}(a^{o j}) l^{[j]}...
        // keep orientation: new = pw^{[i]} o (a^{o j_result}) * result.
        result = result * compose_with_circle_map(pw, result_map);
        result_map = compose(pw_map, result_map);
      }
    }
    bits >>= 1;
    if (bits > 0) {
      pw = pw * compose_with_circle_map(pw, pw_map);
      pw_map = compose(pw_map, pw_map);
    }
  }
  return result;
}

CohomologySolution solve_cohomological(const PeriodicFunction& l, const CircleMap& a,
                                       const PeriodicFunction& eta,
                                       const CohomologyOptions& opts) {
  CohomologySolution sol{PeriodicFunction::zero(eta.n_modes())};

  // Contraction onset: search doubling powers k = 1, 2, 4, ... <= k_max.
  PeriodicFunction lk = l;
  CircleMap ak = a;
  int k = 1;
  while (c0_norm(lk) >= 1.0) {
    if (2 * k > opts.k_max) {
      throw NotContracting("solve_cohomological: no k <= k_max with ||l^[k]|| < 1");
    }
    lk = lk * compose_with_circle_map(lk, ak);
    ak = compose(ak, ak);
    k *= 2;
  }
  sol.contraction_k = k;
  sol.contraction_norm = c0_norm(lk);
  sol.sharp_criterion = c0_norm(lk * ak.lift_derivative());

  const double eta_norm = c0_norm(eta);
  auto residual_of = [&](const PeriodicFunction& phi) {
    return c0_norm(phi - l * compose_with_circle_map(phi, a) - eta);
  };

  CocycleState state = CocycleState::initial(l, a, eta);
  int rounds = 0;
  double best_residual = std::numeric_limits<double>::infinity();
  bool at_floor = false;
  while (true) {
    double lk_norm = c0_norm(state.l_k);
    sol.tail_bound = lk_norm < 1.0
                         ? lk_norm * eta_norm / (1.0 - lk_norm)
                         : std::numeric_limits<double>::infinity();
    if (sol.tail_bound < opts.tol) {
      double res = residual_of(state.partial_sum);
      sol.residual = res;
      if (res <= opts.tol) break;
      if (res >= best_residual) {
        at_floor = true;  // no improvement: discretization floor reached
        break;
      }
      best_residual = res;
    }
    if (rounds >= opts.max_rounds) {
      sol.residual = residual_of(state.partial_sum);
      if (sol.residual > opts.tol) {
        throw NoConvergence("solve_cohomological: tail bound stalled above tol");
      }
      break;
    }
    state.advance();
    ++rounds;
  }
  if (at_floor && opts.on_floor == CohomologyOptions::FloorPolicy::Throw) {
    throw NoConvergence("solve_cohomological: residual stalled at " +
                        std::to_string(sol.residual) + " above tol");
  }
  sol.phi = state.partial_sum;
  sol.rounds = rounds;
  sol.terms = state.terms;
  return sol;
}

double dynamical_average(const PeriodicFunction& lambda, const CircleMap& a, long n) {
  if (n < 1) throw BadInput("dynamical_average requires n >= 1");
  double norm = c0_norm(cocycle_product(lambda, a, n));
  return std::pow(norm, 1.0 / static_cast<double>(n));
}

std::vector<double> dynamical_average_sequence(const PeriodicFunction& lambda,
                                               const CircleMap& a,
                                               const std::vector<long>& ns) {
  std::vector<double> out;
  out.reserve(ns.size());
  for (long n : ns) out.push_back(dynamical_average(lambda, a, n));
  return out;
}

LambdaReduction reduce_lambda_rotation(const PeriodicFunction& lambda, double omega,
                                       double tol) {
  // positivity checked on the grid the log transform samples
  for (double v : lambda.sample(2 * lambda.grid_size())) {
    if (v <= 0.0) throw NonPositiveLambda("reduce_lambda_rotation: lambda must be positive");
  }
  PeriodicFunction log_lambda =
      transform_pointwise(lambda, [](double v) { return std::log(v); });

  const int n = lambda.n_modes();
  LambdaReduction red{std::exp(log_lambda.mean()), PeriodicFunction::zero(n), 0.0};

  // log r from (log r)(theta+omega) - (log r)(theta) = log lambda_bar - log lambda:
  // Fourier division by (1 - e^{2 pi i k omega}).
  std::vector<std::complex<double>> rc(static_cast<size_t>(n) + 1, {0.0, 0.0});
  for (int kk = 1; kk <= n; ++kk) {
    double ph = kTwoPi * kk * omega;
    std::complex<double> denom = 1.0 - std::complex<double>(std::cos(ph), std::sin(ph));
    if (std::abs(denom) < 1e-10) {
      throw SmallDivisorOverflow("reduce_lambda_rotation: near-resonant omega at mode " +
                                 std::to_string(kk));
    }
    rc[kk] = log_lambda.coefficient(kk) / denom;
  }
  PeriodicFunction log_r = PeriodicFunction::from_coefficients(std::move(rc));
  red.r = transform_pointwise(log_r, [](double v) { return std::exp(v); });

  PeriodicFunction conj = pointwise_quotient(red.r.shifted(omega) * lambda, red.r, 1e-300);
  red.residual = c0_norm(conj - red.lambda_bar);
  if (red.residual > tol) {
    throw NoConvergence("reduce_lambda_rotation: conjugation residual above tol");
  }
  return red;
}

double regularity_bound(const PeriodicFunction& l, const CircleMap& a) {
  double ln = c0_norm(l);
  if (ln >= 1.0) throw NotContracting("regularity_bound requires ||l|| < 1");
  double da = c0_norm(a.lift_derivative());
  if (da <= 1.0 + 1e-14) return std::numeric_limits<double>::infinity();
  return -std::log(ln) / std::log(da);
}

}  // namespace circlefol

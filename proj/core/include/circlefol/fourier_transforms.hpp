#pragma once

// Low-level trigonometric transform kernels shared by PeriodicFunction and
// the Fourier-Taylor machinery.  Spectra are stored half-sided: coeffs[k]
// for k = 0..N with the convention
//
//   f(theta) = Re(c_0) + 2 * Re( sum_{k=1}^{N} c_k e^{2 pi i k theta} ),
//
// which bakes Hermitian symmetry (real-valued f) into the representation.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace circlefol::detail {

using cplx = std::complex<double>;

// Smallest power of two >= n (and >= 16); canonical grids are powers of two
// so the dyadic pair separations used by the Hoelder estimator land on grid
// points exactly.
int canonical_grid_size(int n_modes);

// e^{-2 pi i t / m} for t = 0..m-1, cached per grid size (thread-safe).
const std::vector<cplx>& twiddle_table(int m);

// Least-squares/aliased projection of m equispaced samples onto modes
// 0..n_modes.  Exact for trigonometric polynomials of degree <= n_modes
// whenever m >= 2*n_modes + 1.
std::vector<cplx> fit_spectrum(std::span<const double> samples, int n_modes);

// Evaluate the half-sided spectrum on m equispaced points.
std::vector<double> eval_grid(std::span<const cplx> coeffs, int m);

// Evaluate at one arbitrary point (period-1 wrap implied).
double eval_at(std::span<const cplx> coeffs, double theta);

// Evaluate at many arbitrary points.
void eval_at_many(std::span<const cplx> coeffs, std::span<const double> thetas,
                  std::span<double> out);

// Optional grid-loop parallelism.  Returns the thread cap from the
// CIRCLEFOL_THREADS environment variable (>= 1; default 1).
int thread_cap();

// Runs fn(begin, end) over [0, n) split across at most thread_cap() threads.
// Chunks are disjoint, so the result is identical for any thread count.
void parallel_for(int n, const std::function<void(int, int)>& fn);

}  // namespace circlefol::detail

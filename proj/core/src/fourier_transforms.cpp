#include "circlefol/fourier_transforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>

namespace circlefol::detail {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

int canonical_grid_size(int n_modes) {
  int need = 2 * n_modes + 2;
  int m = 16;
  while (m < need) m *= 2;
  return m;
}

const std::vector<cplx>& twiddle_table(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<cplx>>> cache;
  std::scoped_lock lock(mu);
  auto& slot = cache[m];
  if (!slot) {
    auto tbl = std::make_unique<std::vector<cplx>>(m);
    for (int t = 0; t < m; ++t) {
      double ph = -kTwoPi * static_cast<double>(t) / static_cast<double>(m);
      (*tbl)[t] = {std::cos(ph), std::sin(ph)};
    }
    slot = std::move(tbl);
  }
  return *slot;
}

std::vector<cplx> fit_spectrum(std::span<const double> samples, int n_modes) {
  const int m = static_cast<int>(samples.size());
  const auto& w = twiddle_table(m);
  std::vector<cplx> out(static_cast<size_t>(n_modes) + 1);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (int k = 0; k <= n_modes; ++k) {
    double re = 0.0, im = 0.0;
    // c_k = (1/m) sum_i f_i e^{-2 pi i k i / m}; index (k*i) mod m.
    size_t t = 0;
    for (int i = 0; i < m; ++i) {
      const cplx& ww = w[t];
      re += samples[i] * ww.real();
      im += samples[i] * ww.imag();
      t += k;
      if (t >= static_cast<size_t>(m)) t -= m;
    }
    out[k] = cplx(re * inv_m, im * inv_m);
  }
  if (!out.empty()) out[0] = cplx(out[0].real(), 0.0);
  return out;
}

std::vector<double> eval_grid(std::span<const cplx> coeffs, int m) {
  const auto& w = twiddle_table(m);
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<double> out(m);
  parallel_for(m, [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      double acc = coeffs.empty() ? 0.0 : coeffs[0].real();
      size_t t = static_cast<size_t>(i) % m;
      size_t idx = t;
      for (int k = 1; k <= n; ++k) {
        // e^{+2 pi i k i/m} = conj(w[(k*i) mod m])
        const cplx& ww = w[idx];
        acc += 2.0 * (coeffs[k].real() * ww.real() + coeffs[k].imag() * ww.imag());
        idx += t;
        if (idx >= static_cast<size_t>(m)) idx -= m;
      }
      out[i] = acc;
    }
  });
  return out;
}

double eval_at(std::span<const cplx> coeffs, double theta) {
  if (coeffs.empty()) return 0.0;
  const int n = static_cast<int>(coeffs.size()) - 1;
  const double ph = kTwoPi * theta;
  const cplx z(std::cos(ph), std::sin(ph));
  cplx zk = z;
  double acc = coeffs[0].real();
  for (int k = 1; k <= n; ++k) {
    acc += 2.0 * (coeffs[k].real() * zk.real() - coeffs[k].imag() * zk.imag());
    zk *= z;
  }
  return acc;
}

void eval_at_many(std::span<const cplx> coeffs, std::span<const double> thetas,
                  std::span<double> out) {
  parallel_for(static_cast<int>(thetas.size()), [&](int begin, int end) {
    for (int i = begin; i < end; ++i) out[i] = eval_at(coeffs, thetas[i]);
  });
}

int thread_cap() {
  static const int cap = [] {
    const char* env = std::getenv("CIRCLEFOL_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    if (v < 1) return 1;
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw > 0) v = std::min(v, hw);
    return v;
  }();
  return cap;
}

void parallel_for(int n, const std::function<void(int, int)>& fn) {
  const int cap = thread_cap();
  if (cap <= 1 || n < 256) {
    fn(0, n);
    return;
  }
  const int nthreads = std::min(cap, std::max(1, n / 128));
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  const int chunk = (n + nthreads - 1) / nthreads;
  for (int t = 0; t < nthreads; ++t) {
    int begin = t * chunk;
    int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fn, begin, end);
  }
  for (auto& th : pool) th.join();
}

}  // namespace circlefol::detail

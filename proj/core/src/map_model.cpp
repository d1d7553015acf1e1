#include "circlefol/map_model.hpp"

#include <algorithm>

#include "circlefol/errors.hpp"
#include "circlefol/fourier_transforms.hpp"

namespace circlefol {

Vec2 MapModel::eval_point(double x, double y) const {
  TaylorJet jx = TaylorJet::constant(x, 0);
  TaylorJet jy = TaylorJet::constant(y, 0);
  TaylorJet fx(0), fy(0);
  eval(jx, jy, fx, fy);
  return {fx.value(), fy.value()};
}

Mat2 MapModel::deriv_point(double x, double y) const {
  TaylorJet jx = TaylorJet::constant(x, 0);
  TaylorJet jy = TaylorJet::constant(y, 0);
  TaylorJet a(0), b(0), c(0), d(0);
  deriv(jx, jy, a, b, c, d);
  return {a.value(), b.value(), c.value(), d.value()};
}

ModelRegistry& ModelRegistry::instance() {
  static ModelRegistry reg = [] {
    ModelRegistry r;
    register_builtin_models(r);
    return r;
  }();
  return reg;
}

void ModelRegistry::register_model(const std::string& name,
                                   std::map<std::string, double> defaults, Factory factory) {
  entries_[name] = Entry{std::move(defaults), std::move(factory)};
}

ModelPtr ModelRegistry::create(const std::string& name,
                               const std::map<std::string, double>& overrides) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw BadInput("unknown model: " + name);
  std::map<std::string, double> params = it->second.defaults;
  for (const auto& [k, v] : overrides) {
    if (params.find(k) == params.end()) {
      throw BadInput("model '" + name + "' has no parameter '" + k + "'");
    }
    params[k] = v;
  }
  return it->second.factory(params);
}

std::vector<std::string> ModelRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, _] : entries_) out.push_back(k);
  return out;
}

std::map<std::string, double> ModelRegistry::defaults(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw BadInput("unknown model: " + name);
  return it->second.defaults;
}

namespace {

// Shared driver: pushes W's jets through `kernel` per grid point, producing
// `n_out` Fourier-Taylor outputs.  When subtract_theta[q] is set, theta_i is
// removed from output q's order-0 samples (re-periodization of degree-1
// angular outputs, which then carry winding 1).
template <typename Kernel>
std::vector<FourierTaylor> transport_grid(const FTPair& w, int n_out, Kernel&& kernel,
                                          const std::vector<int>& out_winding) {
  const int L = w.x.order();
  if (w.y.order() != L) throw OrderMismatch("pair orders differ");
  const int n = std::max(w.x.n_modes(), w.y.n_modes());
  const int m = 2 * detail::canonical_grid_size(n);

  // Per-order samples of both components.
  std::vector<std::vector<double>> gx(L + 1), gy(L + 1);
  for (int j = 0; j <= L; ++j) {
    gx[j] = w.x.coefficient(j).sample(m);
    gy[j] = w.y.coefficient(j).sample(m);
  }

  std::vector<std::vector<std::vector<double>>> rows(
      n_out, std::vector<std::vector<double>>(L + 1, std::vector<double>(m)));

  std::exception_ptr failure;
  detail::parallel_for(m, [&](int begin, int end) {
    try {
      TaylorJet jx(L), jy(L);
      std::vector<TaylorJet> out(n_out, TaylorJet(L));
      for (int i = begin; i < end; ++i) {
        const double theta = static_cast<double>(i) / m;
        for (int k = 0; k <= L; ++k) {
          jx[k] = gx[k][i];
          jy[k] = gy[k][i];
        }
        jx[0] += w.x.winding() * theta;
        jy[0] += w.y.winding() * theta;
        kernel(jx, jy, out);
        for (int q = 0; q < n_out; ++q) {
          for (int k = 0; k <= L; ++k) rows[q][k][i] = out[q][k];
          if (out_winding[q] != 0) rows[q][0][i] -= out_winding[q] * theta;
        }
      }
    } catch (...) {
      failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  std::vector<FourierTaylor> result;
  result.reserve(n_out);
  for (int q = 0; q < n_out; ++q) {
    std::vector<PeriodicFunction> coeffs;
    coeffs.reserve(L + 1);
    for (int k = 0; k <= L; ++k) coeffs.push_back(PeriodicFunction::from_samples(rows[q][k], n));
    result.emplace_back(std::move(coeffs), out_winding[q]);
  }
  return result;
}

}  // namespace

FTPair apply_map_jet(const MapModel& f, const FTPair& w) {
  auto outs = transport_grid(
      w, 2,
      [&](const TaylorJet& jx, const TaylorJet& jy, std::vector<TaylorJet>& out) {
        f.eval(jx, jy, out[0], out[1]);
      },
      {1, 0});
  return FTPair{std::move(outs[0]), std::move(outs[1])};
}

FTMatrix apply_dmap_jet(const MapModel& f, const FTPair& w) {
  auto outs = transport_grid(
      w, 4,
      [&](const TaylorJet& jx, const TaylorJet& jy, std::vector<TaylorJet>& out) {
        f.deriv(jx, jy, out[0], out[1], out[2], out[3]);
      },
      {0, 0, 0, 0});
  return FTMatrix{std::move(outs[0]), std::move(outs[1]), std::move(outs[2]),
                  std::move(outs[3])};
}

}  // namespace circlefol

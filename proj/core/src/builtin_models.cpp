#include <cmath>
#include <numbers>

#include "circlefol/map_model.hpp"

namespace circlefol {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// f(x, y) = (x + omega, b y).  Exact conjugacy: W = (theta, s), a = theta +
// omega, lambda = b.
class LinearModel final : public MapModel {
 public:
  LinearModel(double omega, double b) : omega_(omega), b_(b) {}

  std::string name() const override { return "linear"; }
  std::map<std::string, double> parameters() const override {
    return {{"omega", omega_}, {"b", b_}};
  }

  void eval(const TaylorJet& x, const TaylorJet& y, TaylorJet& fx, TaylorJet& fy) const override {
    fx = x + omega_;
    fy = y * b_;
  }

  void deriv(const TaylorJet& x, const TaylorJet&, TaylorJet& dxx, TaylorJet& dxy,
             TaylorJet& dyx, TaylorJet& dyy) const override {
    const int L = x.order();
    dxx = TaylorJet::constant(1.0, L);
    dxy = TaylorJet(L);
    dyx = TaylorJet(L);
    dyy = TaylorJet::constant(b_, L);
  }

 private:
  double omega_, b_;
};

// Skew product f(x, y) = (alpha(x), l y + eta(x)) with
// alpha(x) = x + omega + alpha_amp sin(2 pi x) and eta(x) = eta_amp cos(2 pi x).
// The invariant circle is the graph of the fixed point of the transfer
// operator phi -> l phi(alpha^{-1}) + eta(alpha^{-1}).
class SkewModel final : public MapModel {
 public:
  SkewModel(double omega, double alpha_amp, double l, double eta_amp)
      : omega_(omega), alpha_amp_(alpha_amp), l_(l), eta_amp_(eta_amp) {}

  std::string name() const override { return "skew"; }
  std::map<std::string, double> parameters() const override {
    return {{"omega", omega_}, {"alpha_amp", alpha_amp_}, {"l", l_}, {"eta_amp", eta_amp_}};
  }

  void eval(const TaylorJet& x, const TaylorJet& y, TaylorJet& fx, TaylorJet& fy) const override {
    TaylorJet s(x.order()), c(x.order());
    jet_sincos(x * kTwoPi, s, c);
    fx = x + s * alpha_amp_ + omega_;
    fy = y * l_ + c * eta_amp_;
  }

  void deriv(const TaylorJet& x, const TaylorJet&, TaylorJet& dxx, TaylorJet& dxy,
             TaylorJet& dyx, TaylorJet& dyy) const override {
    const int L = x.order();
    TaylorJet s(L), c(L);
    jet_sincos(x * kTwoPi, s, c);
    dxx = c * (kTwoPi * alpha_amp_) + 1.0;
    dxy = TaylorJet(L);
    dyx = -s * (kTwoPi * eta_amp_);
    dyy = TaylorJet::constant(l_, L);
  }

 private:
  double omega_, alpha_amp_, l_, eta_amp_;
};

// Dissipative standard-map-like family
//   f(x, y) = (x + omega + eps1 y + c sin(2 pi x), b y + eps2 sin(2 pi x)).
// For small coupling it carries an attracting invariant circle near y = 0;
// the parameters used in tests were picked by forward simulation.
class ForcedOscillatorModel final : public MapModel {
 public:
  ForcedOscillatorModel(double omega, double b, double c, double eps1, double eps2)
      : omega_(omega), b_(b), c_(c), eps1_(eps1), eps2_(eps2) {}

  std::string name() const override { return "forced_oscillator"; }
  std::map<std::string, double> parameters() const override {
    return {{"omega", omega_}, {"b", b_}, {"c", c_}, {"eps1", eps1_}, {"eps2", eps2_}};
  }

  void eval(const TaylorJet& x, const TaylorJet& y, TaylorJet& fx, TaylorJet& fy) const override {
    TaylorJet s(x.order()), cj(x.order());
    jet_sincos(x * kTwoPi, s, cj);
    fx = x + y * eps1_ + s * c_ + omega_;
    fy = y * b_ + s * eps2_;
  }

  void deriv(const TaylorJet& x, const TaylorJet&, TaylorJet& dxx, TaylorJet& dxy,
             TaylorJet& dyx, TaylorJet& dyy) const override {
    const int L = x.order();
    TaylorJet s(L), cj(L);
    jet_sincos(x * kTwoPi, s, cj);
    dxx = cj * (kTwoPi * c_) + 1.0;
    dxy = TaylorJet::constant(eps1_, L);
    dyx = cj * (kTwoPi * eps2_);
    dyy = TaylorJet::constant(b_, L);
  }

 private:
  double omega_, b_, c_, eps1_, eps2_;
};

}  // namespace

void register_builtin_models(ModelRegistry& reg) {
  reg.register_model(
      "linear", {{"omega", 0.3}, {"b", 0.5}},
      [](const std::map<std::string, double>& p) -> ModelPtr {
        return std::make_shared<LinearModel>(p.at("omega"), p.at("b"));
      });
  reg.register_model(
      "skew",
      {{"omega", 0.0}, {"alpha_amp", 0.041365}, {"l", 0.5}, {"eta_amp", 2e-4}},
      [](const std::map<std::string, double>& p) -> ModelPtr {
        return std::make_shared<SkewModel>(p.at("omega"), p.at("alpha_amp"), p.at("l"),
                                           p.at("eta_amp"));
      });
  reg.register_model(
      "forced_oscillator",
      {{"omega", 0.377}, {"b", 0.5}, {"c", 0.02}, {"eps1", 0.05}, {"eps2", 0.1}},
      [](const std::map<std::string, double>& p) -> ModelPtr {
        return std::make_shared<ForcedOscillatorModel>(p.at("omega"), p.at("b"), p.at("c"),
                                                       p.at("eps1"), p.at("eps2"));
      });
}

}  // namespace circlefol

#pragma once

// Analytic 2-D map models on T x R with truncated-jet evaluation of f and Df,
// a name/parameter-schema registry for CLI selection and plugins, and the
// transport of Fourier-Taylor pairs through a model.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "circlefol/fourier_taylor.hpp"
#include "circlefol/taylor_jet.hpp"

namespace circlefol {

struct Vec2 {
  double x = 0.0, y = 0.0;
};
struct Mat2 {
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;
};

class MapModel {
 public:
  virtual ~MapModel() = default;

  virtual std::string name() const = 0;
  virtual std::map<std::string, double> parameters() const = 0;

  // Image of the jet pair (x(s), y(s)); x is passed as an unwrapped lift
  // value, and implementations must satisfy f1(x+1, y) = f1(x, y) + 1.
  virtual void eval(const TaylorJet& x, const TaylorJet& y, TaylorJet& fx,
                    TaylorJet& fy) const = 0;

  // The four entries of Df along the same jet pair.
  virtual void deriv(const TaylorJet& x, const TaylorJet& y, TaylorJet& dxx, TaylorJet& dxy,
                     TaylorJet& dyx, TaylorJet& dyy) const = 0;

  Vec2 eval_point(double x, double y) const;
  Mat2 deriv_point(double x, double y) const;
};

using ModelPtr = std::shared_ptr<const MapModel>;

// Name -> (parameter defaults, factory).  Unknown parameter names and
// malformed values are rejected at creation time.
class ModelRegistry {
 public:
  using Factory = std::function<ModelPtr(const std::map<std::string, double>&)>;

  static ModelRegistry& instance();

  void register_model(const std::string& name, std::map<std::string, double> defaults,
                      Factory factory);
  ModelPtr create(const std::string& name,
                  const std::map<std::string, double>& overrides = {}) const;
  std::vector<std::string> names() const;
  std::map<std::string, double> defaults(const std::string& name) const;

 private:
  struct Entry {
    std::map<std::string, double> defaults;
    Factory factory;
  };
  std::map<std::string, Entry> entries_;
};

// Registers the built-in families (linear, skew, forced_oscillator); called
// automatically by ModelRegistry::instance().
void register_builtin_models(ModelRegistry& reg);

// f o W as a Fourier-Taylor pair; the angular output keeps winding 1.
FTPair apply_map_jet(const MapModel& f, const FTPair& w);

// Df o W as a Fourier-Taylor 2x2 matrix (winding 0 entries).
FTMatrix apply_dmap_jet(const MapModel& f, const FTPair& w);

}  // namespace circlefol

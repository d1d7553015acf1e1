#pragma once

// Truncated Taylor polynomials in one variable s, used per grid point while
// pushing Fourier-Taylor data through map evaluations and series inversions.

#include <vector>

namespace circlefol {

class TaylorJet {
 public:
  explicit TaylorJet(int order) : c_(static_cast<size_t>(order) + 1, 0.0) {}

  static TaylorJet constant(double v, int order) {
    TaylorJet j(order);
    j.c_[0] = v;
    return j;
  }
  // v + s (the jet of the analytic variable itself).
  static TaylorJet variable(double v, int order) {
    TaylorJet j(order);
    j.c_[0] = v;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](int k) const { return c_[k]; }
  double& operator[](int k) { return c_[k]; }
  double value() const { return c_[0]; }

  TaylorJet& operator+=(const TaylorJet& r);
  TaylorJet& operator-=(const TaylorJet& r);
  TaylorJet& operator+=(double v) { c_[0] += v; return *this; }
  TaylorJet& operator*=(double v);

  friend TaylorJet operator+(TaylorJet a, const TaylorJet& b) { return a += b; }
  friend TaylorJet operator-(TaylorJet a, const TaylorJet& b) { return a -= b; }
  friend TaylorJet operator+(TaylorJet a, double v) { return a += v; }
  friend TaylorJet operator*(TaylorJet a, double v) { return a *= v; }
  friend TaylorJet operator*(double v, TaylorJet a) { return a *= v; }
  friend TaylorJet operator-(TaylorJet a) { return a *= -1.0; }

  // Cauchy product truncated at the common order.
  friend TaylorJet operator*(const TaylorJet& a, const TaylorJet& b);

 private:
  std::vector<double> c_;
};

// Elementary functions by the standard truncated-series recurrences.
TaylorJet jet_sin(const TaylorJet& u);
TaylorJet jet_cos(const TaylorJet& u);
void jet_sincos(const TaylorJet& u, TaylorJet& s, TaylorJet& c);
TaylorJet jet_exp(const TaylorJet& u);
// 1/u; requires |u_0| >= floor.
TaylorJet jet_reciprocal(const TaylorJet& u, double floor = 1e-14);

}  // namespace circlefol

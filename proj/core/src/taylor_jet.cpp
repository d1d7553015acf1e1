#include "circlefol/taylor_jet.hpp"

#include <cmath>

#include "circlefol/errors.hpp"

namespace circlefol {

TaylorJet& TaylorJet::operator+=(const TaylorJet& r) {
  if (r.order() != order()) throw OrderMismatch("jet orders differ");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += r.c_[k];
  return *this;
}

TaylorJet& TaylorJet::operator-=(const TaylorJet& r) {
  if (r.order() != order()) throw OrderMismatch("jet orders differ");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= r.c_[k];
  return *this;
}

TaylorJet& TaylorJet::operator*=(double v) {
  for (auto& x : c_) x *= v;
  return *this;
}

TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
  if (a.order() != b.order()) throw OrderMismatch("jet orders differ");
  const int L = a.order();
  TaylorJet out(L);
  for (int i = 0; i <= L; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (int j = 0; j + i <= L; ++j) out[i + j] += ai * b[j];
  }
  return out;
}

void jet_sincos(const TaylorJet& u, TaylorJet& s, TaylorJet& c) {
  const int L = u.order();
  s = TaylorJet(L);
  c = TaylorJet(L);
  s[0] = std::sin(u[0]);
  c[0] = std::cos(u[0]);
  // k s_k = sum_{j=1..k} j u_j c_{k-j};  k c_k = -sum_{j=1..k} j u_j s_{k-j}.
  for (int k = 1; k <= L; ++k) {
    double sk = 0.0, ck = 0.0;
    for (int j = 1; j <= k; ++j) {
      sk += j * u[j] * c[k - j];
      ck -= j * u[j] * s[k - j];
    }
    s[k] = sk / k;
    c[k] = ck / k;
  }
}

TaylorJet jet_sin(const TaylorJet& u) {
  TaylorJet s(u.order()), c(u.order());
  jet_sincos(u, s, c);
  return s;
}

TaylorJet jet_cos(const TaylorJet& u) {
  TaylorJet s(u.order()), c(u.order());
  jet_sincos(u, s, c);
  return c;
}

TaylorJet jet_exp(const TaylorJet& u) {
  const int L = u.order();
  TaylorJet e(L);
  e[0] = std::exp(u[0]);
  for (int k = 1; k <= L; ++k) {
    double ek = 0.0;
    for (int j = 1; j <= k; ++j) ek += j * u[j] * e[k - j];
    e[k] = ek / k;
  }
  return e;
}

TaylorJet jet_reciprocal(const TaylorJet& u, double floor) {
  const int L = u.order();
  if (std::abs(u[0]) < floor) throw SingularFrame("jet_reciprocal: constant term below floor");
  // Newton iteration x <- x (2 - u x); correct orders double each pass.
  TaylorJet x = TaylorJet::constant(1.0 / u[0], L);
  int correct = 1;
  while (correct <= L) {
    TaylorJet t = u * x;
    t *= -1.0;
    t += 2.0;
    x = x * t;
    correct *= 2;
  }
  return x;
}

}  // namespace circlefol

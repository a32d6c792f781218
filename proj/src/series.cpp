#include "wsys/series.hpp"

#include "wsys/errors.hpp"

namespace wsys {

InversePowerSeries InversePowerSeries::one(int order) {
  InversePowerSeries s(order);
  s.coeffs_[0] = Polynomial(1);
  return s;
}

InversePowerSeries& InversePowerSeries::operator+=(const InversePowerSeries& o) {
  if (order() != o.order()) throw contract_error("series order mismatch");
  for (int k = 0; k <= order(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

InversePowerSeries& InversePowerSeries::operator-=(const InversePowerSeries& o) {
  if (order() != o.order()) throw contract_error("series order mismatch");
  for (int k = 0; k <= order(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

InversePowerSeries InversePowerSeries::operator*(const InversePowerSeries& o) const {
  if (order() != o.order()) throw contract_error("series order mismatch");
  const int T = order();
  InversePowerSeries out(T);
  for (int i = 0; i <= T; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= T; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return out;
}

InversePowerSeries InversePowerSeries::operator*(const Polynomial& p) const {
  InversePowerSeries out(order());
  for (int k = 0; k <= order(); ++k) out.coeffs_[k] = coeffs_[k] * p;
  return out;
}

InversePowerSeries InversePowerSeries::invert() const {
  if (!(coeffs_[0] == Polynomial(1)))
    throw contract_error("series_invert: constant term is not 1");
  const int T = order();
  InversePowerSeries out(T);
  out.coeffs_[0] = Polynomial(1);
  for (int k = 1; k <= T; ++k) {
    Polynomial acc;
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
    out.coeffs_[k] = -acc;
  }
  return out;
}

InversePowerSeries InversePowerSeries::reflect(const Polynomial& c) const {
  const int T = order();
  // base = expansion of (c-u)^{-1}
  InversePowerSeries base(T);
  Polynomial cp(1);
  for (int j = 1; j <= T; ++j) {
    base.coeff(j) = -cp;
    cp *= c;
  }
  InversePowerSeries out(T);
  out.coeff(0) = coeffs_[0];
  InversePowerSeries power = base;  // (c-u)^{-k}
  for (int k = 1; k <= T; ++k) {
    if (!coeffs_[k].is_zero()) out += power * coeffs_[k];
    if (k < T) power = power * base;
  }
  return out;
}

}  // namespace wsys

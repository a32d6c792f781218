#pragma once

#include <vector>

#include "wsys/polynomial.hpp"

namespace wsys {

// Truncated series sum_{k=0..T} c_k u^{-k} + O(u^{-T-1}) with polynomial
// coefficients.  All arithmetic is exact and truncates at the common order.
class InversePowerSeries {
 public:
  explicit InversePowerSeries(int order) : coeffs_(order + 1) {}
  static InversePowerSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Polynomial& coeff(int k) const { return coeffs_.at(k); }
  Polynomial& coeff(int k) { return coeffs_.at(k); }

  InversePowerSeries& operator+=(const InversePowerSeries& o);
  InversePowerSeries& operator-=(const InversePowerSeries& o);
  InversePowerSeries operator*(const InversePowerSeries& o) const;
  InversePowerSeries operator*(const Polynomial& p) const;

  // Multiplicative inverse; requires constant term 1.
  InversePowerSeries invert() const;

  // Expansion of u |-> (*this)(c - u) in powers of u^{-1}, using
  // (c-u)^{-1} = -sum_{j>=0} c^j u^{-j-1}.
  InversePowerSeries reflect(const Polynomial& c) const;

  bool operator==(const InversePowerSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Polynomial> coeffs_;
};

}  // namespace wsys

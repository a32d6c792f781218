#include "wsys/casimir_series.hpp"

#include <algorithm>

#include "wsys/errors.hpp"

namespace wsys {

InversePowerSeries build_F(int order, const std::map<int, Polynomial>& casimirs) {
  if (order < 1) throw contract_error("build_F: order must be >= 1");
  const Polynomial c0 = Polynomial::casimir(0);
  const Polynomial a = (c0 - Polynomial(1)) * Rat(1, 2);
  const Polynomial b = (c0 - Polynomial(2)) * Rat(1, 2);

  InversePowerSeries num = InversePowerSeries::one(order);
  num.coeff(1) = -a;
  InversePowerSeries den = InversePowerSeries::one(order);
  den.coeff(1) = -b;
  InversePowerSeries prefactor = num * den.invert();

  InversePowerSeries g(order);
  for (int m = 0; m + 1 <= order; ++m) {
    auto it = casimirs.find(m);
    g.coeff(m + 1) = it != casimirs.end() ? it->second : Polynomial::casimir(m);
  }

  InversePowerSeries f = InversePowerSeries::one(order);
  f -= prefactor * g;
  return f;
}

std::map<int, Polynomial> solve_odd_casimirs(int max_m) {
  if (max_m < 1 || max_m % 2 == 0) throw contract_error("solve_odd_casimirs: max_m must be odd");
  const int order = max_m + 1;
  std::map<int, Polynomial> solved;
  for (;;) {
    std::map<int, Polynomial> assignment;
    for (const auto& [m, p] : solved) assignment.emplace(m, p);
    InversePowerSeries f = build_F(order, assignment);
    InversePowerSeries e = f * f.reflect(Polynomial::casimir(0) - Polynomial(1));
    e.coeff(0) -= Polynomial(1);

    bool progress = false;
    for (int k = 1; k <= order && !progress; ++k) {
      const Polynomial& coeff = e.coeff(k);
      if (coeff.is_zero()) continue;
      std::uint32_t target = 0;
      bool found = false;
      for (std::uint32_t v : coeff.variables()) {
        if (v < kAuxVarBase && v % 2 == 1 && (!found || v > target)) {
          target = v;
          found = true;
        }
      }
      if (!found)
        throw contract_error("odd-Casimir solve: nonzero equation without odd variable at order " +
                             std::to_string(k));
      Polynomial lin, rest;
      coeff.split_linear(target, &lin, &rest);
      if (!lin.is_constant() || lin.is_zero())
        throw contract_error("odd-Casimir solve: equation not linear in " + var_name(target));
      Polynomial value = rest * (Rat(-1) / lin.constant_value());
      for (std::uint32_t v : value.variables())
        if (v % 2 == 1)
          throw contract_error("odd-Casimir solve: " + var_name(target) +
                               " came out with odd variable " + var_name(v));
      solved.emplace(static_cast<int>(target), std::move(value));
      progress = true;
    }
    if (!progress) break;
  }
  for (int m = 1; m <= max_m; m += 2)
    if (!solved.count(m))
      throw contract_error("odd-Casimir solve: no equation determined C" + std::to_string(m));
  while (!solved.empty() && solved.rbegin()->first > max_m) solved.erase(std::prev(solved.end()));
  return solved;
}

PPData make_pp_data(const FamilySpec& f) {
  f.validate();
  PPData pp;
  pp.fam = f;
  switch (f.family) {
    case Algebra::so:
      pp.num_x = f.N / 2;
      pp.odd_n = f.N % 2 == 1;
      for (int i = 1; i <= pp.num_x; ++i) {
        pp.sigma.push_back(+1);
        pp.shifts.push_back(Rat(f.N, 2) - i);
      }
      break;
    case Algebra::sp:
      pp.num_x = f.M;
      pp.odd_n = false;
      for (int i = 1; i <= pp.num_x; ++i) {
        pp.sigma.push_back(-1);
        pp.shifts.push_back(Rat(f.M - i + 1));
      }
      break;
    case Algebra::osp: {
      pp.num_x = f.M + f.N / 2;
      pp.odd_n = f.N % 2 == 1;
      Rat sigma_sum(0);
      for (int i = 1; i <= pp.num_x; ++i) {
        const int sigma = i <= f.M ? -1 : +1;
        pp.sigma.push_back(sigma);
        Rat r = Rat(sigma) * (Rat(f.N - 2 * f.M, 2) - sigma_sum) - Rat(sigma + 1, 2);
        pp.shifts.push_back(r);
        sigma_sum += sigma;
      }
      break;
    }
  }
  return pp;
}

InversePowerSeries pp_F(const PPData& pp, int order) {
  const Rat c0 = pp.fam.c0_value();
  const Rat s1 = c0 / 2;
  const Rat s2 = (c0 - 2) / 2;

  auto quad_factor = [&](int i, const Rat& s) {
    // ((1 - s u^-1)^2 - x_i^2 u^-2) relative to u^2
    InversePowerSeries q = InversePowerSeries::one(order);
    q.coeff(1) = Polynomial(Rat(-2) * s);
    q.coeff(2) = Polynomial(s * s) - Polynomial::aux(i).pow(2);
    return q;
  };
  auto lin_factor = [&](const Rat& s) {
    InversePowerSeries q = InversePowerSeries::one(order);
    q.coeff(1) = Polynomial(-s);
    return q;
  };

  InversePowerSeries f = InversePowerSeries::one(order);
  for (int i = 1; i <= pp.num_x; ++i) {
    InversePowerSeries ratio = quad_factor(i, s1) * quad_factor(i, s2).invert();
    f = pp.sigma[i - 1] > 0 ? f * ratio : f * ratio.invert();
  }
  if (pp.odd_n) f = f * lin_factor(s1) * lin_factor(s2).invert();
  return f;
}

std::vector<Polynomial> extract_casimirs(const InversePowerSeries& F, const Rat& c0) {
  const int order = F.order();
  const Rat a = (c0 - 1) / 2;
  const Rat b = (c0 - 2) / 2;
  InversePowerSeries num = InversePowerSeries::one(order);
  num.coeff(1) = Polynomial(-b);
  InversePowerSeries den = InversePowerSeries::one(order);
  den.coeff(1) = Polynomial(-a);
  InversePowerSeries one_minus_f = InversePowerSeries::one(order);
  one_minus_f -= F;
  InversePowerSeries s = one_minus_f * num * den.invert();
  std::vector<Polynomial> out;
  for (int m = 0; m + 1 <= order; ++m) out.push_back(s.coeff(m + 1));
  return out;
}

PPReport verify_pp(const PPData& pp, int order) {
  PPReport rep;
  rep.fam = pp.fam;
  rep.order = order;
  const Rat c0 = pp.fam.c0_value();
  const InversePowerSeries f = pp_F(pp, order);
  const std::vector<Polynomial> cas = extract_casimirs(f, c0);

  rep.c0_ok = cas[0] == Polynomial(c0);
  if (!rep.c0_ok) rep.first_failure = "C0 extraction: got " + cas[0].str();

  rep.odd_casimirs_ok = true;
  int max_odd = order - 1;
  if (max_odd % 2 == 0) --max_odd;
  const auto solved = solve_odd_casimirs(max_odd);
  for (const auto& [m, expr] : solved) {
    if (m >= static_cast<int>(cas.size())) continue;
    std::map<std::uint32_t, Polynomial> sub;
    sub.emplace(casimir_var(0), Polynomial(c0));
    for (std::uint32_t v : expr.variables())
      if (v != 0 && v < kAuxVarBase) sub.emplace(v, cas[v]);
    const Polynomial expected = expr.substitute(sub);
    if (!(expected == cas[m])) {
      rep.odd_casimirs_ok = false;
      if (rep.first_failure.empty())
        rep.first_failure = "C" + std::to_string(m) + " relation fails";
      break;
    }
  }

  rep.reflection_ok = f * f.reflect(Polynomial(c0 - 1)) == InversePowerSeries::one(order);
  if (!rep.reflection_ok && rep.first_failure.empty())
    rep.first_failure = "F(u) F(C0-1-u) != 1";
  return rep;
}

}  // namespace wsys

#pragma once

#include <map>
#include <string>
#include <vector>

#include "wsys/series.hpp"
#include "wsys/weights.hpp"

namespace wsys {

// Generating series F(u) = 1 - ((u-(C_0-1)/2)/(u-(C_0-2)/2)) * sum_m C_m u^{-m-1},
// truncated at the given order, with the Casimirs taken from `casimirs`
// (symbolic C_m where no entry is given).
InversePowerSeries build_F(int order, const std::map<int, Polynomial>& casimirs = {});

// Impose F(u) F(C_0-1-u) = 1 order by order; each new coefficient equation is
// linear in its highest odd Casimir and is solved for it.  Returns the
// expressions for C_1, C_3, ..., C_max_m in the even Casimirs.
std::map<int, Polynomial> solve_odd_casimirs(int max_m);

// Family data for the closed product form of F(u): shifted diagonal
// variables x_i (only x_i^2 occurs), signs sigma_i and shifts r_i.
struct PPData {
  FamilySpec fam;
  int num_x = 0;
  std::vector<int> sigma;   // exponent of (u^2 - x_i^2) in P(u)
  std::vector<Rat> shifts;  // r_i
  bool odd_n = false;       // extra factor u in P(u)
};

PPData make_pp_data(const FamilySpec& f);

// Truncated expansion of P(u - C_0/2) / P(u - (C_0-2)/2) with C_0 set to the
// family value and the x_i kept formal.
InversePowerSeries pp_F(const PPData& pp, int order);

struct PPReport {
  FamilySpec fam;
  int order = 0;
  bool c0_ok = false;
  bool odd_casimirs_ok = false;
  bool reflection_ok = false;
  std::string first_failure;
  bool pass() const { return c0_ok && odd_casimirs_ok && reflection_ok; }
};

// Extract the Casimir coefficients from pp_F and check: the constant C_0
// matches the family value, every solved odd-Casimir expression holds
// identically in the x_i^2, and F(u) F(C_0-1-u) = 1.
PPReport verify_pp(const PPData& pp, int order);

// Casimir series extracted back out of a closed-form F (coefficients of
// u^{-m-1} of (1-F)(u-(C_0-2)/2)/(u-(C_0-1)/2)); exposed for tests.
std::vector<Polynomial> extract_casimirs(const InversePowerSeries& F, const Rat& c0);

}  // namespace wsys

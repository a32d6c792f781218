#pragma once

#include <set>
#include <utility>
#include <vector>

#include "wsys/perm.hpp"

namespace wsys {

// Which indices count as distinguished.  The corrected reading (s(i) > i) is
// the default; the literal reading (s(i) > 1) is kept selectable because the
// source text is ambiguous and gives no worked example.
enum class DistinguishedReading { corrected, literal };

struct SignData {
  int m = 0;
  std::set<int> p1;                      // distinguished indices
  std::set<std::pair<int, int>> p2;      // distinguished pairs, i < j
};

// P1 per the chosen reading; P2 = pairs {i<j} whose point pairs
// (i+1/3, s(i)-1/3) and (j+1/3, s(j)-1/3) alternate on the real line.
SignData distinguished_sets(const Permutation& s,
                            DistinguishedReading reading = DistinguishedReading::corrected);

// (-1)^{f_s(tau)} with f_s = sum_{i in P1} tau_i + sum_{{i,j} in P2} tau_i tau_j.
int sign_value(const SignData& sd, const std::vector<int>& eta);

}  // namespace wsys

#include "wsys/super_signs.hpp"

#include <algorithm>

#include "wsys/errors.hpp"

namespace wsys {

SignData distinguished_sets(const Permutation& s, DistinguishedReading reading) {
  SignData sd;
  sd.m = s.size();
  for (int i = 1; i <= sd.m; ++i) {
    const bool hit = reading == DistinguishedReading::corrected ? s(i) > i : s(i) > 1;
    if (hit) sd.p1.insert(i);
  }
  // Work with thirds scaled by 3: the pair for index i is (3i+1, 3s(i)-1).
  auto alternate = [&](int i, int j) {
    const int lo = std::min(3 * i + 1, 3 * s(i) - 1);
    const int hi = std::max(3 * i + 1, 3 * s(i) - 1);
    const bool in1 = lo < 3 * j + 1 && 3 * j + 1 < hi;
    const bool in2 = lo < 3 * s(j) - 1 && 3 * s(j) - 1 < hi;
    return in1 != in2;
  };
  for (int i = 1; i <= sd.m; ++i)
    for (int j = i + 1; j <= sd.m; ++j)
      if (alternate(i, j)) sd.p2.emplace(i, j);
  return sd;
}

int sign_value(const SignData& sd, const std::vector<int>& eta) {
  if (static_cast<int>(eta.size()) != sd.m)
    throw contract_error("sign_value: eta length " + std::to_string(eta.size()) +
                         " does not match m = " + std::to_string(sd.m));
  int f = 0;
  for (int i : sd.p1) f += eta[i - 1];
  for (const auto& [i, j] : sd.p2) f += eta[i - 1] * eta[j - 1];
  return f % 2 == 0 ? 1 : -1;
}

}  // namespace wsys

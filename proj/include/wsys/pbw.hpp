#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wsys/perm.hpp"
#include "wsys/polynomial.hpp"
#include "wsys/weights.hpp"

namespace wsys {

enum class PBWFamily { so, sp };

struct AlgebraSpec {
  PBWFamily family = PBWFamily::so;
  int dim = 0;  // N for so(N), 2M for sp(2M)

  static AlgebraSpec so(int N) { return {PBWFamily::so, N}; }
  static AlgebraSpec sp(int M) { return {PBWFamily::sp, 2 * M}; }

  int bar(int i) const { return dim + 1 - i; }
  int eps(int i) const {  // sp sign table; +1 throughout for so
    return family == PBWFamily::sp && i > dim / 2 ? -1 : +1;
  }
  Rat c0_value() const { return family == PBWFamily::so ? Rat(dim) : Rat(-dim); }
  std::string name() const;
  void validate() const;
};

// Chosen set of basis generators X_{ij} and their total (lexicographic) order.
struct GeneratorBasis {
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> index;
  int size() const { return static_cast<int>(pairs.size()); }
};

GeneratorBasis make_basis(const AlgebraSpec& a);

// X_{ij} expressed through the basis: sign * X_{basis[index]}, or zero.
struct ReducedGen {
  int sign = 0;  // 0 means the generator vanishes
  int index = -1;
};

ReducedGen reduce_generator(const AlgebraSpec& a, const GeneratorBasis& b, int i, int j);

// Element of the enveloping algebra in the PBW basis: weakly increasing
// words of basis generators with rational coefficients.
struct PBWElement {
  std::map<std::vector<int>, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const std::vector<int>& word, const Rat& c);
  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  bool operator==(const PBWElement& o) const { return terms == o.terms; }
  std::string str(const GeneratorBasis& basis) const;
};

class PBWAlgebra {
 public:
  explicit PBWAlgebra(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  const GeneratorBasis& basis() const { return basis_; }
  ReducedGen reduce(int i, int j) const { return reduce_generator(spec_, basis_, i, j); }

  // [X_g1, X_g2] as a linear combination of basis generators.
  const std::vector<std::pair<Rat, int>>& commutator(int g1, int g2) const;

  // Normal-order an arbitrary word of basis generators.
  PBWElement normal_form(const std::vector<int>& word, const Rat& coeff) const;
  PBWElement multiply(const PBWElement& x, const PBWElement& y) const;

  // Sum over all index tuples of X_{i_1 i_{s(1)}} ... X_{i_m i_{s(m)}} in the
  // PBW basis; for sp the sum carries the normalization (-1)^{m+r}.
  // Guard: dim^m <= 10^7.
  PBWElement w_envelope(const Permutation& s) const;         // OpenMP when available
  PBWElement w_envelope_serial(const Permutation& s) const;  // reference path

  // w_envelope of the standard m-cycle (cached).
  PBWElement casimir(int m) const;

  bool is_central(const PBWElement& e) const;

  // Substitute C_0 -> dim parameter and C_{2k} -> Casimir elements in
  // eval_wso(s), multiply out in the enveloping algebra, and compare with
  // the direct sum w_envelope(s).
  bool oracle_check(const Permutation& s, WeightEvaluator& so_eval) const;

  // Image of a polynomial in even Casimir variables (C_0 already
  // specialized away) inside the enveloping algebra.
  PBWElement evaluate_polynomial(const Polynomial& p) const;

 private:
  PBWElement envelope_sum(const Permutation& s, bool parallel) const;

  AlgebraSpec spec_;
  GeneratorBasis basis_;
  mutable std::map<std::pair<int, int>, std::vector<std::pair<Rat, int>>> comm_cache_;
  mutable std::map<int, PBWElement> casimir_cache_;
};

}  // namespace wsys

#pragma once

#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "wsys/perm.hpp"
#include "wsys/polynomial.hpp"

namespace wsys {

enum class WeightFamily { gl, so };

struct EvalOptions {
  // Memoize under a canonical representative of the permutation: the
  // lexicographically minimal cyclic conjugate, and (so only) the
  // sign-tracked cycle-orientation minimum.  Off by default so that the
  // invariance properties stay observable.
  bool memo_canonicalize = false;
};

// Recursive evaluator for the universal weight systems on permutations.
// Values are exact polynomials in the Casimir variables: C_0, C_1, C_2, ...
// for gl, and C_0, C_2, C_4, ... for so.  Evaluation is pure; instances are
// not thread-safe (use one evaluator per thread).
class WeightEvaluator {
 public:
  explicit WeightEvaluator(WeightFamily family, EvalOptions opt = {});

  WeightFamily family() const { return family_; }

  Polynomial eval(const Permutation& s);
  Polynomial eval_diagram(const ChordDiagram& d);
  Polynomial eval_product(const std::vector<Permutation>& factors);

  // Value of the standard ascending m-cycle for odd m, computed by reducing
  // the reversed cycle onto the standard one: reversal flips the sign of an
  // odd cycle, so twice the value equals minus the accumulated corrections.
  Polynomial odd_cycle_value(int m);

  // Test hook: evaluate by picking a uniformly random admissible reduction
  // position at every step (fresh memo per call).
  Polynomial eval_random_strategy(const Permutation& s, std::mt19937& rng);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  using Memo = std::unordered_map<std::string, Polynomial>;

  Polynomial eval_impl(const Permutation& s);
  Polynomial corrections(const Permutation& s, int r);
  Polynomial cycle_value(int m);
  std::pair<std::string, int> memo_key(const Permutation& s) const;

  Polynomial eval_random(const Permutation& s, std::mt19937& rng, Memo& memo);
  Polynomial corrections_random(const Permutation& s, int r, std::mt19937& rng, Memo& memo);

  WeightFamily family_;
  EvalOptions opt_;
  Memo memo_;
};

enum class Algebra { so, sp, osp };

struct FamilySpec {
  Algebra family = Algebra::so;
  int N = 0;
  int M = 0;

  static FamilySpec so(int N) { return {Algebra::so, N, 0}; }
  static FamilySpec sp(int M) { return {Algebra::sp, 0, M}; }
  static FamilySpec osp(int N, int M) { return {Algebra::osp, N, M}; }

  void validate() const;
  Rat c0_value() const;  // N for so, -2M for sp, N-2M for osp
  std::string name() const;
};

// Substitute C_0 by the family's dimension parameter, leaving the other
// Casimir variables symbolic.  Requires that only even C variables occur.
Polynomial specialize_family(const Polynomial& p, const FamilySpec& f);

}  // namespace wsys

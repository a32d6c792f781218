#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "wsys/four_term.hpp"

using namespace wsys;

TEST_CASE("relation matrix ranks and quotient dimensions") {
  const auto d1 = enumerate_diagrams(1);
  CHECK(four_term_relations(1, d1).rows.empty());

  const auto qb2 = quotient_basis(2);
  CHECK(qb2.diagrams.size() == 2);
  CHECK(qb2.rank_4t == 0);
  CHECK(qb2.dim() == 2);

  const auto qb3 = quotient_basis(3);
  CHECK(qb3.diagrams.size() == 5);
  CHECK(qb3.rank_4t == 2);
  CHECK(qb3.dim() == 3);

  CHECK(dim_A(1) == 1);
  CHECK(dim_A(4) == 6);
  CHECK(dim_A(5) == 10);
}

TEST_CASE("rank is independent of row order") {
  std::mt19937 rng(101);
  for (int n : {3, 4}) {
    const auto diagrams = enumerate_diagrams(n);
    auto m = four_term_relations(n, diagrams);
    const int base = matrix_rank(m);
    for (int rep = 0; rep < 5; ++rep) {
      std::shuffle(m.rows.begin(), m.rows.end(), rng);
      CHECK(matrix_rank(m) == base);
    }
  }
}

TEST_CASE("every relation row is annihilated by both weight systems") {
  WeightEvaluator gl(WeightFamily::gl), so(WeightFamily::so);
  for (int n : {2, 3, 4}) {
    const auto diagrams = enumerate_diagrams(n);
    const auto m = four_term_relations(n, diagrams);
    for (const auto& row : m.rows) {
      Polynomial sum_gl, sum_so;
      for (const auto& [col, c] : row) {
        sum_gl += Polynomial(c) * gl.eval_diagram(diagrams[col]);
        sum_so += Polynomial(c) * so.eval_diagram(diagrams[col]);
      }
      CHECK(sum_gl.is_zero());
      CHECK(sum_so.is_zero());
    }
  }
}

TEST_CASE("kernel dimensions up to n = 5 vanish") {
  for (int n = 1; n <= 5; ++n) {
    const KernelDims kd = kernel_dims(n);
    CHECK(kd.ker_gl == 0);
    CHECK(kd.ker_joint == 0);
  }
}

TEST_CASE("parallel and serial evaluation agree") {
  const auto diagrams = enumerate_diagrams(3);
  const auto serial = evaluate_diagrams(diagrams, WeightFamily::so, false, false);
  const auto parallel = evaluate_diagrams(diagrams, WeightFamily::so, true, false);
  CHECK(serial == parallel);
}

TEST_CASE("generator table shape") {
  // generator counts by degree: 1,1,1,2,3,5,8 -> 21 diagrams in total
  const auto& table = generator_table();
  REQUIRE(table.size() == 21);
  std::vector<int> got;
  for (const auto& g : table) got.push_back(g.diagram.chords());
  const std::vector<int> expect = {1, 2, 3, 4, 4, 5, 5, 5, 6, 6, 6,
                                   6, 6, 7, 7, 7, 7, 7, 7, 7, 7};
  CHECK(got == expect);
  // all of them are distinct as canonical diagrams
  std::set<std::vector<int>> codes;
  for (const auto& g : table) codes.insert(g.diagram.canonical().word());
  CHECK(codes.size() == 21);
}

TEST_CASE("four_term_configs produce valid diagrams") {
  for (const ChordDiagram& d : enumerate_diagrams(3)) {
    for (const FourTermConfig& cfg : four_term_configs(d)) {
      for (const auto& v : cfg.diagrams) CHECK(v.chords() == 3);
    }
  }
}

TEST_CASE("the n=6 kernel element is annihilated by both weight systems") {
  const QuotientBasis qb = quotient_basis(6);
  REQUIRE(qb.dim() == 19);
  std::vector<ChordDiagram> basis;
  for (int c : qb.free_cols) basis.push_back(qb.diagrams[c]);
  const auto gl_vals = evaluate_diagrams(basis, WeightFamily::gl, false, true);
  const auto so_vals = evaluate_diagrams(basis, WeightFamily::so, false, true);

  const auto kernels = weight_kernel_vectors(qb, gl_vals);
  REQUIRE(kernels.size() == 1);  // unique up to scale
  Polynomial combo_gl, combo_so;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    combo_gl += Polynomial(kernels[0][i]) * gl_vals[i];
    combo_so += Polynomial(kernels[0][i]) * so_vals[i];
  }
  CHECK(combo_gl.is_zero());
  CHECK(combo_so.is_zero());
}

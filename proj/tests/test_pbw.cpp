#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "wsys/errors.hpp"
#include "wsys/pbw.hpp"

using namespace wsys;

namespace {

using Mat = std::vector<std::vector<Rat>>;

Mat zero(int n) { return Mat(n, std::vector<Rat>(n, Rat(0))); }

Mat gen_matrix(const AlgebraSpec& a, int i, int j) {
  Mat m = zero(a.dim);
  m[i - 1][j - 1] += 1;
  const Rat c = a.family == PBWFamily::so ? Rat(1) : Rat(a.eps(i) * a.eps(j));
  m[a.bar(j) - 1][a.bar(i) - 1] -= c;
  return m;
}

Mat mul(const Mat& x, const Mat& y) {
  const int n = static_cast<int>(x.size());
  Mat out = zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

Mat bracket(const Mat& x, const Mat& y) {
  Mat out = mul(x, y);
  const Mat yx = mul(y, x);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[i][j] -= yx[i][j];
  return out;
}

}  // namespace

TEST_CASE("basis sizes") {
  for (int n = 2; n <= 6; ++n)
    CHECK(make_basis(AlgebraSpec::so(n)).size() == n * (n - 1) / 2);
  for (int m = 1; m <= 2; ++m)
    CHECK(make_basis(AlgebraSpec::sp(m)).size() == m * (2 * m + 1));
}

TEST_CASE("reduce_generator examples") {
  const AlgebraSpec so3 = AlgebraSpec::so(3);
  const GeneratorBasis b3 = make_basis(so3);
  CHECK(reduce_generator(so3, b3, 1, 3).sign == 0);  // X13 + X13 = 0
  const auto r33 = reduce_generator(so3, b3, 3, 3);
  CHECK(r33.sign == -1);
  CHECK(b3.pairs[r33.index] == std::pair<int, int>{1, 1});

  const AlgebraSpec sp2 = AlgebraSpec::sp(1);
  const GeneratorBasis bs = make_basis(sp2);
  const auto r12 = reduce_generator(sp2, bs, 1, 2);
  CHECK(r12.sign == +1);
  CHECK(bs.pairs[r12.index] == std::pair<int, int>{1, 2});
}

TEST_CASE("reduce_generator agrees with the matrix realization") {
  for (const AlgebraSpec& a :
       {AlgebraSpec::so(3), AlgebraSpec::so(4), AlgebraSpec::so(5), AlgebraSpec::sp(1),
        AlgebraSpec::sp(2)}) {
    const GeneratorBasis b = make_basis(a);
    for (int i = 1; i <= a.dim; ++i) {
      for (int j = 1; j <= a.dim; ++j) {
        const auto rg = reduce_generator(a, b, i, j);
        Mat expect = zero(a.dim);
        if (rg.sign != 0) {
          const auto& [bi, bj] = b.pairs[rg.index];
          expect = gen_matrix(a, bi, bj);
          if (rg.sign < 0)
            for (auto& row : expect)
              for (auto& v : row) v = -v;
        }
        CHECK(gen_matrix(a, i, j) == expect);
      }
    }
  }
}

TEST_CASE("commutators agree with the matrix oracle") {
  for (const AlgebraSpec& a :
       {AlgebraSpec::so(3), AlgebraSpec::so(4), AlgebraSpec::so(5), AlgebraSpec::sp(1),
        AlgebraSpec::sp(2)}) {
    PBWAlgebra alg(a);
    const auto& b = alg.basis();
    for (int g1 = 0; g1 < b.size(); ++g1) {
      for (int g2 = 0; g2 < b.size(); ++g2) {
        const auto& [i1, j1] = b.pairs[g1];
        const auto& [i2, j2] = b.pairs[g2];
        Mat expect = bracket(gen_matrix(a, i1, j1), gen_matrix(a, i2, j2));
        Mat got = zero(a.dim);
        for (const auto& [c, g] : alg.commutator(g1, g2)) {
          const auto& [bi, bj] = b.pairs[g];
          const Mat gm = gen_matrix(a, bi, bj);
          for (int x = 0; x < a.dim; ++x)
            for (int y = 0; y < a.dim; ++y) got[x][y] += c * gm[x][y];
        }
        CHECK(got == expect);
      }
    }
  }
}

TEST_CASE("normal form basics") {
  PBWAlgebra so3(AlgebraSpec::so(3));
  const auto& b = so3.basis();
  const int g12 = b.index.at({1, 2});
  const int g21 = b.index.at({2, 1});
  const int g11 = b.index.at({1, 1});

  // X12 X21 - X21 X12 = X11
  PBWElement comm = so3.normal_form({g12, g21}, Rat(1));
  comm -= so3.normal_form({g21, g12}, Rat(1));
  PBWElement x11;
  x11.add({g11}, Rat(1));
  CHECK(comm == x11);

  // already sorted word stays put
  PBWElement sorted = so3.normal_form({g11, g12}, Rat(3));
  PBWElement expect;
  expect.add({g11, g12}, Rat(3));
  CHECK(sorted == expect);
}

TEST_CASE("normal form is associative on random words") {
  std::mt19937 rng(113);
  for (const AlgebraSpec& a : {AlgebraSpec::so(3), AlgebraSpec::sp(1)}) {
    PBWAlgebra alg(a);
    const int nb = alg.basis().size();
    std::uniform_int_distribution<int> gen(0, nb - 1), len(0, 2);
    for (int rep = 0; rep < 40; ++rep) {
      auto rand_elem = [&] {
        PBWElement e;
        std::vector<int> w(len(rng));
        for (int& g : w) g = gen(rng);
        e += alg.normal_form(w, Rat(1 + static_cast<int>(rng() % 3)));
        return e;
      };
      const PBWElement x = rand_elem(), y = rand_elem(), z = rand_elem();
      CHECK(alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z)));
    }
  }
}

TEST_CASE("envelope sums") {
  PBWAlgebra so3(AlgebraSpec::so(3));
  CHECK(so3.w_envelope_serial(Permutation({1})).is_zero());  // sum_i X_ii = 0
  CHECK(so3.w_envelope_serial(Permutation({2, 1})) == so3.casimir(2));

  // the 3-cycle gives (C0 C2/2 - C2) at C0 = 3, i.e. C2/2
  PBWElement half_c2 = so3.casimir(2);
  for (auto& [w, c] : half_c2.terms) c /= 2;
  CHECK(so3.w_envelope_serial(Permutation({2, 3, 1})) == half_c2);

  // sp sign convention: the raw 2-cycle sum enters with (-1)^{2+1}
  PBWAlgebra sp2(AlgebraSpec::sp(1));
  CHECK(sp2.w_envelope_serial(Permutation({2, 1})) == sp2.casimir(2));
}

TEST_CASE("parallel envelope equals serial") {
  PBWAlgebra so4(AlgebraSpec::so(4));
  for (const Permutation& s :
       {Permutation({2, 3, 1}), Permutation({3, 4, 1, 2}), Permutation({2, 1, 4, 3})}) {
    CHECK(so4.w_envelope(s) == so4.w_envelope_serial(s));
  }
}

TEST_CASE("centrality") {
  PBWAlgebra so3(AlgebraSpec::so(3));
  CHECK(so3.is_central(so3.casimir(2)));
  CHECK(so3.is_central(PBWElement{}));
  PBWElement gen;
  gen.add({0}, Rat(1));
  CHECK_FALSE(so3.is_central(gen));
  CHECK(so3.is_central(so3.w_envelope_serial(Permutation({3, 4, 1, 2}))));
}

TEST_CASE("oracle check on small permutations") {
  WeightEvaluator so_eval(WeightFamily::so);
  for (const AlgebraSpec& a : {AlgebraSpec::so(3), AlgebraSpec::sp(1)}) {
    PBWAlgebra alg(a);
    for (int m = 1; m <= 3; ++m) {
      std::vector<int> img(m);
      for (int i = 0; i < m; ++i) img[i] = i + 1;
      std::sort(img.begin(), img.end());
      do {
        CHECK(alg.oracle_check(Permutation(img), so_eval));
      } while (std::next_permutation(img.begin(), img.end()));
    }
  }
  PBWAlgebra so4(AlgebraSpec::so(4));
  CHECK(so4.oracle_check(Permutation({2, 1}), so_eval));
}

TEST_CASE("oracle check on so(5) up to m = 4") {
  WeightEvaluator so_eval(WeightFamily::so);
  PBWAlgebra so5(AlgebraSpec::so(5));
  for (int m = 1; m <= 4; ++m) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = i + 1;
    do {
      CHECK(so5.oracle_check(Permutation(img), so_eval));
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST_CASE("size guard") {
  PBWAlgebra so6(AlgebraSpec::so(6));
  CHECK_THROWS_AS(so6.w_envelope_serial(Permutation::standard_cycle(10)), guard_error);
}

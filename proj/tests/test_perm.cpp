#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "wsys/errors.hpp"
#include "wsys/perm.hpp"

using namespace wsys;

TEST_CASE("parse_permutation") {
  CHECK(Permutation::parse("2 1") == Permutation({2, 1}));
  CHECK(Permutation::parse("3 5 2 1 4") == Permutation({3, 5, 2, 1, 4}));
  CHECK_THROWS_AS(Permutation::parse("2 2 1"), parse_error);
  CHECK_THROWS_AS(Permutation::parse("1 3"), parse_error);
  CHECK_THROWS_AS(Permutation::parse("1 x"), parse_error);
}

TEST_CASE("cycles") {
  auto c1 = cycles(Permutation({2, 1}));
  CHECK(c1.count() == 1);
  CHECK(c1.cycles == std::vector<std::vector<int>>{{1, 2}});

  auto c2 = cycles(Permutation({1, 2, 3}));
  CHECK(c2.count() == 3);

  auto c3 = cycles(Permutation({3, 5, 2, 1, 4}));
  CHECK(c3.count() == 1);
  CHECK(c3.cycles == std::vector<std::vector<int>>{{1, 3, 2, 5, 4}});
}

TEST_CASE("chord_to_permutation") {
  CHECK(ChordDiagram::parse("1 1").to_permutation() == Permutation({2, 1}));
  CHECK(ChordDiagram::parse("1 2 1 2").to_permutation() == Permutation({3, 4, 1, 2}));
  CHECK(ChordDiagram::parse("(1,4)(2,7)(3,6)(5,8)").to_permutation() ==
        Permutation({4, 7, 6, 1, 8, 3, 2, 5}));
}

TEST_CASE("involution property") {
  std::mt19937 rng(17);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      // random matching
      std::vector<int> pts(2 * n);
      for (int i = 0; i < 2 * n; ++i) pts[i] = i + 1;
      std::shuffle(pts.begin(), pts.end(), rng);
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < n; ++i) pairs.emplace_back(pts[2 * i], pts[2 * i + 1]);
      const Permutation p = ChordDiagram::from_pairs(pairs).to_permutation();
      for (int i = 1; i <= 2 * n; ++i) {
        CHECK(p(p(i)) == i);
        CHECK(p(i) != i);
      }
    }
  }
}

TEST_CASE("canonical_code") {
  CHECK(ChordDiagram::parse("2 2 1 1").word() == std::vector<int>{1, 1, 2, 2});
  CHECK(ChordDiagram::parse("1 2 1 2").canonical().word() == std::vector<int>{1, 2, 1, 2});
  // canonical is idempotent and rotation-invariant
  const auto d = ChordDiagram::parse("1 2 2 3 1 3").canonical();
  CHECK(d.canonical() == d);
}

TEST_CASE("canonical code is constant on rotation orbits and separates them") {
  for (int n = 1; n <= 4; ++n) {
    // all matchings, grouped into explicit rotation orbits
    std::vector<std::vector<int>> words;
    {
      std::vector<int> word(2 * n, 0);
      std::function<void(int)> rec = [&](int label) {
        int first = -1;
        for (int i = 0; i < 2 * n; ++i)
          if (word[i] == 0) {
            first = i;
            break;
          }
        if (first < 0) {
          words.push_back(word);
          return;
        }
        for (int j = first + 1; j < 2 * n; ++j) {
          if (word[j] != 0) continue;
          word[first] = word[j] = label;
          rec(label + 1);
          word[first] = word[j] = 0;
        }
      };
      rec(1);
    }
    std::map<std::vector<int>, std::set<std::vector<int>>> orbit_codes;
    for (const auto& w : words) {
      // orbit representative: minimal raw rotation without relabeling issues
      std::vector<std::vector<int>> orbit;
      ChordDiagram d(w);
      std::vector<int> cur = d.word();
      for (int r = 0; r < 2 * n; ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        orbit.push_back(ChordDiagram(cur).word());
      }
      std::vector<int> rep = *std::min_element(orbit.begin(), orbit.end());
      orbit_codes[rep].insert(ChordDiagram(w).canonical().word());
    }
    std::set<std::vector<int>> all_codes;
    for (const auto& [rep, codes] : orbit_codes) {
      CHECK(codes.size() == 1);  // constant on the orbit
      all_codes.insert(*codes.begin());
    }
    CHECK(all_codes.size() == orbit_codes.size());  // distinct across orbits
  }
}

TEST_CASE("enumerate_diagrams") {
  CHECK(enumerate_diagrams(1).size() == 1);
  CHECK(enumerate_diagrams(1)[0].word() == std::vector<int>{1, 1});
  CHECK(enumerate_diagrams(2).size() == 2);
  CHECK(enumerate_diagrams(3).size() == 5);
  CHECK(enumerate_diagrams(4).size() == 18);
}

TEST_CASE("normalize: ordinary graph is untouched") {
  std::mt19937 rng(29);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<int> img(6);
    for (int i = 0; i < 6; ++i) img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p(img);
    const auto sp = ExtendedGraph::from_permutation(p).normalize();
    CHECK(sp.perm == p);
    CHECK(sp.sign == 1);
  }
}

TEST_CASE("normalize: two tails / two heads pair") {
  ExtendedGraph g;
  g.m = 2;
  g.edges = {{HalfEdge{1, false}, HalfEdge{2, false}}, {HalfEdge{1, true}, HalfEdge{2, true}}};
  const auto sp = g.normalize();
  CHECK(sp.perm == Permutation({2, 1}));
  CHECK(sp.sign == -1);
}

namespace {

// Flip the roles of both half-edges at every vertex in `flips`.
ExtendedGraph flip_vertices(ExtendedGraph g, const std::set<int>& flips) {
  for (auto& [a, b] : g.edges) {
    if (flips.count(a.vertex)) a.head = !a.head;
    if (flips.count(b.vertex)) b.head = !b.head;
  }
  return g;
}

}  // namespace

TEST_CASE("normalize undoes random vertex flips with a consistent sign") {
  // Fixed points are excluded: flipping a fixed-point vertex leaves the
  // graph unchanged, so its sign is invisible at the graph level (the value
  // theory absorbs it because one-cycles evaluate to zero).
  std::mt19937 rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = std::uniform_int_distribution<int>(2, 7)(rng);
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = i + 1;
    do {
      std::shuffle(img.begin(), img.end(), rng);
    } while ([&] {
      for (int i = 0; i < m; ++i)
        if (img[i] == i + 1) return true;
      return false;
    }());
    const Permutation p(img);

    std::set<int> flips;
    for (int v = 1; v <= m; ++v)
      if (rng() & 1u) flips.insert(v);
    ExtendedGraph g = flip_vertices(ExtendedGraph::from_permutation(p), flips);

    // shuffle the edge list: the result must not depend on processing order
    std::shuffle(g.edges.begin(), g.edges.end(), rng);
    const auto sp = g.normalize();

    // each cycle of sp.perm is either the corresponding cycle of p or its
    // reversal; the sign must balance the flip count with the reversals
    int rel_sign = 1;
    for (const auto& cyc : cycles(p).cycles) {
      bool same = true, reversed = true;
      for (int v : cyc) {
        same = same && sp.perm(v) == p(v);
        reversed = reversed && sp.perm(p(v)) == v;
      }
      CHECK((same || reversed));
      if (!same) {
        if (cyc.size() % 2 == 1) rel_sign = -rel_sign;
      }
    }
    const int flip_parity = flips.size() % 2 == 0 ? 1 : -1;
    CHECK(sp.sign * flip_parity * rel_sign == 1);
  }
}

TEST_CASE("normalize_opposite reverses one cycle with sign (-1)^r") {
  std::mt19937 rng(37);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = std::uniform_int_distribution<int>(2, 7)(rng);
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p(img);
    const ExtendedGraph g = ExtendedGraph::from_permutation(p);
    const int v = std::uniform_int_distribution<int>(1, m)(rng);

    const auto base = g.normalize();
    const auto opp = g.normalize_opposite(v);

    std::vector<int> cyc;
    for (int cur = v; cyc.empty() || cur != v; cur = p(cur)) cyc.push_back(cur);
    for (int x : cyc) CHECK(opp.perm(p(x)) == x);  // reversed on the cycle
    for (int x = 1; x <= m; ++x)
      if (std::find(cyc.begin(), cyc.end(), x) == cyc.end()) CHECK(opp.perm(x) == base.perm(x));
    const int expect = cyc.size() % 2 == 0 ? 1 : -1;
    CHECK(base.sign * opp.sign == expect);
  }
}

TEST_CASE("cyclic_conjugate") {
  CHECK(Permutation({2, 1}).cyclic_conjugate() == Permutation({2, 1}));
  for (int m = 1; m <= 6; ++m) {
    const auto c = Permutation::standard_cycle(m);
    CHECK(c.cyclic_conjugate() == c);
  }
  CHECK(Permutation({1, 3, 2}).cyclic_conjugate() == Permutation({3, 2, 1}));

  std::mt19937 rng(41);
  for (int rep = 0; rep < 50; ++rep) {
    const int m = std::uniform_int_distribution<int>(1, 8)(rng);
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    Permutation p(img), q(img);
    for (int k = 0; k < m; ++k) q = q.cyclic_conjugate();
    CHECK(q == p);
  }
}

TEST_CASE("concat and parse of diagrams") {
  const Permutation a({2, 1}), b({3, 1, 2});
  const Permutation ab = Permutation::concat(a, b);
  CHECK(ab == Permutation({2, 1, 5, 3, 4}));
  CHECK_THROWS_AS(ChordDiagram::parse("1 2 1"), parse_error);
  CHECK_THROWS_AS(ChordDiagram::parse("1 1 2"), parse_error);
  CHECK_THROWS_AS(ChordDiagram::parse("(1,2)(2,3)"), parse_error);
}

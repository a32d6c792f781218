#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wsys {

// Permutation of {1..m}, stored as the 1-based image list: images[i-1] = s(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijection
  static Permutation parse(const std::string& text);
  static Permutation identity(int m);
  static Permutation standard_cycle(int m);  // 1->2->...->m->1
  static Permutation reversed_cycle(int m);  // 1->m->m-1->...->2->1

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_standard_cycle() const;
  // Conjugate by the adjacent transposition (r, r+1): vertices at the two
  // slots change places.
  Permutation conjugate_adjacent(int r) const;
  // Conjugate by the long cycle i -> i+1 (mod m).
  Permutation cyclic_conjugate() const;
  static Permutation concat(const Permutation& a, const Permutation& b);

  std::string str() const;
  bool operator==(const Permutation& o) const { return images_ == o.images_; }

 private:
  std::vector<int> images_;
};

struct CycleDecomposition {
  // Each cycle starts at its minimal element; cycles sorted by minimal element.
  std::vector<std::vector<int>> cycles;
  int count() const { return static_cast<int>(cycles.size()); }
};

CycleDecomposition cycles(const Permutation& p);

// Chord diagram as a double-occurrence word over labels 1..n, labels
// normalized by first occurrence.
class ChordDiagram {
 public:
  explicit ChordDiagram(std::vector<int> word);
  static ChordDiagram parse(const std::string& text);  // word or "(1,3)(2,4)"
  static ChordDiagram from_pairs(std::vector<std::pair<int, int>> pairs);

  int chords() const { return static_cast<int>(word_.size()) / 2; }
  const std::vector<int>& word() const { return word_; }
  std::vector<std::pair<int, int>> pairs() const;

  // The fixed-point-free involution swapping the endpoints of every chord.
  Permutation to_permutation() const;
  // Lexicographically minimal relabeled word over all rotations.
  ChordDiagram canonical() const;

  std::string str() const;
  bool operator==(const ChordDiagram& o) const { return word_ == o.word_; }
  bool operator<(const ChordDiagram& o) const { return word_ < o.word_; }

 private:
  std::vector<int> word_;
};

// All rotation-canonical diagrams with n chords, in lexicographic word order.
std::vector<ChordDiagram> enumerate_diagrams(int n);

struct SignedPermutation {
  Permutation perm;
  int sign = 1;
  bool operator==(const SignedPermutation& o) const {
    return sign == o.sign && perm == o.perm;
  }
};

struct HalfEdge {
  int vertex = 0;  // 1-based
  bool head = false;
  bool operator==(const HalfEdge& o) const = default;
};

// Permutation-like graph whose edges may pair head/tail, head/head or
// tail/tail; every vertex carries exactly one head and one tail half-edge.
struct ExtendedGraph {
  int m = 0;
  std::vector<std::pair<HalfEdge, HalfEdge>> edges;

  static ExtendedGraph from_permutation(const Permutation& p);
  void validate() const;
  bool is_ordinary() const;

  // Flip half-edge roles at vertices until every edge has one head and one
  // tail; each flip contributes a factor -1.  Flips are chosen greedily
  // along each cycle starting from its minimal vertex, so the result is
  // deterministic and independent of processing order.
  SignedPermutation normalize() const;

  // Normalization with the opposite orientation chosen for the cycle (of the
  // undirected edge/vertex structure) through `vertex`; exposes the flip-set
  // ambiguity that normalize() resolves.
  SignedPermutation normalize_opposite(int vertex) const;
};

}  // namespace wsys

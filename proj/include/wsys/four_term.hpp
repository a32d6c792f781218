#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wsys/linalg.hpp"
#include "wsys/perm.hpp"
#include "wsys/polynomial.hpp"
#include "wsys/weights.hpp"

namespace wsys {

// One four-diagram configuration: moving one endpoint of a chord across the
// two endpoints of another.  The alternating sum with the stored signs is
// annihilated by every weight system.
struct FourTermConfig {
  std::array<ChordDiagram, 4> diagrams;
  static constexpr std::array<int, 4> signs = {+1, -1, +1, -1};
};

// All configurations arising from adjacent endpoint pairs of distinct chords.
std::vector<FourTermConfig> four_term_configs(const ChordDiagram& d);

// Relation matrix over the canonical diagrams with n chords (columns in
// lexicographic code order); duplicate relation instances are dropped.
SparseRationalMatrix four_term_relations(int n, const std::vector<ChordDiagram>& diagrams);

struct QuotientBasis {
  int n = 0;
  std::vector<ChordDiagram> diagrams;  // all canonical codes, lex order
  int rank_4t = 0;
  std::vector<int> pivot_cols;
  std::vector<int> free_cols;  // these diagrams form a basis of A_n
  int dim() const { return static_cast<int>(diagrams.size()) - rank_4t; }
};

QuotientBasis quotient_basis(int n);
int dim_A(int n);

struct KernelDims {
  int ker_gl = 0;
  int ker_joint = 0;
};

// (dim ker w_gl on A_n, dim of the joint kernel of both weight systems).
KernelDims kernel_dims(int n, bool parallel = false, bool memo_canonicalize = false);

// Values of one weight system on a list of diagrams.  `parallel` evaluates
// diagrams across OpenMP threads (one evaluator per thread); the serial path
// shares a single memo.  Results are identical either way.
std::vector<Polynomial> evaluate_diagrams(const std::vector<ChordDiagram>& diagrams,
                                          WeightFamily family, bool parallel,
                                          bool memo_canonicalize);

struct DimReport {
  int n = 0;
  int num_diagrams = 0;
  int rank_4t = 0;
  int dim_a = 0;
  int ker_gl = 0;
  int ker_joint = 0;
  double elapsed_seconds = 0.0;
};

DimReport compute_dim_report(int n, bool parallel = false, bool memo_canonicalize = false);

// The generators of the diagram algebra in degrees <= 7, as chord-pair lists.
struct NamedDiagram {
  std::string name;
  ChordDiagram diagram;
};
const std::vector<NamedDiagram>& generator_table();

// The degree-7 element h with w_gl(h) = 0 and w_so(h) != 0; returns the pair
// (w_gl(h), w_so(h)), each evaluated via multiplicativity over the generator
// products.
std::pair<Polynomial, Polynomial> h_check(bool memo_canonicalize = true);

// Nullspace of one weight system on the basis of A_n, as coefficient vectors
// over the basis diagrams (used to exhibit the unique kernel element at n=6).
std::vector<std::vector<Rat>> weight_kernel_vectors(const QuotientBasis& qb,
                                                    const std::vector<Polynomial>& values);

}  // namespace wsys

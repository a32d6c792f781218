#include "wsys/four_term.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wsys/errors.hpp"

namespace wsys {

namespace {

// The four words of one configuration: the moving endpoint (at pos+1) sits
// just after / just before each endpoint of the other chord.
std::array<std::vector<int>, 4> four_variants(const std::vector<int>& w, int pos) {
  const int L = static_cast<int>(w.size());
  const int e = pos, f = (pos + 1) % L;
  const int label_a = w[e], label_b = w[f];

  std::vector<int> d1 = w;
  std::vector<int> d2 = w;
  std::swap(d2[e], d2[f]);

  std::vector<int> reduced;
  reduced.reserve(L - 1);
  for (int i = 0; i < L; ++i)
    if (i != f) reduced.push_back(w[i]);
  const int e_red = f < e ? e - 1 : e;
  int ebar = -1;
  for (int i = 0; i < L - 1; ++i)
    if (reduced[i] == label_a && i != e_red) ebar = i;

  std::vector<int> d3 = reduced;
  d3.insert(d3.begin() + ebar + 1, label_b);
  std::vector<int> d4 = reduced;
  d4.insert(d4.begin() + ebar, label_b);
  return {std::move(d1), std::move(d2), std::move(d3), std::move(d4)};
}

}  // namespace

std::vector<FourTermConfig> four_term_configs(const ChordDiagram& d) {
  std::vector<FourTermConfig> out;
  const auto& w = d.word();
  const int L = static_cast<int>(w.size());
  for (int pos = 0; pos < L; ++pos) {
    if (w[pos] == w[(pos + 1) % L]) continue;
    auto vars = four_variants(w, pos);
    out.push_back(FourTermConfig{{ChordDiagram(vars[0]), ChordDiagram(vars[1]),
                                  ChordDiagram(vars[2]), ChordDiagram(vars[3])}});
  }
  return out;
}

SparseRationalMatrix four_term_relations(int n, const std::vector<ChordDiagram>& diagrams) {
  if (n < 1) throw contract_error("four_term_relations: n must be >= 1");
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(diagrams.size()); ++i)
    index.emplace(diagrams[i].word(), i);

  std::set<std::vector<std::pair<int, long>>> seen;
  SparseRationalMatrix m;
  m.ncols = static_cast<int>(diagrams.size());
  for (const ChordDiagram& d : diagrams) {
    const auto& w = d.word();
    const int L = static_cast<int>(w.size());
    for (int pos = 0; pos < L; ++pos) {
      if (w[pos] == w[(pos + 1) % L]) continue;
      auto vars = four_variants(w, pos);
      std::map<int, long> row;
      constexpr int signs[4] = {+1, -1, +1, -1};
      for (int t = 0; t < 4; ++t) {
        const int col = index.at(ChordDiagram(vars[t]).canonical().word());
        row[col] += signs[t];
        if (row[col] == 0) row.erase(col);
      }
      if (row.empty()) continue;
      std::vector<std::pair<int, long>> key(row.begin(), row.end());
      long g = 0;
      for (const auto& [c, v] : key) g = std::gcd(g, std::abs(v));
      const long lead = key.front().second;
      for (auto& [c, v] : key) v = lead < 0 ? -v / g : v / g;
      if (!seen.insert(key).second) continue;
      SparseRow srow;
      srow.reserve(key.size());
      for (const auto& [c, v] : key) srow.emplace_back(c, Rat(v));
      m.rows.push_back(std::move(srow));
    }
  }
  return m;
}

QuotientBasis quotient_basis(int n) {
  QuotientBasis qb;
  qb.n = n;
  qb.diagrams = enumerate_diagrams(n);
  EchelonForm ef(static_cast<int>(qb.diagrams.size()));
  if (n >= 2) {
    auto m = four_term_relations(n, qb.diagrams);
    for (auto& row : m.rows) ef.insert(std::move(row));
  }
  qb.rank_4t = ef.rank();
  qb.pivot_cols = ef.pivot_columns();
  qb.free_cols = ef.free_columns();
  return qb;
}

int dim_A(int n) {
  if (n < 1 || n > 7) throw contract_error("dim_A supports 1 <= n <= 7");
  return quotient_basis(n).dim();
}

std::vector<Polynomial> evaluate_diagrams(const std::vector<ChordDiagram>& diagrams,
                                          WeightFamily family, bool parallel,
                                          bool memo_canonicalize) {
  std::vector<Polynomial> out(diagrams.size());
  const int count = static_cast<int>(diagrams.size());
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel
    {
      WeightEvaluator ev(family, EvalOptions{memo_canonicalize});
#pragma omp for schedule(dynamic)
      for (int i = 0; i < count; ++i) out[i] = ev.eval_diagram(diagrams[i]);
    }
    return out;
  }
#else
  (void)parallel;
#endif
  WeightEvaluator ev(family, EvalOptions{memo_canonicalize});
  for (int i = 0; i < count; ++i) out[i] = ev.eval_diagram(diagrams[i]);
  return out;
}

namespace {

// rows of the evaluation matrix: one per monomial, columns = basis diagrams
void insert_value_rows(EchelonForm& ef, const std::vector<Polynomial>& values) {
  std::map<Monomial, SparseRow, MonomialOrder> rows;
  for (int i = 0; i < static_cast<int>(values.size()); ++i)
    for (const auto& [mono, c] : values[i].terms()) rows[mono].emplace_back(i, c);
  for (auto& [mono, row] : rows) ef.insert(std::move(row));
}

}  // namespace

DimReport compute_dim_report(int n, bool parallel, bool memo_canonicalize) {
  const auto t0 = std::chrono::steady_clock::now();
  DimReport rep;
  rep.n = n;
  QuotientBasis qb = quotient_basis(n);
  rep.num_diagrams = static_cast<int>(qb.diagrams.size());
  rep.rank_4t = qb.rank_4t;
  rep.dim_a = qb.dim();

  std::vector<ChordDiagram> basis;
  basis.reserve(qb.free_cols.size());
  for (int c : qb.free_cols) basis.push_back(qb.diagrams[c]);

  const auto gl_vals = evaluate_diagrams(basis, WeightFamily::gl, parallel, memo_canonicalize);
  const auto so_vals = evaluate_diagrams(basis, WeightFamily::so, parallel, memo_canonicalize);

  EchelonForm gl_ef(rep.dim_a);
  insert_value_rows(gl_ef, gl_vals);
  rep.ker_gl = rep.dim_a - gl_ef.rank();

  EchelonForm joint_ef(rep.dim_a);
  insert_value_rows(joint_ef, gl_vals);
  insert_value_rows(joint_ef, so_vals);
  rep.ker_joint = rep.dim_a - joint_ef.rank();

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

KernelDims kernel_dims(int n, bool parallel, bool memo_canonicalize) {
  const DimReport rep = compute_dim_report(n, parallel, memo_canonicalize);
  return {rep.ker_gl, rep.ker_joint};
}

std::vector<std::vector<Rat>> weight_kernel_vectors(const QuotientBasis& qb,
                                                    const std::vector<Polynomial>& values) {
  if (values.size() != qb.free_cols.size())
    throw contract_error("weight_kernel_vectors: one value per basis diagram expected");
  EchelonForm ef(static_cast<int>(values.size()));
  insert_value_rows(ef, values);
  return ef.nullspace();
}

// ---------------------------------------------------------------------------

const std::vector<NamedDiagram>& generator_table() {
  using P = std::vector<std::pair<int, int>>;
  static const std::vector<NamedDiagram> table = [] {
    // p3 is (1,3)(2,5)(4,6): the published value list and the element h pin
    // this diagram down (the triple-diameter reading fails both), see the
    // oracle cross-checks in the tests.
    std::vector<std::pair<std::string, P>> raw = {
        {"p1", {{1, 2}}},
        {"p2", {{1, 3}, {2, 4}}},
        {"p3", {{1, 3}, {2, 5}, {4, 6}}},
        {"p4_1", {{1, 3}, {2, 5}, {4, 7}, {6, 8}}},
        {"p4_2", {{1, 4}, {2, 7}, {3, 6}, {5, 8}}},
        {"p5_1", {{1, 3}, {2, 5}, {4, 7}, {6, 9}, {8, 10}}},
        {"p5_2", {{1, 3}, {2, 6}, {4, 9}, {5, 8}, {7, 10}}},
        {"p5_3", {{1, 4}, {2, 9}, {3, 6}, {5, 8}, {7, 10}}},
        {"p6_1", {{1, 3}, {2, 5}, {4, 7}, {6, 9}, {8, 11}, {10, 12}}},
        {"p6_2", {{1, 3}, {2, 5}, {4, 8}, {6, 11}, {7, 10}, {9, 12}}},
        {"p6_3", {{1, 3}, {2, 6}, {4, 11}, {5, 8}, {7, 10}, {9, 12}}},
        {"p6_4", {{1, 4}, {2, 11}, {3, 6}, {5, 8}, {7, 10}, {9, 12}}},
        {"p6_5", {{1, 4}, {2, 8}, {3, 6}, {5, 11}, {7, 10}, {9, 12}}},
        {"p7_1", {{1, 3}, {2, 5}, {4, 7}, {6, 9}, {8, 11}, {10, 13}, {12, 14}}},
        {"p7_2", {{1, 3}, {2, 5}, {4, 7}, {6, 10}, {8, 13}, {9, 12}, {11, 14}}},
        {"p7_3", {{1, 3}, {2, 5}, {4, 8}, {6, 13}, {7, 10}, {9, 12}, {11, 14}}},
        {"p7_4", {{1, 3}, {2, 6}, {4, 13}, {5, 8}, {7, 10}, {9, 12}, {11, 14}}},
        {"p7_5", {{1, 4}, {2, 13}, {3, 6}, {5, 8}, {7, 10}, {9, 12}, {11, 14}}},
        {"p7_6", {{1, 3}, {2, 6}, {4, 10}, {5, 8}, {7, 13}, {9, 12}, {11, 14}}},
        {"p7_7", {{1, 4}, {2, 7}, {3, 6}, {5, 10}, {8, 13}, {9, 12}, {11, 14}}},
        {"p7_8", {{1, 4}, {2, 8}, {3, 6}, {5, 13}, {7, 10}, {9, 12}, {11, 14}}},
    };
    std::vector<NamedDiagram> out;
    out.reserve(raw.size());
    for (auto& [name, pairs] : raw)
      out.push_back(NamedDiagram{name, ChordDiagram::from_pairs(pairs)});
    return out;
  }();
  return table;
}

namespace {

struct HTerm {
  int coeff;
  std::vector<std::pair<const char*, int>> factors;  // (generator, exponent)
};

const std::vector<HTerm>& h_terms() {
  static const std::vector<HTerm> terms = {
      {3, {{"p1", 5}, {"p2", 1}}},
      {-15, {{"p1", 3}, {"p2", 2}}},
      {-87, {{"p1", 1}, {"p2", 3}}},
      {-6, {{"p1", 4}, {"p3", 1}}},
      {255, {{"p1", 2}, {"p2", 1}, {"p3", 1}}},
      {-12, {{"p2", 2}, {"p3", 1}}},
      {-171, {{"p1", 1}, {"p3", 2}}},
      {-99, {{"p1", 3}, {"p4_1", 1}}},
      {133, {{"p3", 1}, {"p4_1", 1}}},
      {3, {{"p1", 3}, {"p4_2", 1}}},
      {-28, {{"p3", 1}, {"p4_2", 1}}},
      {21, {{"p1", 1}, {"p2", 1}, {"p4_2", 1}}},
      {45, {{"p1", 2}, {"p5_1", 1}}},
      {-24, {{"p1", 2}, {"p5_2", 1}}},
      {18, {{"p1", 2}, {"p5_3", 1}}},
      {-12, {{"p2", 1}, {"p5_3", 1}}},
      {17, {{"p1", 1}, {"p6_1", 1}}},
      {1, {{"p1", 1}, {"p6_2", 1}}},
      {-30, {{"p1", 1}, {"p6_3", 1}}},
      {-8, {{"p1", 1}, {"p6_4", 1}}},
      {20, {{"p1", 1}, {"p6_5", 1}}},
      {-46, {{"p7_1", 1}}},
      {11, {{"p7_2", 1}}},
      {18, {{"p7_3", 1}}},
      {8, {{"p7_4", 1}}},
      {-6, {{"p7_5", 1}}},
      {-20, {{"p7_6", 1}}},
      {5, {{"p7_7", 1}}},
      {6, {{"p7_8", 1}}},
  };
  return terms;
}

Polynomial combine_h(const std::map<std::string, Polynomial>& values) {
  Polynomial out;
  for (const HTerm& t : h_terms()) {
    Polynomial term(t.coeff);
    for (const auto& [name, exp] : t.factors) term *= values.at(name).pow(exp);
    out += term;
  }
  return out;
}

}  // namespace

std::pair<Polynomial, Polynomial> h_check(bool memo_canonicalize) {
  std::map<std::string, Polynomial> gl_values, so_values;
  {
    WeightEvaluator gl(WeightFamily::gl, EvalOptions{memo_canonicalize});
    for (const NamedDiagram& g : generator_table()) gl_values[g.name] = gl.eval_diagram(g.diagram);
  }
  {
    WeightEvaluator so(WeightFamily::so, EvalOptions{memo_canonicalize});
    for (const NamedDiagram& g : generator_table()) so_values[g.name] = so.eval_diagram(g.diagram);
  }
  return {combine_h(gl_values), combine_h(so_values)};
}

}  // namespace wsys

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wsys/polynomial.hpp"

namespace wsys {

// Sparse row: (column, coefficient) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, Rat>>;

struct SparseRationalMatrix {
  int ncols = 0;
  std::vector<SparseRow> rows;
};

// Incremental echelon form over the rationals.  Pivot choice is the first
// nonzero entry of each reduced row, rows processed in insertion order, so
// the pivot/free column split is deterministic.
class EchelonForm {
 public:
  explicit EchelonForm(int ncols) : ncols_(ncols) {}

  SparseRow reduce(SparseRow row) const;
  bool insert(SparseRow row);  // true if the rank increased

  int rank() const { return static_cast<int>(pivots_.size()); }
  int ncols() const { return ncols_; }
  std::vector<int> pivot_columns() const;
  std::vector<int> free_columns() const;

  // Basis of the right nullspace, one dense vector per free column.
  std::vector<std::vector<Rat>> nullspace() const;

 private:
  int ncols_;
  std::map<int, SparseRow> pivots_;  // leading column -> monic row
};

int matrix_rank(const SparseRationalMatrix& m);

}  // namespace wsys

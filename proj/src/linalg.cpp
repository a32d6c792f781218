#include "wsys/linalg.hpp"

#include <algorithm>

namespace wsys {

namespace {

// row -= factor * pivot, merging the sorted supports
SparseRow subtract_scaled(const SparseRow& row, const SparseRow& pivot, const Rat& factor) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() && j < pivot.size()) {
    if (row[i].first < pivot[j].first) {
      out.push_back(row[i++]);
    } else if (row[i].first > pivot[j].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Rat v = row[i].second - factor * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i, ++j;
    }
  }
  for (; i < row.size(); ++i) out.push_back(row[i]);
  for (; j < pivot.size(); ++j) out.emplace_back(pivot[j].first, -factor * pivot[j].second);
  return out;
}

}  // namespace

SparseRow EchelonForm::reduce(SparseRow row) const {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    row = subtract_scaled(row, it->second, row.front().second);
  }
  return row;
}

bool EchelonForm::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const Rat lead = row.front().second;
  for (auto& [c, v] : row) v /= lead;
  pivots_.emplace(row.front().first, std::move(row));
  return true;
}

std::vector<int> EchelonForm::pivot_columns() const {
  std::vector<int> out;
  out.reserve(pivots_.size());
  for (const auto& [c, r] : pivots_) out.push_back(c);
  return out;
}

std::vector<int> EchelonForm::free_columns() const {
  std::vector<int> out;
  auto it = pivots_.begin();
  for (int c = 0; c < ncols_; ++c) {
    if (it != pivots_.end() && it->first == c) {
      ++it;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::vector<Rat>> EchelonForm::nullspace() const {
  std::vector<std::vector<Rat>> out;
  for (int f : free_columns()) {
    std::vector<Rat> x(ncols_, Rat(0));
    x[f] = 1;
    // pivots in descending column order; rows are monic
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Rat acc(0);
      for (std::size_t k = 1; k < it->second.size(); ++k)
        acc += it->second[k].second * x[it->second[k].first];
      x[it->first] = -acc;
    }
    out.push_back(std::move(x));
  }
  return out;
}

int matrix_rank(const SparseRationalMatrix& m) {
  EchelonForm ef(m.ncols);
  for (const auto& row : m.rows) ef.insert(row);
  return ef.rank();
}

}  // namespace wsys

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tl/ring.hpp"

namespace tl {

// Sparse row vector: (index, value) pairs, indices strictly ascending,
// values nonzero.
template <class Value>
using SparseVec = std::vector<std::pair<int, Value>>;

template <class Value>
SparseVec<Value> to_sparse(const std::vector<Value>& dense) {
  SparseVec<Value> v;
  for (size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) v.emplace_back(static_cast<int>(i), dense[i]);
  return v;
}

template <class Value>
std::vector<Value> to_dense(const SparseVec<Value>& v, int len, const Value& zero) {
  std::vector<Value> dense(static_cast<size_t>(len), zero);
  for (const auto& [i, c] : v) dense[static_cast<size_t>(i)] = c;
  return dense;
}

// target -= c * row  (sparse merge)
template <class Value>
void sparse_axpy(SparseVec<Value>& target, const Value& c, const SparseVec<Value>& row) {
  SparseVec<Value> merged;
  merged.reserve(target.size() + row.size());
  size_t i = 0, j = 0;
  while (i < target.size() || j < row.size()) {
    if (j == row.size() || (i < target.size() && target[i].first < row[j].first)) {
      merged.push_back(target[i++]);
    } else if (i == target.size() || row[j].first < target[i].first) {
      Value prod = c * row[j].second;
      if (!prod.is_zero()) merged.emplace_back(row[j].first, -prod);
      ++j;
    } else {
      Value combined = target[i].second - c * row[j].second;
      if (!combined.is_zero()) merged.emplace_back(target[i].first, std::move(combined));
      ++i;
      ++j;
    }
  }
  target = std::move(merged);
}

// Dense matrix over an exact coefficient ring (a field here), row-major.
template <class Ring>
class Matrix {
 public:
  using Value = typename Ring::Value;

  Matrix(Ring ring, int rows, int cols)
      : ring_(std::move(ring)),
        rows_(rows),
        cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), ring_.zero()) {}

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Value& at(int r, int c) { return data_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }
  const Value& at(int r, int c) const { return data_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }

 private:
  Ring ring_;
  int rows_, cols_;
  std::vector<Value> data_;
};

// Row-reduced basis of a subspace of the coefficient space of Hom(m,n),
// rows in reduced echelon form sorted by leading index, so two equal
// subspaces have identical representations.
template <class Ring>
struct SubspaceBasis {
  using Value = typename Ring::Value;

  Ring ring;
  int m = 0;
  int n = 0;
  int ambient_dim = 0;
  std::vector<SparseVec<Value>> rows;

  int dim() const { return static_cast<int>(rows.size()); }

  bool operator==(const SubspaceBasis& rhs) const {
    return m == rhs.m && n == rhs.n && ambient_dim == rhs.ambient_dim && rows == rhs.rows;
  }

  // Residue of a vector modulo the subspace. Rows are in reduced
  // echelon form, so each position is eliminated by at most one row and
  // rows only touch positions at or after their lead: positions already
  // emitted never change.
  SparseVec<Value> reduce(SparseVec<Value> v) const {
    SparseVec<Value> out;
    size_t k = 0;
    while (!v.empty()) {
      int lead = v.front().first;
      while (k < rows.size() && rows[k].front().first < lead) ++k;
      if (k < rows.size() && rows[k].front().first == lead) {
        Value c = v.front().second;  // pivot coefficient is 1
        sparse_axpy(v, c, rows[k]);
      } else {
        out.push_back(v.front());
        v.erase(v.begin());
      }
    }
    return out;
  }

  bool contains(const SparseVec<Value>& v) const { return reduce(v).empty(); }

  bool contains_all(const SubspaceBasis& other) const {
    for (const auto& row : other.rows)
      if (!contains(row)) return false;
    return true;
  }
};

// Incremental row space: insert vectors one at a time, keeping one pivot
// row per leading index. finalize() back-substitutes into reduced
// echelon form.
template <class Ring>
class SpanBuilder {
 public:
  using Value = typename Ring::Value;

  explicit SpanBuilder(Ring ring) : ring_(std::move(ring)) {}

  int dim() const { return static_cast<int>(pivots_.size()); }

  // Returns true when the vector enlarged the span.
  bool insert(SparseVec<Value> v) {
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) {
        Value inv = ring_.one() / v.front().second;
        for (auto& [i, c] : v) c = c * inv;
        int lead = v.front().first;
        pivots_.emplace(lead, std::move(v));
        return true;
      }
      Value c = v.front().second;
      sparse_axpy(v, c, it->second);
    }
    return false;
  }

  bool member(SparseVec<Value> v) const {
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) return false;
      Value c = v.front().second;
      sparse_axpy(v, c, it->second);
    }
    return true;
  }

  SubspaceBasis<Ring> finalize(int m, int n, int ambient_dim) const {
    SubspaceBasis<Ring> basis{ring_, m, n, ambient_dim, {}};
    // Back-substitute from the largest pivot down.
    std::map<int, SparseVec<Value>> reduced;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      SparseVec<Value> row = it->second;
      SparseVec<Value> out;
      while (!row.empty()) {
        auto jt = reduced.find(row.front().first);
        if (jt != reduced.end() && row.front().first != it->first) {
          Value c = row.front().second;
          sparse_axpy(row, c, jt->second);
        } else {
          out.push_back(row.front());
          row.erase(row.begin());
        }
      }
      reduced.emplace(it->first, std::move(out));
    }
    for (auto& [lead, row] : reduced) {
      (void)lead;
      basis.rows.push_back(std::move(row));
    }
    return basis;
  }

 private:
  Ring ring_;
  std::map<int, SparseVec<Value>> pivots_;
};

// Reduced row echelon form in place with a fixed pivot rule (columns
// left to right, first row with a nonzero entry). Returns pivot columns.
template <class Ring>
std::vector<int> rref(Matrix<Ring>& mat) {
  const Ring& ring = mat.ring();
  std::vector<int> pivot_cols;
  int r = 0;
  for (int col = 0; col < mat.cols() && r < mat.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < mat.rows(); ++i) {
      if (!mat.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int c = col; c < mat.cols(); ++c) std::swap(mat.at(pivot, c), mat.at(r, c));
    typename Ring::Value inv = ring.one() / mat.at(r, col);
    for (int c = col; c < mat.cols(); ++c) mat.at(r, c) = mat.at(r, c) * inv;
    for (int i = 0; i < mat.rows(); ++i) {
      if (i == r || mat.at(i, col).is_zero()) continue;
      typename Ring::Value f = mat.at(i, col);
      for (int c = col; c < mat.cols(); ++c)
        mat.at(i, c) = mat.at(i, c) - f * mat.at(r, c);
    }
    pivot_cols.push_back(col);
    ++r;
  }
  return pivot_cols;
}

template <class Ring>
int exact_rank(Matrix<Ring> mat) {
  return static_cast<int>(rref(mat).size());
}

// Canonical reduced basis of the right kernel { v : M v = 0 }.
template <class Ring>
SubspaceBasis<Ring> kernel_basis(Matrix<Ring> mat, int m, int n) {
  const Ring ring = mat.ring();
  std::vector<int> pivot_cols = rref(mat);
  std::vector<char> is_pivot(static_cast<size_t>(mat.cols()), 0);
  for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = 1;

  // One spanning vector per free column; re-reduce the set so the
  // returned rows are a genuine reduced echelon basis.
  SpanBuilder<Ring> span(ring);
  for (int free = 0; free < mat.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    SparseVec<typename Ring::Value> v;
    v.emplace_back(free, ring.one());
    for (size_t k = 0; k < pivot_cols.size(); ++k) {
      const auto& entry = mat.at(static_cast<int>(k), free);
      if (!entry.is_zero()) v.emplace_back(pivot_cols[k], -entry);
    }
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    span.insert(std::move(v));
  }
  return span.finalize(m, n, mat.cols());
}

}  // namespace tl

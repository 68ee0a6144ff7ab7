#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "klein/rational.hpp"

namespace klein {

// Sparse vector: (index, value) pairs, strictly increasing indices, no stored zeros.
template <class F>
using SparseVec = std::vector<std::pair<int, F>>;

template <class F>
using DenseVec = std::vector<F>;

template <class F>
SparseVec<F> sparsify(const DenseVec<F>& v) {
  SparseVec<F> out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!is_zero(v[i])) out.emplace_back(i, v[i]);
  return out;
}

template <class F>
DenseVec<F> densify(const SparseVec<F>& v, int n) {
  DenseVec<F> out(n);
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

template <class F>
SparseVec<F> unit_vector(int i) {
  return {{i, F(1)}};
}

template <class F>
F sparse_get(const SparseVec<F>& v, int i) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const std::pair<int, F>& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return F(0);
}

// a + c * b
template <class F>
SparseVec<F> axpy(const SparseVec<F>& a, const F& c, const SparseVec<F>& b) {
  if (is_zero(c)) return a;
  SparseVec<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      F s = a[i].second + c * b[j].second;
      if (!is_zero(s)) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
SparseVec<F> scaled(const SparseVec<F>& a, const F& c) {
  if (is_zero(c)) return {};
  SparseVec<F> out = a;
  for (auto& e : out) e.second *= c;
  return out;
}

template <class F>
SparseVec<F> operator-(const SparseVec<F>& a, const SparseVec<F>& b) {
  return axpy(a, F(-1), b);
}

// Accumulates sparse contributions into a dense buffer and tracks touched slots.
template <class F>
class Accumulator {
 public:
  explicit Accumulator(int n) : buf_(n), touched_(n, 0) {}
  void add(int i, const F& x) {
    if (!touched_[i]) {
      touched_[i] = 1;
      idx_.push_back(i);
    }
    buf_[i] += x;
  }
  void add_scaled(const SparseVec<F>& v, const F& c) {
    for (const auto& [i, x] : v) add(i, c * x);
  }
  SparseVec<F> take() {
    std::sort(idx_.begin(), idx_.end());
    SparseVec<F> out;
    for (int i : idx_) {
      if (!is_zero(buf_[i])) out.emplace_back(i, std::move(buf_[i]));
      buf_[i] = F(0);
      touched_[i] = 0;
    }
    idx_.clear();
    return out;
  }

 private:
  std::vector<F> buf_;
  std::vector<char> touched_;
  std::vector<int> idx_;
};

// Dense matrix over F, row-major.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const F& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (is_zero(x)) continue;
        for (int j = 0; j < b.cols_; ++j)
          if (!is_zero(b(k, j))) p(i, j) += x * b(k, j);
      }
    return p;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  Matrix scaled(const F& c) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= c;
    return m;
  }
  DenseVec<F> apply(const DenseVec<F>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    DenseVec<F> out(rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (!is_zero((*this)(r, c)) && !is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
    return out;
  }
  F trace() const {
    F t(0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }
  bool is_zero_matrix() const {
    return std::all_of(a_.begin(), a_.end(), [](const F& x) { return is_zero(x); });
  }
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

template <class F>
struct RrefResult {
  Matrix<F> rref;
  std::vector<int> pivots;
  int rank = 0;
};

// Dense Gauss-Jordan elimination.
template <class F>
RrefResult<F> mat_rref(Matrix<F> m) {
  RrefResult<F> res;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!is_zero(m(r, c))) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(row, k));
    F inv = F(1) / m(row, c);
    for (int k = c; k < m.cols(); ++k) m(row, k) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, c))) continue;
      F f = m(r, c);
      for (int k = c; k < m.cols(); ++k)
        if (!is_zero(m(row, k))) m(r, k) -= f * m(row, k);
    }
    res.pivots.push_back(c);
    ++row;
  }
  res.rank = row;
  res.rref = std::move(m);
  return res;
}

template <class F>
int rank(const Matrix<F>& m) {
  return mat_rref(m).rank;
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  F det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (int k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      F f = m(i, c) / m(c, c);
      for (int k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return det;
}

// Throws std::domain_error when m is singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto r = mat_rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.rref(i, n + j);
  return inv;
}

// Basis of {v : m v = 0}, in reduced echelon form (each vector's first nonzero entry is 1).
template <class F>
std::vector<DenseVec<F>> nullspace(const Matrix<F>& m) {
  RrefResult<F> r = mat_rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int p : r.pivots) is_pivot[p] = 1;
  std::vector<DenseVec<F>> raw;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    DenseVec<F> v(m.cols());
    v[f] = F(1);
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.rref(i, f);
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return raw;
  Matrix<F> b(static_cast<int>(raw.size()), m.cols());
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) b(i, j) = raw[i][j];
  RrefResult<F> rb = mat_rref(b);
  std::vector<DenseVec<F>> out;
  for (int i = 0; i < rb.rank; ++i) {
    DenseVec<F> v(m.cols());
    for (int j = 0; j < m.cols(); ++j) v[j] = rb.rref(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

// Incrementally maintained reduced echelon basis of a subspace of F^n, stored sparsely.
// Row k has a 1 at pivot(k) and zeros at every other pivot column.
template <class F>
class EchelonBasis {
 public:
  explicit EchelonBasis(int n = 0) : n_(n), pivot_row_(n, -1) {}

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec<F>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Residual of v after eliminating all pivot columns.
  SparseVec<F> reduce(const SparseVec<F>& v) const {
    SparseVec<F> w = v;
    // Rows only touch their own pivot among pivot columns, so one sweep suffices.
    std::vector<std::pair<int, F>> hits;
    for (const auto& [i, x] : w)
      if (pivot_row_[i] >= 0) hits.emplace_back(pivot_row_[i], x);
    if (hits.empty()) return w;
    Accumulator<F> acc(n_);
    acc.add_scaled(w, F(1));
    for (const auto& [row, x] : hits) acc.add_scaled(rows_[row], -x);
    return acc.take();
  }

  bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

  // Adds v to the span; returns true if the dimension grew.
  bool insert(const SparseVec<F>& v) {
    SparseVec<F> w = reduce(v);
    if (w.empty()) return false;
    F inv = F(1) / w.front().second;
    for (auto& e : w) e.second *= inv;
    int p = w.front().first;
    for (auto& row : rows_) {
      F c = sparse_get(row, p);
      if (!is_zero(c)) row = axpy(row, -c, w);
    }
    pivot_row_[p] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }

  // Rows sorted by pivot column (canonical RREF order).
  std::vector<SparseVec<F>> sorted_rows() const {
    std::vector<int> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pivots_[a] < pivots_[b]; });
    std::vector<SparseVec<F>> out;
    for (int k : order) out.push_back(rows_[k]);
    return out;
  }

 private:
  int n_;
  std::vector<int> pivot_row_;
  std::vector<SparseVec<F>> rows_;
  std::vector<int> pivots_;
};

// Nullspace of a sparse matrix given by rows over `cols` columns, returned in RREF.
template <class F>
std::vector<SparseVec<F>> sparse_nullspace(const std::vector<SparseVec<F>>& rows, int cols) {
  EchelonBasis<F> eb(cols);
  for (const auto& r : rows) {
    eb.insert(r);
    if (eb.dim() == cols) return {};
  }
  std::vector<char> is_pivot(cols, 0);
  for (int p : eb.pivots()) is_pivot[p] = 1;
  // For each free column f: e_f minus the pivot entries of rows at column f.
  std::vector<std::vector<std::pair<int, F>>> col_entries(cols);
  for (std::size_t k = 0; k < eb.rows().size(); ++k)
    for (const auto& [j, x] : eb.rows()[k])
      if (!is_pivot[j]) col_entries[j].emplace_back(eb.pivots()[k], -x);
  EchelonBasis<F> ns(cols);
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    auto entries = col_entries[f];
    entries.emplace_back(f, F(1));
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ns.insert(SparseVec<F>(entries.begin(), entries.end()));
  }
  return ns.sorted_rows();
}

}  // namespace klein

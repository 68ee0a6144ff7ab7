#pragma once

#include <string>
#include <vector>

#include "klein/linalg.hpp"

namespace klein {

// A finite-dimensional Lie algebra with a fixed basis. Basis vectors must be simultaneous
// eigenvectors of the hint torus: coordinate i has weight coordinate_weight(i), a functional
// on the hint basis.
template <class F>
class Ambient {
 public:
  virtual ~Ambient() = default;
  virtual int dim() const = 0;
  // acc += coef * [e_i, e_j]
  virtual void add_bracket_basis(int i, int j, const F& coef, Accumulator<F>& acc) const = 0;
  virtual int hint_dim() const = 0;
  virtual SparseVec<F> hint_element(int k) const = 0;
  virtual const std::vector<F>& coordinate_weight(int i) const = 0;
  virtual std::string basis_label(int i) const { return "e" + std::to_string(i); }
};

template <class F>
SparseVec<F> bracket(const Ambient<F>& g, const SparseVec<F>& x, const SparseVec<F>& y) {
  Accumulator<F> acc(g.dim());
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) g.add_bracket_basis(i, j, a * b, acc);
  return acc.take();
}

template <class F>
SparseVec<F> bracket_basis(const Ambient<F>& g, int i, int j) {
  Accumulator<F> acc(g.dim());
  g.add_bracket_basis(i, j, F(1), acc);
  return acc.take();
}

// Column j of ad(x) is [x, e_j].
template <class F>
Matrix<F> adjoint_matrix(const Ambient<F>& g, const SparseVec<F>& x) {
  Matrix<F> m(g.dim(), g.dim());
  Accumulator<F> acc(g.dim());
  for (int j = 0; j < g.dim(); ++j) {
    for (const auto& [i, a] : x) g.add_bracket_basis(i, j, a, acc);
    for (auto& [k, v] : acc.take()) m(k, j) = std::move(v);
  }
  return m;
}

// Subspace of an ambient algebra kept in reduced echelon form: basis vector b has a 1 at
// pivots[b] and 0 at every other pivot, so coordinates are read off the pivot entries.
template <class F>
struct Subalgebra {
  const Ambient<F>* ambient = nullptr;
  std::vector<SparseVec<F>> basis;
  std::vector<int> pivots;

  int dim() const { return static_cast<int>(basis.size()); }

  static Subalgebra from_span(const Ambient<F>& g, const std::vector<SparseVec<F>>& vecs) {
    EchelonBasis<F> eb(g.dim());
    for (const auto& v : vecs) eb.insert(v);
    return from_echelon(g, eb);
  }
  static Subalgebra from_echelon(const Ambient<F>& g, const EchelonBasis<F>& eb) {
    Subalgebra s;
    s.ambient = &g;
    s.basis = eb.sorted_rows();
    for (const auto& b : s.basis) s.pivots.push_back(b.front().first);
    return s;
  }
  static Subalgebra whole(const Ambient<F>& g) {
    Subalgebra s;
    s.ambient = &g;
    for (int i = 0; i < g.dim(); ++i) {
      s.basis.push_back(unit_vector<F>(i));
      s.pivots.push_back(i);
    }
    return s;
  }

  EchelonBasis<F> echelon() const {
    EchelonBasis<F> eb(ambient->dim());
    for (const auto& b : basis) eb.insert(b);
    return eb;
  }
  bool contains(const SparseVec<F>& x) const { return echelon().contains(x); }

  // Coordinates of x in this basis; x must lie in the subspace.
  DenseVec<F> coords(const SparseVec<F>& x) const {
    DenseVec<F> c(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) c[b] = sparse_get(x, pivots[b]);
    return c;
  }
  SparseVec<F> combine(const DenseVec<F>& c) const {
    Accumulator<F> acc(ambient->dim());
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (!is_zero(c[b])) acc.add_scaled(basis[b], c[b]);
    return acc.take();
  }
};

}  // namespace klein

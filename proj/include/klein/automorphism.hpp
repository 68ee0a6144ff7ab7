#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "klein/ambient.hpp"
#include "klein/rootsys.hpp"

namespace klein {

// Linear automorphism of an ambient algebra, stored as the images of the basis vectors.
// `outer` is the image in the outer automorphism group, recorded as a diagram permutation
// (identity permutation = inner). `word` lists the generators used, in composition order.
template <class F>
struct Automorphism {
  std::vector<SparseVec<F>> cols;
  std::vector<std::string> word;
  IntVec outer;

  int dim() const { return static_cast<int>(cols.size()); }
  bool inner() const {
    for (std::size_t i = 0; i < outer.size(); ++i)
      if (outer[i] != static_cast<int>(i)) return false;
    return true;
  }

  static Automorphism identity(int dim, int outer_size) {
    Automorphism a;
    for (int i = 0; i < dim; ++i) a.cols.push_back(unit_vector<F>(i));
    a.outer.resize(outer_size);
    std::iota(a.outer.begin(), a.outer.end(), 0);
    return a;
  }

  SparseVec<F> apply(const SparseVec<F>& x) const {
    Accumulator<F> acc(dim());
    for (const auto& [j, c] : x) acc.add_scaled(cols[j], c);
    return acc.take();
  }

  Matrix<F> matrix() const {
    Matrix<F> m(dim(), dim());
    for (int j = 0; j < dim(); ++j)
      for (const auto& [i, v] : cols[j]) m(i, j) = v;
    return m;
  }

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.cols == b.cols && a.outer == b.outer;
  }
};

// Order of the outer image, i.e. of the diagram permutation.
inline int permutation_order(const IntVec& perm) {
  IntVec p = perm;
  for (int k = 1; k <= 720; ++k) {
    bool id = true;
    for (std::size_t i = 0; i < p.size(); ++i) id = id && p[i] == static_cast<int>(i);
    if (id) return k;
    IntVec q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = perm[p[i]];
    p = q;
  }
  throw std::logic_error("permutation order overflow");
}

// phi o psi
template <class F>
Automorphism<F> compose(const Automorphism<F>& phi, const Automorphism<F>& psi) {
  if (phi.dim() != psi.dim() || phi.outer.size() != psi.outer.size())
    throw std::invalid_argument("compose: ambient mismatch");
  Automorphism<F> r;
  r.cols.reserve(psi.dim());
  for (const auto& c : psi.cols) r.cols.push_back(phi.apply(c));
  r.word = phi.word;
  r.word.insert(r.word.end(), psi.word.begin(), psi.word.end());
  r.outer.resize(phi.outer.size());
  for (std::size_t i = 0; i < phi.outer.size(); ++i) r.outer[i] = phi.outer[psi.outer[i]];
  return r;
}

template <class F>
Automorphism<F> power(const Automorphism<F>& phi, int k) {
  Automorphism<F> r = Automorphism<F>::identity(phi.dim(), static_cast<int>(phi.outer.size()));
  for (int i = 0; i < k; ++i) r = compose(phi, r);
  return r;
}

// phi restricted to the span of `domain` (nullptr: whole space) is the identity.
template <class F>
bool acts_trivially(const Automorphism<F>& phi, const Subalgebra<F>* domain = nullptr) {
  if (!domain) {
    for (int j = 0; j < phi.dim(); ++j)
      if (phi.cols[j] != unit_vector<F>(j)) return false;
    return true;
  }
  for (const auto& b : domain->basis)
    if (phi.apply(b) != b) return false;
  return true;
}

template <class F>
bool agree_on(const Automorphism<F>& a, const Automorphism<F>& b, const Subalgebra<F>* domain = nullptr) {
  if (!domain) return a.cols == b.cols;
  for (const auto& v : domain->basis)
    if (a.apply(v) != b.apply(v)) return false;
  return true;
}

// Least k >= 1 with phi^k = id (on the domain). Throws past the bound.
template <class F>
int order(const Automorphism<F>& phi, int bound = 24, const Subalgebra<F>* domain = nullptr) {
  Automorphism<F> p = phi;
  for (int k = 1; k <= bound; ++k) {
    if (acts_trivially(p, domain)) return k;
    p = compose(phi, p);
  }
  throw std::runtime_error("automorphism order exceeds bound " + std::to_string(bound));
}

template <class F>
bool is_klein_four(const Automorphism<F>& a, const Automorphism<F>& b, const Subalgebra<F>* domain = nullptr) {
  if (acts_trivially(a, domain) || acts_trivially(b, domain)) return false;
  if (agree_on(a, b, domain)) return false;
  if (!acts_trivially(compose(a, a), domain) || !acts_trivially(compose(b, b), domain)) return false;
  return agree_on(compose(a, b), compose(b, a), domain);
}

}  // namespace klein

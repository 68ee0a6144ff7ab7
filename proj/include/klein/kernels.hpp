#pragma once

// Bulk identity checks. Each kernel has a serial reference and an OpenMP version; the two
// must agree exactly (tests compare them, the benchmark times them).

#include <array>
#include <atomic>
#include <cstdint>
#include <vector>

#include "klein/ambient.hpp"
#include "klein/automorphism.hpp"

namespace klein {

using Triple = std::array<int, 3>;

template <class F>
bool jacobi_triple(const Ambient<F>& g, const Triple& t, Accumulator<F>& acc) {
  auto [i, j, k] = t;
  // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
  auto jk = bracket_basis(g, j, k);
  auto ki = bracket_basis(g, k, i);
  auto ij = bracket_basis(g, i, j);
  for (const auto& [m, c] : jk) g.add_bracket_basis(i, m, c, acc);
  for (const auto& [m, c] : ki) g.add_bracket_basis(j, m, c, acc);
  for (const auto& [m, c] : ij) g.add_bracket_basis(k, m, c, acc);
  return acc.take().empty();
}

// Number of triples violating the Jacobi identity.
template <class F>
std::int64_t jacobi_failures_serial(const Ambient<F>& g, const std::vector<Triple>& triples) {
  Accumulator<F> acc(g.dim());
  std::int64_t bad = 0;
  for (const auto& t : triples) bad += !jacobi_triple(g, t, acc);
  return bad;
}

template <class F>
std::int64_t jacobi_failures_parallel(const Ambient<F>& g, const std::vector<Triple>& triples) {
  std::int64_t bad = 0;
  const auto n = static_cast<std::int64_t>(triples.size());
#pragma omp parallel reduction(+ : bad)
  {
    Accumulator<F> acc(g.dim());
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t x = 0; x < n; ++x) bad += !jacobi_triple(g, triples[x], acc);
  }
  return bad;
}

// All triples i < j < k.
inline std::vector<Triple> all_triples(int dim) {
  std::vector<Triple> out;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) out.push_back({i, j, k});
  return out;
}

// Deterministic pseudo-random triples (splitmix64 stream).
std::vector<Triple> sampled_triples(int dim, std::size_t count, std::uint64_t seed);

template <class F>
bool bracket_pair_ok(const Ambient<F>& g, const Automorphism<F>& phi, const SparseVec<F>& x,
                     const SparseVec<F>& y, const SparseVec<F>& px, const SparseVec<F>& py) {
  return phi.apply(bracket(g, x, y)) == bracket(g, px, py);
}

// Number of basis pairs (a < b) of the domain where phi([a,b]) != [phi a, phi b].
template <class F>
std::int64_t bracket_violations_serial(const Ambient<F>& g, const Automorphism<F>& phi,
                                       const Subalgebra<F>* domain = nullptr) {
  Subalgebra<F> whole;
  if (!domain) {
    whole = Subalgebra<F>::whole(g);
    domain = &whole;
  }
  const auto& B = domain->basis;
  std::vector<SparseVec<F>> img;
  for (const auto& b : B) img.push_back(phi.apply(b));
  std::int64_t bad = 0;
  for (std::size_t a = 0; a < B.size(); ++a)
    for (std::size_t b = a + 1; b < B.size(); ++b) bad += !bracket_pair_ok(g, phi, B[a], B[b], img[a], img[b]);
  return bad;
}

template <class F>
std::int64_t bracket_violations_parallel(const Ambient<F>& g, const Automorphism<F>& phi,
                                         const Subalgebra<F>* domain = nullptr) {
  Subalgebra<F> whole;
  if (!domain) {
    whole = Subalgebra<F>::whole(g);
    domain = &whole;
  }
  const auto& B = domain->basis;
  const auto n = static_cast<std::int64_t>(B.size());
  std::vector<SparseVec<F>> img(B.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < n; ++a) img[a] = phi.apply(B[a]);
  std::int64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : bad)
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = a + 1; b < n; ++b) bad += !bracket_pair_ok(g, phi, B[a], B[b], img[a], img[b]);
  return bad;
}

template <class F>
bool preserves_brackets(const Ambient<F>& g, const Automorphism<F>& phi, const Subalgebra<F>* domain = nullptr) {
  return bracket_violations_parallel(g, phi, domain) == 0;
}

// Number of basis pairs whose bracket leaves the subspace.
template <class F>
std::int64_t closure_violations_serial(const Subalgebra<F>& s) {
  auto eb = s.echelon();
  std::int64_t bad = 0;
  for (int a = 0; a < s.dim(); ++a)
    for (int b = a + 1; b < s.dim(); ++b) bad += !eb.contains(bracket(*s.ambient, s.basis[a], s.basis[b]));
  return bad;
}

template <class F>
std::int64_t closure_violations_parallel(const Subalgebra<F>& s) {
  auto eb = s.echelon();
  std::int64_t bad = 0;
  const std::int64_t n = s.dim();
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : bad)
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = a + 1; b < n; ++b) bad += !eb.contains(bracket(*s.ambient, s.basis[a], s.basis[b]));
  return bad;
}

}  // namespace klein

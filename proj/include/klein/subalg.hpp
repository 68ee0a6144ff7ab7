#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "klein/ambient.hpp"
#include "klein/automorphism.hpp"
#include "klein/isotype.hpp"

namespace klein {

// Common fixed points of `autos` inside `within` (whole ambient when null).
template <class F>
Subalgebra<F> fixed_subalgebra(const Ambient<F>& g, const std::vector<Automorphism<F>>& autos,
                               const Subalgebra<F>* within = nullptr);

// {x in within : phi(x) = lambda x}
template <class F>
Subalgebra<F> eigenspace(const Ambient<F>& g, const Automorphism<F>& phi, const F& lambda,
                         const Subalgebra<F>* within = nullptr);

// {x in within : [x, y] = 0 for every y in `of`}
template <class F>
Subalgebra<F> centralizer(const Ambient<F>& g, const std::vector<SparseVec<F>>& of,
                          const Subalgebra<F>* within = nullptr);

template <class F>
Subalgebra<F> centralizer(const Ambient<F>& g, const Subalgebra<F>& s, const Subalgebra<F>* within = nullptr) {
  return centralizer(g, s.basis, within);
}

template <class F>
bool is_abelian(const Subalgebra<F>& s);

// Intersection of two subspaces of the same ambient.
template <class F>
Subalgebra<F> intersect(const Subalgebra<F>& a, const Subalgebra<F>& b);

template <class F>
struct RestrictedWeight {
  std::vector<F> values;  // pairing with each basis vector of the Cartan
  int multiplicity = 0;
  std::vector<SparseVec<F>> basis;
};

struct CartanOptions {
  std::uint64_t seed = 0;
  bool use_hint = true;
  int max_retries = 64;
  int coefficient_bound = 3;
};

template <class F>
struct CartanResult {
  Subalgebra<F> t;
  bool from_hint = false;
  int attempts = 0;
};

// A Cartan subalgebra of the reductive subalgebra s. Tries hint-torus ∩ s first, then
// centralizers of seeded random elements; throws std::runtime_error when the budget runs out.
template <class F>
CartanResult<F> cartan_of(const Subalgebra<F>& s, const CartanOptions& opt = {});

// Joint eigenspace decomposition of the t-stable subspace `module` under ad(t), sorted by
// weight. Throws std::runtime_error on non-rational eigenvalues or non-semisimple action.
template <class F>
std::vector<RestrictedWeight<F>> weight_decomposition(const Subalgebra<F>& module, const Subalgebra<F>& t);

template <class F>
std::vector<RestrictedWeight<F>> restricted_roots(const Subalgebra<F>& s, const Subalgebra<F>& t) {
  return weight_decomposition(s, t);
}

// Root data of a reductive subalgebra relative to a Cartan and a seeded positivity.
template <class F>
struct RootData {
  Subalgebra<F> t;
  std::vector<std::vector<F>> roots;       // nonzero weights
  std::vector<SparseVec<F>> root_vectors;  // one per root
  std::vector<int> component;              // simple ideal index per root
  std::vector<char> positive;
  std::vector<int> simple;                 // indices into roots, grouped by component
  std::vector<IntMatrix> cartan_blocks;    // per component, in `simple` order
  std::vector<SimpleType> types;           // per component
  int center_dim = 0;
  IsoType type;
};

template <class F>
RootData<F> analyze(const Subalgebra<F>& s, const CartanOptions& opt = {});

template <class F>
IsoType identify(const Subalgebra<F>& s, std::uint64_t seed = 0) {
  CartanOptions o;
  o.seed = seed;
  return analyze(s, o).type;
}

struct HighestWeight {
  std::vector<int> labels;  // <lambda, alpha_i^vee> over the simple roots of k
  int multiplicity = 0;
  long weyl_dim = 0;
};

struct IsotropyResult {
  int dim_k = 0;
  int dim_p = 0;
  IsoType k_type;
  std::vector<HighestWeight> highest;
  long weyl_dim_sum = 0;   // sum of multiplicity * dim V(lambda); equals dim_p when consistent
  bool all_dominant = false;
  bool bracket_ok = false;  // [k, p] in p
};

// p = (-1)-eigenspace of theta, decomposed under k = g^theta.
template <class F>
IsotropyResult isotropy_weights(const Ambient<F>& g, const Automorphism<F>& theta, std::uint64_t seed = 0);

// Dimensions of the four joint eigenspaces (chi(a), chi(b)) in {(+,+), (+,-), (-,+), (-,-)}.
template <class F>
std::vector<int> character_dims(const Ambient<F>& g, const Automorphism<F>& a, const Automorphism<F>& b,
                                const Subalgebra<F>* within = nullptr);

}  // namespace klein

#pragma once

#include <string>

#include "klein/automorphism.hpp"
#include "klein/chevalley.hpp"

namespace klein {

using Aut = Automorphism<Rational>;

// exp(pi i ad H): +1 on the Cartan, (-1)^{alpha(H)} on X_alpha. Throws std::domain_error naming
// the first root with a non-integral pairing.
Aut torus_involution(const LieAlgebra& g, const Coweight& h);

// Diagram automorphism: X_{+-alpha_i} -> X_{+-pi(alpha_i)} with sign +1, H'_i -> H'_{pi(i)},
// signs on the remaining root vectors solved from the structure constants.
Aut diagram_auto(const LieAlgebra& g, const IntVec& perm);

// exp(ad x) for ad-nilpotent x.
Aut exp_ad(const LieAlgebra& g, const SparseVec<Rational>& x, const std::string& label);

// n_alpha = exp(ad X_alpha) exp(-ad X_-alpha) exp(ad X_alpha); acts on the Cartan as s_alpha.
Aut weyl_rep(const LieAlgebra& g, int root);

Aut identity_aut(const LieAlgebra& g);

// Coweight from integer numerators over a common denominator, e.g. ({0,1,0,0,1,0,1}, 2).
Coweight coweight(const std::vector<long>& numerators, long denominator = 1);

// Action of phi on the Cartan, as a rank x rank matrix in the coroot basis (phi must normalize it).
Matrix<Rational> cartan_action(const LieAlgebra& g, const Aut& phi);

// Simple reflection s_beta on the Cartan in the coroot basis.
Matrix<Rational> reflection_on_cartan(const LieAlgebra& g, int root);

}  // namespace klein

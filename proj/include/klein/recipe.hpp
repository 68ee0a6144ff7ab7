#pragma once

#include <memory>
#include <string>

#include "klein/autgroup.hpp"

namespace klein {

// "e6" -> ('E', 6); also accepts d4 for the triality checks.
std::pair<char, int> parse_family(const std::string& name);
std::string family_name(char family, int rank);

std::shared_ptr<const LieAlgebra> algebra_for(const std::string& family);

// Generator recipes, composed right to left with '*':
//   exp(H2+H4)                torus involution exp(pi i ad H)
//   exp((H2+H5+H7+2H1)/2)     rational coweights
//   tau                       e6 diagram involution; in e7 the torus element exp(pi i (H2+H5+H7)/2)
//   omega                     e7: n_{a2} n_{a5} n_{a7}
//   triality                  d4 diagram automorphism of order 3
//   weyl(i)                   Weyl representative of the i-th simple root (1-based)
//   id
// Throws std::invalid_argument on malformed input.
Aut build_recipe(const LieAlgebra& g, const std::string& family, const std::string& recipe);

Coweight parse_coweight(const std::string& text, int rank);

}  // namespace klein

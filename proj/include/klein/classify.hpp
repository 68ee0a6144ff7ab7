#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klein/recipe.hpp"
#include "klein/subalg.hpp"

namespace klein {

enum class Speciality { N, S, V };

char to_char(Speciality s);
Speciality parse_speciality(const std::string& s);

// 3 distinct labels -> N, exactly two equal -> S, all equal -> V.
Speciality speciality(std::vector<std::string> involution_type);

// Number of symmetric-pair isomorphism types contributed by one Klein four class: 6, 3, 1.
int berger_weight(Speciality s);

struct ClassLabel {
  std::string family;
  std::string label;   // sigma1..sigma4, sigma; AI, AIII_1, ...
  bool inner = true;
  int fixed_dim = 0;
};

struct CatalogEntry {
  std::string label;
  std::string recipe;
  std::string symmetric_type;  // EII, EIII, ...
  bool inner = true;
  int fixed_dim = 0;
  IsoType fixed_type;
};

// Representatives of all involution classes of an exceptional family, with their fixed
// dimensions computed on first use. Throws std::logic_error if (parity, dim) is not injective.
const std::vector<CatalogEntry>& exceptional_catalog(const std::string& family);

ClassLabel involution_class(const LieAlgebra& g, const std::string& family, const Aut& sigma);

// Labels of a, b and ab, sorted.
std::vector<std::string> klein_type(const LieAlgebra& g, const std::string& family, const Aut& a, const Aut& b);

struct KleinFourRecord {
  std::string family;
  std::string id;
  std::vector<std::string> generators;
  IsoType fixed_type;
  std::vector<std::string> involution_type;
  Speciality speciality = Speciality::N;
  std::vector<int> dims;  // (+,+), (+,-), (-,+), (-,-) eigenspace dimensions
};

KleinFourRecord analyze_klein_four(const std::string& family, const std::string& id, const std::string& recipe_a,
                                   const std::string& recipe_b, std::uint64_t seed = 0);

int berger_count(const std::vector<KleinFourRecord>& rows);

struct PairCoverage {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> witness;  // upper triangle: id of a covering row, "" if none
  bool complete() const;
};

// For each unordered pair of class labels, some row whose three involutions realize it.
PairCoverage commuting_pairs(const std::string& family, const std::vector<KleinFourRecord>& rows);

struct CentralizerCheck {
  bool applicable = false;
  int order = 0;
  int outer_order = 0;
  int centralizer_dim = 0;  // dim z_g(g^theta), always computed
  bool trivial() const { return applicable && centralizer_dim == 0; }
};

CentralizerCheck trivial_centralizer_check(const LieAlgebra& g, const Aut& theta);

}  // namespace klein

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klein/rational.hpp"

namespace klein {

using IntVec = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

// Coefficients of a Cartan element in the simple-coroot basis {H'_1, ..., H'_r}.
using Coweight = std::vector<Rational>;

// Irreducible reduced root system; roots are integer vectors in the simple-root basis.
// Cartan matrix convention: cartan()[i][j] = alpha_i(H'_j).
class RootSystem {
 public:
  // Bourbaki numbering. Valid: A>=1, B>=2, C>=3, D>=4, E6-8, F4, G2.
  static RootSystem build(char family, int rank);
  // Any finite-type Cartan matrix (family recorded as given). Throws if the closure
  // does not terminate within the root budget or the matrix is not symmetrizable.
  static RootSystem from_cartan(const IntMatrix& cartan, char family = '?');

  char family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, family_) + std::to_string(rank_); }
  const IntMatrix& cartan() const { return cartan_; }

  // Positive roots first (by height, then lexicographically descending), then their negatives
  // in the same order: root k + num_positive() is -root k.
  const std::vector<IntVec>& roots() const { return roots_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return static_cast<int>(roots_.size()) / 2; }
  int index_of(const IntVec& v) const;  // -1 if not a root
  bool is_root(const IntVec& v) const { return index_of(v) >= 0; }
  int neg(int k) const { return k < num_positive() ? k + num_positive() : k - num_positive(); }
  bool positive(int k) const { return k < num_positive(); }
  int height(int k) const;
  int simple_index(int i) const { return i; }  // simple roots occupy indices 0..rank-1

  // Symmetrized form scaled to integers: (alpha_i, alpha_j) up to one global factor.
  int form(const IntVec& u, const IntVec& v) const;
  int length2(int k) const { return form(roots_[k], roots_[k]); }
  int simple_length2(int i) const { return sym_[i][i]; }

  // <beta, alpha_j^vee> = beta(H'_j) for a root-lattice vector beta.
  int pairing_simple(const IntVec& beta, int j) const;

 private:
  void close();

  char family_ = '?';
  int rank_ = 0;
  IntMatrix cartan_;
  IntMatrix sym_;
  std::vector<IntVec> roots_;
  std::map<IntVec, int> index_;
};

struct RootString {
  int p = 0;
  int q = 0;
};

// Maximal p, q with beta - p alpha, ..., beta + q alpha all roots. Throws for alpha = +-beta.
RootString root_string(const IntVec& beta, const IntVec& alpha, const RootSystem& rs);

// A_{alpha,beta} = alpha(H'_beta), computed from the beta-string through alpha.
int cartan_integer(const IntVec& alpha, const IntVec& beta, const RootSystem& rs);

// alpha(h) for h a coweight in the simple-coroot basis.
Rational coroot_pairing(const IntVec& alpha, const Coweight& h, const RootSystem& rs);

// Coroot H'_beta expressed in the simple-coroot basis.
Coweight coroot_of(const IntVec& beta, const RootSystem& rs);

// Permutations pi of {0..r-1} with C[pi i][pi j] = C[i][j].
std::vector<IntVec> diagram_symmetries(const RootSystem& rs);

// Image of a root-lattice vector under a simple-root permutation.
IntVec permute_root(const IntVec& beta, const IntVec& perm);

struct SimpleType {
  char family = '?';
  int rank = 0;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
  std::string str() const { return std::string(1, family) + std::to_string(rank); }
};

// Classify a connected finite-type Cartan matrix (any simple-root order) into a canonical
// simple type, applying the low-rank identities B1=C1=A1, C2=B2, D3=A3.
std::optional<SimpleType> classify_cartan(const IntMatrix& cartan);

// Canonical form of a (family, rank) label; D2 is not simple and is rejected.
SimpleType canonical_simple(char family, int rank);

// Dimension of the simple Lie algebra of a canonical type.
int simple_dim(const SimpleType& t);

}  // namespace klein

#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "klein/ambient.hpp"
#include "klein/rootsys.hpp"

namespace klein {

// Complex simple Lie algebra over Q in a Chevalley basis: H'_1..H'_r, then X_beta for each root
// in RootSystem order. Signs of N_{alpha,beta} are fixed by N = +(p+1) on extraspecial pairs
// (first simple root in index order) and propagated by the standard identities.
class LieAlgebra final : public Ambient<Rational> {
 public:
  explicit LieAlgebra(RootSystem rs);
  static std::shared_ptr<const LieAlgebra> build(char family, int rank);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int dim() const override { return dim_; }
  std::string name() const { return rs_.name(); }

  int cartan_index(int i) const { return i; }
  int root_index(int k) const { return rs_.rank() + k; }
  int root_of(int basis) const { return basis - rs_.rank(); }  // -1.. for Cartan indices
  bool is_cartan(int basis) const { return basis < rs_.rank(); }

  // N_{alpha,beta} for root indices; 0 when alpha + beta is not a root.
  long structure_constant(int a, int b) const;

  void add_bracket_basis(int i, int j, const Rational& coef, Accumulator<Rational>& acc) const override;
  const SparseVec<Rational>& bracket_table(int i, int j) const { return table_[i * dim_ + j]; }

  int hint_dim() const override { return rs_.rank(); }
  SparseVec<Rational> hint_element(int k) const override { return unit_vector<Rational>(k); }
  const std::vector<Rational>& coordinate_weight(int i) const override { return weights_[i]; }
  std::string basis_label(int i) const override;

  SparseVec<Rational> coroot_element(int root) const;  // H'_beta in basis coordinates

  Rational killing_form(const SparseVec<Rational>& x, const SparseVec<Rational>& y) const;
  // Gram matrix of the Killing form in the Chevalley basis (computed once, then shared).
  const Matrix<Rational>& killing_matrix() const;

 private:
  Rational n_generic(int a, int b);
  Rational n_positive(int a, int b);
  int add_roots(int a, int b) const;
  int sub_roots(int a, int b) const;

  RootSystem rs_;
  int dim_ = 0;
  std::vector<long> npos_;          // memo for positive pairs, indexed a * P + b
  std::vector<char> npos_done_;
  std::vector<long> n_;             // all pairs, indexed a * R + b
  std::vector<SparseVec<Rational>> table_;
  std::vector<std::vector<Rational>> weights_;

  mutable std::once_flag killing_once_;
  mutable Matrix<Rational> killing_;
};

}  // namespace klein

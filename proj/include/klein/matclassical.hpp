#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "klein/classify.hpp"

namespace klein {

using Gauss = GaussRational;
using GMatrix = Matrix<Gauss>;
using GAut = Automorphism<Gauss>;

// gl(n) on coordinates a*n+b <-> E_ab. Hint torus: the diagonal.
class GlAmbient final : public Ambient<Gauss> {
 public:
  explicit GlAmbient(int n);
  int size() const { return n_; }
  int dim() const override { return n_ * n_; }
  void add_bracket_basis(int i, int j, const Gauss& coef, Accumulator<Gauss>& acc) const override;
  int hint_dim() const override { return n_; }
  SparseVec<Gauss> hint_element(int k) const override { return unit_vector<Gauss>(k * n_ + k); }
  const std::vector<Gauss>& coordinate_weight(int i) const override { return weights_[i]; }
  std::string basis_label(int i) const override;

  SparseVec<Gauss> vec(const GMatrix& x) const;
  GMatrix mat(const SparseVec<Gauss>& v) const;

 private:
  int n_;
  std::vector<std::vector<Gauss>> weights_;
};

enum class ClassicalFamily { SL, SO, SP };

// Complexified classical algebra inside gl(n), written in the frame X' = P^-1 X P. The frame
// pairs (a, b) use columns e_a - i e_b and e_a + i e_b, which turns the real rotation blocks
// of Cartan subalgebras of the Table 3 fixed algebras into diagonal matrices.
struct MatrixAlgebra {
  ClassicalFamily family = ClassicalFamily::SL;
  int n = 0;  // matrix size
  std::shared_ptr<const GlAmbient> gl;
  GMatrix frame, frame_inv;
  Subalgebra<Gauss> alg;

  int dim() const { return alg.dim(); }
  std::string name() const;          // sl(4), so(8), sp(6)
  std::string compact_name() const;  // su(4), so(8), sp(3)
  int rank() const;
  std::vector<GMatrix> basis_matrices() const;
};

using FramePairs = std::vector<std::pair<int, int>>;

// n is the matrix size (even for sp). Throws std::invalid_argument for unsupported sizes.
MatrixAlgebra build_matrix_algebra(ClassicalFamily family, int n, const FramePairs& pairs = {});

ClassicalFamily parse_classical_family(const std::string& s);  // sl|su, so, sp

enum class InvolutionKind { Adj, NegTrans };

// Adj: X -> A X A^-1.  NegTrans: X -> -A X^T A^-1 (tau when A = I, tau o Ad(A) in general).
// The conjugator is given in standard coordinates.
struct ClassicalInvolution {
  InvolutionKind kind = InvolutionKind::Adj;
  GMatrix conjugator;
  std::string name;
};

// Throws std::invalid_argument if the map does not preserve the algebra or is not an involution on it.
GAut classical_involution(const MatrixAlgebra& alg, const ClassicalInvolution& inv);

namespace mats {
GMatrix identity(int n);
GMatrix J(int m);                              // [[0, I_m], [-I_m, 0]]
GMatrix Ipq(int p, int q);                     // diag(-I_p, I_q)
GMatrix Ipq_prime(int p, int q);               // diag(-I_p, I_q, -I_p, I_q)
GMatrix Jpq(int p, int q);
GMatrix K(int p);                              // read with q = p
GMatrix sign4(int p, int q, int r, int s, int which);  // generators of Gamma_{p,q,r,s}
// Quaternionic matrices through the 2n x 2n complex embedding.
GMatrix quat_real(const GMatrix& d);           // real D -> diag(D, D)
GMatrix quat_i(int n);                         // iI -> diag(iI, -iI)
GMatrix quat_j(int n);                         // jI -> J_n
GMatrix quat_jJ(int p);                        // jJ_p -> [[0, J_p], [-J_p, 0]]
}  // namespace mats

struct Table3Row {
  std::string id;          // su.1 ... sp.4
  ClassicalFamily family;
  std::string ambient;     // su(p+q)
  std::string gamma;       // Gamma_{p,q}
  std::vector<std::string> generators;
  std::string params;      // "pq", "p" or "pqrs"
};

const std::vector<Table3Row>& table3_rows();
const Table3Row& table3_row(const std::string& id);

// Matrix size (quaternionic size for sp) for the row's parameters.
int table3_size(const Table3Row& row, const std::vector<int>& params);

// All parameter tuples giving a simple algebra of rank <= rank_bound.
std::vector<std::vector<int>> table3_parameters(const Table3Row& row, int rank_bound);

struct Table3Instance {
  MatrixAlgebra alg;
  GAut a, b;
};

// Builds the algebra in the row's frame and the two generators. Throws std::runtime_error if
// the generators do not form a Klein four group on the algebra.
Table3Instance table3_klein_four(const std::string& row_id, const std::vector<int>& params);

struct ClassicalCatalogEntry {
  std::string label;  // merged labels joined by '|' when (parity, dim) collide
  bool inner = true;
  int fixed_dim = 0;
};

const std::vector<ClassicalCatalogEntry>& classical_catalog(ClassicalFamily family, int n);

ClassLabel classical_involution_class(const MatrixAlgebra& alg, const GAut& sigma);

// Range of the classical class catalog: su(n) n>=3, so(2n+1) n>=1,
// sp(n) n>=3, so(2n) n>=4.
bool in_classical_range(ClassicalFamily family, int n);

// Computed labels against a type string such as "AI-AI-AIII" or "BDI-BDI-BDI".
bool type_matches(const std::vector<std::string>& labels, const std::string& expected);

struct Table3Result {
  std::string row_id;
  std::vector<int> params;
  std::string algebra;  // compact name
  IsoType fixed_type;
  std::vector<std::string> involution_type;
  Speciality speciality = Speciality::N;
  std::vector<int> dims;
  int algebra_dim = 0;
  bool in_range = false;
};

Table3Result analyze_table3(const std::string& row_id, const std::vector<int>& params, std::uint64_t seed = 0);

}  // namespace klein

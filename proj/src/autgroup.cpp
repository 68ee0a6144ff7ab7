#include "klein/autgroup.hpp"

#include <numeric>
#include <stdexcept>

#include "klein/kernels.hpp"

namespace klein {

namespace {

std::string coweight_label(const Coweight& h) {
  std::string s;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].is_zero()) continue;
    if (!s.empty()) s += "+";
    if (!h[i].is_one()) s += h[i].str() + "*";
    s += "H" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

Aut identity_aut(const LieAlgebra& g) { return Aut::identity(g.dim(), g.rank()); }

Coweight coweight(const std::vector<long>& numerators, long denominator) {
  Coweight h;
  for (long n : numerators) h.push_back(rat(n, denominator));
  return h;
}

Aut torus_involution(const LieAlgebra& g, const Coweight& h) {
  const auto& rs = g.root_system();
  if (static_cast<int>(h.size()) != g.rank()) throw std::invalid_argument("coweight has wrong length");
  Aut a = identity_aut(g);
  for (int k = 0; k < rs.num_roots(); ++k) {
    Rational v = coroot_pairing(rs.roots()[k], h, rs);
    if (!v.is_integer()) {
      std::string root;
      for (int x : rs.roots()[k]) root += (root.empty() ? "" : ",") + std::to_string(x);
      throw std::domain_error("exp(pi i H) undefined: root (" + root + ") pairs to " + v.str());
    }
    if (v.to_long() % 2 != 0) a.cols[g.root_index(k)] = {{g.root_index(k), Rational(-1)}};
  }
  a.word = {"exp(pi i (" + coweight_label(h) + "))"};
  return a;
}

Aut diagram_auto(const LieAlgebra& g, const IntVec& perm) {
  const auto& rs = g.root_system();
  const int r = g.rank();
  if (static_cast<int>(perm.size()) != r) throw std::invalid_argument("diagram_auto: permutation size");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (rs.cartan()[perm[i]][perm[j]] != rs.cartan()[i][j])
        throw std::invalid_argument("diagram_auto: not a diagram symmetry");

  std::vector<Rational> sign(rs.num_roots());
  std::vector<int> image(rs.num_roots());
  for (int k = 0; k < rs.num_roots(); ++k) image[k] = rs.index_of(permute_root(rs.roots()[k], perm));
  for (int i = 0; i < r; ++i) {
    sign[i] = Rational(1);
    sign[rs.neg(i)] = Rational(1);
  }
  // Positive roots are in height order, so the predecessor's sign is known.
  for (int k = r; k < rs.num_positive(); ++k) {
    const IntVec& xi = rs.roots()[k];
    for (int i = 0; i < r; ++i) {
      IntVec b = xi;
      --b[i];
      int bi = rs.index_of(b);
      if (bi < 0 || !rs.positive(bi)) continue;
      long n = g.structure_constant(i, bi);
      long np = g.structure_constant(image[i], image[bi]);
      sign[k] = sign[bi] * Rational(np) / Rational(n);
      int nbi = rs.neg(bi), ni = rs.neg(i);
      long m = g.structure_constant(ni, nbi);
      long mp = g.structure_constant(image[ni], image[nbi]);
      sign[rs.neg(k)] = sign[nbi] * Rational(mp) / Rational(m);
      break;
    }
  }
  Aut a;
  a.cols.resize(g.dim());
  for (int i = 0; i < r; ++i) a.cols[i] = unit_vector<Rational>(perm[i]);
  for (int k = 0; k < rs.num_roots(); ++k) a.cols[g.root_index(k)] = {{g.root_index(image[k]), sign[k]}};
  a.outer = perm;
  std::string w = "diagram(";
  for (int i = 0; i < r; ++i) w += (i ? "," : "") + std::to_string(perm[i] + 1);
  a.word = {w + ")"};
  if (bracket_violations_parallel(g, a) != 0)
    throw std::logic_error("diagram automorphism sign system is inconsistent");
  return a;
}

Aut exp_ad(const LieAlgebra& g, const SparseVec<Rational>& x, const std::string& label) {
  Aut a = identity_aut(g);
  for (int j = 0; j < g.dim(); ++j) {
    Accumulator<Rational> acc(g.dim());
    SparseVec<Rational> term = unit_vector<Rational>(j);
    acc.add_scaled(term, Rational(1));
    for (int k = 1; !term.empty(); ++k) {
      if (k > g.dim() + 1) throw std::invalid_argument("exp_ad: element is not ad-nilpotent");
      term = scaled(bracket(g, x, term), rat(1, k));
      acc.add_scaled(term, Rational(1));
    }
    a.cols[j] = acc.take();
  }
  a.word = {label};
  return a;
}

Aut weyl_rep(const LieAlgebra& g, int root) {
  const auto& rs = g.root_system();
  std::string name;
  for (int x : rs.roots()[root]) name += (name.empty() ? "" : ",") + std::to_string(x);
  Aut e = exp_ad(g, unit_vector<Rational>(g.root_index(root)), "exp(ad X)");
  Aut f = exp_ad(g, {{g.root_index(rs.neg(root)), Rational(-1)}}, "exp(-ad X-)");
  Aut n = compose(e, compose(f, e));
  n.word = {"weyl(" + name + ")"};
  return n;
}

Matrix<Rational> cartan_action(const LieAlgebra& g, const Aut& phi) {
  const int r = g.rank();
  Matrix<Rational> m(r, r);
  for (int j = 0; j < r; ++j)
    for (const auto& [i, v] : phi.cols[j]) {
      if (i >= r) throw std::invalid_argument("automorphism does not normalize the Cartan");
      m(i, j) = v;
    }
  return m;
}

Matrix<Rational> reflection_on_cartan(const LieAlgebra& g, int root) {
  // s_beta(H) = H - beta(H) H'_beta
  const auto& rs = g.root_system();
  const int r = g.rank();
  Coweight hb = coroot_of(rs.roots()[root], rs);
  Matrix<Rational> m = Matrix<Rational>::identity(r);
  for (int j = 0; j < r; ++j) {
    Rational bj(rs.pairing_simple(rs.roots()[root], j));
    for (int i = 0; i < r; ++i) m(i, j) -= bj * hb[i];
  }
  return m;
}

}  // namespace klein

#include "klein/chevalley.hpp"

#include <map>
#include <stdexcept>

namespace klein {

namespace {

IntVec add(const IntVec& a, const IntVec& b, int sb = 1) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + sb * b[i];
  return r;
}

}  // namespace

int LieAlgebra::add_roots(int a, int b) const { return rs_.index_of(add(rs_.roots()[a], rs_.roots()[b])); }
int LieAlgebra::sub_roots(int a, int b) const { return rs_.index_of(add(rs_.roots()[a], rs_.roots()[b], -1)); }

Rational LieAlgebra::n_generic(int a, int b) {
  int s = add_roots(a, b);
  if (s < 0) return Rational(0);
  bool pa = rs_.positive(a), pb = rs_.positive(b);
  if (pa && pb) return n_positive(a, b);
  if (!pa && !pb) return -n_positive(rs_.neg(a), rs_.neg(b));
  // a + b + c = 0: N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b); move to a same-sign pair.
  int c = rs_.neg(s);
  bool pc = rs_.positive(c);
  Rational lc(rs_.length2(c));
  if (pb == pc) return lc / Rational(rs_.length2(a)) * n_generic(b, c);
  return lc / Rational(rs_.length2(b)) * n_generic(c, a);
}

Rational LieAlgebra::n_positive(int a, int b) {
  const int P = rs_.num_positive();
  long& memo = npos_[a * P + b];
  if (npos_done_[a * P + b]) return Rational(memo);
  int xi = add_roots(a, b);
  // Extraspecial pair (e, f) of xi: e the first simple root with xi - e positive.
  int e = -1, f = -1;
  for (int i = 0; i < rs_.rank(); ++i) {
    int d = sub_roots(xi, i);
    if (d >= 0 && rs_.positive(d)) {
      e = i;
      f = d;
      break;
    }
  }
  if (e < 0) throw std::logic_error("no extraspecial pair");
  int p = 0;
  for (int d = sub_roots(f, e); d >= 0; d = sub_roots(d, e)) ++p;
  Rational val;
  if (a == e && b == f) {
    val = Rational(p + 1);
  } else if (a == f && b == e) {
    val = Rational(-(p + 1));
  } else {
    Rational t;
    int fa = sub_roots(f, a);
    if (fa >= 0)
      t += n_generic(f, rs_.neg(a)) * n_generic(e, rs_.neg(b)) / Rational(rs_.length2(fa));
    int ea = sub_roots(e, a);
    if (ea >= 0)
      t += n_generic(rs_.neg(a), e) * n_generic(f, rs_.neg(b)) / Rational(rs_.length2(ea));
    val = Rational(rs_.length2(xi)) / Rational(p + 1) * t;
  }
  if (!val.is_integer()) throw std::logic_error("non-integral structure constant");
  memo = val.to_long();
  npos_done_[a * P + b] = 1;
  return val;
}

LieAlgebra::LieAlgebra(RootSystem rs) : rs_(std::move(rs)) {
  const int r = rs_.rank(), R = rs_.num_roots(), P = rs_.num_positive();
  dim_ = r + R;
  npos_.assign(static_cast<std::size_t>(P) * P, 0);
  npos_done_.assign(static_cast<std::size_t>(P) * P, 0);
  n_.assign(static_cast<std::size_t>(R) * R, 0);
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b) {
      if (add_roots(a, b) < 0) continue;
      Rational v = n_generic(a, b);
      if (!v.is_integer()) throw std::logic_error("non-integral structure constant");
      long n = v.to_long();
      // |N_{a,b}| = p + 1 with p from the a-string through b.
      int p = 0;
      for (int d = sub_roots(b, a); d >= 0; d = sub_roots(d, a)) ++p;
      if (n != p + 1 && n != -(p + 1)) throw std::logic_error("structure constant magnitude mismatch");
      n_[a * R + b] = n;
    }

  weights_.assign(dim_, std::vector<Rational>(r));
  for (int k = 0; k < R; ++k)
    for (int i = 0; i < r; ++i) weights_[r + k][i] = Rational(rs_.pairing_simple(rs_.roots()[k], i));

  table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      SparseVec<Rational>& out = table_[i * dim_ + j];
      if (i < r && j < r) continue;
      if (i < r) {
        long c = rs_.pairing_simple(rs_.roots()[j - r], i);
        if (c != 0) out.emplace_back(j, Rational(c));
        continue;
      }
      if (j < r) {
        long c = rs_.pairing_simple(rs_.roots()[i - r], j);
        if (c != 0) out.emplace_back(i, Rational(-c));
        continue;
      }
      int a = i - r, b = j - r;
      if (b == rs_.neg(a)) {
        out = coroot_element(a);
      } else if (int s = add_roots(a, b); s >= 0) {
        out.emplace_back(r + s, Rational(n_[a * R + b]));
      }
    }
}

std::shared_ptr<const LieAlgebra> LieAlgebra::build(char family, int rank) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::shared_ptr<const LieAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{family, rank}];
  if (!slot) slot = std::make_shared<const LieAlgebra>(RootSystem::build(family, rank));
  return slot;
}

long LieAlgebra::structure_constant(int a, int b) const { return n_[a * rs_.num_roots() + b]; }

void LieAlgebra::add_bracket_basis(int i, int j, const Rational& coef, Accumulator<Rational>& acc) const {
  for (const auto& [k, c] : table_[i * dim_ + j]) acc.add(k, coef * c);
}

SparseVec<Rational> LieAlgebra::coroot_element(int root) const {
  Coweight h = coroot_of(rs_.roots()[root], rs_);
  SparseVec<Rational> out;
  for (int i = 0; i < rs_.rank(); ++i)
    if (!h[i].is_zero()) out.emplace_back(i, h[i]);
  return out;
}

std::string LieAlgebra::basis_label(int i) const {
  if (i < rs_.rank()) return "H" + std::to_string(i + 1);
  std::string s = "X(";
  const auto& v = rs_.roots()[i - rs_.rank()];
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

const Matrix<Rational>& LieAlgebra::killing_matrix() const {
  std::call_once(killing_once_, [this] {
    Matrix<Rational> k(dim_, dim_);
    Accumulator<Rational> acc(dim_);
    // B is graded: only Cartan-Cartan and (X_beta, X_-beta) entries can be nonzero.
    auto entry = [&](int i, int j) {
      Rational t;
      for (int m = 0; m < dim_; ++m) {
        for (const auto& [l, c] : table_[j * dim_ + m]) add_bracket_basis(i, l, c, acc);
        for (const auto& [l, c] : acc.take())
          if (l == m) t += c;
      }
      return t;
    };
    const int r = rs_.rank();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) k(i, j) = entry(i, j);
    for (int a = 0; a < rs_.num_roots(); ++a) k(r + a, r + rs_.neg(a)) = entry(r + a, r + rs_.neg(a));
    killing_ = std::move(k);
  });
  return killing_;
}

Rational LieAlgebra::killing_form(const SparseVec<Rational>& x, const SparseVec<Rational>& y) const {
  if ((!x.empty() && x.back().first >= dim_) || (!y.empty() && y.back().first >= dim_))
    throw std::invalid_argument("killing_form: dimension mismatch");
  const auto& k = killing_matrix();
  Rational s;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      if (!k(i, j).is_zero()) s += a * b * k(i, j);
  return s;
}

}  // namespace klein

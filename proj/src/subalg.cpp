#include "klein/subalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "klein/kernels.hpp"

namespace klein {

namespace {

std::vector<Rational> reals(const Rational& x) { return {x}; }
std::vector<Rational> reals(const GaussRational& z) { return {z.re(), z.im()}; }

// Coefficient vectors c with sum_b c_b cols[b] = 0; cols live in F^rows.
template <class F>
std::vector<SparseVec<F>> column_relations(const std::vector<SparseVec<F>>& cols, int rows) {
  std::vector<SparseVec<F>> r(rows);
  for (int b = 0; b < static_cast<int>(cols.size()); ++b)
    for (const auto& [l, v] : cols[b]) r[l].emplace_back(b, v);
  std::vector<SparseVec<F>> nonempty;
  for (auto& x : r)
    if (!x.empty()) nonempty.push_back(std::move(x));
  return sparse_nullspace(nonempty, static_cast<int>(cols.size()));
}

template <class F>
const std::vector<SparseVec<F>>& basis_of(const Ambient<F>& g, const Subalgebra<F>* within, Subalgebra<F>& tmp) {
  if (within) return within->basis;
  tmp = Subalgebra<F>::whole(g);
  return tmp.basis;
}

template <class F>
Subalgebra<F> span_of_relations(const Ambient<F>& g, const std::vector<SparseVec<F>>& W,
                                const std::vector<SparseVec<F>>& cols, int rows) {
  auto rel = column_relations(cols, rows);
  EchelonBasis<F> eb(g.dim());
  for (const auto& c : rel) {
    Accumulator<F> acc(g.dim());
    for (const auto& [b, x] : c) acc.add_scaled(W[b], x);
    eb.insert(acc.take());
  }
  return Subalgebra<F>::from_echelon(g, eb);
}

// Concatenate vectors of length n into blocks.
template <class F>
void append_block(SparseVec<F>& dst, const SparseVec<F>& src, int offset) {
  for (const auto& [i, x] : src) dst.emplace_back(i + offset, x);
}

// Solve sum_k a_k vecs[k] = target; vecs must be independent.
template <class F>
std::optional<DenseVec<F>> express_in(const std::vector<SparseVec<F>>& vecs, const SparseVec<F>& target) {
  std::map<int, int> rowmap;
  for (const auto& v : vecs)
    for (const auto& e : v) rowmap.emplace(e.first, 0);
  for (const auto& e : target) rowmap.emplace(e.first, 0);
  int r = 0;
  for (auto& [k, v] : rowmap) v = r++;
  const int n = static_cast<int>(vecs.size());
  Matrix<F> m(r, n + 1);
  for (int k = 0; k < n; ++k)
    for (const auto& [i, x] : vecs[k]) m(rowmap[i], k) = x;
  for (const auto& [i, x] : target) m(rowmap[i], n) = x;
  auto rr = mat_rref(m);
  DenseVec<F> a(n);
  for (int i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] == n) return std::nullopt;
    a[rr.pivots[i]] = rr.rref(i, n);
  }
  return a;
}

template <class F>
std::vector<SparseVec<F>> hint_elements(const Ambient<F>& g) {
  std::vector<SparseVec<F>> h;
  for (int k = 0; k < g.hint_dim(); ++k) h.push_back(g.hint_element(k));
  return h;
}

// Weights of ambient coordinates under t, when t lies in the hint torus.
template <class F>
std::optional<std::vector<DenseVec<F>>> coordinate_weights(const Subalgebra<F>& t) {
  const Ambient<F>& g = *t.ambient;
  auto h = hint_elements(g);
  std::vector<DenseVec<F>> a;
  for (const auto& tk : t.basis) {
    auto c = express_in(h, tk);
    if (!c) return std::nullopt;
    a.push_back(*c);
  }
  std::vector<DenseVec<F>> w(g.dim(), DenseVec<F>(t.dim()));
  for (int i = 0; i < g.dim(); ++i) {
    const auto& wi = g.coordinate_weight(i);
    for (int k = 0; k < t.dim(); ++k)
      for (int j = 0; j < g.hint_dim(); ++j)
        if (!is_zero(a[k][j]) && !is_zero(wi[j])) w[i][k] += a[k][j] * wi[j];
  }
  return w;
}

// Characteristic polynomial via Hessenberg reduction; coefficients low to high, monic.
template <class F>
std::vector<F> charpoly(Matrix<F> h) {
  const int n = h.rows();
  for (int m = 1; m + 1 < n; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i)
      if (!is_zero(h(i, m - 1))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != m) {
      for (int k = 0; k < n; ++k) std::swap(h(piv, k), h(m, k));
      for (int k = 0; k < n; ++k) std::swap(h(k, piv), h(k, m));
    }
    for (int i = m + 1; i < n; ++i) {
      if (is_zero(h(i, m - 1))) continue;
      F u = h(i, m - 1) / h(m, m - 1);
      for (int k = 0; k < n; ++k) h(i, k) -= u * h(m, k);
      for (int k = 0; k < n; ++k) h(k, m) += u * h(k, i);
    }
  }
  // p_0 = 1; p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}   (1-based)
  std::vector<std::vector<F>> p(n + 1);
  p[0] = {F(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<F> pm(m + 1);
    for (int d = 0; d < m; ++d) {
      pm[d + 1] += p[m - 1][d];
      pm[d] -= h(m - 1, m - 1) * p[m - 1][d];
    }
    F prod(1);
    for (int i = m - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (is_zero(prod)) break;
      F c = h(i - 1, m - 1) * prod;
      for (int d = 0; d < static_cast<int>(p[i - 1].size()); ++d) pm[d] -= c * p[i - 1][d];
    }
    p[m] = std::move(pm);
  }
  return p[n];
}

template <class F>
F horner(const std::vector<F>& c, const F& x) {
  F v(0);
  for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) v = v * x + c[d];
  return v;
}

template <class F>
std::vector<F> deflate(const std::vector<F>& c, const F& r) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<F> q(n);
  F carry(0);
  for (int d = n; d >= 1; --d) {
    carry = c[d] + carry * r;
    q[d - 1] = carry;
  }
  return q;
}

mpz_class denominators_lcm(const Rational& x) { return x.denominator(); }
mpz_class denominators_lcm(const GaussRational& z) { return lcm(z.re().denominator(), z.im().denominator()); }
mpz_class abs_bound(const Rational& x) { return abs(x.numerator()) / x.denominator() + 1; }
mpz_class abs_bound(const GaussRational& z) { return abs_bound(z.re()) + abs_bound(z.im()); }

constexpr long kCandidateBudget = 400000;  // gaussian integer candidates
constexpr long kDivisorBudget = 200000000;

std::vector<Rational> integer_candidates(long b, const Rational*) {
  std::vector<Rational> c;
  for (long v = -b; v <= b; ++v) c.emplace_back(v);
  return c;
}
std::vector<GaussRational> integer_candidates(long b, const GaussRational*) {
  std::vector<GaussRational> c;
  for (long x = -b; x <= b; ++x)
    for (long y = -b; y <= b; ++y) c.emplace_back(Rational(x), Rational(y));
  return c;
}

// All eigenvalues with algebraic multiplicity, or nullopt if some are not in F.
template <class F>
std::optional<std::vector<std::pair<F, int>>> field_eigenvalues(const Matrix<F>& a) {
  mpz_class den = 1, bound = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) den = lcm(den, denominators_lcm(a(i, j)));
  Matrix<F> s = a.scaled(F(Rational(den, 1)));
  for (int i = 0; i < s.rows(); ++i) {
    mpz_class row = 0;
    for (int j = 0; j < s.cols(); ++j) row += abs_bound(s(i, j));
    bound = std::max(bound, row);
  }
  std::vector<F> poly = charpoly(s);
  std::vector<std::pair<F, int>> out;
  if constexpr (std::is_same_v<F, Rational>) {
    // Rational roots of a monic integral polynomial are integers dividing its lowest nonzero coefficient.
    if (!bound.fits_slong_p() || bound.get_si() > kDivisorBudget) return std::nullopt;
    const long b = bound.get_si();
    int zeros = 0;
    while (poly.size() > 1 && is_zero(poly.front())) {
      poly.erase(poly.begin());
      ++zeros;
    }
    if (zeros) out.emplace_back(F(0), zeros);
    for (long d = 1; poly.size() > 1 && d <= b; ++d) {
      mpz_class c0 = abs(poly.front().numerator());
      if (c0 < d) break;
      if (!mpz_divisible_ui_p(c0.get_mpz_t(), static_cast<unsigned long>(d))) continue;
      for (long x : {d, -d}) {
        int mult = 0;
        while (poly.size() > 1 && is_zero(horner(poly, F(x)))) {
          poly = deflate(poly, F(x));
          ++mult;
        }
        if (mult) out.emplace_back(F(x) / F(Rational(den, 1)), mult);
      }
    }
    if (poly.size() != 1) return std::nullopt;
    std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    return out;
  }
  const long b = bound.fits_slong_p() ? bound.get_si() : kCandidateBudget;
  if ((2 * b + 1) * (2 * b + 1) > kCandidateBudget) return std::nullopt;
  // Eigenvalues of an integral matrix lying in F are integral.
  for (const F& x : integer_candidates(b, static_cast<const F*>(nullptr))) {
    int mult = 0;
    while (poly.size() > 1 && is_zero(horner(poly, x))) {
      poly = deflate(poly, x);
      ++mult;
    }
    if (mult) out.emplace_back(x / F(Rational(den, 1)), mult);
    if (poly.size() == 1) break;
  }
  if (poly.size() != 1) return std::nullopt;
  return out;
}

template <class F>
std::vector<RestrictedWeight<F>> decompose_by_coordinates(const Subalgebra<F>& m, const std::vector<DenseVec<F>>& w) {
  std::map<std::vector<F>, EchelonBasis<F>> spaces;
  const int n = m.ambient->dim();
  for (const auto& v : m.basis) {
    std::map<std::vector<F>, SparseVec<F>> parts;
    for (const auto& e : v) parts[w[e.first]].push_back(e);
    for (auto& [mu, part] : parts) {
      auto it = spaces.try_emplace(mu, EchelonBasis<F>(n)).first;
      it->second.insert(part);
    }
  }
  std::vector<RestrictedWeight<F>> out;
  for (auto& [mu, eb] : spaces) {
    RestrictedWeight<F> rw;
    rw.values = mu;
    rw.multiplicity = eb.dim();
    rw.basis = eb.sorted_rows();
    out.push_back(std::move(rw));
  }
  return out;
}

template <class F>
std::vector<RestrictedWeight<F>> decompose_by_eigenvalues(const Subalgebra<F>& m, const Subalgebra<F>& t) {
  const Ambient<F>& g = *m.ambient;
  const int d = m.dim();
  struct Piece {
    std::vector<F> values;
    Matrix<F> basis;  // d x w, columns in m-coordinates
  };
  std::vector<Piece> pieces{{{}, Matrix<F>::identity(d)}};
  for (const auto& tk : t.basis) {
    Matrix<F> a(d, d);
    for (int b = 0; b < d; ++b) {
      auto c = m.coords(bracket(g, tk, m.basis[b]));
      for (int i = 0; i < d; ++i) a(i, b) = c[i];
    }
    std::vector<Piece> next;
    for (const auto& pc : pieces) {
      const int w = pc.basis.cols();
      Matrix<F> ab = a * pc.basis;
      // Solve basis * R = a * basis for R (w x w).
      Matrix<F> aug(d, 2 * w);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < w; ++j) {
          aug(i, j) = pc.basis(i, j);
          aug(i, w + j) = ab(i, j);
        }
      auto rr = mat_rref(aug);
      Matrix<F> r(w, w);
      for (int i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] >= w) throw std::runtime_error("subspace is not ad(t)-stable");
        for (int j = 0; j < w; ++j) r(rr.pivots[i], j) = rr.rref(i, w + j);
      }
      auto ev = field_eigenvalues(r);
      if (!ev) throw std::runtime_error("eigenvalue outside the base field");
      int total = 0;
      for (const auto& [lambda, mult] : *ev) {
        auto ns = nullspace(r - Matrix<F>::identity(w).scaled(lambda));
        if (static_cast<int>(ns.size()) != mult) throw std::runtime_error("torus does not act semisimply");
        total += mult;
        Matrix<F> nb(w, mult);
        for (int j = 0; j < mult; ++j)
          for (int i = 0; i < w; ++i) nb(i, j) = ns[j][i];
        Piece np{pc.values, pc.basis * nb};
        np.values.push_back(lambda);
        next.push_back(std::move(np));
      }
      if (total != w) throw std::runtime_error("eigenvalue outside the base field");
    }
    pieces = std::move(next);
  }
  std::map<std::vector<F>, RestrictedWeight<F>> byval;
  for (const auto& pc : pieces) {
    EchelonBasis<F> eb(g.dim());
    for (int j = 0; j < pc.basis.cols(); ++j) {
      DenseVec<F> c(d);
      for (int i = 0; i < d; ++i) c[i] = pc.basis(i, j);
      eb.insert(m.combine(c));
    }
    RestrictedWeight<F> rw;
    rw.values = pc.values;
    rw.multiplicity = eb.dim();
    rw.basis = eb.sorted_rows();
    byval[pc.values] = std::move(rw);
  }
  std::vector<RestrictedWeight<F>> out;
  for (auto& [k, v] : byval) out.push_back(std::move(v));
  return out;
}

// Lexicographic key used for positivity: a seeded generic functional first, then coordinates.
template <class F>
std::vector<Rational> order_key(const std::vector<F>& mu, const std::vector<F>& functional) {
  F s(0);
  for (std::size_t k = 0; k < mu.size(); ++k) s += functional[k] * mu[k];
  std::vector<Rational> key = reals(s);
  for (const auto& x : mu)
    for (const auto& r : reals(x)) key.push_back(r);
  return key;
}

bool key_positive(const std::vector<Rational>& key) {
  for (const auto& x : key)
    if (!x.is_zero()) return x.sign() > 0;
  return false;
}

template <class F>
F pair_with(const std::vector<F>& mu, const DenseVec<F>& hcoords) {
  F s(0);
  for (std::size_t k = 0; k < mu.size(); ++k) s += mu[k] * hcoords[k];
  return s;
}

template <class F>
Rational to_rational(const F& x);
template <>
Rational to_rational(const Rational& x) { return x; }
template <>
Rational to_rational(const GaussRational& x) {
  if (!x.is_real()) throw std::runtime_error("non-real coroot pairing");
  return x.re();
}

}  // namespace

template <class F>
Subalgebra<F> fixed_subalgebra(const Ambient<F>& g, const std::vector<Automorphism<F>>& autos,
                               const Subalgebra<F>* within) {
  Subalgebra<F> tmp;
  const auto& W = basis_of(g, within, tmp);
  if (autos.empty()) return within ? *within : tmp;
  const int n = g.dim();
  std::vector<SparseVec<F>> cols(W.size());
  for (std::size_t b = 0; b < W.size(); ++b)
    for (std::size_t i = 0; i < autos.size(); ++i)
      append_block(cols[b], autos[i].apply(W[b]) - W[b], static_cast<int>(i) * n);
  return span_of_relations(g, W, cols, n * static_cast<int>(autos.size()));
}

template <class F>
Subalgebra<F> eigenspace(const Ambient<F>& g, const Automorphism<F>& phi, const F& lambda, const Subalgebra<F>* within) {
  Subalgebra<F> tmp;
  const auto& W = basis_of(g, within, tmp);
  std::vector<SparseVec<F>> cols(W.size());
  for (std::size_t b = 0; b < W.size(); ++b) cols[b] = axpy(phi.apply(W[b]), -lambda, W[b]);
  return span_of_relations(g, W, cols, g.dim());
}

template <class F>
Subalgebra<F> centralizer(const Ambient<F>& g, const std::vector<SparseVec<F>>& of, const Subalgebra<F>* within) {
  Subalgebra<F> tmp;
  const auto& W = basis_of(g, within, tmp);
  if (of.empty()) return within ? *within : tmp;
  const int n = g.dim();
  std::vector<SparseVec<F>> cols(W.size());
  for (std::size_t b = 0; b < W.size(); ++b)
    for (std::size_t a = 0; a < of.size(); ++a)
      append_block(cols[b], bracket(g, W[b], of[a]), static_cast<int>(a) * n);
  return span_of_relations(g, W, cols, n * static_cast<int>(of.size()));
}

template <class F>
bool is_abelian(const Subalgebra<F>& s) {
  for (int a = 0; a < s.dim(); ++a)
    for (int b = a + 1; b < s.dim(); ++b)
      if (!bracket(*s.ambient, s.basis[a], s.basis[b]).empty()) return false;
  return true;
}

template <class F>
Subalgebra<F> intersect(const Subalgebra<F>& a, const Subalgebra<F>& b) {
  auto eb = b.echelon();
  std::vector<SparseVec<F>> cols;
  for (const auto& v : a.basis) cols.push_back(eb.reduce(v));
  return span_of_relations(*a.ambient, a.basis, cols, a.ambient->dim());
}

template <class F>
std::vector<RestrictedWeight<F>> weight_decomposition(const Subalgebra<F>& module, const Subalgebra<F>& t) {
  if (auto w = coordinate_weights(t)) return decompose_by_coordinates(module, *w);
  return decompose_by_eigenvalues(module, t);
}

namespace {

// exp(ad e) x for ad-nilpotent e.
template <class F>
SparseVec<F> exp_ad_apply(const Ambient<F>& g, const SparseVec<F>& e, const SparseVec<F>& x) {
  Accumulator<F> acc(g.dim());
  acc.add_scaled(x, F(1));
  SparseVec<F> term = x;
  for (long k = 1; k <= g.dim(); ++k) {
    term = scaled(bracket(g, e, term), F(1) / F(k));
    if (term.empty()) return acc.take();
    acc.add_scaled(term, F(1));
  }
  throw std::logic_error("exp_ad_apply: element is not ad-nilpotent");
}

// A seeded conjugate exp(ad e) t of the split Cartan t, with e a random combination of the
// root vectors that are positive for a random functional.
template <class F>
Subalgebra<F> seeded_conjugate(const Subalgebra<F>& s, const Subalgebra<F>& t, std::mt19937_64& rng, long bound) {
  const Ambient<F>& g = *s.ambient;
  auto ws = weight_decomposition(s, t);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<F> f(t.dim());
    for (auto& x : f) x = F(static_cast<long>(rng() % 1999) - 999);
    SparseVec<F> e;
    std::vector<const SparseVec<F>*> pos;
    bool generic = true;
    for (const auto& rw : ws) {
      bool zero = std::all_of(rw.values.begin(), rw.values.end(), [](const F& x) { return is_zero(x); });
      if (zero) continue;
      F v(0);
      for (std::size_t i = 0; i < f.size(); ++i) v += f[i] * rw.values[i];
      const auto re = reals(v);
      const int sign = re[0].sign() ? re[0].sign() : re.size() > 1 ? re[1].sign() : 0;
      if (sign == 0) {
        generic = false;
        break;
      }
      if (sign < 0) continue;
      for (const auto& b : rw.basis) pos.push_back(&b);
    }
    if (!generic || pos.empty()) continue;
    // A couple of root vectors move t while keeping the conjugated basis small.
    const int picks = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < picks; ++k) {
      long c = static_cast<long>(rng() % (2 * bound)) - bound;
      if (c >= 0) ++c;
      e = axpy(e, F(c), *pos[rng() % pos.size()]);
    }
    if (e.empty()) continue;
    std::vector<SparseVec<F>> img;
    for (const auto& h : t.basis) img.push_back(exp_ad_apply(g, e, h));
    return Subalgebra<F>::from_span(g, img);
  }
  return t;
}

}  // namespace

template <class F>
CartanResult<F> cartan_of(const Subalgebra<F>& s, const CartanOptions& opt) {
  const Ambient<F>& g = *s.ambient;
  auto zero_dim = [&](const Subalgebra<F>& t) {
    for (const auto& rw : weight_decomposition(s, t))
      if (std::all_of(rw.values.begin(), rw.values.end(), [](const F& x) { return is_zero(x); }))
        return rw.multiplicity;
    return 0;
  };
  CartanResult<F> res;
  if (s.dim() == 0 || is_abelian(s)) {
    res.t = s;
    return res;
  }
  std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ULL + 17);
  auto finish = [&](Subalgebra<F> t) {
    // Seed 0 keeps the Cartan found; other seeds move it to a random conjugate.
    res.t = opt.seed ? seeded_conjugate(s, t, rng, opt.coefficient_bound) : std::move(t);
    return res;
  };
  if (opt.use_hint && g.hint_dim() > 0) {
    auto hs = Subalgebra<F>::from_span(g, hint_elements(g));
    Subalgebra<F> t = intersect(hs, s);
    if (t.dim() > 0 && zero_dim(t) == t.dim()) {
      res.from_hint = true;
      return finish(std::move(t));
    }
  }
  // Centralizers of random elements. Over Q these are usually non-split Cartans, which the
  // weight decomposition rejects, so this route only serves small or split cases.
  const long span = 2L * opt.coefficient_bound + 1;
  for (int attempt = 1; attempt <= opt.max_retries; ++attempt) {
    DenseVec<F> c(s.dim());
    for (auto& x : c) x = F(static_cast<long>(rng() % span) - opt.coefficient_bound);
    SparseVec<F> x = s.combine(c);
    if (x.empty()) continue;
    Subalgebra<F> t = centralizer(g, std::vector<SparseVec<F>>{x}, &s);
    if (!is_abelian(t)) continue;
    try {
      if (zero_dim(t) != t.dim()) continue;
    } catch (const std::runtime_error&) {
      continue;
    }
    res.attempts = attempt;
    return finish(std::move(t));
  }
  throw std::runtime_error("no Cartan subalgebra found within " + std::to_string(opt.max_retries) + " attempts");
}

template <class F>
RootData<F> analyze(const Subalgebra<F>& s, const CartanOptions& opt) {
  RootData<F> rd;
  rd.t = cartan_of(s, opt).t;
  const int l = rd.t.dim();
  auto ws = weight_decomposition(s, rd.t);
  int zero_mult = 0;
  for (auto& rw : ws) {
    bool zero = std::all_of(rw.values.begin(), rw.values.end(), [](const F& x) { return is_zero(x); });
    if (zero) {
      zero_mult = rw.multiplicity;
      continue;
    }
    if (rw.multiplicity != 1) throw std::runtime_error("root space of dimension > 1: not a Cartan subalgebra");
    rd.roots.push_back(rw.values);
    rd.root_vectors.push_back(rw.basis.front());
  }
  if (zero_mult != l) throw std::runtime_error("zero weight space differs from the Cartan subalgebra");

  const int R = static_cast<int>(rd.roots.size());
  std::map<std::vector<F>, int> index;
  for (int k = 0; k < R; ++k) index[rd.roots[k]] = k;
  auto add = [&](const std::vector<F>& a, const std::vector<F>& b, int sb) {
    std::vector<F> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sb > 0 ? a[i] + b[i] : a[i] - b[i];
    return r;
  };
  auto find = [&](const std::vector<F>& v) {
    auto it = index.find(v);
    return it == index.end() ? -1 : it->second;
  };

  // Center: dim t minus the rank of the root functionals.
  if (R > 0) {
    Matrix<F> m(R, l);
    for (int k = 0; k < R; ++k)
      for (int j = 0; j < l; ++j) m(k, j) = rd.roots[k][j];
    rd.center_dim = l - rank(m);
  } else {
    rd.center_dim = l;
  }

  // Simple ideals: connected components of alpha ~ beta when alpha +- beta is a root.
  std::vector<int> parent(R);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root_of = [&](int x) { return parent[x] == x ? x : parent[x] = root_of(parent[x]); };
  auto unite = [&](int a, int b) { parent[root_of(a)] = root_of(b); };
  std::vector<int> negidx(R);
  for (int a = 0; a < R; ++a) {
    std::vector<F> n = rd.roots[a];
    for (auto& x : n) x = -x;
    negidx[a] = find(n);
    if (negidx[a] < 0) throw std::runtime_error("weights not symmetric: not a reductive subalgebra");
    unite(a, negidx[a]);
    for (int b = a + 1; b < R; ++b)
      if (find(add(rd.roots[a], rd.roots[b], 1)) >= 0 || find(add(rd.roots[a], rd.roots[b], -1)) >= 0) unite(a, b);
  }
  std::map<int, int> comp_id;
  rd.component.resize(R);
  for (int a = 0; a < R; ++a) {
    int r = root_of(a);
    auto it = comp_id.find(r);
    if (it == comp_id.end()) it = comp_id.emplace(r, static_cast<int>(comp_id.size())).first;
    rd.component[a] = it->second;
  }
  // Component numbering by first appearance in sorted weight order is deterministic.

  std::mt19937_64 rng(opt.seed * 0xD1B54A32D192ED03ULL + 5);
  std::vector<F> functional(l);
  for (auto& x : functional) x = F(static_cast<long>(rng() % 97) + 1);
  rd.positive.resize(R);
  for (int a = 0; a < R; ++a) rd.positive[a] = key_positive(order_key(rd.roots[a], functional));

  const int C = static_cast<int>(comp_id.size());
  std::vector<std::vector<int>> simples(C);
  for (int a = 0; a < R; ++a) {
    if (!rd.positive[a]) continue;
    bool decomposable = false;
    for (int b = 0; b < R && !decomposable; ++b) {
      if (!rd.positive[b] || b == a) continue;
      int d = find(add(rd.roots[a], rd.roots[b], -1));
      decomposable = d >= 0 && rd.positive[d];
    }
    if (!decomposable) simples[rd.component[a]].push_back(a);
  }
  std::vector<SimpleType> types;
  for (int c = 0; c < C; ++c) {
    const auto& S = simples[c];
    const int r = static_cast<int>(S.size());
    IntMatrix A(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (i == j) {
          A[i][j] = 2;
          continue;
        }
        // alpha_j-string through alpha_i starts at alpha_i for simple roots: A_ij = -q.
        int q = 0;
        std::vector<F> v = rd.roots[S[i]];
        while (true) {
          v = add(v, rd.roots[S[j]], 1);
          if (find(v) < 0) break;
          ++q;
        }
        A[i][j] = -q;
      }
    auto st = classify_cartan(A);
    if (!st) throw std::logic_error("unclassifiable Cartan matrix in identify");
    rd.cartan_blocks.push_back(A);
    rd.types.push_back(*st);
    types.push_back(*st);
    rd.simple.insert(rd.simple.end(), S.begin(), S.end());
  }
  rd.type = IsoType::make(rd.center_dim, types);
  if (rd.type.dim() != s.dim()) throw std::logic_error("identified type has wrong dimension");
  return rd;
}

template <class F>
IsotropyResult isotropy_weights(const Ambient<F>& g, const Automorphism<F>& theta, std::uint64_t seed) {
  IsotropyResult res;
  Subalgebra<F> k = fixed_subalgebra(g, std::vector<Automorphism<F>>{theta});
  Subalgebra<F> p = eigenspace(g, theta, F(-1));
  res.dim_k = k.dim();
  res.dim_p = p.dim();
  CartanOptions opt;
  opt.seed = seed;
  RootData<F> rd = analyze(k, opt);
  res.k_type = rd.type;

  auto peb = p.echelon();
  res.bracket_ok = true;
  for (const auto& x : k.basis)
    for (const auto& y : p.basis)
      if (!peb.contains(bracket(g, x, y))) res.bracket_ok = false;

  const int R = static_cast<int>(rd.roots.size());
  std::map<std::vector<F>, int> index;
  for (int a = 0; a < R; ++a) index[rd.roots[a]] = a;
  auto neg_of = [&](int a) {
    std::vector<F> n = rd.roots[a];
    for (auto& x : n) x = -x;
    return index.at(n);
  };
  // h_alpha = [X_alpha, X_-alpha] in t-coordinates.
  auto coroot = [&](int a) { return rd.t.coords(bracket(g, rd.root_vectors[a], rd.root_vectors[neg_of(a)])); };
  auto pairing = [&](const std::vector<F>& mu, int a) {
    DenseVec<F> h = coroot(a);
    return to_rational(F(2) * pair_with(mu, h) / pair_with(rd.roots[a], h));
  };

  // Highest weight vectors: killed by every simple root vector of k.
  std::vector<SparseVec<F>> cols(p.basis.size());
  for (std::size_t b = 0; b < p.basis.size(); ++b)
    for (std::size_t i = 0; i < rd.simple.size(); ++i)
      append_block(cols[b], bracket(g, rd.root_vectors[rd.simple[i]], p.basis[b]), static_cast<int>(i) * g.dim());
  Subalgebra<F> hw = span_of_relations(g, p.basis, cols, g.dim() * std::max<int>(1, static_cast<int>(rd.simple.size())));
  auto hws = weight_decomposition(hw, rd.t);

  std::vector<F> rho(rd.t.dim());
  for (int a = 0; a < R; ++a)
    if (rd.positive[a])
      for (int j = 0; j < rd.t.dim(); ++j) rho[j] += rd.roots[a][j] / F(2);

  res.all_dominant = true;
  for (const auto& rw : hws) {
    HighestWeight h;
    h.multiplicity = rw.multiplicity;
    for (int i : rd.simple) {
      Rational v = pairing(rw.values, i);
      if (!v.is_integer() || v.sign() < 0) res.all_dominant = false;
      h.labels.push_back(v.is_integer() ? static_cast<int>(v.to_long()) : -1000);
    }
    Rational dimv(1);
    std::vector<F> lr(rd.t.dim());
    for (int j = 0; j < rd.t.dim(); ++j) lr[j] = rw.values[j] + rho[j];
    for (int a = 0; a < R; ++a)
      if (rd.positive[a]) dimv *= pairing(lr, a) / pairing(rho, a);
    h.weyl_dim = dimv.is_integer() ? dimv.to_long() : -1;
    res.weyl_dim_sum += h.weyl_dim * h.multiplicity;
    res.highest.push_back(h);
  }
  return res;
}

template <class F>
std::vector<int> character_dims(const Ambient<F>& g, const Automorphism<F>& a, const Automorphism<F>& b,
                                const Subalgebra<F>* within) {
  Subalgebra<F> tmp;
  const auto& W = basis_of(g, within, tmp);
  std::vector<int> out;
  const int n = g.dim();
  for (int sa : {1, -1})
    for (int sb : {1, -1}) {
      std::vector<SparseVec<F>> cols(W.size());
      for (std::size_t k = 0; k < W.size(); ++k) {
        append_block(cols[k], axpy(a.apply(W[k]), F(-sa), W[k]), 0);
        append_block(cols[k], axpy(b.apply(W[k]), F(-sb), W[k]), n);
      }
      out.push_back(span_of_relations(g, W, cols, 2 * n).dim());
    }
  return out;
}

#define KLEIN_INSTANTIATE(F)                                                                                      \
  template Subalgebra<F> fixed_subalgebra(const Ambient<F>&, const std::vector<Automorphism<F>>&,                   \
                                          const Subalgebra<F>*);                                                    \
  template Subalgebra<F> eigenspace(const Ambient<F>&, const Automorphism<F>&, const F&, const Subalgebra<F>*);    \
  template Subalgebra<F> centralizer(const Ambient<F>&, const std::vector<SparseVec<F>>&, const Subalgebra<F>*);   \
  template bool is_abelian(const Subalgebra<F>&);                                                                  \
  template Subalgebra<F> intersect(const Subalgebra<F>&, const Subalgebra<F>&);                                    \
  template std::vector<RestrictedWeight<F>> weight_decomposition(const Subalgebra<F>&, const Subalgebra<F>&);       \
  template CartanResult<F> cartan_of(const Subalgebra<F>&, const CartanOptions&);                                  \
  template RootData<F> analyze(const Subalgebra<F>&, const CartanOptions&);                                        \
  template IsotropyResult isotropy_weights(const Ambient<F>&, const Automorphism<F>&, std::uint64_t);              \
  template std::vector<int> character_dims(const Ambient<F>&, const Automorphism<F>&, const Automorphism<F>&,      \
                                           const Subalgebra<F>*);

KLEIN_INSTANTIATE(Rational)
KLEIN_INSTANTIATE(GaussRational)

}  // namespace klein

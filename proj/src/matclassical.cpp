#include "klein/matclassical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace klein {

GlAmbient::GlAmbient(int n) : n_(n), weights_(static_cast<std::size_t>(n) * n, std::vector<Gauss>(n)) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      weights_[a * n + b][a] += Gauss(1);
      weights_[a * n + b][b] -= Gauss(1);
    }
}

// [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
void GlAmbient::add_bracket_basis(int i, int j, const Gauss& coef, Accumulator<Gauss>& acc) const {
  const int a = i / n_, b = i % n_, c = j / n_, d = j % n_;
  if (b == c) acc.add(a * n_ + d, coef);
  if (d == a) acc.add(c * n_ + b, -coef);
}

std::string GlAmbient::basis_label(int i) const {
  return "E(" + std::to_string(i / n_ + 1) + "," + std::to_string(i % n_ + 1) + ")";
}

SparseVec<Gauss> GlAmbient::vec(const GMatrix& x) const {
  SparseVec<Gauss> v;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (!is_zero(x(a, b))) v.emplace_back(a * n_ + b, x(a, b));
  return v;
}

GMatrix GlAmbient::mat(const SparseVec<Gauss>& v) const {
  GMatrix x(n_, n_);
  for (const auto& [i, c] : v) x(i / n_, i % n_) = c;
  return x;
}

std::string MatrixAlgebra::name() const {
  const char* f = family == ClassicalFamily::SL ? "sl" : family == ClassicalFamily::SO ? "so" : "sp";
  return std::string(f) + "(" + std::to_string(n) + ")";
}

std::string MatrixAlgebra::compact_name() const {
  switch (family) {
    case ClassicalFamily::SL: return "su(" + std::to_string(n) + ")";
    case ClassicalFamily::SO: return "so(" + std::to_string(n) + ")";
    default: return "sp(" + std::to_string(n / 2) + ")";
  }
}

int MatrixAlgebra::rank() const {
  switch (family) {
    case ClassicalFamily::SL: return n - 1;
    case ClassicalFamily::SO: return n / 2;
    default: return n / 2;
  }
}

std::vector<GMatrix> MatrixAlgebra::basis_matrices() const {
  std::vector<GMatrix> out;
  for (const auto& b : alg.basis) out.push_back(gl->mat(b));
  return out;
}

ClassicalFamily parse_classical_family(const std::string& s) {
  if (s == "sl" || s == "su") return ClassicalFamily::SL;
  if (s == "so") return ClassicalFamily::SO;
  if (s == "sp") return ClassicalFamily::SP;
  throw std::invalid_argument("unknown classical family '" + s + "'");
}

namespace mats {

GMatrix identity(int n) { return GMatrix::identity(n); }

GMatrix J(int m) {
  GMatrix x(2 * m, 2 * m);
  for (int k = 0; k < m; ++k) {
    x(k, m + k) = Gauss(1);
    x(m + k, k) = Gauss(-1);
  }
  return x;
}

GMatrix Ipq(int p, int q) {
  GMatrix x(p + q, p + q);
  for (int k = 0; k < p + q; ++k) x(k, k) = Gauss(k < p ? -1 : 1);
  return x;
}

GMatrix Ipq_prime(int p, int q) {
  const int n = p + q;
  GMatrix x(2 * n, 2 * n);
  for (int k = 0; k < 2 * n; ++k) x(k, k) = Gauss((k % n) < p ? -1 : 1);
  return x;
}

GMatrix Jpq(int p, int q) {
  GMatrix x(2 * (p + q), 2 * (p + q));
  for (int k = 0; k < p; ++k) {
    x(k, p + k) = Gauss(1);
    x(p + k, k) = Gauss(-1);
  }
  const int o = 2 * p;
  for (int k = 0; k < q; ++k) {
    x(o + k, o + q + k) = Gauss(1);
    x(o + q + k, o + k) = Gauss(-1);
  }
  return x;
}

GMatrix K(int p) {
  GMatrix x(4 * p, 4 * p);
  for (int k = 0; k < p; ++k) {
    x(k, 3 * p + k) = Gauss(1);
    x(p + k, 2 * p + k) = Gauss(-1);
    x(2 * p + k, p + k) = Gauss(1);
    x(3 * p + k, k) = Gauss(-1);
  }
  return x;
}

GMatrix sign4(int p, int q, int r, int s, int which) {
  const int n = p + q + r + s;
  GMatrix x(n, n);
  for (int k = 0; k < n; ++k) {
    int block = k < p ? 0 : k < p + q ? 1 : k < p + q + r ? 2 : 3;
    bool neg = which == 0 ? block <= 1 : (block == 0 || block == 2);
    x(k, k) = Gauss(neg ? -1 : 1);
  }
  return x;
}

GMatrix quat_real(const GMatrix& d) {
  const int n = d.rows();
  GMatrix x(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      x(i, j) = d(i, j);
      x(n + i, n + j) = d(i, j);
    }
  return x;
}

GMatrix quat_i(int n) {
  GMatrix x(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    x(k, k) = Gauss::i();
    x(n + k, n + k) = -Gauss::i();
  }
  return x;
}

GMatrix quat_j(int n) { return J(n); }

GMatrix quat_jJ(int p) {
  GMatrix j = J(p);
  GMatrix x(4 * p, 4 * p);
  for (int a = 0; a < 2 * p; ++a)
    for (int b = 0; b < 2 * p; ++b) {
      x(a, 2 * p + b) = j(a, b);
      x(2 * p + a, b) = -j(a, b);
    }
  return x;
}

}  // namespace mats

namespace {

GMatrix frame_matrix(int n, const FramePairs& pairs) {
  GMatrix p = GMatrix::identity(n);
  std::vector<char> used(n, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b || used[a] || used[b])
      throw std::invalid_argument("invalid frame pairing");
    used[a] = used[b] = 1;
    p(a, b) = Gauss(1);
    p(b, a) = -Gauss::i();
    p(b, b) = Gauss::i();
  }
  return p;
}

}  // namespace

MatrixAlgebra build_matrix_algebra(ClassicalFamily family, int n, const FramePairs& pairs) {
  if (n < 2) throw std::invalid_argument("matrix size must be at least 2");
  if (family == ClassicalFamily::SP && n % 2) throw std::invalid_argument("sp needs an even matrix size");
  if (n > 40) throw std::invalid_argument("matrix size too large");
  MatrixAlgebra m;
  m.family = family;
  m.n = n;
  m.gl = std::make_shared<GlAmbient>(n);
  m.frame = frame_matrix(n, pairs);
  m.frame_inv = inverse(m.frame);
  std::vector<SparseVec<Gauss>> rows;
  if (family == ClassicalFamily::SL) {
    SparseVec<Gauss> tr;
    for (int a = 0; a < n; ++a) tr.emplace_back(a * n + a, Gauss(1));
    rows.push_back(tr);
  } else {
    GMatrix g = family == ClassicalFamily::SO ? GMatrix::identity(n) : mats::J(n / 2);
    GMatrix gp = m.frame.transpose() * g * m.frame;
    // (X^T G + G X)_ij = sum_k X_ki G_kj + G_ik X_kj
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Accumulator<Gauss> acc(n * n);
        for (int k = 0; k < n; ++k) {
          if (!is_zero(gp(k, j))) acc.add(k * n + i, gp(k, j));
          if (!is_zero(gp(i, k))) acc.add(k * n + j, gp(i, k));
        }
        auto r = acc.take();
        if (!r.empty()) rows.push_back(std::move(r));
      }
  }
  auto ns = sparse_nullspace(rows, n * n);
  m.alg = Subalgebra<Gauss>::from_span(*m.gl, ns);
  return m;
}

GAut classical_involution(const MatrixAlgebra& alg, const ClassicalInvolution& inv) {
  const int n = alg.n;
  if (inv.conjugator.rows() != n || inv.conjugator.cols() != n)
    throw std::invalid_argument(inv.name + ": conjugator has the wrong size for " + alg.name());
  GAut phi;
  phi.word = {inv.name};
  phi.cols.resize(static_cast<std::size_t>(n) * n);
  bool outer = false;
  if (inv.kind == InvolutionKind::Adj) {
    GMatrix ap = alg.frame_inv * inv.conjugator * alg.frame;
    GMatrix api = inverse(ap);
    // A' E_ab A'^-1 = A'[:,a] A'^-1[b,:]
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        SparseVec<Gauss> col;
        for (int i = 0; i < n; ++i) {
          if (is_zero(ap(i, a))) continue;
          for (int j = 0; j < n; ++j)
            if (!is_zero(api(b, j))) col.emplace_back(i * n + j, ap(i, a) * api(b, j));
        }
        phi.cols[a * n + b] = std::move(col);
      }
  } else {
    GMatrix app = alg.frame_inv * inv.conjugator * inverse(alg.frame).transpose();
    GMatrix appi = inverse(app);
    // -A'' E_ba A''^-1 = -A''[:,b] A''^-1[a,:]
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        SparseVec<Gauss> col;
        for (int i = 0; i < n; ++i) {
          if (is_zero(app(i, b))) continue;
          for (int j = 0; j < n; ++j)
            if (!is_zero(appi(a, j))) col.emplace_back(i * n + j, -(app(i, b) * appi(a, j)));
        }
        phi.cols[a * n + b] = std::move(col);
      }
    outer = alg.family == ClassicalFamily::SL && n >= 3;
  }
  if (alg.family == ClassicalFamily::SO && n % 2 == 0) {
    // A^T A = c I on so(n); Ad(A) is outer iff det A = -c^{n/2}.
    const GMatrix& a = inv.conjugator;
    GMatrix ata = a.transpose() * a;
    Gauss c = ata(0, 0);
    Gauss cpow(1);
    for (int k = 0; k < n / 2; ++k) cpow *= c;
    outer = determinant(a) == -cpow;
  }
  phi.outer = outer ? IntVec{1, 0} : IntVec{0, 1};
  auto eb = alg.alg.echelon();
  for (const auto& v : alg.alg.basis)
    if (!eb.contains(phi.apply(v)))
      throw std::invalid_argument(inv.name + " does not normalize " + alg.name());
  if (!acts_trivially(compose(phi, phi), &alg.alg)) throw std::invalid_argument(inv.name + " is not an involution");
  return phi;
}

namespace {

ClassicalInvolution adj(GMatrix a, std::string name) { return {InvolutionKind::Adj, std::move(a), std::move(name)}; }
ClassicalInvolution negtrans(GMatrix a, std::string name) {
  return {InvolutionKind::NegTrans, std::move(a), std::move(name)};
}

FramePairs pairs_within(int start, int len) {
  FramePairs f;
  for (int k = 0; k + 1 < len; k += 2) f.emplace_back(start + k, start + k + 1);
  return f;
}

FramePairs concat(FramePairs a, const FramePairs& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int param(const std::vector<int>& v, std::size_t i) { return i < v.size() ? v[i] : 0; }

struct Recipe {
  ClassicalFamily family;
  int matrix_size;
  FramePairs frame;
  ClassicalInvolution a, b;
};

Recipe recipe_for(const Table3Row& row, const std::vector<int>& x) {
  const int p = param(x, 0), q = param(x, 1), r = param(x, 2), s = param(x, 3);
  const std::string& id = row.id;
  if (id == "su.1")
    return {row.family, p + q, concat(pairs_within(0, p), pairs_within(p, q)), negtrans(mats::identity(p + q), "tau"),
            adj(mats::Ipq(p, q), "I_{p,q}")};
  if (id == "su.2") {
    FramePairs f;
    for (int k = 0; k < p; ++k) f.emplace_back(k, p + k);
    return {row.family, 2 * p, f, negtrans(mats::identity(2 * p), "tau"), adj(mats::J(p), "J_p")};
  }
  if (id == "su.3")
    return {row.family, 2 * (p + q), {}, negtrans(mats::J(p + q), "tau J_{p+q}"), adj(mats::Ipq_prime(p, q), "I'_{p,q}")};
  if (id == "su.4" || id == "so.1")
    return {row.family,
            p + q + r + s,
            id == "so.1" ? concat(concat(pairs_within(0, p), pairs_within(p, q)),
                                  concat(pairs_within(p + q, r), pairs_within(p + q + r, s)))
                         : FramePairs{},
            adj(mats::sign4(p, q, r, s, 0), "diag(-I_p,-I_q,I_r,I_s)"),
            adj(mats::sign4(p, q, r, s, 1), "diag(-I_p,I_q,-I_r,I_s)")};
  if (id == "su.5") return {row.family, 2 * p, {}, adj(mats::Ipq(p, p), "I_{p,p}"), adj(mats::J(p), "J_p")};
  if (id == "so.2")
    return {row.family, 2 * p, concat(pairs_within(0, p), pairs_within(p, p)), adj(mats::J(p), "J_p"),
            adj(mats::Ipq(p, p), "I_{p,p}")};
  if (id == "so.3") {
    FramePairs f;
    for (int k = 0; k < p + q; ++k) f.emplace_back(k, p + q + k);
    return {row.family, 2 * (p + q), f, adj(mats::J(p + q), "J_{p+q}"), adj(mats::Ipq_prime(p, q), "I'_{p,q}")};
  }
  if (id == "so.4") {
    FramePairs f;
    for (int k = 0; k < p; ++k) {
      f.emplace_back(k, p + k);
      f.emplace_back(2 * p + k, 3 * p + k);
    }
    return {row.family, 4 * p, f, adj(mats::J(2 * p), "J_{2p}"), adj(mats::K(p), "K_p")};
  }
  if (id == "sp.1")
    return {row.family, 2 * p, concat(pairs_within(0, p), pairs_within(p, p)), adj(mats::quat_i(p), "iI"),
            adj(mats::quat_j(p), "jI")};
  if (id == "sp.2")
    return {row.family, 2 * (p + q), {}, adj(mats::quat_i(p + q), "iI"),
            adj(mats::quat_real(mats::Ipq(p, q)), "I_{p,q}")};
  if (id == "sp.3") return {row.family, 4 * p, {}, adj(mats::quat_i(2 * p), "iI"), adj(mats::quat_jJ(p), "jJ_p")};
  if (id == "sp.4")
    return {row.family, 2 * (p + q + r + s), {}, adj(mats::quat_real(mats::sign4(p, q, r, s, 0)), "diag(-I_p,-I_q,I_r,I_s)"),
            adj(mats::quat_real(mats::sign4(p, q, r, s, 1)), "diag(-I_p,I_q,-I_r,I_s)")};
  throw std::invalid_argument("unknown Table 3 row '" + id + "'");
}

bool simple_size(ClassicalFamily f, int n) {
  switch (f) {
    case ClassicalFamily::SL: return n >= 2;
    case ClassicalFamily::SO: return n == 3 || n >= 5;
    default: return n >= 1;
  }
}

int rank_of(ClassicalFamily f, int n) { return f == ClassicalFamily::SL ? n - 1 : f == ClassicalFamily::SO ? n / 2 : n; }

}  // namespace

const std::vector<Table3Row>& table3_rows() {
  using F = ClassicalFamily;
  static const std::vector<Table3Row> rows = {
      {"su.1", F::SL, "su(p+q)", "Gamma_{p,q}", {"tau", "I_{p,q}"}, "pq"},
      {"su.2", F::SL, "su(2p)", "Gamma_p", {"tau", "J_p"}, "p"},
      {"su.3", F::SL, "su(2p+2q)", "Gamma'_{p,q}", {"tau J_{p+q}", "I'_{p,q}"}, "pq"},
      {"su.4", F::SL, "su(p+q+r+s)", "Gamma_{p,q,r,s}", {"diag(-I_p,-I_q,I_r,I_s)", "diag(-I_p,I_q,-I_r,I_s)"}, "pqrs"},
      {"su.5", F::SL, "su(2p)", "Gamma_p", {"I_{p,p}", "J_p"}, "p"},
      {"so.1", F::SO, "so(p+q+r+s)", "Gamma_{p,q,r,s}", {"diag(-I_p,-I_q,I_r,I_s)", "diag(-I_p,I_q,-I_r,I_s)"}, "pqrs"},
      {"so.2", F::SO, "so(2p)", "Gamma_p", {"J_p", "I_{p,p}"}, "p"},
      {"so.3", F::SO, "so(2p+2q)", "Gamma_{p,q}", {"J_{p+q}", "I'_{p,q}"}, "pq"},
      {"so.4", F::SO, "so(4p)", "Gamma'_p", {"J_{2p}", "K_p"}, "p"},
      {"sp.1", F::SP, "sp(p)", "Gamma_p", {"iI", "jI"}, "p"},
      {"sp.2", F::SP, "sp(p+q)", "Gamma_{p,q}", {"iI", "I_{p,q}"}, "pq"},
      {"sp.3", F::SP, "sp(2p)", "Gamma'_p", {"iI", "jJ_p"}, "p"},
      {"sp.4", F::SP, "sp(p+q+r+s)", "Gamma_{p,q,r,s}", {"diag(-I_p,-I_q,I_r,I_s)", "diag(-I_p,I_q,-I_r,I_s)"}, "pqrs"},
  };
  return rows;
}

const Table3Row& table3_row(const std::string& id) {
  for (const auto& r : table3_rows())
    if (r.id == id) return r;
  throw std::invalid_argument("unknown Table 3 row '" + id + "'");
}

int table3_size(const Table3Row& row, const std::vector<int>& x) {
  const int p = param(x, 0), q = param(x, 1), r = param(x, 2), s = param(x, 3);
  const std::string& id = row.id;
  if (id == "su.1" || id == "sp.2") return p + q;
  if (id == "su.2" || id == "su.5" || id == "so.2" || id == "sp.3") return 2 * p;
  if (id == "su.3" || id == "so.3") return 2 * (p + q);
  if (id == "so.4") return 4 * p;
  if (id == "sp.1") return p;
  return p + q + r + s;
}

std::vector<std::vector<int>> table3_parameters(const Table3Row& row, int rank_bound) {
  std::vector<std::vector<int>> cands;
  const int lim = 2 * rank_bound + 2;
  if (row.params == "p") {
    for (int p = 1; p <= lim; ++p) cands.push_back({p});
  } else if (row.params == "pq") {
    for (int p = 1; p <= lim; ++p)
      for (int q = p; q <= lim; ++q) cands.push_back({p, q});
  } else {
    for (int p = 1; p <= lim; ++p)
      for (int q = 0; q <= p; ++q)
        for (int r = 1; r <= q; ++r)
          for (int s = 0; s <= r; ++s) cands.push_back({p, q, r, s});
  }
  std::vector<std::vector<int>> out;
  for (auto& c : cands) {
    int n = table3_size(row, c);
    if (simple_size(row.family, n) && rank_of(row.family, n) <= rank_bound) out.push_back(c);
  }
  return out;
}

Table3Instance table3_klein_four(const std::string& row_id, const std::vector<int>& params) {
  const Table3Row& row = table3_row(row_id);
  Recipe r = recipe_for(row, params);
  Table3Instance inst{build_matrix_algebra(row.family, r.matrix_size, r.frame), {}, {}};
  inst.a = classical_involution(inst.alg, r.a);
  inst.b = classical_involution(inst.alg, r.b);
  if (!is_klein_four(inst.a, inst.b, &inst.alg.alg))
    throw std::runtime_error(row_id + ": generators do not form a Klein four group on " + inst.alg.compact_name());
  return inst;
}

bool in_classical_range(ClassicalFamily family, int n) {
  switch (family) {
    case ClassicalFamily::SL: return n >= 3;
    case ClassicalFamily::SO: return n % 2 ? n >= 3 : n >= 8;
    default: return n >= 3;
  }
}

namespace {

struct Rep {
  std::string label;
  ClassicalInvolution inv;
};

std::vector<Rep> representatives(ClassicalFamily family, int n) {
  std::vector<Rep> reps;
  if (family == ClassicalFamily::SL) {
    reps.push_back({"AI", negtrans(mats::identity(n), "tau")});
    if (n % 2 == 0) reps.push_back({"AII", negtrans(mats::J(n / 2), "tau J")});
    for (int p = 1; 2 * p <= n; ++p) reps.push_back({"AIII_" + std::to_string(p), adj(mats::Ipq(p, n - p), "I_pq")});
  } else if (family == ClassicalFamily::SO) {
    const std::string base = n % 2 ? "BI_" : "DI_";
    for (int p = 1; 2 * p <= n; ++p) reps.push_back({base + std::to_string(p), adj(mats::Ipq(p, n - p), "I_pq")});
    if (n % 2 == 0) reps.push_back({"DIII", adj(mats::J(n / 2), "J")});
  } else {
    const int m = n / 2;
    reps.push_back({"CI", adj(mats::quat_i(m), "iI")});
    for (int p = 1; 2 * p <= m; ++p)
      reps.push_back({"CII_" + std::to_string(p), adj(mats::quat_real(mats::Ipq(p, m - p)), "I_pq")});
  }
  return reps;
}

}  // namespace

const std::vector<ClassicalCatalogEntry>& classical_catalog(ClassicalFamily family, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<ClassicalCatalogEntry>> cache;
  const auto key = std::make_pair(static_cast<int>(family), n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  MatrixAlgebra alg = build_matrix_algebra(family, n);
  std::vector<ClassicalCatalogEntry> out;
  for (const auto& rep : representatives(family, n)) {
    GAut s = classical_involution(alg, rep.inv);
    if (acts_trivially(s, &alg.alg)) continue;
    int d = fixed_subalgebra(*alg.gl, std::vector<GAut>{s}, &alg.alg).dim();
    auto same = std::find_if(out.begin(), out.end(),
                             [&](const ClassicalCatalogEntry& e) { return e.inner == s.inner() && e.fixed_dim == d; });
    if (same != out.end()) same->label += "|" + rep.label;
    else out.push_back({rep.label, s.inner(), d});
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(out)).first->second;
}

ClassLabel classical_involution_class(const MatrixAlgebra& alg, const GAut& sigma) {
  if (!acts_trivially(compose(sigma, sigma), &alg.alg)) throw std::invalid_argument("not an involution");
  if (acts_trivially(sigma, &alg.alg)) throw std::invalid_argument("identity is not an involution");
  int d = fixed_subalgebra(*alg.gl, std::vector<GAut>{sigma}, &alg.alg).dim();
  for (const auto& e : classical_catalog(alg.family, alg.n))
    if (e.inner == sigma.inner() && e.fixed_dim == d) return {alg.compact_name(), e.label, e.inner, d};
  throw std::runtime_error("no catalog class for involution of " + alg.compact_name() + " with fixed dim " +
                           std::to_string(d));
}

namespace {

// Base names of a (possibly merged) label: "DI_2|DIII" -> {DI, DIII}.
std::vector<std::string> base_names(const std::string& label) {
  std::vector<std::string> out;
  std::stringstream ss(label);
  std::string part;
  while (std::getline(ss, part, '|')) out.push_back(part.substr(0, part.find('_')));
  return out;
}

bool label_matches(const std::string& label, const std::string& expected) {
  for (const auto& b : base_names(label)) {
    if (b == expected) return true;
    if (expected == "BDI" && (b == "BI" || b == "DI")) return true;
  }
  return false;
}

}  // namespace

bool type_matches(const std::vector<std::string>& labels, const std::string& expected) {
  std::vector<std::string> exp;
  std::stringstream ss(expected);
  std::string part;
  while (std::getline(ss, part, '-')) exp.push_back(part);
  if (exp.size() != labels.size()) return false;
  std::vector<int> perm(labels.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) ok = label_matches(labels[perm[i]], exp[i]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Table3Result analyze_table3(const std::string& row_id, const std::vector<int>& params, std::uint64_t seed) {
  Table3Instance inst = table3_klein_four(row_id, params);
  const auto& g = *inst.alg.gl;
  const auto* dom = &inst.alg.alg;
  Table3Result r;
  r.row_id = row_id;
  r.params = params;
  r.algebra = inst.alg.compact_name();
  r.algebra_dim = inst.alg.dim();
  r.fixed_type = identify(fixed_subalgebra(g, std::vector<GAut>{inst.a, inst.b}, dom), seed);
  r.involution_type = {classical_involution_class(inst.alg, inst.a).label,
                       classical_involution_class(inst.alg, inst.b).label,
                       classical_involution_class(inst.alg, compose(inst.a, inst.b)).label};
  std::sort(r.involution_type.begin(), r.involution_type.end());
  r.speciality = speciality(r.involution_type);
  r.dims = character_dims(g, inst.a, inst.b, dom);
  const int size = inst.alg.family == ClassicalFamily::SP ? inst.alg.n / 2 : inst.alg.n;
  r.in_range = in_classical_range(inst.alg.family, size);
  return r;
}

}  // namespace klein

#include "klein/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace klein {

namespace {

// Integer Gram matrices in Bourbaki numbering (global scale irrelevant).
IntMatrix bourbaki_gram(char family, int n) {
  IntMatrix s(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { s[i][j] = s[j][i] = v; };
  switch (family) {
    case 'A':
      for (int i = 0; i < n; ++i) s[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) s[i][i] = 2;
      s[n - 1][n - 1] = 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) s[i][i] = 2;
      s[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) s[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < n; ++i) s[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      link(2, 3, -1);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      s[0][0] = s[1][1] = 4;
      s[2][2] = s[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      s[0][0] = 2;
      s[1][1] = 6;
      link(0, 1, -3);
      break;
    default:
      throw std::invalid_argument("unknown family");
  }
  return s;
}

bool valid_type(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 3;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

constexpr int kRootBudget = 4096;

}  // namespace

RootSystem RootSystem::build(char family, int rank) {
  if (!valid_type(family, rank))
    throw std::invalid_argument("invalid root system type " + std::string(1, family) + std::to_string(rank));
  IntMatrix s = bourbaki_gram(family, rank);
  IntMatrix c(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) c[i][j] = 2 * s[i][j] / s[j][j];
  return from_cartan(c, family);
}

RootSystem RootSystem::from_cartan(const IntMatrix& cartan, char family) {
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = static_cast<int>(cartan.size());
  if (rs.rank_ == 0) throw std::invalid_argument("empty Cartan matrix");
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != rs.rank_) throw std::invalid_argument("Cartan matrix not square");
  rs.cartan_ = cartan;
  for (int i = 0; i < rs.rank_; ++i)
    for (int j = 0; j < rs.rank_; ++j) {
      if (i == j && cartan[i][j] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
      if (i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)))
        throw std::invalid_argument("not a generalized Cartan matrix");
    }

  // Symmetrizer d with C[i][j] d_j = C[j][i] d_i, per connected component.
  std::vector<Rational> d(rs.rank_);
  std::vector<char> seen(rs.rank_, 0);
  for (int start = 0; start < rs.rank_; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    d[start] = Rational(1);
    std::queue<int> bfs;
    bfs.push(start);
    while (!bfs.empty()) {
      int i = bfs.front();
      bfs.pop();
      for (int j = 0; j < rs.rank_; ++j) {
        if (j == i || cartan[i][j] == 0) continue;
        Rational dj = Rational(cartan[j][i]) * d[i] / Rational(cartan[i][j]);
        if (!seen[j]) {
          seen[j] = 1;
          d[j] = dj;
          bfs.push(j);
        } else if (d[j] != dj) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  mpz_class l = 1;
  for (const auto& x : d) l = lcm(l, x.denominator());
  std::vector<mpz_class> di(rs.rank_);
  mpz_class g = 0;
  for (int i = 0; i < rs.rank_; ++i) {
    di[i] = (d[i] * Rational(l, 1)).numerator();
    g = gcd(g, di[i]);
  }
  rs.sym_.assign(rs.rank_, std::vector<int>(rs.rank_));
  for (int i = 0; i < rs.rank_; ++i)
    for (int j = 0; j < rs.rank_; ++j)
      rs.sym_[i][j] = cartan[i][j] * static_cast<int>(mpz_class(di[j] / g).get_si());
  rs.close();
  return rs;
}

void RootSystem::close() {
  // Positive roots by height: beta + alpha_i is a root iff q > 0 where q = p - <beta, alpha_i^vee>.
  std::vector<IntVec> pos;
  std::map<IntVec, int> found;
  for (int i = 0; i < rank_; ++i) {
    IntVec e(rank_, 0);
    e[i] = 1;
    found[e] = static_cast<int>(pos.size());
    pos.push_back(e);
  }
  for (std::size_t k = 0; k < pos.size(); ++k) {
    if (static_cast<int>(pos.size()) > kRootBudget)
      throw std::invalid_argument("Cartan matrix is not of finite type");
    const IntVec beta = pos[k];
    for (int i = 0; i < rank_; ++i) {
      IntVec up = beta;
      ++up[i];
      if (found.count(up)) continue;
      int p = 0;
      IntVec down = beta;
      while (true) {
        --down[i];
        if (!found.count(down)) break;
        ++p;
      }
      int q = p - pairing_simple(beta, i);
      if (q > 0) {
        found[up] = static_cast<int>(pos.size());
        pos.push_back(up);
      }
    }
  }
  auto ht = [](const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::sort(pos.begin(), pos.end(), [&](const IntVec& a, const IntVec& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  roots_ = pos;
  for (const auto& v : pos) {
    IntVec n = v;
    for (auto& x : n) x = -x;
    roots_.push_back(n);
  }
  index_.clear();
  for (int k = 0; k < static_cast<int>(roots_.size()); ++k) index_[roots_[k]] = k;
}

int RootSystem::index_of(const IntVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int k) const {
  return std::accumulate(roots_[k].begin(), roots_[k].end(), 0);
}

int RootSystem::form(const IntVec& u, const IntVec& v) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += u[i] * v[j] * sym_[i][j];
  }
  return s;
}

int RootSystem::pairing_simple(const IntVec& beta, int j) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += beta[i] * cartan_[i][j];
  return s;
}

RootString root_string(const IntVec& beta, const IntVec& alpha, const RootSystem& rs) {
  IntVec nb = alpha;
  for (auto& x : nb) x = -x;
  if (beta == alpha || beta == nb) throw std::invalid_argument("root string through +-alpha is undefined");
  if (!rs.is_root(beta) || !rs.is_root(alpha)) throw std::invalid_argument("root_string: input is not a root");
  RootString s;
  IntVec v = beta;
  while (true) {
    for (int i = 0; i < rs.rank(); ++i) v[i] -= alpha[i];
    if (!rs.is_root(v)) break;
    ++s.p;
  }
  v = beta;
  while (true) {
    for (int i = 0; i < rs.rank(); ++i) v[i] += alpha[i];
    if (!rs.is_root(v)) break;
    ++s.q;
  }
  return s;
}

int cartan_integer(const IntVec& alpha, const IntVec& beta, const RootSystem& rs) {
  if (!rs.is_root(alpha) || !rs.is_root(beta)) throw std::invalid_argument("cartan_integer: input is not a root");
  if (alpha == beta) return 2;
  IntVec nb = beta;
  for (auto& x : nb) x = -x;
  if (alpha == nb) return -2;
  RootString s = root_string(alpha, beta, rs);
  return s.p - s.q;
}

Coweight coroot_of(const IntVec& beta, const RootSystem& rs) {
  int lb = rs.form(beta, beta);
  Coweight h(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) h[i] = rat(static_cast<long>(beta[i]) * rs.simple_length2(i), lb);
  return h;
}

Rational coroot_pairing(const IntVec& alpha, const Coweight& h, const RootSystem& rs) {
  if (static_cast<int>(h.size()) != rs.rank()) throw std::invalid_argument("coweight has wrong length");
  Rational s;
  for (int j = 0; j < rs.rank(); ++j)
    if (!h[j].is_zero()) s += h[j] * Rational(rs.pairing_simple(alpha, j));
  return s;
}

IntVec permute_root(const IntVec& beta, const IntVec& perm) {
  IntVec out(beta.size(), 0);
  for (std::size_t i = 0; i < beta.size(); ++i) out[perm[i]] = beta[i];
  return out;
}

std::vector<IntVec> diagram_symmetries(const RootSystem& rs) {
  IntVec perm(rs.rank());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<IntVec> out;
  const auto& c = rs.cartan();
  do {
    bool ok = true;
    for (int i = 0; i < rs.rank() && ok; ++i)
      for (int j = 0; j < rs.rank() && ok; ++j) ok = c[perm[i]][perm[j]] == c[i][j];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SimpleType canonical_simple(char family, int rank) {
  if (rank < 1) throw std::invalid_argument("simple type of rank < 1");
  if ((family == 'B' || family == 'C') && rank == 1) return {'A', 1};
  if (family == 'C' && rank == 2) return {'B', 2};
  if (family == 'D' && rank == 3) return {'A', 3};
  if (family == 'D' && rank <= 2) throw std::invalid_argument("D" + std::to_string(rank) + " is not simple");
  bool ok = family == 'A' || family == 'B' || family == 'C' || family == 'D' ||
            (family == 'E' && rank >= 6 && rank <= 8) || (family == 'F' && rank == 4) ||
            (family == 'G' && rank == 2);
  if (!ok) throw std::invalid_argument("invalid simple type " + std::string(1, family) + std::to_string(rank));
  return {family, rank};
}

int simple_dim(const SimpleType& t) {
  int n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 2);
    case 'B':
    case 'C': return n * (2 * n + 1);
    case 'D': return n * (2 * n - 1);
    case 'E': return n == 6 ? 78 : (n == 7 ? 133 : 248);
    case 'F': return 52;
    case 'G': return 14;
    default: throw std::invalid_argument("unknown family");
  }
}

std::optional<SimpleType> classify_cartan(const IntMatrix& cartan) {
  RootSystem rs;
  try {
    rs = RootSystem::from_cartan(cartan);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  int r = rs.rank();
  // Connectedness.
  std::vector<char> seen(r, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < r; ++j)
      if (!seen[j] && cartan[i][j] != 0) {
        seen[j] = 1;
        stack.push_back(j);
      }
  }
  if (std::count(seen.begin(), seen.end(), 1) != r) return std::nullopt;

  int n = rs.num_roots();
  int lmin = rs.simple_length2(0), lmax = lmin;
  for (int i = 0; i < r; ++i) {
    lmin = std::min(lmin, rs.simple_length2(i));
    lmax = std::max(lmax, rs.simple_length2(i));
  }
  int shorts = 0;
  for (int i = 0; i < r; ++i) shorts += rs.simple_length2(i) == lmin;
  if (lmin == lmax) {
    if (n == r * (r + 1)) return SimpleType{'A', r};
    if (r >= 4 && n == 2 * r * (r - 1)) return SimpleType{'D', r};
    if (r == 6 && n == 72) return SimpleType{'E', 6};
    if (r == 7 && n == 126) return SimpleType{'E', 7};
    if (r == 8 && n == 240) return SimpleType{'E', 8};
    return std::nullopt;
  }
  if (r == 2 && n == 12) return SimpleType{'G', 2};
  if (r == 4 && n == 48) return SimpleType{'F', 4};
  if (n == 2 * r * r) {
    if (shorts == 1) return SimpleType{'B', r};
    if (shorts == r - 1) return SimpleType{'C', r};
  }
  return std::nullopt;
}

}  // namespace klein

#include <set>

#include "doctest.h"
#include "klein/rootsys.hpp"
#include "oracles.hpp"

using namespace klein;

namespace {

struct Case {
  char family;
  int rank;
  int roots;
};

const std::vector<Case> kCases = {{'A', 1, 2},  {'A', 2, 6},  {'A', 4, 20}, {'A', 7, 56}, {'B', 2, 8},
                                  {'B', 3, 18}, {'B', 4, 32}, {'C', 3, 18}, {'C', 4, 32}, {'D', 4, 24},
                                  {'D', 5, 40}, {'D', 8, 112}, {'E', 6, 72}, {'E', 7, 126}, {'E', 8, 240},
                                  {'F', 4, 48}, {'G', 2, 12}};

IntVec e(int r, int i) {
  IntVec v(r, 0);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("root counts match the Weyl-orbit oracle") {
  for (const auto& c : kCases) {
    CAPTURE(c.family);
    CAPTURE(c.rank);
    auto rs = RootSystem::build(c.family, c.rank);
    CHECK(rs.num_roots() == c.roots);
    auto orbit = oracle::weyl_orbit_roots(rs.cartan());
    std::set<IntVec> mine(rs.roots().begin(), rs.roots().end());
    CHECK(mine == orbit);
  }
}

TEST_CASE("formula root counts") {
  for (int n = 1; n <= 7; ++n) CHECK(RootSystem::build('A', n).num_roots() == n * (n + 1));
  for (int n = 2; n <= 6; ++n) CHECK(RootSystem::build('B', n).num_roots() == 2 * n * n);
  for (int n = 3; n <= 6; ++n) CHECK(RootSystem::build('C', n).num_roots() == 2 * n * n);
  for (int n = 4; n <= 7; ++n) CHECK(RootSystem::build('D', n).num_roots() == 2 * n * (n - 1));
}

TEST_CASE("negatives are roots, doubles are not") {
  for (const auto& c : kCases) {
    auto rs = RootSystem::build(c.family, c.rank);
    for (int k = 0; k < rs.num_roots(); ++k) {
      IntVec neg = rs.roots()[k], dbl = rs.roots()[k];
      for (auto& x : neg) x = -x;
      for (auto& x : dbl) x *= 2;
      CHECK(rs.is_root(neg));
      CHECK(rs.roots()[rs.neg(k)] == neg);
      CHECK_FALSE(rs.is_root(dbl));
    }
  }
}

TEST_CASE("Bourbaki Cartan matrices") {
  CHECK(RootSystem::build('G', 2).cartan() == IntMatrix{{2, -1}, {-3, 2}});
  // alpha_2 long, alpha_3 short: alpha_2(H'_3) = -2.
  CHECK(RootSystem::build('F', 4).cartan() == IntMatrix{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  // e6: alpha_2 attached to alpha_4.
  auto e6 = RootSystem::build('E', 6).cartan();
  CHECK(e6[1][3] == -1);
  CHECK(e6[0][2] == -1);
  CHECK(e6[1][2] == 0);
}

TEST_CASE("cartan_integer examples") {
  auto g2 = RootSystem::build('G', 2);
  CHECK(cartan_integer(e(2, 0), e(2, 0), g2) == 2);
  CHECK(cartan_integer(e(2, 0), e(2, 1), g2) == -1);
  CHECK(cartan_integer(e(2, 1), e(2, 0), g2) == -3);
  auto a2 = RootSystem::build('A', 2);
  CHECK(cartan_integer(e(2, 0), e(2, 1), a2) == -1);
}

TEST_CASE("cartan_integer agrees with root strings and the Cartan matrix") {
  for (const auto& c : kCases) {
    auto rs = RootSystem::build(c.family, c.rank);
    auto orbit = oracle::weyl_orbit_roots(rs.cartan());
    const auto& R = rs.roots();
    for (std::size_t a = 0; a < R.size(); a += (R.size() > 60 ? 7 : 1))
      for (std::size_t b = 0; b < R.size(); b += (R.size() > 60 ? 5 : 1)) {
        const int ab = cartan_integer(R[a], R[b], rs);
        // alpha(H'_beta) from the matrix: sum_i alpha_i * beta^vee...
        if (a == b) {
          CHECK(ab == 2);
          continue;
        }
        if (R[a] == R[rs.neg(b)]) {
          CHECK(ab == -2);
          continue;
        }
        auto [p, q] = oracle::string_through(orbit, R[a], R[b]);
        CHECK(ab == p - q);
        auto s = root_string(R[a], R[b], rs);
        CHECK(s.p == p);
        CHECK(s.q == q);
        const int prod = ab * cartan_integer(R[b], R[a], rs);
        CHECK(prod >= 0);
        CHECK(prod <= 3);
      }
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) CHECK(cartan_integer(e(c.rank, i), e(c.rank, j), rs) == rs.cartan()[i][j]);
  }
}

TEST_CASE("root_string examples") {
  auto a2 = RootSystem::build('A', 2);
  auto s = root_string(e(2, 0), e(2, 1), a2);
  CHECK(s.p == 0);
  CHECK(s.q == 1);
  auto g2 = RootSystem::build('G', 2);
  s = root_string(e(2, 1), e(2, 0), g2);
  CHECK(s.p == 0);
  CHECK(s.q == 3);
  auto d4 = RootSystem::build('D', 4);
  s = root_string(e(4, 0), e(4, 2), d4);
  CHECK(s.p == 0);
  CHECK(s.q == 0);
  CHECK_THROWS(root_string(e(2, 0), e(2, 0), a2));
}

TEST_CASE("coroot_pairing") {
  auto e7 = RootSystem::build('E', 7);
  Coweight own(7, Rational(0));
  own[3] = 1;
  CHECK(coroot_pairing(e(7, 3), own, e7) == Rational(2));

  // Every e7 root pairs evenly with H'_2 + H'_5 + H'_7; oracle sums Cartan matrix columns.
  Coweight h0(7, Rational(0));
  h0[1] = h0[4] = h0[6] = 1;
  auto orbit = oracle::weyl_orbit_roots(e7.cartan());
  CHECK(orbit.size() == 126);
  for (const auto& beta : orbit) {
    int direct = oracle::pairing(e7.cartan(), beta, 1) + oracle::pairing(e7.cartan(), beta, 4) +
                 oracle::pairing(e7.cartan(), beta, 6);
    CHECK(direct % 2 == 0);
    CHECK(coroot_pairing(beta, h0, e7) == Rational(direct));
  }

  auto e6 = RootSystem::build('E', 6);
  Coweight h16(6, Rational(0));
  h16[0] = h16[5] = 1;
  CHECK(coroot_pairing(e(6, 1), h16, e6) == Rational(0));
}

TEST_CASE("coroot_of a simple root is the simple coroot") {
  auto f4 = RootSystem::build('F', 4);
  for (int i = 0; i < 4; ++i) {
    Coweight want(4, Rational(0));
    want[i] = 1;
    CHECK(coroot_of(e(4, i), f4) == want);
  }
  // H'_beta pairs with beta to 2 for every root.
  for (const auto& beta : f4.roots()) CHECK(coroot_pairing(beta, coroot_of(beta, f4), f4) == Rational(2));
}

TEST_CASE("diagram symmetries match brute force") {
  struct D {
    char f;
    int r;
    std::size_t order;
  };
  for (auto [f, r, n] : std::vector<D>{{'E', 6, 2}, {'D', 4, 6}, {'E', 8, 1}, {'E', 7, 1}, {'A', 4, 2}, {'F', 4, 1}}) {
    auto rs = RootSystem::build(f, r);
    auto sym = diagram_symmetries(rs);
    auto brute = oracle::diagram_symmetries(rs.cartan());
    CHECK(sym.size() == n);
    std::sort(sym.begin(), sym.end());
    std::sort(brute.begin(), brute.end());
    CHECK(sym == brute);
    std::set<IntVec> roots(rs.roots().begin(), rs.roots().end());
    for (const auto& p : sym) {
      std::set<IntVec> image;
      for (const auto& beta : rs.roots()) image.insert(permute_root(beta, p));
      CHECK(image == roots);
    }
  }
}

TEST_CASE("classify_cartan recovers types from shuffled simple orders") {
  for (const auto& c : kCases) {
    auto C = RootSystem::build(c.family, c.rank).cartan();
    const int r = c.rank;
    IntVec p(r);
    std::iota(p.begin(), p.end(), 0);
    std::reverse(p.begin(), p.end());
    if (r > 2) std::swap(p[0], p[r / 2]);
    IntMatrix Q(r, IntVec(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) Q[i][j] = C[p[i]][p[j]];
    auto t = classify_cartan(Q);
    REQUIRE(t.has_value());
    CHECK(*t == canonical_simple(c.family, c.rank));
  }
  CHECK(canonical_simple('C', 2) == SimpleType{'B', 2});
  CHECK(canonical_simple('D', 3) == SimpleType{'A', 3});
  CHECK(canonical_simple('B', 1) == SimpleType{'A', 1});
  // B3 vs C3 is decided by the asymmetric entries.
  CHECK(classify_cartan(RootSystem::build('B', 3).cartan())->family == 'B');
  CHECK(classify_cartan(RootSystem::build('C', 3).cartan())->family == 'C');
}

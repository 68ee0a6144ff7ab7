#include <random>

#include "doctest.h"
#include "klein/linalg.hpp"
#include "klein/rational.hpp"
#include "oracles.hpp"

using namespace klein;
using G = GaussRational;

TEST_CASE("rat normalizes") {
  CHECK(rat(2, 4).str() == "1/2");
  CHECK(rat(3, -6).str() == "-1/2");
  CHECK(rat(0, 7).numerator() == 0);
  CHECK(rat(0, 7).denominator() == 1);
  CHECK_THROWS(rat(1, 0));
  CHECK(Rational::parse("-6/4") == rat(-3, 2));
}

TEST_CASE("gauss_mul") {
  CHECK(gauss_mul(G::i(), G::i()) == G(-1));
  CHECK(gauss_mul(G(rat(1), rat(1)), G(rat(1), rat(-1))) == G(2));
  CHECK(gauss_mul(G(rat(1, 2)), G(rat(2, 3))) == G(rat(1, 3)));
  CHECK(G(rat(3), rat(4)) / G(rat(3), rat(4)) == G(1));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    Rational a = oracle::small_rational(rng), b = oracle::small_rational(rng), c = oracle::small_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    G x(a, b), y(b, c), z(c, a);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(Matrix<Rational>::identity(3)).empty());
  CHECK(nullspace(Matrix<Rational>(2, 3)).size() == 3);
  Matrix<Rational> m{{rat(1), rat(1)}, {rat(2), rat(2)}};
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == -ns[0][1]);
  CHECK(!ns[0][0].is_zero());
}

TEST_CASE("mat_rref examples") {
  auto r = mat_rref(Matrix<Rational>::identity(4));
  CHECK(r.rank == 4);
  CHECK(r.rref == Matrix<Rational>::identity(4));
  CHECK(r.pivots == std::vector<int>{0, 1, 2, 3});
  auto z = mat_rref(Matrix<Rational>(3, 2));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());
  CHECK(z.rref.is_zero_matrix());
  CHECK(rank(Matrix<Rational>{{rat(0), rat(1)}, {rat(1), rat(0)}}) == 2);
}

namespace {

template <class F>
Matrix<F> random_matrix(std::mt19937_64& rng, int rows, int cols, int rank_cap) {
  // Product of random rows x rank_cap and rank_cap x cols factors, with sparse zeros.
  auto gen = [&] {
    Rational a = oracle::small_rational(rng);
    if constexpr (std::is_same_v<F, G>) return G(a, rng() % 3 ? Rational(0) : oracle::small_rational(rng));
    else return a;
  };
  Matrix<F> a(rows, rank_cap), b(rank_cap, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rank_cap; ++j) a(i, j) = rng() % 4 ? gen() : F(0);
  for (int i = 0; i < rank_cap; ++i)
    for (int j = 0; j < cols; ++j) b(i, j) = rng() % 4 ? gen() : F(0);
  return a * b;
}

template <class F>
void nullspace_properties(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + rng() % 7, cols = 1 + rng() % 8, cap = 1 + rng() % 6;
    auto m = random_matrix<F>(rng, rows, cols, cap);
    auto ns = nullspace(m);
    for (const auto& v : ns)
      for (const auto& x : m.apply(v)) CHECK(is_zero(x));
    const int r = mat_rref(m).rank;
    CHECK(r + static_cast<int>(ns.size()) == cols);
    CHECK(r == oracle::dense_rank(m));
    // Sparse route must give the same subspace.
    std::vector<SparseVec<F>> rows_sparse;
    for (int i = 0; i < rows; ++i) {
      DenseVec<F> row(cols);
      for (int j = 0; j < cols; ++j) row[j] = m(i, j);
      rows_sparse.push_back(sparsify(row));
    }
    auto sns = sparse_nullspace(rows_sparse, cols);
    REQUIRE(sns.size() == ns.size());
    for (std::size_t k = 0; k < ns.size(); ++k) CHECK(sparsify(ns[k]) == sns[k]);
  }
}

}  // namespace

TEST_CASE("nullspace properties over Q") { nullspace_properties<Rational>(11); }
TEST_CASE("nullspace properties over Q(i)") { nullspace_properties<G>(12); }

TEST_CASE("determinant and inverse") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + rng() % 5;
    auto m = random_matrix<Rational>(rng, n, n, n);
    auto d = determinant(m);
    CHECK(d.is_zero() == (oracle::dense_rank(m) < n));
    if (!d.is_zero()) {
      CHECK(m * inverse(m) == Matrix<Rational>::identity(n));
      CHECK(determinant(inverse(m)) * d == Rational(1));
    } else {
      CHECK_THROWS_AS(inverse(m), std::domain_error);
    }
  }
}

TEST_CASE("echelon basis membership") {
  EchelonBasis<Rational> eb(4);
  CHECK(eb.insert({{0, rat(1)}, {2, rat(3)}}));
  CHECK(eb.insert({{1, rat(2)}, {2, rat(1)}}));
  CHECK_FALSE(eb.insert({{0, rat(2)}, {1, rat(2)}, {2, rat(7)}}));
  CHECK(eb.contains({{0, rat(-1)}, {2, rat(-3)}}));
  CHECK_FALSE(eb.contains({{3, rat(1)}}));
  CHECK(eb.dim() == 2);
}

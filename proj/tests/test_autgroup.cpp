#include "doctest.h"
#include "klein/kernels.hpp"
#include "klein/recipe.hpp"
#include "klein/subalg.hpp"
#include "oracles.hpp"

using namespace klein;

namespace {

Coweight simple_coweight(int rank, std::initializer_list<int> ones) {
  Coweight h(rank, Rational(0));
  for (int i : ones) h[i - 1] = 1;
  return h;
}

int fixed_dim(const LieAlgebra& g, const Aut& a) { return fixed_subalgebra<Rational>(g, {a}).dim(); }

// Dense oracle: n - rank(A - I) on the full matrix.
int dense_fixed_dim(const Aut& a) { return oracle::dense_common_fixed_dim<Rational>({a.matrix()}); }

}  // namespace

TEST_CASE("torus involutions") {
  auto e6 = algebra_for("e6");
  auto s1 = torus_involution(*e6, simple_coweight(6, {2}));
  CHECK(fixed_dim(*e6, s1) == 38);
  CHECK(dense_fixed_dim(s1) == 38);
  CHECK(order(s1) == 2);
  CHECK(s1.inner());

  auto g2 = algebra_for("g2");
  CHECK(fixed_dim(*g2, torus_involution(*g2, simple_coweight(2, {1}))) == 6);

  auto e7 = algebra_for("e7");
  auto h0 = coweight({0, 1, 0, 0, 1, 0, 1}, 2);
  Aut s2;
  CHECK_NOTHROW(s2 = torus_involution(*e7, h0));
  CHECK(order(s2) == 2);
  CHECK_THROWS_AS(torus_involution(*e7, coweight({0, 1, 0, 0, 0, 0, 0}, 2)), std::domain_error);
}

TEST_CASE("diagram automorphisms") {
  auto e6 = algebra_for("e6");
  auto tau = diagram_auto(*e6, {5, 1, 4, 3, 2, 0});
  CHECK(order(tau) == 2);
  CHECK(fixed_dim(*e6, tau) == 52);
  CHECK(dense_fixed_dim(tau) == 52);
  CHECK_FALSE(tau.inner());
  CHECK(bracket_violations_parallel(*e6, tau) == 0);

  auto d4 = algebra_for("d4");
  auto tri = build_recipe(*d4, "d4", "triality");
  CHECK(order(tri) == 3);
  CHECK(permutation_order(tri.outer) == 3);
  auto k = fixed_subalgebra<Rational>(*d4, {tri});
  CHECK(k.dim() == 14);
  CHECK(identify(k).str() == "G2");
  CHECK(bracket_violations_parallel(*d4, tri) == 0);

  auto id = diagram_auto(*e6, {0, 1, 2, 3, 4, 5});
  CHECK(acts_trivially(id));
}

TEST_CASE("diagram automorphism order equals permutation order") {
  for (const char* fam : {"e6", "d4", "a4"}) {
    auto g = algebra_for(fam);
    for (const auto& p : diagram_symmetries(g->root_system())) {
      auto a = diagram_auto(*g, p);
      CHECK(order(a) == permutation_order(p));
      CHECK(bracket_violations_parallel(*g, a) == 0);
    }
  }
}

TEST_CASE("Weyl representatives") {
  auto a1 = algebra_for("a1");
  auto n = weyl_rep(*a1, 0);
  CHECK(n.apply(unit_vector<Rational>(0)) == SparseVec<Rational>{{0, Rational(-1)}});
  CHECK(order(n) == 2);

  auto e7 = algebra_for("e7");
  auto omega = build_recipe(*e7, "e7", "omega");
  CHECK(order(omega) == 2);
  CHECK(bracket_violations_parallel(*e7, omega) == 0);
  // Oracle: reflections on the Cartan built directly from the Cartan matrix.
  const auto& C = e7->root_system().cartan();
  auto refl = [&](int i) {
    // s_i(H'_j) = H'_j - alpha_i(H'_j) H'_i
    Matrix<Rational> m = Matrix<Rational>::identity(7);
    for (int j = 0; j < 7; ++j) m(i, j) -= C[i][j];
    return m;
  };
  CHECK(cartan_action(*e7, omega) == refl(1) * refl(4) * refl(6));
  for (int i : {1, 4, 6}) CHECK(reflection_on_cartan(*e7, i) == refl(i));
}

TEST_CASE("composition") {
  auto e6 = algebra_for("e6");
  auto tau = build_recipe(*e6, "e6", "tau");
  auto t2 = build_recipe(*e6, "e6", "exp(H2)");
  auto id = identity_aut(*e6);
  CHECK(compose(tau, id) == tau);
  CHECK(compose(id, tau) == tau);
  auto s4 = compose(tau, t2);
  CHECK(s4 == build_recipe(*e6, "e6", "tau*exp(H2)"));
  CHECK(fixed_dim(*e6, s4) == 36);
  CHECK(acts_trivially(compose(tau, tau)));
  auto w = build_recipe(*e6, "e6", "weyl(3)");
  CHECK(acts_trivially(compose(w, power(w, order(w) - 1))));
}

TEST_CASE("Klein four predicate") {
  auto e6 = algebra_for("e6");
  auto a = build_recipe(*e6, "e6", "exp(H2)"), b = build_recipe(*e6, "e6", "exp(H4)");
  CHECK(is_klein_four(a, b));
  CHECK_FALSE(is_klein_four(a, a));
  auto tau = build_recipe(*e6, "e6", "tau"), h1 = build_recipe(*e6, "e6", "exp(H1)");
  CHECK_FALSE(is_klein_four(tau, h1));
  CHECK(compose(tau, h1) != compose(h1, tau));
}

TEST_CASE("representatives: bracket law, eigenvalue bookkeeping, distinct fixed dims") {
  const std::map<std::string, std::vector<std::pair<std::string, int>>> reps = {
      {"e6", {{"exp(H2)", 38}, {"exp(H1+H6)", 46}, {"tau", 52}, {"tau*exp(H2)", 36}}},
      {"e7", {{"exp(H2)", 69}, {"exp((H2+H5+H7)/2)", 79}, {"exp((H2+H5+H7+2H1)/2)", 63}}},
      {"e8", {{"exp(H2)", 136}, {"exp(H1+H2)", 120}}},
      {"f4", {{"exp(H1)", 24}, {"exp(H4)", 36}}},
      {"g2", {{"exp(H1)", 6}}}};
  for (const auto& [fam, list] : reps) {
    auto g = algebra_for(fam);
    std::set<int> dims;
    for (const auto& [recipe, d] : list) {
      CAPTURE(recipe);
      auto s = build_recipe(*g, fam, recipe);
      CHECK(order(s) == 2);
      CHECK(bracket_violations_parallel(*g, s) == 0);
      const int plus = fixed_dim(*g, s);
      const int minus = eigenspace<Rational>(*g, s, Rational(-1)).dim();
      CHECK(plus == d);
      CHECK(plus + minus == g->dim());
      dims.insert(plus);
    }
    CHECK(dims.size() == list.size());
  }
}

TEST_CASE("recipe parsing") {
  CHECK(parse_family("e6") == std::pair<char, int>{'E', 6});
  CHECK(parse_family("g2") == std::pair<char, int>{'G', 2});
  CHECK_THROWS(parse_family("x9"));
  CHECK(parse_coweight("H2+H4", 6) == coweight({0, 1, 0, 1, 0, 0}));
  CHECK(parse_coweight("(H2+H5+H7+2H1)/2", 7) == coweight({2, 1, 0, 0, 1, 0, 1}, 2));
  CHECK(parse_coweight("H1-H3", 4) == coweight({1, 0, -1, 0}));
  auto e6 = algebra_for("e6");
  CHECK_THROWS_AS(build_recipe(*e6, "e6", "exp(H9)"), std::invalid_argument);
  CHECK_THROWS_AS(build_recipe(*e6, "e6", "frobnicate"), std::invalid_argument);
  CHECK_THROWS_AS(build_recipe(*e6, "e6", "omega"), std::invalid_argument);
  // e7's tau is the torus element of sigma2.
  auto e7 = algebra_for("e7");
  CHECK(build_recipe(*e7, "e7", "tau") == build_recipe(*e7, "e7", "exp((H2+H5+H7)/2)"));
}

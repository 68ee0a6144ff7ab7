#include <set>

#include "doctest.h"
#include "klein/classify.hpp"
#include "klein/matclassical.hpp"

using namespace klein;

namespace {

const std::vector<std::array<const char*, 3>> kTable4 = {
    {"e6", "exp(H2)", "exp(H4)"},          {"e6", "exp(H4)", "exp(H3+H4+H5)"}, {"e6", "exp(H2+H1)", "exp(H4+H1)"},
    {"e6", "exp(H1+H6)", "exp(H3+H5)"},    {"e6", "exp(H2)", "tau"},           {"e6", "exp(H2)", "tau*exp(H4)"},
    {"e6", "exp(H1+H6)", "tau"},           {"e6", "exp(H1+H6)", "tau*exp(H2)"}, {"e7", "exp(H2)", "exp(H4)"},
    {"e7", "exp(H2)", "exp(H3)"},          {"e7", "exp(H2)", "tau"},           {"e7", "exp(H1)", "tau"},
    {"e7", "exp(H2)", "tau*exp(H1)"},      {"e7", "tau", "omega"},             {"e7", "tau", "omega*exp(H1)"},
    {"e7", "tau*exp(H1)", "omega*exp(H3)"}, {"e8", "exp(H2)", "exp(H4)"},      {"e8", "exp(H2)", "exp(H1)"},
    {"e8", "exp(H2)", "exp(H1+H4)"},       {"e8", "exp(H2+H1)", "exp(H5+H1)"}, {"f4", "exp(H2)", "exp(H1)"},
    {"f4", "exp(H3)", "exp(H2)"},          {"f4", "exp(H4)", "exp(H3)"},       {"g2", "exp(H1)", "exp(H2)"}};

std::vector<KleinFourRecord> all_rows() {
  static const std::vector<KleinFourRecord> rows = [] {
    std::vector<KleinFourRecord> out;
    int i = 0;
    for (const auto& [f, a, b] : kTable4) out.push_back(analyze_klein_four(f, "row" + std::to_string(i++), a, b));
    return out;
  }();
  return rows;
}

}  // namespace

TEST_CASE("speciality and Berger weights") {
  CHECK(speciality({"sigma1", "sigma2", "sigma3"}) == Speciality::N);
  CHECK(speciality({"sigma1", "sigma1", "sigma1"}) == Speciality::V);
  CHECK(speciality({"sigma1", "sigma1", "sigma2"}) == Speciality::S);
  CHECK(speciality({"sigma2", "sigma1", "sigma1"}) == Speciality::S);
  CHECK_THROWS(speciality({"sigma1"}));
  CHECK(berger_weight(Speciality::N) == 6);
  CHECK(berger_weight(Speciality::S) == 3);
  CHECK(berger_weight(Speciality::V) == 1);
  CHECK(parse_speciality("S") == Speciality::S);
  CHECK_THROWS(parse_speciality("X"));
}

TEST_CASE("exceptional catalogs are separated by (parity, dim)") {
  const std::map<std::string, std::vector<int>> dims = {
      {"e6", {38, 46, 52, 36}}, {"e7", {69, 79, 63}}, {"e8", {136, 120}}, {"f4", {24, 36}}, {"g2", {6}}};
  for (const auto& [f, want] : dims) {
    const auto& cat = exceptional_catalog(f);
    std::vector<int> got;
    std::set<std::pair<bool, int>> keys;
    for (const auto& e : cat) {
      got.push_back(e.fixed_dim);
      keys.emplace(e.inner, e.fixed_dim);
      CHECK(e.fixed_type.dim() == e.fixed_dim);
    }
    CHECK(got == want);
    CHECK(keys.size() == cat.size());
  }
}

TEST_CASE("involution_class") {
  auto e6 = algebra_for("e6");
  auto c = involution_class(*e6, "e6", build_recipe(*e6, "e6", "exp(H2)"));
  CHECK(c.label == "sigma1");
  CHECK(c.inner);
  CHECK(c.fixed_dim == 38);
  c = involution_class(*e6, "e6", build_recipe(*e6, "e6", "tau*exp(H2)"));
  CHECK(c.label == "sigma4");
  CHECK_FALSE(c.inner);
  CHECK(c.fixed_dim == 36);
  // Conjugates land in the same class.
  auto w = build_recipe(*e6, "e6", "weyl(2)*weyl(4)");
  auto s = build_recipe(*e6, "e6", "exp(H1+H6)");
  auto winv = power(w, order(w) - 1);
  CHECK(involution_class(*e6, "e6", compose(w, compose(s, winv))).label == "sigma2");
  CHECK_THROWS(involution_class(*e6, "e6", identity_aut(*e6)));
}

TEST_CASE("klein_type examples and generator order") {
  auto e6 = algebra_for("e6");
  auto a = build_recipe(*e6, "e6", "exp(H2)"), t = build_recipe(*e6, "e6", "tau");
  CHECK(klein_type(*e6, "e6", a, t) == std::vector<std::string>{"sigma1", "sigma3", "sigma4"});
  CHECK(klein_type(*e6, "e6", t, a) == klein_type(*e6, "e6", a, t));
  auto e7 = algebra_for("e7");
  CHECK(klein_type(*e7, "e7", build_recipe(*e7, "e7", "tau"), build_recipe(*e7, "e7", "omega")) ==
        std::vector<std::string>{"sigma2", "sigma2", "sigma2"});
  auto f4 = algebra_for("f4");
  CHECK(klein_type(*f4, "f4", build_recipe(*f4, "f4", "exp(H3)"), build_recipe(*f4, "f4", "exp(H2)")) ==
        std::vector<std::string>{"sigma1", "sigma1", "sigma2"});
}

TEST_CASE("Berger counts from computed specialities") {
  const auto rows = all_rows();
  std::map<std::string, std::vector<KleinFourRecord>> by;
  for (const auto& r : rows) by[r.family].push_back(r);
  CHECK(berger_count(by["e6"]) == 23);
  CHECK(berger_count(by["e7"]) == 19);
  CHECK(berger_count(by["e8"]) == 8);
  CHECK(berger_count(by["f4"]) == 5);
  CHECK(berger_count(by["g2"]) == 1);
}

TEST_CASE("Table 4 fixed types are pairwise distinct within a family") {
  std::map<std::string, std::set<std::string>> seen;
  std::map<std::string, int> count;
  for (const auto& r : all_rows()) {
    seen[r.family].insert(r.fixed_type.str());
    ++count[r.family];
  }
  for (const auto& [f, n] : count) CHECK(static_cast<int>(seen[f].size()) == n);
}

TEST_CASE("commuting representatives") {
  const auto rows = all_rows();
  auto pc = commuting_pairs("e6", rows);
  CHECK(pc.complete());
  CHECK(pc.witness[2][3] == "row4");  // (sigma3, sigma4) via Gamma5
  auto e8 = commuting_pairs("e8", rows);
  CHECK(e8.complete());
  CHECK(!e8.witness[0][1].empty());
  auto g2 = commuting_pairs("g2", rows);
  CHECK(g2.witness[0][0] == "row23");
  for (const char* f : {"e7", "f4"}) CHECK(commuting_pairs(f, rows).complete());
}

TEST_CASE("trivial centralizer check") {
  auto e6 = algebra_for("e6");
  auto c = trivial_centralizer_check(*e6, build_recipe(*e6, "e6", "tau"));
  CHECK(c.applicable);
  CHECK(c.trivial());
  auto d4 = algebra_for("d4");
  c = trivial_centralizer_check(*d4, build_recipe(*d4, "d4", "triality"));
  CHECK(c.applicable);
  CHECK(c.order == 3);
  CHECK(c.trivial());
  c = trivial_centralizer_check(*e6, build_recipe(*e6, "e6", "exp(H1+H6)"));
  CHECK_FALSE(c.applicable);
  CHECK(c.centralizer_dim == 1);
}

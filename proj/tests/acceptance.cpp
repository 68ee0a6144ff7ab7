// One PASS/FAIL line per acceptance criterion; exit status 0 only if all pass.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "klein/classify.hpp"
#include "klein/kernels.hpp"
#include "klein/matclassical.hpp"
#include "klein/recipe.hpp"
#include "klein/subalg.hpp"
#include "klein/tables.hpp"

using namespace klein;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> lines;
  void fail(const std::string& s) {
    ok = false;
    lines.push_back("FAIL " + s);
  }
  void note(const std::string& s) { lines.push_back(s); }
  void require(bool cond, const std::string& s) {
    if (!cond) fail(s);
  }
};

std::string fixtures;

VerificationReport verify(int table, int bound = 8) {
  VerifyOptions o;
  o.bound = bound;
  return verify_table(load_fixture(table, fixtures), o);
}

void report_rows(const VerificationReport& rep, Outcome& out) {
  for (const auto& r : rep.rows)
    if (r.status != RowStatus::Pass)
      for (const auto& p : r.problems) out.fail(r.family + " " + r.id + ": " + p);
}

Aut rec(const std::string& fam, const std::string& recipe) { return build_recipe(*algebra_for(fam), fam, recipe); }

IsoType fixed_type(const std::string& fam, const std::vector<std::string>& recipes, int* dim = nullptr) {
  auto g = algebra_for(fam);
  std::vector<Aut> autos;
  for (const auto& r : recipes) autos.push_back(build_recipe(*g, fam, r));
  auto k = fixed_subalgebra<Rational>(*g, autos);
  if (dim) *dim = k.dim();
  return identify(k);
}

Outcome table1() {
  Outcome out;
  auto rep = verify(1);
  report_rows(rep, out);
  out.require(rep.passed == 12 && rep.total() == 12, "expected 12 passing rows, got " + std::to_string(rep.passed));
  // Spot checks computed directly, independent of the fixture file.
  struct Spot {
    const char* fam;
    const char* recipe;
    const char* type;
    int dim_p;
  };
  for (const Spot& s : {Spot{"e6", "tau", "F4", 26}, Spot{"e8", "exp(H1+H2)", "D8", 128},
                        Spot{"f4", "exp(H1)", "C3+A1", 28}, Spot{"f4", "exp(H4)", "B4", 16}}) {
    int k = 0;
    auto t = fixed_type(s.fam, {s.recipe}, &k);
    const int p = algebra_for(s.fam)->dim() - k;
    out.require(t.str() == s.type && p == s.dim_p,
                std::string(s.fam) + " " + s.recipe + ": " + t.str() + ", dim p " + std::to_string(p));
  }
  out.note(std::to_string(rep.passed) + "/12 rows");
  return out;
}

Outcome table4() {
  Outcome out;
  auto rep = verify(4);
  report_rows(rep, out);
  std::map<std::string, int> per;
  for (const auto& r : rep.rows) per[r.family] += r.status == RowStatus::Pass;
  const std::map<std::string, int> want = {{"e6", 8}, {"e7", 8}, {"e8", 4}, {"f4", 3}, {"g2", 1}};
  out.require(per == want, "per-family passing rows differ from 8/8/4/3/1");
  out.note(std::to_string(rep.passed) + "/24 rows");
  return out;
}

Outcome berger() {
  Outcome out;
  auto rep = verify(4);
  std::string line;
  const std::vector<std::pair<std::string, int>> want = {{"e6", 23}, {"e7", 19}, {"e8", 8}, {"f4", 5}, {"g2", 1}};
  for (const auto& [fam, n] : want) {
    std::vector<KleinFourRecord> rows;
    for (const auto& r : rep.rows) {
      if (r.family != fam) continue;
      KleinFourRecord k;
      k.family = fam;
      k.id = r.id;
      k.involution_type = r.record.involution_type;
      // Speciality re-derived from the computed involution type, not read from the fixture.
      k.speciality = speciality(r.record.involution_type);
      rows.push_back(k);
    }
    const int c = berger_count(rows);
    out.require(c == n, fam + ": " + std::to_string(c) + ", expected " + std::to_string(n));
    line += (line.empty() ? "" : " ") + std::to_string(c);
  }
  out.note("counts " + line);
  return out;
}

Outcome table3() {
  Outcome out;
  auto rep = verify(3, 8);
  int matched = 0;
  std::set<std::string> rows_seen;
  for (const auto& r : rep.rows) {
    const std::string name = r.id;
    if (r.status == RowStatus::Skipped) {
      out.note("skipped " + name + ": " + (r.problems.empty() ? "" : r.problems[0]));
      continue;
    }
    if (r.status == RowStatus::Error) {
      out.fail(name + ": " + (r.problems.empty() ? "error" : r.problems[0]));
      continue;
    }
    bool fixed_ok = true;
    for (const auto& p : r.problems) {
      if (p.rfind("fixed type", 0) == 0) {
        fixed_ok = false;
        out.fail(name + ": " + p);
      } else {
        // Involution type or speciality disagreements are reported, not hidden.
        out.note("reported mismatch " + name + ": " + p);
      }
    }
    matched += fixed_ok;
    rows_seen.insert(name.substr(0, name.find('[')));
  }
  out.require(rows_seen.size() == table3_rows().size(), "some Table 3 row had no instance");
  out.note("fixed algebra matched on " + std::to_string(matched) + " of " + std::to_string(rep.total() - rep.skipped) +
           " instances (" + std::to_string(rep.total()) + " enumerated, rank <= 8)");
  return out;
}

Outcome centralizers() {
  Outcome out;
  auto e6 = algebra_for("e6");
  auto d4 = algebra_for("d4");
  auto a = trivial_centralizer_check(*e6, rec("e6", "tau"));
  auto b = trivial_centralizer_check(*d4, build_recipe(*d4, "d4", "triality"));
  auto c = trivial_centralizer_check(*e6, rec("e6", "exp(H1+H6)"));
  out.require(a.applicable && a.centralizer_dim == 0, "e6 tau: dim " + std::to_string(a.centralizer_dim));
  out.require(b.applicable && b.centralizer_dim == 0, "d4 triality: dim " + std::to_string(b.centralizer_dim));
  out.require(c.centralizer_dim == 1, "e6 sigma2: dim " + std::to_string(c.centralizer_dim));
  out.note("dims " + std::to_string(a.centralizer_dim) + " " + std::to_string(b.centralizer_dim) + " " +
           std::to_string(c.centralizer_dim));
  return out;
}

Outcome helgason() {
  Outcome out;
  const std::map<std::string, std::vector<int>> want = {
      {"e6", {38, 46, 52, 36}}, {"e7", {69, 79, 63}}, {"e8", {136, 120}}, {"f4", {24, 36}}};
  std::ostringstream os;
  for (const auto& [fam, dims] : want) {
    std::vector<int> got;
    for (const auto& e : exceptional_catalog(fam)) {
      int d = 0;
      fixed_type(fam, {e.recipe}, &d);
      got.push_back(d);
    }
    out.require(got == dims, fam + " fixed dims differ");
    out.require(std::set<int>(got.begin(), got.end()).size() == got.size(), fam + " dims not distinct");
    os << fam << " {";
    for (std::size_t i = 0; i < got.size(); ++i) os << (i ? ", " : "") << got[i];
    os << "} ";
  }
  out.note(os.str());
  return out;
}

Outcome section4() {
  Outcome out;
  auto e7 = algebra_for("e7");
  auto omega = rec("e7", "omega");
  out.require(acts_trivially(compose(omega, omega)), "omega^2 != id");
  const auto& C = e7->root_system().cartan();
  auto refl = [&](int i) {
    Matrix<Rational> m = Matrix<Rational>::identity(7);
    for (int j = 0; j < 7; ++j) m(i, j) -= C[i][j];
    return m;
  };
  Matrix<Rational> s = refl(1) * refl(4) * refl(6);
  out.require(cartan_action(*e7, omega) == s, "omega does not act as s2 s5 s7 on the Cartan");
  struct Id {
    const char* fam;
    const char* theta;
    const char* other;
    const char* type;
    int dim;
  };
  for (const Id& c : {Id{"e7", "exp((H2+H5+H7)/2)", "omega", "F4", 52},
                      Id{"e7", "exp((H2+H5+H7+2H1)/2)", "omega", "C4", 36}, Id{"e6", "exp(H2)", "tau", "C3+A1", 24},
                      Id{"e6", "exp(H1+H6)", "tau", "B4", 36}}) {
    auto g = algebra_for(c.fam);
    auto th = build_recipe(*g, c.fam, c.theta), ot = build_recipe(*g, c.fam, c.other);
    out.require(agree_on(compose(th, ot), compose(ot, th)), std::string(c.theta) + " and " + c.other + " do not commute");
    int d = 0;
    auto t = fixed_type(c.fam, {c.theta, c.other}, &d);
    out.require(t.str() == c.type && d == c.dim, std::string(c.fam) + " (" + c.theta + ", " + c.other + "): " +
                                                     t.str() + " dim " + std::to_string(d));
  }
  return out;
}

Outcome properties() {
  Outcome out;
  for (auto [f, r] : std::vector<std::pair<char, int>>{
           {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4}, {'C', 3}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}}) {
    auto g = LieAlgebra::build(f, r);
    out.require(jacobi_failures_parallel(*g, all_triples(g->dim())) == 0, "Jacobi fails in " + g->name());
  }
  for (int r : {6, 7, 8}) {
    auto g = LieAlgebra::build('E', r);
    out.require(jacobi_failures_parallel(*g, sampled_triples(g->dim(), 10000, 100 + r)) == 0,
                "sampled Jacobi fails in " + g->name());
  }

  int autos = 0;
  auto check_aut = [&](const std::string& fam, const std::string& recipe) {
    auto g = algebra_for(fam);
    ++autos;
    out.require(bracket_violations_parallel(*g, build_recipe(*g, fam, recipe)) == 0, fam + " " + recipe + " breaks brackets");
  };
  for (const char* fam : {"e6", "e7", "e8", "f4", "g2"})
    for (const auto& e : exceptional_catalog(fam)) check_aut(fam, e.recipe);
  check_aut("e7", "omega");
  check_aut("d4", "triality");

  auto f4x = load_fixture(4, fixtures);
  int gammas = 0;
  for (const auto& row : f4x.rows) {
    auto g = algebra_for(row.family);
    auto a = build_recipe(*g, row.family, row.generators[0]);
    auto b = build_recipe(*g, row.family, row.generators[1]);
    for (const auto& rc : row.generators) check_aut(row.family, rc);
    auto d = character_dims<Rational>(*g, a, b);
    out.require(d[0] + d[1] + d[2] + d[3] == g->dim(), row.family + " " + row.id + ": character dims do not sum");
    auto k = fixed_subalgebra<Rational>(*g, {a, b});
    const IsoType base = identify(k);
    for (std::uint64_t seed : {1u, 2u, 3u})
      out.require(identify(k, seed) == base, row.family + " " + row.id + ": identify differs at seed " + std::to_string(seed));
    ++gammas;
  }

  int instances = 0;
  for (const auto& row : table3_rows())
    for (const auto& ps : table3_parameters(row, 8)) {
      Table3Instance inst;
      try {
        inst = table3_klein_four(row.id, ps);
      } catch (const std::runtime_error&) {
        continue;  // not a Klein four group; reported under the Table 3 criterion
      }
      const auto* dom = &inst.alg.alg;
      ++instances;
      out.require(bracket_violations_parallel(*inst.alg.gl, inst.a, dom) == 0 &&
                      bracket_violations_parallel(*inst.alg.gl, inst.b, dom) == 0,
                  row.id + " generators break brackets");
      auto d = character_dims(*inst.alg.gl, inst.a, inst.b, dom);
      out.require(d[0] + d[1] + d[2] + d[3] == inst.alg.dim(), row.id + ": character dims do not sum");
    }
  out.note(std::to_string(autos) + " exceptional automorphisms, " + std::to_string(gammas) + " Table 4 groups, " +
           std::to_string(instances) + " Table 3 instances");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  fixtures = argc > 1 ? argv[1] : default_fixture_dir();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Table 1 involutions", table1},
      {"Table 4 Klein four groups", table4},
      {"symmetric pair counts", berger},
      {"Table 3 classical rows, rank <= 8", table3},
      {"trivial centralizers", centralizers},
      {"distinct fixed dimensions", helgason},
      {"omega and tau identities", section4},
      {"property suites", properties},
  };
  bool all = true;
  int n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::cout << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL") << "  " << name << "  (" << std::fixed
              << std::setprecision(1) << s << " s)\n";
    for (const auto& l : o.lines) std::cout << "    " << l << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}

#include "klein/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace klein {

char to_char(Speciality s) { return s == Speciality::N ? 'N' : s == Speciality::S ? 'S' : 'V'; }

Speciality parse_speciality(const std::string& s) {
  if (s == "N") return Speciality::N;
  if (s == "S") return Speciality::S;
  if (s == "V") return Speciality::V;
  throw std::invalid_argument("speciality must be N, S or V, got '" + s + "'");
}

Speciality speciality(std::vector<std::string> t) {
  if (t.size() != 3) throw std::invalid_argument("involution type must have three entries");
  std::sort(t.begin(), t.end());
  int distinct = static_cast<int>(std::unique(t.begin(), t.end()) - t.begin());
  return distinct == 3 ? Speciality::N : distinct == 2 ? Speciality::S : Speciality::V;
}

int berger_weight(Speciality s) { return s == Speciality::N ? 6 : s == Speciality::S ? 3 : 1; }

namespace {

struct RawEntry {
  const char* label;
  const char* recipe;
  const char* symmetric_type;
};

const std::map<std::string, std::vector<RawEntry>>& raw_catalog() {
  static const std::map<std::string, std::vector<RawEntry>> c = {
      {"e6",
       {{"sigma1", "exp(H2)", "EII"},
        {"sigma2", "exp(H1+H6)", "EIII"},
        {"sigma3", "tau", "EIV"},
        {"sigma4", "tau*exp(H2)", "EI"}}},
      {"e7",
       {{"sigma1", "exp(H2)", "EVI"},
        {"sigma2", "exp((H2+H5+H7)/2)", "EVII"},
        {"sigma3", "exp((H2+H5+H7+2H1)/2)", "EV"}}},
      {"e8", {{"sigma1", "exp(H2)", "EIX"}, {"sigma2", "exp(H1+H2)", "EVIII"}}},
      {"f4", {{"sigma1", "exp(H1)", "FI"}, {"sigma2", "exp(H4)", "FII"}}},
      {"g2", {{"sigma", "exp(H1)", "G"}}},
  };
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& exceptional_catalog(const std::string& family) {
  static std::mutex mu;
  static std::map<std::string, std::vector<CatalogEntry>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(family);
  if (it != cache.end()) return it->second;
  auto raw = raw_catalog().find(family);
  if (raw == raw_catalog().end()) throw std::invalid_argument("no involution catalog for '" + family + "'");
  auto g = algebra_for(family);
  std::vector<CatalogEntry> out;
  std::set<std::pair<bool, int>> keys;
  for (const auto& r : raw->second) {
    CatalogEntry e;
    e.label = r.label;
    e.recipe = r.recipe;
    e.symmetric_type = r.symmetric_type;
    Aut s = build_recipe(*g, family, r.recipe);
    e.inner = s.inner();
    auto k = fixed_subalgebra<Rational>(*g, {s});
    e.fixed_dim = k.dim();
    e.fixed_type = identify(k);
    if (!keys.emplace(e.inner, e.fixed_dim).second)
      throw std::logic_error("involution catalog for " + family + " is not separated by (parity, dim)");
    out.push_back(std::move(e));
  }
  return cache.emplace(family, std::move(out)).first->second;
}

ClassLabel involution_class(const LieAlgebra& g, const std::string& family, const Aut& sigma) {
  if (!acts_trivially(compose(sigma, sigma))) throw std::invalid_argument("involution_class: not an involution");
  if (acts_trivially(sigma)) throw std::invalid_argument("involution_class: identity");
  const auto& cat = exceptional_catalog(family);
  int d = fixed_subalgebra<Rational>(g, {sigma}).dim();
  for (const auto& e : cat)
    if (e.inner == sigma.inner() && e.fixed_dim == d) return {family, e.label, e.inner, d};
  throw std::runtime_error("no catalog class for involution of " + family + " with fixed dim " + std::to_string(d) +
                           (sigma.inner() ? " (inner)" : " (outer)"));
}

std::vector<std::string> klein_type(const LieAlgebra& g, const std::string& family, const Aut& a, const Aut& b) {
  std::vector<std::string> t = {involution_class(g, family, a).label, involution_class(g, family, b).label,
                                involution_class(g, family, compose(a, b)).label};
  std::sort(t.begin(), t.end());
  return t;
}

KleinFourRecord analyze_klein_four(const std::string& family, const std::string& id, const std::string& recipe_a,
                                   const std::string& recipe_b, std::uint64_t seed) {
  auto g = algebra_for(family);
  Aut a = build_recipe(*g, family, recipe_a);
  Aut b = build_recipe(*g, family, recipe_b);
  if (!is_klein_four(a, b)) throw std::runtime_error(family + " " + id + ": generators do not span a Klein four group");
  KleinFourRecord r;
  r.family = family;
  r.id = id;
  r.generators = {recipe_a, recipe_b};
  r.fixed_type = identify(fixed_subalgebra<Rational>(*g, {a, b}), seed);
  r.involution_type = klein_type(*g, family, a, b);
  r.speciality = speciality(r.involution_type);
  r.dims = character_dims<Rational>(*g, a, b);
  return r;
}

int berger_count(const std::vector<KleinFourRecord>& rows) {
  int n = 0;
  for (const auto& r : rows) n += berger_weight(r.speciality);
  return n;
}

bool PairCoverage::complete() const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i; j < labels.size(); ++j)
      if (witness[i][j].empty()) return false;
  return true;
}

PairCoverage commuting_pairs(const std::string& family, const std::vector<KleinFourRecord>& rows) {
  PairCoverage pc;
  for (const auto& e : exceptional_catalog(family)) pc.labels.push_back(e.label);
  const std::size_t n = pc.labels.size();
  pc.witness.assign(n, std::vector<std::string>(n));
  auto pos = [&](const std::string& l) {
    return static_cast<std::size_t>(std::find(pc.labels.begin(), pc.labels.end(), l) - pc.labels.begin());
  };
  for (const auto& r : rows) {
    if (r.family != family) continue;
    const auto& t = r.involution_type;
    for (std::size_t x = 0; x < t.size(); ++x)
      for (std::size_t y = x + 1; y < t.size(); ++y) {
        std::size_t i = pos(t[x]), j = pos(t[y]);
        if (i >= n || j >= n) continue;
        if (i > j) std::swap(i, j);
        if (pc.witness[i][j].empty()) pc.witness[i][j] = r.id;
      }
  }
  return pc;
}

CentralizerCheck trivial_centralizer_check(const LieAlgebra& g, const Aut& theta) {
  CentralizerCheck c;
  c.order = order(theta);
  c.outer_order = permutation_order(theta.outer);
  c.applicable = c.order == c.outer_order;
  auto k = fixed_subalgebra<Rational>(g, {theta});
  c.centralizer_dim = centralizer(g, k).dim();
  return c;
}

}  // namespace klein

#include "klein/recipe.hpp"

#include <cctype>
#include <stdexcept>

namespace klein {

std::pair<char, int> parse_family(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("unknown family '" + name + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int r = 0;
  try {
    std::size_t used = 0;
    r = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown family '" + name + "'");
  }
  if (std::string("ABCDEFG").find(f) == std::string::npos || r < 1)
    throw std::invalid_argument("unknown family '" + name + "'");
  return {f, r};
}

std::string family_name(char family, int rank) {
  return std::string(1, static_cast<char>(std::tolower(static_cast<unsigned char>(family)))) + std::to_string(rank);
}

std::shared_ptr<const LieAlgebra> algebra_for(const std::string& family) {
  auto [f, r] = parse_family(family);
  return LieAlgebra::build(f, r);
}

namespace {

class CoweightParser {
 public:
  CoweightParser(const std::string& s, int rank) : s_(s), rank_(rank) {}

  Coweight parse() {
    Coweight h = sum();
    if (pos_ != s_.size()) fail("trailing input");
    return h;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad coweight '" + s_ + "': " + why);
  }
  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return std::stol(s_.substr(start, pos_ - start));
  }
  Coweight sum() {
    Coweight h(rank_);
    bool neg = accept('-');
    while (true) {
      Coweight t = term();
      for (int i = 0; i < rank_; ++i) h[i] += neg ? -t[i] : t[i];
      if (accept('+')) neg = false;
      else if (accept('-')) neg = true;
      else return h;
    }
  }
  Coweight term() {
    Coweight t(rank_);
    if (accept('(')) {
      t = sum();
      if (!accept(')')) fail("expected ')'");
      if (accept('/')) {
        long d = number();
        if (d == 0) fail("division by zero");
        for (auto& x : t) x = x / Rational(d);
      }
      return t;
    }
    long c = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) c = number();
    if (!accept('H')) fail("expected H");
    accept('\'');
    long i = number();
    if (i < 1 || i > rank_) fail("coroot index out of range");
    t[i - 1] = Rational(c);
    return t;
  }

  std::string s_;
  int rank_;
  std::size_t pos_ = 0;
};

Aut factor(const LieAlgebra& g, const std::string& family, const std::string& f) {
  const int r = g.rank();
  auto simple = [&](int i) {
    IntVec v(r, 0);
    v[i - 1] = 1;
    return g.root_system().index_of(v);
  };
  if (f == "id") return identity_aut(g);
  if (f.rfind("exp(", 0) == 0 && f.back() == ')')
    return torus_involution(g, parse_coweight(f.substr(4, f.size() - 5), r));
  if (f.rfind("weyl(", 0) == 0 && f.back() == ')') {
    int i = std::stoi(f.substr(5, f.size() - 6));
    if (i < 1 || i > r) throw std::invalid_argument("weyl index out of range in '" + f + "'");
    return weyl_rep(g, simple(i));
  }
  if (f == "tau") {
    if (family == "e6") return diagram_auto(g, {5, 1, 4, 3, 2, 0});
    if (family == "e7") return torus_involution(g, coweight({0, 1, 0, 0, 1, 0, 1}, 2));
    throw std::invalid_argument("tau is defined for e6 and e7 only");
  }
  if (f == "omega") {
    if (family != "e7") throw std::invalid_argument("omega is defined for e7 only");
    return compose(weyl_rep(g, simple(2)), compose(weyl_rep(g, simple(5)), weyl_rep(g, simple(7))));
  }
  if (f == "triality") {
    if (family != "d4") throw std::invalid_argument("triality is defined for d4 only");
    return diagram_auto(g, {2, 1, 3, 0});
  }
  throw std::invalid_argument("unknown generator '" + f + "'");
}

}  // namespace

Coweight parse_coweight(const std::string& text, int rank) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return CoweightParser(s, rank).parse();
}

Aut build_recipe(const LieAlgebra& g, const std::string& family, const std::string& recipe) {
  std::string s;
  for (char c : recipe)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty recipe");
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '*' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  Aut a = factor(g, family, parts.back());
  for (int i = static_cast<int>(parts.size()) - 2; i >= 0; --i) a = compose(factor(g, family, parts[i]), a);
  return a;
}

}  // namespace klein

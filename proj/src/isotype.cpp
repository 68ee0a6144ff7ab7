#include "klein/isotype.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace klein {

IsoType IsoType::make(int abelian_rank, std::vector<SimpleType> simples) {
  IsoType t;
  t.abelian_rank = abelian_rank;
  for (auto& s : simples) s = canonical_simple(s.family, s.rank);
  std::sort(simples.begin(), simples.end(), [](const SimpleType& a, const SimpleType& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.family < b.family;
  });
  t.simples = std::move(simples);
  return t;
}

int IsoType::dim() const {
  int d = abelian_rank;
  for (const auto& s : simples) d += simple_dim(s);
  return d;
}

int IsoType::rank() const {
  int r = abelian_rank;
  for (const auto& s : simples) r += s.rank;
  return r;
}

std::string IsoType::str() const {
  std::string out;
  for (std::size_t i = 0; i < simples.size();) {
    std::size_t j = i;
    while (j < simples.size() && simples[j] == simples[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += simples[i].str();
    i = j;
  }
  if (abelian_rank > 0) {
    if (!out.empty()) out += "+";
    out += "T" + std::to_string(abelian_rank);
  }
  return out.empty() ? "0" : out;
}

IsoType operator+(const IsoType& a, const IsoType& b) {
  auto s = a.simples;
  s.insert(s.end(), b.simples.begin(), b.simples.end());
  return IsoType::make(a.abelian_rank + b.abelian_rank, s);
}

namespace {

IsoType times(const IsoType& t, long k) {
  IsoType r;
  for (long i = 0; i < k; ++i) r = r + t;
  return r;
}

IsoType simple_or_zero(char family, long rank) {
  if (rank <= 0) return {};
  return IsoType::make(0, {canonical_simple(family, static_cast<int>(rank))});
}

IsoType su(long n) { return n >= 2 ? simple_or_zero('A', n - 1) : IsoType{}; }

IsoType so(long n) {
  if (n <= 1) return {};
  if (n == 2) return IsoType::make(1, {});
  if (n == 4) return IsoType::make(0, {{'A', 1}, {'A', 1}});
  if (n % 2) return simple_or_zero('B', (n - 1) / 2);
  return simple_or_zero('D', n / 2);
}

IsoType sp(long n) { return simple_or_zero('C', n); }

IsoType u(long n) { return n >= 1 ? su(n) + IsoType::make(1, {}) : IsoType{}; }

class Parser {
 public:
  Parser(const std::string& s, const std::map<char, long>& params) : params_(params) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    // Accept the direct-sum sign as a plus.
    std::string t;
    for (std::size_t i = 0; i < s_.size(); ++i) {
      if (s_.compare(i, 3, "\xe2\x8a\x95") == 0) {
        t += '+';
        i += 2;
      } else {
        t += s_[i];
      }
    }
    s_ = t;
  }

  IsoType parse() {
    IsoType t = sum();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

  // Sum of u(...) terms inside s(...): returns (semisimple part, number of nonzero u factors).
  std::pair<IsoType, long> s_of_u_sum() {
    IsoType ss;
    long factors = 0;
    do {
      expect("u(");
      long n = expr();
      expect(")");
      ss = ss + su(n);
      if (n >= 1) ++factors;
    } while (accept('+'));
    return {ss, factors};
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse algebra spelling '" + s_ + "': " + why + " at " + std::to_string(pos_));
  }
  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(const std::string& w) {
    if (s_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& w) {
    if (!accept(w)) fail("expected '" + w + "'");
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  IsoType sum() {
    IsoType t = term();
    while (accept('+')) t = t + term();
    return t;
  }

  IsoType term() {
    long mult = 1;
    std::size_t k = count_digits();
    if (k > 0 && pos_ + k < s_.size() && s_[pos_ + k] >= 'A' && s_[pos_ + k] <= 'G') mult = number();
    IsoType t = atom();
    if (accept('^')) t = times(t, number());
    return times(t, mult);
  }

  std::size_t count_digits() const {
    std::size_t k = 0;
    while (pos_ + k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + k]))) ++k;
    return k;
  }

  IsoType atom() {
    if (accept('(')) {
      IsoType t = sum();
      expect(")");
      return t;
    }
    if (accept("iR")) return IsoType::make(1, {});
    if (accept("s(")) {
      auto [ss, k] = s_of_u_sum();
      expect(")");
      return ss + IsoType::make(static_cast<int>(std::max(0L, k - 1)), {});
    }
    if (accept("su(")) return call(su);
    if (accept("so(")) return call(so);
    if (accept("sp(")) return call(sp);
    if (accept("u(")) return call(u);
    if (accept("e6")) return simple_or_zero('E', 6);
    if (accept("e7")) return simple_or_zero('E', 7);
    if (accept("e8")) return simple_or_zero('E', 8);
    if (accept("f4")) return simple_or_zero('F', 4);
    if (accept("g2")) return simple_or_zero('G', 2);
    if (accept('0')) return {};
    char c = peek();
    if (c == 'T') {
      ++pos_;
      return IsoType::make(static_cast<int>(number()), {});
    }
    if (c >= 'A' && c <= 'G') {
      ++pos_;
      return simple_or_zero(c, number());
    }
    fail("unknown term");
  }

  IsoType call(IsoType (*f)(long)) {
    long n = expr();
    expect(")");
    return f(n);
  }

  long number() {
    std::size_t k = count_digits();
    if (k == 0) fail("expected number");
    long v = std::stol(s_.substr(pos_, k));
    pos_ += k;
    return v;
  }

  // Integer expression over parameters: products of atoms joined by + and -.
  long expr() {
    long v = product();
    while (true) {
      if (accept('+')) v += product();
      else if (accept('-')) v -= product();
      else return v;
    }
  }
  long product() {
    long v = factor();
    while (true) {
      if (accept('*')) v *= factor();
      else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(') v *= factor();
      else return v;
    }
  }
  long factor() {
    if (accept('(')) {
      long v = expr();
      expect(")");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return number();
    char c = peek();
    auto it = params_.find(c);
    if (it == params_.end()) fail(std::string("unbound parameter '") + c + "'");
    ++pos_;
    return it->second;
  }

  std::string s_;
  std::size_t pos_ = 0;
  const std::map<char, long>& params_;
};

}  // namespace

IsoType parse_spelling(const std::string& text, const std::map<char, long>& params) {
  return Parser(text, params).parse();
}

}  // namespace klein

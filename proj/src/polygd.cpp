#include "admlab/polygd.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace admlab {

PolyGD::PolyGD(const Rational& c) { add_term({0, 0}, c); }

PolyGD PolyGD::g() { return monomial(Rational(1), 1, 0); }
PolyGD PolyGD::d() { return monomial(Rational(1), 0, 1); }

PolyGD PolyGD::monomial(const Rational& c, unsigned g_power, unsigned d_power) {
  PolyGD p;
  p.add_term({g_power, d_power}, c);
  return p;
}

void PolyGD::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool PolyGD::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.count({0, 0}) == 1); }

Rational PolyGD::constant() const { return coefficient(0, 0); }

Rational PolyGD::coefficient(unsigned g_power, unsigned d_power) const {
  const auto it = terms_.find({g_power, d_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned PolyGD::degree() const {
  unsigned deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.first + m.second);
  return deg;
}

Rational PolyGD::evaluate(const Rational& g, const Rational& d) const {
  Rational sum;
  for (const auto& [m, c] : terms_) {
    sum += c * Rational::power(g, m.first) * Rational::power(d, m.second);
  }
  return sum;
}

PolyGD PolyGD::substitute_d(const PolyGD& value) const {
  PolyGD out;
  for (const auto& [m, c] : terms_) out += monomial(c, m.first, 0) * value.pow(m.second);
  return out;
}

PolyGD& PolyGD::operator+=(const PolyGD& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolyGD& PolyGD::operator-=(const PolyGD& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PolyGD& PolyGD::operator*=(const PolyGD& o) {
  PolyGD out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) out.add_term({m1.first + m2.first, m1.second + m2.second}, c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

PolyGD PolyGD::operator-() const {
  PolyGD out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

PolyGD PolyGD::pow(unsigned exponent) const {
  PolyGD result(1);
  PolyGD base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

std::string PolyGD::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> order(terms_.begin(), terms_.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    const unsigned da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : order) {
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    const bool unit = mag == Rational(1);
    const bool has_var = m.first > 0 || m.second > 0;
    if (!unit || !has_var) out += mag.is_integer() || !has_var ? mag.to_string() : "(" + mag.to_string() + ")";
    if (m.first > 0) out += m.first == 1 ? "g" : "g^" + std::to_string(m.first);
    if (m.second > 0) out += m.second == 1 ? "d" : "d^" + std::to_string(m.second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser: expr := ['-'] term (('+'|'-') term)*
//         term := factor (('*'|'/')? factor)*      juxtaposition multiplies
//         factor := atom ('^' integer)?
//         atom := integer | 'g' | 'd' | '(' expr ')'

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  PolyGD run() {
    PolyGD p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw PolyParseError("cannot parse polynomial '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  PolyGD expr() {
    PolyGD p;
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    p = term();
    if (negate) p = -p;
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      if (c == '+') p += term();
      else p -= term();
    }
    return p;
  }

  PolyGD term() {
    PolyGD p = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        p *= factor();
      } else if (c == '/') {
        ++pos_;
        const PolyGD q = factor();
        if (!q.is_constant() || q.is_zero()) fail("division by a non-constant or zero");
        p *= PolyGD(q.constant().inverse());
      } else if (c == '(' || c == 'g' || c == 'd' || std::isdigit(static_cast<unsigned char>(c))) {
        p *= factor();
      } else {
        return p;
      }
    }
  }

  PolyGD factor() {
    PolyGD base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_ || pos_ - start > 3) fail("bad exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  PolyGD atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      PolyGD p = expr();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return p;
    }
    if (c == 'g') {
      ++pos_;
      return PolyGD::g();
    }
    if (c == 'd') {
      ++pos_;
      return PolyGD::d();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return PolyGD(Rational::parse(s_.substr(start, pos_ - start)));
    }
    fail(c == '\0' ? "unexpected end" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyGD PolyGD::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace admlab

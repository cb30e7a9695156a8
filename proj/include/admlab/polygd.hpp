#pragma once

#include "admlab/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace admlab {

/// Polynomial in the formal variables g and d with rational coefficients, kept expanded.
class PolyGD {
 public:
  using Monomial = std::pair<unsigned, unsigned>;  // (power of g, power of d)

  PolyGD() = default;
  PolyGD(long c) : PolyGD(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  PolyGD(const Rational& c);               // NOLINT(google-explicit-constructor)

  static PolyGD g();
  static PolyGD d();
  static PolyGD monomial(const Rational& c, unsigned g_power, unsigned d_power);

  /// Accepts expressions such as "16g(g-1)^3", "1 + 39(3g-1)(2g-1)/2", "-(4g-4)d^2":
  /// integers, g, d, + - *, juxtaposition, parentheses, ^ with a non-negative integer
  /// exponent, and division by a nonzero constant.
  static PolyGD parse(std::string_view text);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the whole value when is_constant()).
  Rational constant() const;
  Rational coefficient(unsigned g_power, unsigned d_power) const;
  unsigned degree() const;

  Rational evaluate(const Rational& g, const Rational& d) const;
  /// Replaces d by a polynomial.
  PolyGD substitute_d(const PolyGD& value) const;

  PolyGD& operator+=(const PolyGD& o);
  PolyGD& operator-=(const PolyGD& o);
  PolyGD& operator*=(const PolyGD& o);
  friend PolyGD operator+(PolyGD a, const PolyGD& b) { return a += b; }
  friend PolyGD operator-(PolyGD a, const PolyGD& b) { return a -= b; }
  friend PolyGD operator*(PolyGD a, const PolyGD& b) { return a *= b; }
  PolyGD operator-() const;
  PolyGD pow(unsigned exponent) const;

  friend bool operator==(const PolyGD&, const PolyGD&) = default;

  /// Expanded form, highest degree first: "16g^4 - 48g^3 + 48g^2 - 16g".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

class PolyParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace admlab

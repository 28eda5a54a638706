#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace topohopf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point (q1, q2, q3) at which polynomials are specialised.
using QPoint = std::array<Rational, 3>;

/// Exponent triple of q1^a q2^b q3^c.
struct Monomial {
  std::array<unsigned, 3> exp{};

  unsigned total() const noexcept { return exp[0] + exp[1] + exp[2]; }
  bool operator==(const Monomial&) const = default;
};

/// Graded order: total degree ascending, then exponents lexicographically
/// descending, so 1 < q1 < q2 < q3 < q1^2 < q1*q2 < ...
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.exp > b.exp;
  }
};

/// Polynomial in q1, q2, q3 with arbitrary-precision integer coefficients.
class QPoly {
 public:
  using Terms = std::map<Monomial, BigInt, MonomialOrder>;

  QPoly() = default;
  QPoly(int c) : QPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  QPoly(long long c) : QPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  QPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  /// coeff * q1^a q2^b q3^c.
  static QPoly monomial(const BigInt& coeff, unsigned a, unsigned b, unsigned c);
  /// The indeterminate q_index (index 1, 2 or 3) raised to `power`.
  static QPoly q(int index, unsigned power = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  BigInt coeff(const Monomial& m) const;

  /// Largest exponent of q_index appearing.
  unsigned degree_in(int index) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  bool operator==(const QPoly& other) const = default;

  Rational evaluate(const QPoint& point) const;

  /// Exchanges q1 and q2.
  QPoly swap_q1_q2() const;

  /// Rendering: "1 - q1 - q2", "q1^2*q2", "-3*q1*q3", "0".
  std::string to_string() const;

  /// Parses sums and products of integers, q1..q3, powers and parentheses.
  /// Throws Error(Parse).
  static QPoly parse(std::string_view text);

 private:
  void add_term(const Monomial& m, const BigInt& c);

  Terms terms_;
};

std::string to_string(const Rational& r);

}  // namespace topohopf

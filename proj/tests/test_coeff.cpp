#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "topohopf/exact_linalg.hpp"
#include "topohopf/qpoly.hpp"

using namespace topohopf;

namespace {

QPoly random_poly(std::mt19937& rng) {
  QPoly p;
  std::uniform_int_distribution<int> coeff(-5, 5), exp(0, 2), terms(0, 4);
  for (int t = terms(rng); t > 0; --t) {
    const int c = coeff(rng);
    const auto a = static_cast<unsigned>(exp(rng)), b = static_cast<unsigned>(exp(rng)), d = static_cast<unsigned>(exp(rng));
    p += QPoly::monomial(c, a, b, d);
  }
  return p;
}

std::size_t float_rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  Eigen::MatrixXd d(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[0].size(); ++j) d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i][j].convert_to<double>();
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(d);
  return static_cast<std::size_t>(lu.rank());
}

}  // namespace

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(7);
  for (int k = 0; k < 300; ++k) {
    const QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QPoly());
    CHECK((a + -a).is_zero());
    CHECK(QPoly::parse(a.to_string()) == a);
    const QPoint p{Rational(1, 2), Rational(-3), Rational(2, 7)};
    CHECK((a * b).evaluate(p) == a.evaluate(p) * b.evaluate(p));
    CHECK(a.swap_q1_q2().swap_q1_q2() == a);
  }
}

TEST_CASE("printing and parsing") {
  const QPoly q1 = QPoly::q(1), q2 = QPoly::q(2);
  CHECK(QPoly().to_string() == "0");
  CHECK(QPoly(1).to_string() == "1");
  CHECK((QPoly(1) - q1 - q2).to_string() == "1 - q1 - q2");
  CHECK((q1 * q1).to_string() == "q1^2");
  CHECK(QPoly::parse("q1*q2*q3") == QPoly::q(1) * QPoly::q(2) * QPoly::q(3));
  CHECK(QPoly::parse("-2*q1^2 + 3") == QPoly(3) - QPoly(2) * q1 * q1);
  CHECK_THROWS(QPoly::parse("q4"));
  CHECK_THROWS(QPoly::parse("1 +"));
  CHECK((QPoly(1) - q1 - q2).evaluate({Rational(1, 2), Rational(1, 2), Rational(0)}) == 0);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("big coefficients stay exact") {
  QPoly p = QPoly(1) + QPoly::q(1);
  QPoly acc(1);
  for (int i = 0; i < 80; ++i) acc *= p;
  CHECK(acc.coeff(Monomial{{40, 0, 0}}) == BigInt("107507208733336176461620"));
}

TEST_CASE("exact rank against a floating-point oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3), dim(1, 9);
  for (int k = 0; k < 200; ++k) {
    const int r = dim(rng), c = dim(rng), rank_cap = dim(rng);
    // Product of r x k and k x c has rank <= k.
    IntMatrix a(static_cast<std::size_t>(r), std::vector<BigInt>(static_cast<std::size_t>(rank_cap)));
    IntMatrix b(static_cast<std::size_t>(rank_cap), std::vector<BigInt>(static_cast<std::size_t>(c)));
    for (auto& row : a) for (auto& v : row) v = entry(rng);
    for (auto& row : b) for (auto& v : row) v = entry(rng);
    IntMatrix m(static_cast<std::size_t>(r), std::vector<BigInt>(static_cast<std::size_t>(c)));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        for (int t = 0; t < rank_cap; ++t) m[i][j] += a[i][t] * b[t][j];
    const std::size_t exact = exact_rank(m);
    CHECK(exact == float_rank(m));
    CHECK(exact == exact_rank_serial(m));
    const auto null = integer_nullspace(m, static_cast<std::size_t>(c));
    CHECK(null.size() == static_cast<std::size_t>(c) - exact);
    for (const auto& v : null) {
      for (const auto& row : m) {
        BigInt dot = 0;
        for (std::size_t j = 0; j < v.size(); ++j) dot += row[j] * v[j];
        CHECK(dot == 0);
      }
    }
  }
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{2, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 2}}) == 3);
}

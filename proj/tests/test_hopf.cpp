#include <doctest.h>

#include "oracles.hpp"
#include "topohopf/enumerate.hpp"
#include "topohopf/errors.hpp"
#include "topohopf/hopf_topology.hpp"
#include "topohopf/pairing.hpp"
#include "topohopf/ribbon.hpp"
#include "topohopf/text_format.hpp"

using namespace topohopf;

namespace {

Topology T(const char* s) { return parse_topology(s); }

std::multiset<std::pair<std::string, std::string>> flatten(const TopTensor& t) {
  std::multiset<std::pair<std::string, std::string>> out;
  for (const auto& [ab, c] : t) {
    REQUIRE(c.terms().size() == 1);
    REQUIRE(c.terms().begin()->first.total() == 0);
    for (auto k = c.terms().begin()->second; k > 0; --k) out.emplace(ab.first.key(), ab.second.key());
  }
  return out;
}

}  // namespace

TEST_CASE("products against the oracle") {
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; a + b <= 4; ++b) {
      for (const auto& x : topologies_of_degree(a)) {
        for (const auto& y : topologies_of_degree(b)) {
          const auto rx = oracle::relation(x), ry = oracle::relation(y);
          CHECK(product_dot(x, y) == oracle::topology(oracle::product(rx, ry, false)));
          // The closure of "maxima of x below minima of y" is the full block.
          CHECK(product_down(x, y) == oracle::topology(oracle::product(rx, ry, true)));
        }
      }
    }
  }
  CHECK(product_down(T("[3|1<2,1<3]"), T("[2|2<1]")) == T("[5|1<2,1<3,2<5,3<5,5<4]"));
  CHECK(product_dot(T("[3|1<3]"), T("[3|1<2,1<3]")) == T("[6|1<3,4<5,4<6]"));
}

TEST_CASE("coproduct against the oracle") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& t : topologies_of_degree(n)) CHECK(flatten(coproduct(t)) == oracle::coproduct(oracle::relation(t)));
  }
}

TEST_CASE("counit and antipode") {
  CHECK(counit(Topology()) == QPoly(1));
  CHECK(counit(T("[1|]")).is_zero());
  CHECK(antipode(TopComb(Topology())) == TopComb(Topology()));
  CHECK(antipode(TopComb(T("[1|]"))) == -TopComb(T("[1|]")));
  CHECK(antipode(TopComb(T("[2|1<2]"))) == TopComb(T("[2|]")) - TopComb(T("[2|1<2]")));
  // S is an anti-morphism of the commutative-free product: S(xy) = S(y)S(x).
  for (const auto& x : topologies_of_degree(2)) {
    for (const auto& y : topologies_of_degree(1)) {
      CHECK(antipode(product_dot(TopComb(x), TopComb(y))) ==
            product_dot(antipode(TopComb(y)), antipode(TopComb(x))));
    }
  }
}

TEST_CASE("factorization and indecomposables") {
  const auto r = decompose(T("[4|1<2,3<4]"), ProductKind::Dot);
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0] == T("[2|1<2]"));
  CHECK(r.factors[1] == T("[2|1<2]"));
  CHECK(decompose(T("[3|1<2<3]"), ProductKind::Down).factors.size() == 3);
  CHECK(decompose(T("[3|1<2,3<2]"), ProductKind::Dot).factors.size() == 1);
  CHECK_THROWS_AS(decompose(Topology(), ProductKind::Dot), Error);
  std::size_t dot = 0, both = 0;
  for (const auto& t : topologies_of_degree(3)) {
    const bool d = decompose(t, ProductKind::Dot).factors.size() == 1;
    const bool w = decompose(t, ProductKind::Down).factors.size() == 1;
    dot += d;
    both += d && w;
    if (d && w) CHECK(indecomposability_class(t) == IndecClass::Bi);
  }
  CHECK(dot == 22);
  CHECK(both == 15);
}

TEST_CASE("theta_q") {
  const QPoly q = QPoly::q(1);
  CHECK(theta_q(T("[3|{1,2,3}]")) == q * q * TopComb(T("[1|]")));
  CHECK(theta_q(T("[3|{1,3}<2]")) == q * TopComb(T("[2|1<2]")));
  CHECK(theta_q(T("[3|1<2,1<3]")) == TopComb(T("[3|1<2,1<3]")));
  CHECK(theta_0(TopComb(T("[2|{1,2}]"))).is_zero());
}

TEST_CASE("ribbon basis change is the zeta transform") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& t : topologies_of_degree(n)) {
      TopComb expect;
      for (const auto& s : topologies_of_degree(n)) {
        if (refinement_leq(s, t)) expect.add(s, 1);
      }
      RibbonComb sum;
      for (const auto& s : topologies_of_degree(n)) {
        if (refinement_leq(s, t)) sum.add(RibbonLabel{s}, 1);
      }
      CHECK(from_ribbon(sum) == TopComb(t));
      CHECK(to_ribbon(TopComb(t)) == sum);
    }
  }
  CHECK(refinement_down_set(T("[2|1<2]")).size() == 2);
}

TEST_CASE("pictures against the oracle") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& a : topologies_of_degree(n)) {
      for (const auto& b : topologies_of_degree(n)) {
        CHECK(pictures_count(a, b) == oracle::pictures(oracle::relation(a), oracle::relation(b)));
      }
    }
  }
  const auto& four = topologies_of_degree(4);
  for (std::size_t i = 0; i < four.size(); i += 7) {
    for (std::size_t j = 0; j < four.size(); j += 11) {
      CHECK(pictures_count(four[i], four[j]) == oracle::pictures(oracle::relation(four[i]), oracle::relation(four[j])));
    }
  }
  CHECK(pictures_count(T("[2|]"), T("[1|]")) == 0);
}

TEST_CASE("Gram matrices") {
  CHECK(gram_matrix(2) == gram_matrix_serial(2));
  CHECK(gram_matrix(3) == gram_matrix_serial(3));
  CHECK(gram_rank(1) == 1);
  CHECK(gram_rank(2) == 3);
  CHECK(gram_rank(3) == 16);
  CHECK(pairing(TopComb(T("[2|]")) - TopComb(T("[2|1<2]")) - TopComb(T("[2|2<1]")), TopComb(T("[2|]"))).is_zero());
}

TEST_CASE("iota is an isometry only after reversing the labels") {
  // The unreversed statement already fails in degree 3.
  CHECK(pictures_count(T("[3|3<2]"), T("[3|3<1,3<2]")) == 1);
  CHECK(pictures_count(iota(T("[3|3<2]")), iota(T("[3|3<1,3<2]"))) == 2);
  auto rev = [](const Topology& t) {
    const std::size_t n = t.degree();
    oracle::Rel r(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r[n - 1 - i][n - 1 - j] = t.leq(j, i);
    return oracle::topology(r);
  };
  for (const auto& a : topologies_of_degree(3)) {
    for (const auto& b : topologies_of_degree(3)) CHECK(pictures_count(rev(a), rev(b)) == pictures_count(a, b));
  }
}

#include <doctest.h>

#include "oracles.hpp"
#include "topohopf/enumerate.hpp"
#include "topohopf/text_format.hpp"
#include "topohopf/tpartition.hpp"

using namespace topohopf;

namespace {

oracle::W w(const PackedWord& f) { return {f.letters().begin(), f.letters().end()}; }

QPoly monomial(const oracle::Stats& s) {
  return QPoly::monomial(1, static_cast<unsigned>(s.l1), static_cast<unsigned>(s.l2), static_cast<unsigned>(s.l3));
}

}  // namespace

TEST_CASE("partitions and statistics against the definitions") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& t : topologies_of_degree(n)) {
      const auto r = oracle::relation(t);
      WordComb expect_gamma;
      std::vector<PackedWord> expect_strict;
      for (const auto& f : oracle::packed_words(n)) {
        if (!oracle::generalized(r, f)) continue;
        const auto s = oracle::stats(r, f);
        expect_gamma.add(PackedWord(f), monomial(s));
        // The two descriptions of strictness agree.
        CHECK(oracle::strict(r, f) == (s.l2 == 0 && s.l3 == 0));
        if (oracle::strict(r, f)) expect_strict.push_back(PackedWord(f));
      }
      CHECK(gamma_q(t) == expect_gamma);
      auto strict = strict_partitions(t);
      std::sort(strict.begin(), strict.end());
      std::sort(expect_strict.begin(), expect_strict.end());
      CHECK(strict == expect_strict);
      for (const auto& p : generalized_partitions(t)) {
        const auto s = oracle::stats(r, w(p.word));
        CHECK(p.stats.l1 == s.l1);
        CHECK(p.stats.l2 == s.l2);
        CHECK(p.stats.l3 == s.l3);
      }
    }
  }
}

TEST_CASE("small examples") {
  const auto chain = parse_topology("[2|1<2]");
  CHECK(generalized_partitions(chain).size() == 2);
  CHECK(partition_stats(chain, PackedWord{1, 1}).l1 == 1);
  CHECK(strict_partitions(parse_topology("[2|2<1]")) == std::vector<PackedWord>{PackedWord{2, 1}});
  CHECK(generalized_partitions(parse_topology("[1|]")).size() == 1);
  const auto five = parse_topology("[5|{2,4}<5,{2,4}<1]");
  CHECK(generalized_partitions(five).size() == 32);
  CHECK(strict_partitions(five).size() == 20);
  CHECK(linear_extensions(five).size() == 8);
}

TEST_CASE("linear extensions against the definition") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& t : topologies_of_degree(n)) {
      std::vector<PackedWord> expect;
      for (const auto& f : oracle::linear_extensions(oracle::relation(t))) expect.emplace_back(f);
      auto got = linear_extensions(t);
      std::sort(got.begin(), got.end());
      std::sort(expect.begin(), expect.end());
      CHECK(got == expect);
    }
  }
  auto six = linear_extensions(parse_topology("[6|{2,4}<{1,5,6},{2,4}<3]"));
  std::sort(six.begin(), six.end());
  CHECK(six == std::vector<PackedWord>{PackedWord{2, 1, 3, 1, 2, 2}, PackedWord{3, 1, 2, 1, 3, 3}});
}

TEST_CASE("Stanley decomposition on posets against a P-partition oracle") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& t : topologies_of_degree(n)) {
      if (!is_t0(t)) continue;
      const auto r = oracle::relation(t);
      std::multiset<oracle::W> pieces;
      for (const auto& e : oracle::linear_extensions(r)) {
        for (const auto& g : oracle::packed_words(n)) {
          if (oracle::word_leq(g, e)) pieces.insert(g);
        }
      }
      std::multiset<oracle::W> strict;
      for (const auto& f : oracle::packed_words(n)) {
        if (oracle::strict(r, f)) strict.insert(f);
      }
      CHECK(pieces == strict);
      std::multiset<oracle::W> got;
      for (const auto& [f, down] : stanley_decomposition(t)) {
        for (const auto& g : down) got.insert(w(g));
      }
      CHECK(got == strict);
    }
  }
}

TEST_CASE("kernel of L in degree 3") {
  const auto k = l_kernel_basis(3);
  CHECK(k.size() == 16);
  for (const auto& x : k) CHECK(l_morphism(x).is_zero());
  CHECK(l_kernel_basis(2).size() == 1);
}

#include <doctest.h>

#include "oracles.hpp"
#include "topohopf/enumerate.hpp"
#include "topohopf/wqsym.hpp"

using namespace topohopf;

namespace {

oracle::W w(const PackedWord& f) { return {f.letters().begin(), f.letters().end()}; }

std::multiset<oracle::W> flatten(const WordComb& x) {
  std::multiset<oracle::W> out;
  for (const auto& [f, c] : x) {
    REQUIRE(c.terms().size() == 1);
    for (auto k = c.terms().begin()->second; k > 0; --k) out.insert(w(f));
  }
  return out;
}

std::vector<std::pair<PackedWord, PackedWord>> small_pairs(std::size_t total) {
  std::vector<std::pair<PackedWord, PackedWord>> out;
  for (std::size_t a = 0; a <= total; ++a) {
    for (std::size_t b = 0; a + b <= total; ++b) {
      for (const auto& f : packed_words_of_length(a)) {
        for (const auto& g : packed_words_of_length(b)) out.emplace_back(f, g);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("products against the oracle") {
  for (const auto& [f, g] : small_pairs(4)) {
    CHECK(flatten(wqsym_product(f, g)) == oracle::wqsym_product(w(f), w(g)));
    CHECK(flatten(shuffle_product(f, g)) == oracle::shifted_shuffle(w(f), w(g)));
  }
  CHECK(wqsym_product(PackedWord{1, 1, 2}, PackedWord{1, 2}).size() == 13);
}

TEST_CASE("coproduct against the oracle") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& f : packed_words_of_length(n)) {
      WordTensor expect;
      for (const auto& [a, b] : oracle::wqsym_coproduct(w(f))) expect.add({PackedWord(a), PackedWord(b)}, 1);
      CHECK(wqsym_coproduct(f) == expect);
    }
  }
}

TEST_CASE("FQSym and the projection") {
  const auto p = fqsym_product(Permutation{1}, Permutation{1});
  CHECK(p.size() == 2);
  CHECK(varpi(WordComb(PackedWord{1, 1})).is_zero());
  CHECK(varpi(WordComb(PackedWord{2, 1})) == PermComb(Permutation{2, 1}));
  for (const auto& [f, g] : small_pairs(3)) {
    if (!f.is_permutation() || !g.is_permutation()) continue;
    std::multiset<oracle::W> expect;
    for (const auto& h : oracle::wqsym_product(w(f), w(g))) {
      if (std::set<int>(h.begin(), h.end()).size() == h.size()) expect.insert(h);
    }
    CHECK(flatten(as_words(fqsym_product(Permutation(f), Permutation(g)))) == expect);
  }
}

TEST_CASE("the order on packed words against the oracle") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& g : packed_words_of_length(n)) {
      for (const auto& f : packed_words_of_length(n)) CHECK(word_leq(g, f) == oracle::word_leq(w(g), w(f)));
    }
  }
  CHECK(word_leq(PackedWord{1, 1}, PackedWord{1, 2}));
  CHECK_FALSE(word_leq(PackedWord{1, 1}, PackedWord{2, 1}));
  CHECK(word_leq(PackedWord{2, 1, 1}, PackedWord{3, 1, 2}));
}

TEST_CASE("phi is unitriangular and matches the down-sets") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& f : packed_words_of_length(n)) {
      WordComb expect;
      for (const auto& g : packed_words_of_length(n)) {
        if (word_leq(g, f)) expect.add(g, 1);
      }
      CHECK(phi(PhiVariant::P100, f) == expect);
      WordComb expect_prime;
      for (const auto& g : packed_words_of_length(n)) {
        if (word_leq_prime(g, f)) expect_prime.add(g, 1);
      }
      CHECK(phi(PhiVariant::P010, f) == expect_prime);
    }
  }
}

TEST_CASE("fibers of Std") {
  CHECK(std_fiber(Permutation{1, 2, 3}).size() == 4);
  CHECK(std_fiber(Permutation{3, 2, 1}).size() == 1);
  for (const auto& s : enumerate_permutations(4)) {
    for (const auto& f : std_fiber(s)) CHECK(std_word(f) == s);
  }
  for (std::size_t n = 1; n <= 4; ++n) CHECK(order_iso_check(n).mismatches == 0);
}

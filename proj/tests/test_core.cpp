#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "topohopf/enumerate.hpp"
#include "topohopf/errors.hpp"
#include "topohopf/text_format.hpp"
#include "topohopf/topology.hpp"

using namespace topohopf;

TEST_CASE("pack, std and j on small words") {
  const Word w{3, 3, 1, 7};
  CHECK(pack(w) == PackedWord{2, 2, 1, 3});
  CHECK(std_word(PackedWord{1, 1, 2}) == Permutation{1, 2, 3});
  CHECK(std_word(PackedWord{2, 1, 1}) == Permutation{3, 1, 2});
  CHECK(j_involution(PackedWord{1, 1, 2}) == PackedWord{2, 2, 1});
  CHECK(j_involution(PackedWord{}) == PackedWord{});
  CHECK(restrict_word(std::vector<int>{1, 1, 2, 3, 4}, std::vector<int>{1, 2, 3}) == Word{1, 1, 2, 3});
}

TEST_CASE("packed words reject gaps and non-positive letters") {
  CHECK_THROWS_AS(PackedWord({1, 3}), Error);
  CHECK_THROWS_AS(PackedWord({0, 1}), Error);
  CHECK_THROWS_AS(Permutation({1, 1}), Error);
  try {
    PackedWord({2, 2});
    FAIL("expected NotPacked");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPacked);
  }
}

TEST_CASE("pack and j agree with the oracle on every word over [4]") {
  for (const auto& f : oracle::packed_words(4)) {
    const PackedWord p(f);
    CHECK(j_involution(j_involution(p)) == p);
    const PackedWord packed = pack(f);
    CHECK(std::vector<int>(packed.letters().begin(), packed.letters().end()) == oracle::pack(f));
    // Std refines the letter order, ties left to right.
    const auto s = std_word(p);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t k = i + 1; k < f.size(); ++k) CHECK((s[i] < s[k]) == (f[i] <= f[k]));
    }
  }
}

TEST_CASE("M(f) from the definition") {
  for (const auto& f : oracle::packed_words(4)) {
    const PackedWord p(f);
    const int m = p.max_letter();
    Subset expect = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      bool last = true, next_after = true;
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] == f[i] && k > i) last = false;
        if (f[k] == f[i] + 1 && k <= i) next_after = false;
      }
      if (f[i] < m && last && next_after) expect |= Subset{1} << i;
    }
    CHECK(ascent_set(p) == expect);
  }
  CHECK(ascent_set(PackedWord{1, 2, 3}) == 0b011);
  CHECK(ascent_set(PackedWord{3, 2, 1}) == 0);
}

TEST_CASE("enumeration matches the brute-force preorders") {
  for (std::size_t n = 0; n <= 4; ++n) {
    std::set<std::string> expect;
    for (const auto& r : oracle::all_preorders(n)) expect.insert(oracle::topology(r).key());
    std::set<std::string> got;
    const auto ts = enumerate_topologies(n);
    for (const auto& t : ts) got.insert(t.key());
    CHECK(got.size() == ts.size());
    CHECK(got == expect);
    CHECK(std::is_sorted(ts.begin(), ts.end()));
  }
}

TEST_CASE("enumeration counts") {
  const std::vector<std::size_t> all{1, 1, 4, 29, 355, 6942};
  const std::vector<std::size_t> t0{1, 1, 3, 19, 219, 4231};
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto& ts = topologies_of_degree(n);
    CHECK(ts.size() == all[n]);
    CHECK(static_cast<std::size_t>(std::count_if(ts.begin(), ts.end(), is_t0)) == t0[n]);
  }
  const std::vector<std::size_t> fubini{1, 1, 3, 13, 75, 541, 4683};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(packed_words_of_length(n).size() == fubini[n]);
  CHECK(enumerate_permutations(4).size() == 24);
  CHECK_THROWS_AS(enumerate_topologies(7), Error);
}

TEST_CASE("make_topology validates") {
  CHECK_NOTHROW(Topology::from_matrix({{true, true}, {false, true}}));
  try {
    Topology::from_matrix({{false, true}, {false, true}});
    FAIL("expected NotReflexive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotReflexive);
  }
  try {
    Topology::from_matrix({{true, true, false}, {false, true, true}, {false, false, true}});
    FAIL("expected NotTransitive");
  } catch (const NotTransitiveError& e) {
    CHECK(e.witness() == std::array<std::size_t, 3>{1, 2, 3});
  }
  CHECK_THROWS_AS(make_topology(3, {{true}}), Error);
}

TEST_CASE("iota, bar and T_f") {
  for (const auto& t : topologies_of_degree(4)) {
    CHECK(iota(iota(t)) == t);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) CHECK(iota(t).leq(i, j) == t.leq(j, i));
    }
    CHECK(is_t0(bar(t)));
    CHECK(bar(t).degree() + c_defect(t) == t.degree());
    // Open sets of iota(T) are the complements of open sets of T.
    std::set<Subset> comp;
    for (Subset o : open_sets(t)) comp.insert(t.ground() & ~o);
    const auto io = open_sets(iota(t));
    CHECK(comp == std::set<Subset>(io.begin(), io.end()));
    CHECK(topology_from_open_sets(4, open_sets(t)) == t);
  }
  const PackedWord f{3, 1, 1, 2};
  const Topology tf = topology_of_word(f);
  CHECK(tf.equiv(1, 2));
  CHECK(tf.lt(3, 0));
  CHECK(bar(parse_topology("[3|{1,3}<2]")) == parse_topology("[2|1<2]"));
  CHECK(c_defect(parse_topology("[3|{1,2,3}]")) == 2);
}

TEST_CASE("refinement order") {
  const auto disc = parse_topology("[2|]");
  const auto c12 = parse_topology("[2|1<2]");
  const auto merged = parse_topology("[2|{1,2}]");
  CHECK(refinement_leq(merged, c12));
  CHECK(refinement_leq(c12, disc));
  CHECK(refinement_leq(merged, disc));
  CHECK_FALSE(refinement_leq(disc, c12));
  CHECK_FALSE(refinement_leq(c12, parse_topology("[2|2<1]")));
  CHECK_THROWS_AS(refinement_leq(disc, parse_topology("[1|]")), Error);
}

TEST_CASE("text formats round trip") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& t : topologies_of_degree(n)) {
      CHECK(parse_topology(t.key()) == t);
      CHECK(parse_topology(hasse_text(t)) == t);
      CHECK(parse_math_topology(math_label(t)) == t);
    }
    for (const auto& f : packed_words_of_length(n)) CHECK(parse_math_word(math_label(f)) == f);
  }
  CHECK(math_label(PackedWord{1, 10, 2, 3, 4, 5, 6, 7, 8, 9}) == "(1,10,2,3,4,5,6,7,8,9)");
  CHECK(parse_topology("[3|1<2<3]") == parse_topology("[3|1<2,2<3]"));
  CHECK_THROWS_AS(parse_topology("[2|1<<2]"), Error);
  CHECK_THROWS_AS(parse_packed_word("(13)"), Error);
}

#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>
#include <sys/wait.h>

#include "topohopf/enumerate.hpp"
#include "topohopf/errors.hpp"
#include "topohopf/goldens.hpp"
#include "topohopf/hopf_topology.hpp"
#include "topohopf/json_io.hpp"
#include "topohopf/ops.hpp"
#include "topohopf/suites.hpp"
#include "topohopf/tables.hpp"
#include "topohopf/wqsym.hpp"

using namespace topohopf;

namespace {

int cli(const std::string& args) {
  const std::string cmd = std::string(TOPOHOPF_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("JSON layout") {
  CHECK(emit_json(WordComb()) == R"({"terms":[]})");
  CHECK(emit_json(WordComb(PackedWord{1})) == R"j({"terms":[{"basis":"1","coeff":"1"}]})j");
  const auto t = wqsym_coproduct(PackedWord{1, 2});
  const std::string s = emit_json(t);
  CHECK(s.find("basis_left") != std::string::npos);
  CHECK(tensor_from_json<PackedWord, PackedWord>(s, word_from_key, word_from_key) == t);
}

TEST_CASE("JSON round trip on random expansions") {
  std::mt19937 rng(3);
  const auto& ws = packed_words_of_length(4);
  const auto& ts = topologies_of_degree(3);
  for (int k = 0; k < 100; ++k) {
    WordComb x;
    TopComb y;
    for (int t = 0; t < 5; ++t) {
      const QPoly c = QPoly::monomial(static_cast<int>(rng() % 7) - 3, rng() % 3, rng() % 2, rng() % 2);
      x.add(ws[rng() % ws.size()], c);
      y.add(ts[rng() % ts.size()], c);
    }
    CHECK(lincomb_from_json<PackedWord>(emit_json(x), word_from_key) == x);
    CHECK(lincomb_from_json<Topology>(emit_json(y), topology_from_key) == y);
  }
  CHECK_THROWS_AS(lincomb_from_json<PackedWord>("{\"terms\":", word_from_key), Error);
}

TEST_CASE("the parallel runner agrees with the serial one") {
  for (std::size_t bad : {std::size_t{0}, std::size_t{17}, std::size_t{999}, std::size_t{5000}}) {
    const Check check = [bad](std::size_t i) -> std::optional<Counterexample> {
      if (i % 1000 == bad % 1000 && i >= bad) return Counterexample{"planted", std::to_string(i), "", ""};
      if (i == 123) throw std::runtime_error("boom");
      return std::nullopt;
    };
    const auto p = run_checks("g", 3000, check);
    const auto s = run_checks_serial("g", 3000, check);
    CHECK(p.passed == s.passed);
    REQUIRE(p.first_counterexample.has_value());
    CHECK(p.first_counterexample->inputs == s.first_counterexample->inputs);
  }
  CHECK(enumerate_topologies(5) == enumerate_topologies_serial(5));
}

TEST_CASE("suites are deterministic and pass in the fast range") {
  for (Suite s : all_suites()) {
    SuiteOptions o;
    o.max_degree = 3;
    o.samples = 100;
    const auto a = verify_suite(s, o);
    o.parallel = false;
    const auto b = verify_suite(s, o);
    CHECK_MESSAGE(a.ok(), to_string(s));
    CHECK(a.passed == b.passed);
    CHECK(a.attempted == b.attempted);
    auto ja = to_json(a), jb = to_json(b);
    ja.erase("wall_time_ms");
    jb.erase("wall_time_ms");
    CHECK(ja.dump() == jb.dump());
  }
  SuiteOptions o;
  o.max_degree = 5;
  CHECK_THROWS_AS(verify_suite(Suite::Hopf, o), Error);
  o.slow = true;
  o.max_degree = 7;
  CHECK_THROWS_AS(verify_suite(Suite::Hopf, o), Error);
  CHECK(suite_from_string("gamma") == Suite::Gamma);
  CHECK_FALSE(suite_from_string("nope").has_value());
}

TEST_CASE("every worked example replays") {
  for (const auto& g : goldens()) {
    const auto c = replay(g);
    CHECK_MESSAGE(!c.has_value(), g.name, ": ", (c ? c->actual : std::string()));
  }
}

TEST_CASE("operations by name") {
  CHECK(run_op("pack", {"(3,3,1,7)"}).math == "(2213)");
  CHECK(run_op("count_topologies", {"4"}).text == "355");
  CHECK_THROWS_AS(run_op("no_such_op", {}), Error);
  CHECK_THROWS_AS(run_op("pack", {}), Error);
  CHECK(std::is_sorted(operations().begin(), operations().end(),
                       [](const OpInfo& a, const OpInfo& b) { return a.name < b.name; }));
}

TEST_CASE("tables") {
  const auto t = counts_table(5);
  REQUIRE(t.rows.size() == 5);
  CHECK(t.rows[4][1] == 6942);
  const auto f = fubini_table(5);
  CHECK(f.rows[4][1] == 541);
  CHECK(f.rows[4][2] == 541);
}

TEST_CASE("CLI exit codes") {
  CHECK(cli("table counts --max 5") == 0);
  CHECK(cli("verify --suite order --max-degree 3") == 0);
  CHECK(cli("gram --degree 2 --rank --format csv") == 0);
  CHECK(cli("op pack \"(3,3,1,7)\"") == 0);
  CHECK(cli("enum-words 3 --format json") == 0);
  CHECK(cli("verify --suite nonsense --max-degree 3") == 2);
  CHECK(cli("verify --suite hopf --max-degree 5") == 2);
  CHECK(cli("table counts --max 6") == 2);
  CHECK(cli("--format yaml table counts --max 3") == 2);
  CHECK(cli("op no_such_op") == 2);
  CHECK(cli("frobnicate") == 2);
}

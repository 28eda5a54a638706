// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "topohopf/goldens.hpp"
#include "topohopf/ops.hpp"
#include "topohopf/pairing.hpp"
#include "topohopf/suites.hpp"
#include "topohopf/tables.hpp"
#include "topohopf/text_format.hpp"
#include "topohopf/tpartition.hpp"

using namespace topohopf;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::map<Suite, SuiteReport> reports;

const SuiteReport& report(Suite s) {
  auto it = reports.find(s);
  if (it == reports.end()) {
    SuiteOptions o;
    o.max_degree = 4;
    it = reports.emplace(s, verify_suite(s, o)).first;
  }
  return it->second;
}

void groups(Outcome& out, Suite s, std::initializer_list<const char*> names) {
  const auto& r = report(s);
  for (const char* name : names) {
    bool found = false;
    for (const auto& g : r.groups) {
      if (g.name != name) continue;
      found = true;
      std::ostringstream msg;
      msg << name << " " << g.passed << "/" << g.attempted;
      if (g.first_counterexample) msg << " (" << g.first_counterexample->inputs << ")";
      out.require(g.passed == g.attempted && g.attempted > 0, msg.str());
    }
    out.require(found, std::string("missing group ") + name);
  }
}

std::size_t replay_matching(Outcome& out, const std::function<bool(const Golden&)>& pick) {
  std::size_t n = 0;
  for (const auto& g : goldens()) {
    if (!pick(g)) continue;
    ++n;
    if (auto c = replay(g)) out.require(false, g.name + ": got " + c->actual);
  }
  return n;
}

std::string column(const Table& t, std::size_t c) {
  std::string s;
  for (const auto& row : t.rows) s += (s.empty() ? "" : ",") + row[c].str();
  return s;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  criteria.emplace_back("topology counts", [] {
    Outcome o;
    const auto t = counts_table(6);
    o.require(column(t, 1) == "1,4,29,355,6942,209527", "topologies " + column(t, 1));
    o.detail = o.ok ? "1,4,29,355,6942 and 209527 at n=6" : o.detail;
    return o;
  });
  criteria.emplace_back("indecomposables", [] {
    Outcome o;
    const auto t = indec_table(5);
    o.require(column(t, 1) == "1,3,22,292,6120", "dot " + column(t, 1));
    o.require(column(t, 2) == "1,3,22,292,6120", "down " + column(t, 2));
    o.require(column(t, 3) == "1,2,15,229,5298", "both " + column(t, 3));
    return o;
  });
  criteria.emplace_back("Hopf axioms", [] {
    Outcome o;
    groups(o, Suite::Hopf,
           {"dot associativity", "down associativity", "coassociativity", "dot multiplicativity",
            "down infinitesimal relation", "sampled axioms, degree 4-5"});
    const auto& r = report(Suite::Hopf);
    for (const auto& g : r.groups) {
      if (g.name == "sampled axioms, degree 4-5") o.require(g.attempted >= 1000, "fewer than 1000 samples");
    }
    return o;
  });
  criteria.emplace_back("ribbon formulas", [] {
    Outcome o;
    groups(o, Suite::Ribbon,
           {"basis change round trip", "ribbon dot product formula", "ribbon down product formula",
            "ribbon coproduct formula"});
    return o;
  });
  criteria.emplace_back("ribbon expansions", [] {
    Outcome o;
    const std::size_t n = replay_matching(o, [](const Golden& g) { return g.op == "from_ribbon"; });
    o.require(n >= 11, "only " + std::to_string(n) + " expansions");
    if (o.ok) o.detail = std::to_string(n) + " expansions";
    return o;
  });
  criteria.emplace_back("pairing", [] {
    Outcome o;
    groups(o, Suite::Pairing, {"degree-2 Gram matrix", "Gram ranks", "Hopf pairing"});
    const auto& r = report(Suite::Pairing);
    for (const auto& g : r.groups) {
      if (g.name.rfind("symmetry", 0) == 0) o.require(g.passed == g.attempted, "symmetry");
    }
    const std::size_t r4 = gram_rank(4);
    o.require(r4 == 111, "rank at n=4 is " + std::to_string(r4));
    if (o.ok) o.detail = "ranks 1,3,16,111; kernels 0,1,13,244";
    return o;
  });
  criteria.emplace_back("Gamma expansions", [] {
    Outcome o;
    const std::size_t n = replay_matching(o, [](const Golden& g) {
      return g.op == "gamma_q" && g.name.rfind("Gamma ", 0) == 0 && g.name.find("kernel") == std::string::npos;
    });
    o.require(n == 14, std::to_string(n) + " expansions");
    return o;
  });
  criteria.emplace_back("morphism identities", [] {
    Outcome o;
    groups(o, Suite::Gamma,
           {"Gamma multiplicative", "Gamma comultiplicative", "L multiplicative for the shifted shuffle",
            "L comultiplicative", "phi L = Gamma at (1,0,0) and (0,1,0)", "varpi Gamma = L theta_0",
            "theta_q morphism"});
    return o;
  });
  criteria.emplace_back("kernel obstruction", [] {
    Outcome o;
    groups(o, Suite::Gamma, {"kernel of L in degree 3"});
    const std::size_t n = replay_matching(o, [](const Golden& g) { return g.name == "Gamma of a kernel element of L"; });
    o.require(n == 1, "witness missing");
    return o;
  });
  criteria.emplace_back("Stanley decomposition", [] {
    Outcome o;
    groups(o, Suite::Stanley,
           {"down-sets partition the strict partitions", "five-point example has 8 linear extensions"});
    const auto five = parse_topology("[5|{2,4}<5,{2,4}<1]");
    replay_matching(o, [](const Golden& g) { return g.name.find("of the five-point example") != std::string::npos; });
    const std::size_t gen = generalized_partitions(five).size(), strict = strict_partitions(five).size();
    o.require(strict == 20, std::to_string(strict) + " strict");
    if (o.ok) o.detail = std::to_string(gen) + " generalized and 20 strict partitions";
    return o;
  });
  criteria.emplace_back("order structure", [] {
    Outcome o;
    groups(o, Suite::Order, {"Std and M criterion", "fiber sizes sum to Fubini numbers"});
    const auto t = fubini_table(5);
    o.require(column(t, 2) == "1,3,13,75,541", "fiber sums " + column(t, 2));
    return o;
  });
  criteria.emplace_back("antipode", [] {
    Outcome o;
    groups(o, Suite::Hopf, {"antipode"});
    return o;
  });

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("error: ") + e.what();
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first
              << (o.detail.empty() ? "" : ": " + o.detail) << std::endl;
  }
  return all ? 0 : 1;
}

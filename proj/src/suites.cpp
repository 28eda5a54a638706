#include "topohopf/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <tuple>

#include "topohopf/enumerate.hpp"
#include "topohopf/errors.hpp"
#include "topohopf/goldens.hpp"
#include "topohopf/pairing.hpp"
#include "topohopf/ribbon.hpp"
#include "topohopf/tables.hpp"
#include "topohopf/text_format.hpp"
#include "topohopf/tpartition.hpp"
#include "topohopf/wqsym.hpp"

namespace topohopf {

namespace {

using Clock = std::chrono::steady_clock;
using Builder = std::function<GroupReport(std::string, std::size_t, const Check&)>;

std::optional<Counterexample> guarded(const Check& check, std::size_t i, const std::string& name) {
  try {
    return check(i);
  } catch (const std::exception& e) {
    return Counterexample{name, "check #" + std::to_string(i), "no error", std::string("error: ") + e.what()};
  }
}

// ---- text of values in counterexamples

std::string describe(const std::string& s) { return s; }
std::string describe(const Topology& t) { return math_label(t); }
std::string describe(const PackedWord& f) { return math_label(f); }
template <class L>
std::string describe(const LinComb<L>& x) {
  return render_math(x);
}
template <class A, class B, class C>
std::string describe(const LinComb<std::tuple<A, B, C>>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [abc, c] : x) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + math_label(std::get<0>(abc)) + " ⊗ " + math_label(std::get<1>(abc)) +
           " ⊗ " + math_label(std::get<2>(abc));
  }
  return out;
}
template <class L>
std::string describe(const std::map<L, Rational>& x) {
  std::string out;
  for (const auto& [l, v] : x) out += (out.empty() ? "" : " + ") + to_string(v) + "*" + math_label(l);
  return out.empty() ? "0" : out;
}
std::string describe(std::size_t v) { return std::to_string(v); }
std::string describe(bool v) { return v ? "true" : "false"; }
std::string describe(const BigInt& v) { return v.str(); }

template <class X>
std::optional<Counterexample> expect_eq(const char* check, const std::string& inputs, const X& expected,
                                        const X& actual) {
  if (expected == actual) return std::nullopt;
  return Counterexample{check, inputs, describe(expected), describe(actual)};
}

template <class... Ts>
std::string inputs_of(const Ts&... xs) {
  std::string out;
  ((out += (out.empty() ? "" : ", ") + describe(xs)), ...);
  return out;
}

// ---- basis tuples

std::vector<Topology> topologies_upto(std::size_t d) {
  std::vector<Topology> out;
  for (std::size_t n = 0; n <= d; ++n) {
    const auto& ts = topologies_of_degree(n);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

std::vector<PackedWord> words_upto(std::size_t d) {
  std::vector<PackedWord> out;
  for (std::size_t n = 0; n <= d; ++n) {
    const auto& ws = packed_words_of_length(n);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

template <class L>
std::vector<std::pair<L, L>> pairs_upto(const std::vector<L>& basis, std::size_t d) {
  std::vector<std::pair<L, L>> out;
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      if (degree(a) + degree(b) <= d) out.emplace_back(a, b);
    }
  }
  return out;
}

template <class L>
std::vector<std::tuple<L, L, L>> triples_upto(const std::vector<L>& basis, std::size_t d) {
  std::vector<std::tuple<L, L, L>> out;
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      if (degree(a) + degree(b) > d) continue;
      for (const auto& c : basis) {
        if (degree(a) + degree(b) + degree(c) <= d) out.emplace_back(a, b, c);
      }
    }
  }
  return out;
}

// ---- generic bialgebra checks, shared by h_T and WQSym

template <class L>
using Tensor3 = LinComb<std::tuple<L, L, L>>;

template <class L, class D>
Tensor3<L> delta_left(const Tensor2<L, L>& t, D delta) {
  Tensor3<L> out;
  for (const auto& [ab, c] : t) {
    for (const auto& [xy, d] : delta(LinComb<L>(ab.first))) out.add({xy.first, xy.second, ab.second}, c * d);
  }
  return out;
}

template <class L, class D>
Tensor3<L> delta_right(const Tensor2<L, L>& t, D delta) {
  Tensor3<L> out;
  for (const auto& [ab, c] : t) {
    for (const auto& [xy, d] : delta(LinComb<L>(ab.second))) out.add({ab.first, xy.first, xy.second}, c * d);
  }
  return out;
}

template <class L, class M>
Tensor2<L, L> tensor_square_product(M mult, const Tensor2<L, L>& s, const Tensor2<L, L>& t) {
  Tensor2<L, L> out;
  for (const auto& [ab, c1] : s) {
    for (const auto& [cd, c2] : t) {
      const auto left = mult(LinComb<L>(ab.first), LinComb<L>(cd.first));
      const auto right = mult(LinComb<L>(ab.second), LinComb<L>(cd.second));
      out += c1 * c2 * tensor(left, right);
    }
  }
  return out;
}

template <class L>
QPoly counit_of(const LinComb<L>& x) {
  return x.coeff(L());
}

// ---- report assembly

struct SuiteContext {
  const SuiteOptions& options;
  std::vector<GroupReport> groups;

  void run(std::string name, std::size_t count, const Check& check) {
    groups.push_back(options.parallel ? run_checks(std::move(name), count, check)
                                      : run_checks_serial(std::move(name), count, check));
  }

  void goldens_for(Suite s) {
    std::vector<const Golden*> mine;
    for (const auto& g : goldens()) {
      if (g.suite == s) mine.push_back(&g);
    }
    run("worked examples", mine.size(), [mine](std::size_t i) { return replay(*mine[i]); });
  }
};

// ---- hopf

void hopf_suite(SuiteContext& ctx, std::size_t d) {
  const std::size_t dw = std::min<std::size_t>(d, 4);
  const auto tops = topologies_upto(d);
  const auto triples = triples_upto(tops, d);
  const auto pairs = pairs_upto(tops, d);
  auto dot = [](const TopComb& x, const TopComb& y) { return product_dot(x, y); };
  auto down = [](const TopComb& x, const TopComb& y) { return product_down(x, y); };
  auto delta = [](const TopComb& x) { return coproduct(x); };

  ctx.goldens_for(Suite::Hopf);

  ctx.run("dot associativity", triples.size(), [&](std::size_t i) {
    const auto& [a, b, c] = triples[i];
    return expect_eq("dot associativity", inputs_of(a, b, c), product_dot(product_dot(TopComb(a), TopComb(b)), TopComb(c)),
                     product_dot(TopComb(a), product_dot(TopComb(b), TopComb(c))));
  });
  ctx.run("down associativity", triples.size(), [&](std::size_t i) {
    const auto& [a, b, c] = triples[i];
    return expect_eq("down associativity", inputs_of(a, b, c),
                     product_down(product_down(TopComb(a), TopComb(b)), TopComb(c)),
                     product_down(TopComb(a), product_down(TopComb(b), TopComb(c))));
  });
  ctx.run("unit and counit", tops.size(), [&](std::size_t i) {
    const TopComb x(tops[i]);
    const TopComb one{Topology()};
    if (auto c = expect_eq("dot unit", inputs_of(tops[i]), x, product_dot(one, x))) return c;
    if (auto c = expect_eq("dot unit", inputs_of(tops[i]), x, product_dot(x, one))) return c;
    if (auto c = expect_eq("down unit", inputs_of(tops[i]), x, product_down(one, x))) return c;
    if (auto c = expect_eq("down unit", inputs_of(tops[i]), x, product_down(x, one))) return c;
    const auto dx = coproduct(x);
    TopComb left;
    TopComb right;
    for (const auto& [ab, c] : dx) {
      left.add(ab.second, c * counit_of(TopComb(ab.first)));
      right.add(ab.first, c * counit_of(TopComb(ab.second)));
    }
    if (auto c = expect_eq("left counit", inputs_of(tops[i]), x, left)) return c;
    return expect_eq("right counit", inputs_of(tops[i]), x, right);
  });
  ctx.run("coassociativity", tops.size(), [&](std::size_t i) {
    const auto dx = coproduct(TopComb(tops[i]));
    return expect_eq("coassociativity", inputs_of(tops[i]), delta_left(dx, delta), delta_right(dx, delta));
  });
  ctx.run("dot multiplicativity", pairs.size(), [&](std::size_t i) {
    const TopComb x(pairs[i].first);
    const TopComb y(pairs[i].second);
    return expect_eq("dot multiplicativity", inputs_of(x, y), coproduct(product_dot(x, y)),
                     tensor_square_product<Topology>(dot, coproduct(x), coproduct(y)));
  });
  ctx.run("down infinitesimal relation", pairs.size(), [&](std::size_t i) {
    const TopComb x(pairs[i].first);
    const TopComb y(pairs[i].second);
    const TopComb one{Topology()};
    TopTensor rhs = tensor_square_product<Topology>(down, tensor(x, one), coproduct(y));
    rhs += tensor_square_product<Topology>(down, coproduct(x), tensor(one, y));
    rhs -= tensor(x, y);
    return expect_eq("down infinitesimal relation", inputs_of(x, y), coproduct(product_down(x, y)), rhs);
  });
  ctx.run("iota", pairs.size(), [&](std::size_t i) {
    const TopComb x(pairs[i].first);
    const TopComb y(pairs[i].second);
    if (auto c = expect_eq("iota multiplicative", inputs_of(x, y), iota(product_dot(x, y)),
                           product_dot(iota(x), iota(y)))) {
      return c;
    }
    auto io = [](const Topology& t) { return iota(t); };
    return expect_eq("iota reverses the coproduct", inputs_of(x), coproduct(iota(x)),
                     tensor_map(io, io, flip(coproduct(x))));
  });
  ctx.run("antipode", tops.size(), [&](std::size_t i) {
    const TopComb x(tops[i]);
    const TopComb expected = counit_of(x) * TopComb(Topology());
    TopComb left;
    TopComb right;
    for (const auto& [ab, c] : coproduct(x)) {
      left += c * product_dot(antipode(TopComb(ab.first)), TopComb(ab.second));
      right += c * product_dot(TopComb(ab.first), antipode(TopComb(ab.second)));
    }
    if (auto c = expect_eq("m(S (x) id)Delta", inputs_of(x), expected, left)) return c;
    return expect_eq("m(id (x) S)Delta", inputs_of(x), expected, right);
  });

  const std::size_t dd = ctx.options.slow ? std::max<std::size_t>(d, 5) : 5;
  const auto factorable = topologies_upto(dd);
  ctx.run("factorization", factorable.size(), [&](std::size_t i) -> std::optional<Counterexample> {
    const Topology& t = factorable[i];
    if (t.empty()) return std::nullopt;
    for (ProductKind kind : {ProductKind::Dot, ProductKind::Down}) {
      const auto r = decompose(t, kind);
      Topology back;
      for (const auto& f : r.factors) {
        back = kind == ProductKind::Dot ? product_dot(back, f) : product_down(back, f);
        if (decompose(f, kind).factors.size() != 1) {
          return Counterexample{"factor indecomposable", inputs_of(t), "1 factor", describe(f)};
        }
      }
      if (auto c = expect_eq("factors multiply back", inputs_of(t), t, back)) return c;
    }
    return std::nullopt;
  });

  // Sampled instances at total degree 4 and 5.
  const std::size_t samples = ctx.options.samples * (ctx.options.slow ? 10 : 1);
  const std::uint64_t seed = ctx.options.seed;
  ctx.run("sampled axioms, degree 4-5", samples, [seed](std::size_t i) -> std::optional<Counterexample> {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * (i + 1));
    const std::size_t total = 4 + i % 2;
    const std::size_t a = std::uniform_int_distribution<std::size_t>(1, total - 1)(rng);
    const std::size_t b = std::uniform_int_distribution<std::size_t>(1, total - a)(rng);
    const std::size_t c = total - a - b;
    auto pick = [&](std::size_t n) {
      const auto& ts = topologies_of_degree(n);
      return ts[std::uniform_int_distribution<std::size_t>(0, ts.size() - 1)(rng)];
    };
    const TopComb x(pick(a));
    const TopComb y(pick(b));
    const TopComb z(pick(c));
    const std::string in = inputs_of(x, y, z);
    auto dot = [](const TopComb& p, const TopComb& q) { return product_dot(p, q); };
    auto down = [](const TopComb& p, const TopComb& q) { return product_down(p, q); };
    auto delta = [](const TopComb& p) { return coproduct(p); };
    if (auto e = expect_eq("sampled dot associativity", in, product_dot(product_dot(x, y), z),
                           product_dot(x, product_dot(y, z)))) {
      return e;
    }
    if (auto e = expect_eq("sampled down associativity", in, product_down(product_down(x, y), z),
                           product_down(x, product_down(y, z)))) {
      return e;
    }
    const TopComb yz = product_dot(y, z);
    if (auto e = expect_eq("sampled dot multiplicativity", in, coproduct(product_dot(x, yz)),
                           tensor_square_product<Topology>(dot, coproduct(x), coproduct(yz)))) {
      return e;
    }
    const TopComb one{Topology()};
    const TopComb w = product_down(y, z);
    TopTensor rhs = tensor_square_product<Topology>(down, tensor(x, one), coproduct(w));
    rhs += tensor_square_product<Topology>(down, coproduct(x), tensor(one, w));
    rhs -= tensor(x, w);
    if (auto e = expect_eq("sampled down infinitesimal relation", in, coproduct(product_down(x, w)), rhs)) return e;
    const auto d3 = coproduct(product_down(x, yz));
    return expect_eq("sampled coassociativity", in, delta_left(d3, delta), delta_right(d3, delta));
  });

  // WQSym with the product and with the shifted shuffle.
  const auto words = words_upto(dw);
  const auto wtriples = triples_upto(words, dw);
  const auto wpairs = pairs_upto(words, dw);
  auto wdelta = [](const WordComb& x) { return wqsym_coproduct(x); };
  auto wmul = [](const WordComb& x, const WordComb& y) { return wqsym_product(x, y); };
  auto wsh = [](const WordComb& x, const WordComb& y) { return shuffle_product(x, y); };
  ctx.run("wqsym associativity", wtriples.size(), [&](std::size_t i) {
    const auto& [a, b, c] = wtriples[i];
    const WordComb x(a), y(b), z(c);
    if (auto e = expect_eq("wqsym associativity", inputs_of(a, b, c), wqsym_product(wqsym_product(x, y), z),
                           wqsym_product(x, wqsym_product(y, z)))) {
      return e;
    }
    return expect_eq("shuffle associativity", inputs_of(a, b, c), shuffle_product(shuffle_product(x, y), z),
                     shuffle_product(x, shuffle_product(y, z)));
  });
  ctx.run("wqsym coassociativity and counit", words.size(), [&](std::size_t i) {
    const WordComb x(words[i]);
    const auto dx = wqsym_coproduct(x);
    if (auto e = expect_eq("wqsym coassociativity", inputs_of(words[i]), delta_left(dx, wdelta),
                           delta_right(dx, wdelta))) {
      return e;
    }
    WordComb left;
    for (const auto& [ab, c] : dx) left.add(ab.second, c * counit_of(WordComb(ab.first)));
    return expect_eq("wqsym counit", inputs_of(words[i]), x, left);
  });
  ctx.run("wqsym compatibility", wpairs.size(), [&](std::size_t i) {
    const WordComb x(wpairs[i].first);
    const WordComb y(wpairs[i].second);
    if (auto e = expect_eq("wqsym compatibility", inputs_of(x, y), wqsym_coproduct(wqsym_product(x, y)),
                           tensor_square_product<PackedWord>(wmul, wqsym_coproduct(x), wqsym_coproduct(y)))) {
      return e;
    }
    return expect_eq("shuffle compatibility", inputs_of(x, y), wqsym_coproduct(shuffle_product(x, y)),
                     tensor_square_product<PackedWord>(wsh, wqsym_coproduct(x), wqsym_coproduct(y)));
  });
  ctx.run("wqsym product against filtering", wpairs.size(), [&](std::size_t i) {
    const auto& [f, g] = wpairs[i];
    return expect_eq("wqsym product against filtering", inputs_of(f, g), wqsym_product_filtered(f, g),
                     wqsym_product(f, g));
  });
  ctx.run("j is an anti-coalgebra isomorphism", wpairs.size(), [&](std::size_t i) {
    const WordComb x(wpairs[i].first);
    const WordComb y(wpairs[i].second);
    if (auto e = expect_eq("j multiplicative", inputs_of(x, y), j_involution(wqsym_product(x, y)),
                           wqsym_product(j_involution(x), j_involution(y)))) {
      return e;
    }
    auto jj = [](const PackedWord& f) { return j_involution(f); };
    return expect_eq("j reverses the coproduct", inputs_of(x), wqsym_coproduct(j_involution(x)),
                     tensor_map(jj, jj, flip(wqsym_coproduct(x))));
  });
  ctx.run("varpi onto FQSym", wpairs.size(), [&](std::size_t i) {
    const WordComb x(wpairs[i].first);
    const WordComb y(wpairs[i].second);
    return expect_eq("varpi multiplicative", inputs_of(x, y), varpi(wqsym_product(x, y)),
                     fqsym_product(varpi(x), varpi(y)));
  });
}

// ---- ribbon

void ribbon_suite(SuiteContext& ctx, std::size_t d) {
  const std::size_t dr = std::min(d, kRibbonDegreeCap);
  const auto tops = topologies_upto(dr);
  const auto pairs = pairs_upto(tops, dr);
  ctx.goldens_for(Suite::Ribbon);
  ctx.run("basis change round trip", tops.size(), [&](std::size_t i) {
    const TopComb x(tops[i]);
    const RibbonComb r{RibbonLabel{tops[i]}};
    if (auto e = expect_eq("from_ribbon o to_ribbon", inputs_of(x), x, from_ribbon(to_ribbon(x)))) return e;
    return expect_eq("to_ribbon o from_ribbon", inputs_of(x), r, to_ribbon(from_ribbon(r)));
  });
  ctx.run("ribbon dot product formula", pairs.size(), [&](std::size_t i) {
    const auto& [a, b] = pairs[i];
    const RibbonComb ra{RibbonLabel{a}};
    const RibbonComb rb{RibbonLabel{b}};
    return expect_eq("ribbon dot product formula", inputs_of(a, b),
                     to_ribbon(product_dot(from_ribbon(ra), from_ribbon(rb))), ribbon_product_dot(a, b));
  });
  ctx.run("ribbon down product formula", pairs.size(), [&](std::size_t i) {
    const auto& [a, b] = pairs[i];
    const RibbonComb ra{RibbonLabel{a}};
    const RibbonComb rb{RibbonLabel{b}};
    return expect_eq("ribbon down product formula", inputs_of(a, b),
                     to_ribbon(product_down(from_ribbon(ra), from_ribbon(rb))), ribbon_product_down(a, b));
  });
  ctx.run("ribbon coproduct formula", tops.size(), [&](std::size_t i) {
    const RibbonComb r{RibbonLabel{tops[i]}};
    auto tr = [](const Topology& t) { return to_ribbon(TopComb(t)); };
    return expect_eq("ribbon coproduct formula", inputs_of(tops[i]), tensor_map(tr, tr, coproduct(from_ribbon(r))),
                     ribbon_coproduct(tops[i]));
  });
}

// ---- pairing

// Relabels the ground set by i -> n + 1 - i.
Topology reverse_labels(const Topology& t) {
  const std::size_t n = t.degree();
  TopologyBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t.leq(i, j)) b.set(n - 1 - i, n - 1 - j);
    }
  }
  return b.build();
}

void pairing_suite(SuiteContext& ctx, std::size_t d) {
  ctx.goldens_for(Suite::Pairing);
  ctx.run("degree-2 Gram matrix", 1, [](std::size_t) {
    // Printed order: 1 2, 1<2, 2<1, {1,2}.
    const std::vector<Topology> order{parse_topology("[2|]"), parse_topology("[2|1<2]"), parse_topology("[2|2<1]"),
                                      parse_topology("[2|{1,2}]")};
    const std::vector<std::vector<int>> printed{{2, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 2}};
    const auto& keys = topologies_of_degree(2);
    const auto g = gram_matrix(2);
    auto index = [&](const Topology& t) {
      return static_cast<std::size_t>(std::find(keys.begin(), keys.end(), t) - keys.begin());
    };
    std::string expected;
    std::string actual;
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        expected += std::to_string(printed[r][c]) + (c == 3 ? ";" : ",");
        actual += g[index(order[r])][index(order[c])].str() + (c == 3 ? ";" : ",");
      }
    }
    return expect_eq<std::string>("degree-2 Gram matrix", "n=2", expected, actual);
  });
  const std::vector<std::size_t> ranks{1, 1, 3, 16, 111};
  const std::size_t top = std::min<std::size_t>(ctx.options.slow ? 4 : 3, std::max<std::size_t>(d, 1));
  ctx.run("Gram ranks", top, [&ranks](std::size_t i) -> std::optional<Counterexample> {
    const std::size_t n = i + 1;
    const std::size_t dim = topologies_of_degree(n).size();
    const std::size_t rank = gram_rank(n);
    if (rank == ranks[n]) return std::nullopt;
    return Counterexample{"Gram rank", "n=" + std::to_string(n),
                          "rank " + std::to_string(ranks[n]) + ", kernel " + std::to_string(dim - ranks[n]),
                          "rank " + std::to_string(rank) + ", kernel " + std::to_string(dim - rank)};
  });
  const std::size_t ds = std::min<std::size_t>(d, 4);
  std::vector<std::pair<Topology, Topology>> same;
  for (std::size_t n = 0; n <= ds; ++n) {
    for (const auto& a : topologies_of_degree(n)) {
      for (const auto& b : topologies_of_degree(n)) same.emplace_back(a, b);
    }
  }
  ctx.run("symmetry and isometry of reversed iota", same.size(), [same](std::size_t i) {
    const auto& [a, b] = same[i];
    const std::size_t ab = pictures_count(a, b);
    if (auto e = expect_eq("symmetry", inputs_of(a, b), ab, pictures_count(b, a))) return e;
    return expect_eq("reversed iota isometry", inputs_of(a, b), ab,
                     pictures_count(reverse_labels(iota(a)), reverse_labels(iota(b))));
  });
  ctx.run("iota alone is not an isometry", 1, [](std::size_t) -> std::optional<Counterexample> {
    const Topology a = parse_topology("[3|3<2]");
    const Topology b = parse_topology("[3|3<1,3<2]");
    const std::string got =
        std::to_string(pictures_count(a, b)) + " vs " + std::to_string(pictures_count(iota(a), iota(b)));
    return expect_eq<std::string>("iota witness", inputs_of(a, b), "1 vs 2", got);
  });
  std::vector<std::tuple<Topology, Topology, Topology>> hopf;
  for (const auto& a : topologies_upto(ds)) {
    for (const auto& b : topologies_upto(ds - a.degree())) {
      if (a.empty() || b.empty()) continue;
      for (const auto& z : topologies_of_degree(a.degree() + b.degree())) hopf.emplace_back(a, b, z);
    }
  }
  ctx.run("Hopf pairing", hopf.size(), [hopf](std::size_t i) {
    const auto& [a, b, z] = hopf[i];
    QPoly rhs;
    for (const auto& [uv, c] : coproduct(z)) {
      rhs += c * QPoly(static_cast<long long>(pictures_count(a, uv.first) * pictures_count(b, uv.second)));
    }
    const QPoly lhs(static_cast<long long>(pictures_count(product_dot(a, b), z)));
    return expect_eq<std::string>("Hopf pairing", inputs_of(a, b, z), lhs.to_string(), rhs.to_string());
  });
}

// ---- gamma and L

template <class L>
std::map<L, Rational> at(const LinComb<L>& x, const QPoint& p) {
  return evaluate(x, p);
}

QPoint point(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }

void gamma_suite(SuiteContext& ctx, std::size_t d) {
  const auto tops = topologies_upto(d);
  const auto pairs = pairs_upto(tops, d);
  ctx.goldens_for(Suite::Gamma);
  auto gm = [](const Topology& t) { return gamma_q(t); };
  auto lm = [](const Topology& t) { return l_morphism(t); };
  auto th = [](const Topology& t) { return theta_q(t); };
  ctx.run("Gamma multiplicative", pairs.size(), [&](std::size_t i) {
    const TopComb x(pairs[i].first), y(pairs[i].second);
    return expect_eq("Gamma multiplicative", inputs_of(x, y), gamma_q(product_dot(x, y)),
                     wqsym_product(gamma_q(x), gamma_q(y)));
  });
  ctx.run("Gamma comultiplicative", tops.size(), [&](std::size_t i) {
    const TopComb x(tops[i]);
    return expect_eq("Gamma comultiplicative", inputs_of(x), wqsym_coproduct(gamma_q(x)),
                     tensor_map(gm, gm, coproduct(x)));
  });
  ctx.run("j Gamma swapped = Gamma iota", tops.size(), [&](std::size_t i) {
    const TopComb x(tops[i]);
    return expect_eq("j Gamma swapped = Gamma iota", inputs_of(x), gamma_q(iota(x)),
                     j_involution(swap_q1_q2(gamma_q(x))));
  });
  ctx.run("L multiplicative for the shifted shuffle", pairs.size(), [&](std::size_t i) {
    const TopComb x(pairs[i].first), y(pairs[i].second);
    return expect_eq("L multiplicative", inputs_of(x, y), l_morphism(product_dot(x, y)),
                     shuffle_product(l_morphism(x), l_morphism(y)));
  });
  ctx.run("L comultiplicative", tops.size(), [&](std::size_t i) {
    const TopComb x(tops[i]);
    return expect_eq("L comultiplicative", inputs_of(x), wqsym_coproduct(l_morphism(x)),
                     tensor_map(lm, lm, coproduct(x)));
  });
  ctx.run("j L = L iota", tops.size(), [&](std::size_t i) {
    const TopComb x(tops[i]);
    return expect_eq("j L = L iota", inputs_of(x), l_morphism(iota(x)), j_involution(l_morphism(x)));
  });
  const auto words = words_upto(d);
  ctx.run("L of T_f", words.size(), [&](std::size_t i) {
    return expect_eq("L of T_f", inputs_of(words[i]), WordComb(words[i]), l_morphism(topology_of_word(words[i])));
  });
  ctx.run("phi L = Gamma at (1,0,0) and (0,1,0)", tops.size(), [&](std::size_t i) {
    const TopComb x(tops[i]);
    const WordComb lx = l_morphism(x);
    const WordComb g = gamma_q(x);
    if (auto e = expect_eq("phi100 L = Gamma(1,0,0)", inputs_of(x), at(g, point(1, 0, 0)),
                           at(phi(PhiVariant::P100, lx), point(1, 0, 0)))) {
      return e;
    }
    return expect_eq("phi010 L = Gamma(0,1,0)", inputs_of(x), at(g, point(0, 1, 0)),
                     at(phi(PhiVariant::P010, lx), point(0, 1, 0)));
  });
  ctx.run("varpi Gamma = L theta_0", tops.size(), [&](std::size_t i) {
    const TopComb x(tops[i]);
    return expect_eq("varpi Gamma = L theta_0", inputs_of(x), varpi(l_morphism(theta_0(x))), varpi(gamma_q(x)));
  });
  ctx.run("theta_q morphism", pairs.size(), [&](std::size_t i) {
    const TopComb x(pairs[i].first), y(pairs[i].second);
    if (auto e = expect_eq("theta_q dot", inputs_of(x, y), theta_q(product_dot(x, y)),
                           product_dot(theta_q(x), theta_q(y)))) {
      return e;
    }
    if (auto e = expect_eq("theta_q down", inputs_of(x, y), theta_q(product_down(x, y)),
                           product_down(theta_q(x), theta_q(y)))) {
      return e;
    }
    return expect_eq("theta_q coproduct", inputs_of(x), coproduct(theta_q(x)), tensor_map(th, th, coproduct(x)));
  });
  ctx.run("supports at (1,1,1) and (1,0,0)", tops.size(), [&](std::size_t i) {
    const Topology& t = tops[i];
    const WordComb g = gamma_q(t);
    std::map<PackedWord, Rational> general;
    for (const auto& p : generalized_partitions(t)) general.emplace(p.word, 1);
    std::map<PackedWord, Rational> strict;
    for (const auto& f : strict_partitions(t)) strict.emplace(f, 1);
    if (auto e = expect_eq("Gamma(1,1,1) support", inputs_of(t), general, at(g, point(1, 1, 1)))) return e;
    return expect_eq("Gamma(1,0,0) support", inputs_of(t), strict, at(g, point(1, 0, 0)));
  });

  // Kernel of L in degree 3 against Gamma_q.
  const auto kernel = l_kernel_basis(3);
  const std::vector<QPoint> nonzero{point(1, 1, 1), point(0, 0, 1), {Rational(1, 2), Rational(1, 2), Rational(0)}};
  ctx.run("kernel of L in degree 3", kernel.size() + 1 + nonzero.size(),
          [kernel, nonzero](std::size_t i) -> std::optional<Counterexample> {
            if (i == 0) return expect_eq("kernel dimension", std::string("n=3"), std::size_t{16}, kernel.size());
            if (i <= kernel.size()) {
              const TopComb& k = kernel[i - 1];
              if (auto e = expect_eq("L annihilates", inputs_of(k), WordComb(), l_morphism(k))) return e;
              const WordComb g = gamma_q(k);
              if (auto e = expect_eq("Gamma(1,0,0) vanishes", inputs_of(k), std::map<PackedWord, Rational>{},
                                     at(g, point(1, 0, 0)))) {
                return e;
              }
              return expect_eq("Gamma(0,1,0) vanishes", inputs_of(k), std::map<PackedWord, Rational>{},
                               at(g, point(0, 1, 0)));
            }
            const QPoint& p = nonzero[i - 1 - kernel.size()];
            for (const auto& k : kernel) {
              if (!at(gamma_q(k), p).empty()) return std::nullopt;
            }
            return Counterexample{"Gamma nonzero on the kernel",
                                  "(" + to_string(p[0]) + "," + to_string(p[1]) + "," + to_string(p[2]) + ")",
                                  "some kernel element with nonzero image", "all images vanish"};
          });
}

// ---- stanley

void stanley_suite(SuiteContext& ctx, std::size_t d) {
  ctx.goldens_for(Suite::Stanley);
  auto tops = topologies_upto(d);
  tops.push_back(parse_topology("[5|{2,4}<5,{2,4}<1]"));
  ctx.run("down-sets partition the strict partitions", tops.size(),
          [tops](std::size_t i) -> std::optional<Counterexample> {
            const Topology& t = tops[i];
            std::vector<PackedWord> all;
            for (const auto& [f, down] : stanley_decomposition(t)) all.insert(all.end(), down.begin(), down.end());
            std::sort(all.begin(), all.end());
            if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
              return Counterexample{"down-sets disjoint", inputs_of(t), "disjoint", "overlap"};
            }
            std::map<PackedWord, Rational> got;
            for (const auto& f : all) got.emplace(f, 1);
            std::map<PackedWord, Rational> want;
            for (const auto& f : strict_partitions(t)) want.emplace(f, 1);
            return expect_eq("union is the strict partitions", inputs_of(t), want, got);
          });
  ctx.run("five-point example has 8 linear extensions", 1, [](std::size_t) {
    return expect_eq("linear extension count", std::string("[5|{2,4}<5,{2,4}<1]"), std::size_t{8},
                     linear_extensions(parse_topology("[5|{2,4}<5,{2,4}<1]")).size());
  });
  ctx.run("linear extensions are the strict partitions with max = classes", tops.size(), [tops](std::size_t i) {
    const Topology& t = tops[i];
    std::map<PackedWord, Rational> want;
    for (const auto& f : strict_partitions(t)) {
      if (static_cast<std::size_t>(f.max_letter()) == classes(t).size()) want.emplace(f, 1);
    }
    std::map<PackedWord, Rational> got;
    for (const auto& f : linear_extensions(t)) got.emplace(f, 1);
    return expect_eq("linear extensions", inputs_of(t), want, got);
  });
  std::vector<std::pair<PackedWord, PackedWord>> pairs;
  for (std::size_t n = 0; n <= std::min<std::size_t>(d, 4); ++n) {
    for (const auto& g : packed_words_of_length(n)) {
      for (const auto& f : packed_words_of_length(n)) pairs.emplace_back(g, f);
    }
  }
  ctx.run("g <= f iff g is a strict partition of T_f", pairs.size(), [pairs](std::size_t i) {
    const auto& [g, f] = pairs[i];
    const auto sp = strict_partitions(topology_of_word(f));
    const bool in = std::find(sp.begin(), sp.end(), g) != sp.end();
    return expect_eq("order and strict partitions", inputs_of(g, f), in, word_leq(g, f));
  });
}

// ---- order

void order_suite(SuiteContext& ctx, std::size_t d) {
  ctx.goldens_for(Suite::Order);
  const std::size_t dw = std::min<std::size_t>(d, 4);
  ctx.run("Std and M criterion", dw, [](std::size_t i) -> std::optional<Counterexample> {
    const auto rep = order_iso_check(i + 1);
    if (rep.mismatches == 0) return std::nullopt;
    return Counterexample{"Std and M criterion", inputs_of(rep.first_mismatch->first, rep.first_mismatch->second),
                          "criterion agrees with the order", std::to_string(rep.mismatches) + " mismatches"};
  });
  const std::vector<std::size_t> fubini{1, 1, 3, 13, 75, 541, 4683, 47293, 545835};
  const std::size_t df = std::min<std::size_t>(std::max<std::size_t>(d, 5), kDefaultWordCap);
  ctx.run("fiber sizes sum to Fubini numbers", df, [fubini](std::size_t i) -> std::optional<Counterexample> {
    const std::size_t n = i + 1;
    std::size_t total = 0;
    for (const auto& s : enumerate_permutations(n)) {
      const std::size_t fiber = std::size_t{1} << cardinality(ascent_set(s.word()));
      if (n <= 5 && std_fiber(s).size() != fiber) {
        return Counterexample{"fiber size", inputs_of(s.word()), std::to_string(fiber),
                              std::to_string(std_fiber(s).size())};
      }
      total += fiber;
    }
    if (auto e = expect_eq("fiber sum", "n=" + std::to_string(n), fubini[n], total)) return e;
    return expect_eq("packed words", "n=" + std::to_string(n), fubini[n], packed_words_of_length(n).size());
  });
  ctx.run("fibers are the Std classes", dw, [](std::size_t i) -> std::optional<Counterexample> {
    const std::size_t n = i + 1;
    std::map<Permutation, std::vector<PackedWord>> classes;
    for (const auto& f : packed_words_of_length(n)) classes[std_word(f)].push_back(f);
    for (auto& [s, ws] : classes) {
      std::sort(ws.begin(), ws.end());
      auto fiber = std_fiber(s);
      std::sort(fiber.begin(), fiber.end());
      if (fiber != ws) return Counterexample{"Std fiber", inputs_of(s.word()), "the Std class", "a different set"};
    }
    return std::nullopt;
  });
  ctx.run("order components are the n! fibers", dw, [](std::size_t i) -> std::optional<Counterexample> {
    const std::size_t n = i + 1;
    const auto& ws = packed_words_of_length(n);
    std::vector<std::size_t> parent(ws.size());
    for (std::size_t k = 0; k < ws.size(); ++k) parent[k] = k;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t k) {
      return parent[k] == k ? k : parent[k] = find(parent[k]);
    };
    for (std::size_t a = 0; a < ws.size(); ++a) {
      for (std::size_t b = 0; b < ws.size(); ++b) {
        if (word_leq(ws[a], ws[b])) parent[find(a)] = find(b);
      }
    }
    std::size_t components = 0;
    for (std::size_t k = 0; k < ws.size(); ++k) components += find(k) == k ? 1 : 0;
    std::size_t factorial = 1;
    for (std::size_t k = 2; k <= n; ++k) factorial *= k;
    return expect_eq("component count", "n=" + std::to_string(n), factorial, components);
  });
  std::vector<std::pair<PackedWord, PackedWord>> pairs;
  for (std::size_t n = 0; n <= dw; ++n) {
    for (const auto& g : packed_words_of_length(n)) {
      for (const auto& f : packed_words_of_length(n)) pairs.emplace_back(g, f);
    }
  }
  ctx.run("partial order and the mirrored order", pairs.size(), [pairs](std::size_t i) -> std::optional<Counterexample> {
    const auto& [g, f] = pairs[i];
    const bool gf = word_leq(g, f);
    if (!word_leq(g, g)) return Counterexample{"reflexive", inputs_of(g), "true", "false"};
    if (gf && word_leq(f, g) && !(f == g)) return Counterexample{"antisymmetric", inputs_of(g, f), "false", "true"};
    if (gf) {
      for (const auto& h : packed_words_of_length(g.size())) {
        if (word_leq(h, g) && !word_leq(h, f)) {
          return Counterexample{"transitive", inputs_of(h, g, f), "true", "false"};
        }
      }
    }
    return expect_eq("mirrored order is j-conjugate", inputs_of(g, f), word_leq(j_involution(g), j_involution(f)),
                     word_leq_prime(g, f));
  });
  const auto words = words_upto(dw);
  const auto wpairs = pairs_upto(words, dw);
  auto ph = [](const PackedWord& f) { return phi(PhiVariant::P100, f); };
  ctx.run("phi100 is a Hopf morphism", wpairs.size(), [wpairs, ph](std::size_t i) {
    const WordComb x(wpairs[i].first), y(wpairs[i].second);
    if (auto e = expect_eq("phi100 multiplicative", inputs_of(x, y), phi(PhiVariant::P100, shuffle_product(x, y)),
                           wqsym_product(phi(PhiVariant::P100, x), phi(PhiVariant::P100, y)))) {
      return e;
    }
    return expect_eq("phi100 comultiplicative", inputs_of(x), wqsym_coproduct(phi(PhiVariant::P100, x)),
                     tensor_map(ph, ph, wqsym_coproduct(x)));
  });
  ctx.run("phi100 unitriangular", words.size(), [words](std::size_t i) -> std::optional<Counterexample> {
    const auto img = phi(PhiVariant::P100, words[i]);
    if (!(img.coeff(words[i]) == QPoly(1))) {
      return Counterexample{"phi100 diagonal", inputs_of(words[i]), "1", img.coeff(words[i]).to_string()};
    }
    for (const auto& [g, c] : img) {
      if (!(g == words[i]) && g.max_letter() >= words[i].max_letter()) {
        return Counterexample{"phi100 triangular", inputs_of(words[i]), "only smaller maxima", describe(g)};
      }
    }
    return std::nullopt;
  });
}

// ---- counts

void counts_suite(SuiteContext& ctx, std::size_t max_n) {
  ctx.goldens_for(Suite::Counts);
  const std::vector<std::size_t> topologies{1, 1, 4, 29, 355, 6942, 209527};
  const std::vector<std::size_t> t0{1, 1, 3, 19, 219, 4231, 130023};
  const std::vector<std::size_t> indec{0, 1, 3, 22, 292, 6120, 193594};
  const std::vector<std::size_t> bi{0, 1, 2, 15, 229, 5298, 177661};
  ctx.run("topology counts", max_n + 1, [topologies, t0](std::size_t n) -> std::optional<Counterexample> {
    const auto& ts = topologies_of_degree(n);
    if (auto e = expect_eq("topologies", "n=" + std::to_string(n), topologies[n], ts.size())) return e;
    const auto t0_count = static_cast<std::size_t>(std::count_if(ts.begin(), ts.end(), is_t0));
    if (auto e = expect_eq("T0 topologies", "n=" + std::to_string(n), t0[n], t0_count)) return e;
    return expect_eq("labeled posets", "n=" + std::to_string(n), t0[n], labeled_posets(n).size());
  });
  const Table table = indec_table(max_n);
  ctx.run("indecomposables", max_n, [table, indec, bi](std::size_t i) -> std::optional<Counterexample> {
    const auto& row = table.rows[i];
    const std::size_t n = i + 1;
    const std::string in = "n=" + std::to_string(n);
    if (auto e = expect_eq("dot indecomposables", in, BigInt(indec[n]), row[1])) return e;
    if (auto e = expect_eq("down indecomposables", in, BigInt(indec[n]), row[2])) return e;
    return expect_eq("bi-indecomposables", in, BigInt(bi[n]), row[3]);
  });
  ctx.run("generating series", 1, [table, max_n](std::size_t) -> std::optional<Counterexample> {
    const auto counts = topology_counts(max_n);
    const auto i_series = indecomposable_series(counts);
    const auto bi_series = bi_indecomposable_series(counts);
    for (std::size_t k = 0; k < max_n; ++k) {
      const std::string in = "n=" + std::to_string(k + 1);
      if (auto e = expect_eq("(F-1)/F", in, table.rows[k][1], i_series[k])) return e;
      if (auto e = expect_eq("(-2+3F-F^2)/F", in, table.rows[k][3], bi_series[k])) return e;
    }
    return std::nullopt;
  });
}

}  // namespace

const char* to_string(Suite s) noexcept {
  switch (s) {
    case Suite::Hopf:
      return "hopf";
    case Suite::Ribbon:
      return "ribbon";
    case Suite::Pairing:
      return "pairing";
    case Suite::Gamma:
      return "gamma";
    case Suite::Stanley:
      return "stanley";
    case Suite::Order:
      return "order";
    case Suite::Counts:
      return "counts";
  }
  return "?";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> s{Suite::Hopf,    Suite::Ribbon, Suite::Pairing, Suite::Gamma,
                                    Suite::Stanley, Suite::Order,  Suite::Counts};
  return s;
}

std::optional<Suite> suite_from_string(std::string_view name) {
  for (Suite s : all_suites()) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

GroupReport run_checks(std::string name, std::size_t count, const Check& check) {
  GroupReport report{std::move(name), count, 0, std::nullopt};
  std::size_t passed = 0;
  std::size_t first = count;
  std::mutex mutex;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic) reduction(+ : passed)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto c = guarded(check, static_cast<std::size_t>(i), report.name);
    if (!c) {
      ++passed;
      continue;
    }
    std::lock_guard lock(mutex);
    if (static_cast<std::size_t>(i) < first) {
      first = static_cast<std::size_t>(i);
      report.first_counterexample = std::move(c);
    }
  }
  report.passed = passed;
  return report;
}

GroupReport run_checks_serial(std::string name, std::size_t count, const Check& check) {
  GroupReport report{std::move(name), count, 0, std::nullopt};
  for (std::size_t i = 0; i < count; ++i) {
    auto c = guarded(check, i, report.name);
    if (!c) {
      ++report.passed;
    } else if (!report.first_counterexample) {
      report.first_counterexample = std::move(c);
    }
  }
  return report;
}

SuiteReport make_report(std::string suite, std::size_t min_degree, std::size_t max_degree,
                        std::vector<GroupReport> groups, double wall_time_ms) {
  SuiteReport r;
  r.suite = std::move(suite);
  r.min_degree = min_degree;
  r.max_degree = max_degree;
  for (const auto& g : groups) {
    r.attempted += g.attempted;
    r.passed += g.passed;
    if (!r.counterexample && g.first_counterexample) r.counterexample = g.first_counterexample;
  }
  r.groups = std::move(groups);
  r.wall_time_ms = wall_time_ms;
  return r;
}

SuiteReport verify_suite(Suite suite, const SuiteOptions& options) {
  const std::size_t cap = options.slow ? kSlowDegreeCap : kFastDegreeCap;
  if (options.max_degree > cap) {
    throw Error(ErrorKind::CapExceeded, "--max-degree " + std::to_string(options.max_degree) + " exceeds " +
                                            std::to_string(cap) + (options.slow ? "" : " (use --slow)"));
  }
  const auto start = Clock::now();
  SuiteContext ctx{options, {}};
  const std::size_t d = options.max_degree;
  std::size_t lo = 0;
  std::size_t hi = d;
  switch (suite) {
    case Suite::Hopf:
      hopf_suite(ctx, d);
      break;
    case Suite::Ribbon:
      ribbon_suite(ctx, d);
      hi = std::min(d, kRibbonDegreeCap);
      break;
    case Suite::Pairing:
      pairing_suite(ctx, d);
      break;
    case Suite::Gamma:
      gamma_suite(ctx, d);
      break;
    case Suite::Stanley:
      stanley_suite(ctx, d);
      break;
    case Suite::Order:
      order_suite(ctx, d);
      lo = 1;
      break;
    case Suite::Counts:
      hi = options.slow ? 6 : 5;
      counts_suite(ctx, hi);
      break;
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return make_report(to_string(suite), lo, hi, std::move(ctx.groups), ms);
}

}  // namespace topohopf

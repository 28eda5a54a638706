#include "topohopf/ops.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>

#include "topohopf/enumerate.hpp"
#include "topohopf/errors.hpp"
#include "topohopf/exact_linalg.hpp"
#include "topohopf/json_io.hpp"
#include "topohopf/pairing.hpp"
#include "topohopf/ribbon.hpp"
#include "topohopf/text_format.hpp"
#include "topohopf/tpartition.hpp"
#include "topohopf/wqsym.hpp"

namespace topohopf {

namespace {

using Json = nlohmann::ordered_json;
using Args = std::vector<std::string>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_arg(std::string_view arg, const std::string& why) {
  throw Error(ErrorKind::Parse, "bad argument '" + std::string(arg) + "': " + why);
}

// Word labels in arguments: "1" is the unit, anything else a packed word.
PackedWord word_label(std::string_view s) {
  s = trim(s);
  if (s == "1") return PackedWord();
  return parse_packed_word(s);
}

Permutation perm_label(std::string_view s) {
  s = trim(s);
  if (s == "1") return Permutation();
  return parse_permutation(s);
}

TopComb arg_topologies(std::string_view s) { return parse_math<Topology>(s, parse_math_topology); }
WordComb arg_words(std::string_view s) { return parse_math<PackedWord>(s, word_label); }
PermComb arg_perms(std::string_view s) { return parse_math<Permutation>(s, perm_label); }
RibbonComb arg_ribbons(std::string_view s) { return parse_math<RibbonLabel>(s, parse_math_ribbon); }

std::size_t arg_size(std::string_view s) {
  s = trim(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) bad_arg(s, "expected a nonnegative integer");
  return v;
}

// "{1,3}", "1,3", "{}" or "".
Subset arg_set(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') bad_arg(s, "unbalanced '{'");
    s = trim(s.substr(1, s.size() - 2));
  }
  Subset out = 0;
  for (int v : parse_word(s)) {
    if (v < 1 || v > static_cast<int>(kMaxWordLength)) bad_arg(s, "set element out of range");
    out |= Subset{1} << (v - 1);
  }
  return out;
}

Rational arg_rational(std::string_view s) {
  s = trim(s);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
  BigInt den(std::string(trim(s.substr(slash + 1))));
  if (den == 0) bad_arg(s, "zero denominator");
  return Rational(BigInt(std::string(trim(s.substr(0, slash)))), den);
}

QPoint arg_point(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '(') s = trim(s.substr(1, s.size() - 2));
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) bad_arg(s, "expected three coordinates");
  try {
    return {arg_rational(parts[0]), arg_rational(parts[1]), arg_rational(parts[2])};
  } catch (const std::runtime_error&) {
    bad_arg(s, "expected rational coordinates");
  }
}

std::string set_text(Subset s) {
  std::string out = "{";
  for (Subset m = s; m != 0; m &= m - 1) {
    if (out.size() > 1) out += ",";
    out += std::to_string(std::countr_zero(m) + 1);
  }
  return out + "}";
}

Json set_json(Subset s) {
  auto out = Json::array();
  for (Subset m = s; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

template <class L>
OpResult comb(ValueKind kind, const LinComb<L>& x) {
  return {kind, render(x), render_math(x), to_json(x)};
}

OpResult scalar(std::string text, Json json) { return {ValueKind::Scalar, text, text, std::move(json)}; }

OpResult boolean(bool b) { return scalar(b ? "true" : "false", b); }

OpResult count(std::size_t n) { return scalar(std::to_string(n), n); }

OpResult word_set(std::vector<PackedWord> words) {
  std::sort(words.begin(), words.end());
  std::string text = "{";
  std::string math = "{";
  auto keys = Json::array();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) {
      text += ", ";
      math += ", ";
    }
    text += display_label(words[i]);
    math += math_label(words[i]);
    keys.push_back(label_key(words[i]));
  }
  return {ValueKind::WordSet, text + "}", math + "}", {{"words", keys}}};
}

std::string raw_word_text(const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

ProductKind arg_kind(std::string_view s) {
  s = trim(s);
  if (s == "dot") return ProductKind::Dot;
  if (s == "down") return ProductKind::Down;
  bad_arg(s, "expected dot or down");
}

PhiVariant arg_variant(std::string_view s) {
  s = trim(s);
  if (s == "100") return PhiVariant::P100;
  if (s == "010") return PhiVariant::P010;
  bad_arg(s, "expected 100 or 010");
}

IntMatrix arg_matrix(std::string_view s) {
  nlohmann::json j = detail::parse_json_text(s);
  IntMatrix m;
  if (!j.is_array()) bad_arg(s, "expected a JSON array of rows");
  for (const auto& row : j) {
    if (!row.is_array()) bad_arg(s, "expected a JSON array of rows");
    std::vector<BigInt> r;
    for (const auto& v : row) {
      if (v.is_number_integer()) {
        r.emplace_back(v.get<long long>());
      } else if (v.is_string()) {
        r.emplace_back(v.get<std::string>());
      } else {
        bad_arg(s, "matrix entries must be integers");
      }
    }
    if (!m.empty() && r.size() != m.front().size()) throw Error(ErrorKind::SizeMismatch, "matrix rows differ in length");
    m.push_back(std::move(r));
  }
  return m;
}

struct Entry {
  OpInfo info;
  std::function<OpResult(const Args&)> run;
};

std::vector<Entry> build_registry() {
  using K = ValueKind;
  std::vector<Entry> r;
  auto add = [&](std::string name, std::vector<std::string> params, std::string summary,
                 std::function<OpResult(const Args&)> fn) {
    r.push_back({{std::move(name), std::move(params), std::move(summary)}, std::move(fn)});
  };

  add("pack", {"word"}, "Pack(w)", [](const Args& a) {
    return comb(K::Words, WordComb(pack(parse_word(a[0]))));
  });
  add("restrict_word", {"word", "letters"}, "subword on a letter set", [](const Args& a) {
    Word w = parse_word(a[0]);
    Subset letters = arg_set(a[1]);
    Word out = restrict_word(w, [&](int v) { return v >= 1 && v <= 32 && ((letters >> (v - 1)) & 1U); });
    return scalar(raw_word_text(out), out);
  });
  add("std_word", {"word"}, "standardisation", [](const Args& a) {
    return comb(K::Permutations, PermComb(std_word(word_label(a[0]))));
  });
  add("j_involution", {"x"}, "letter reversal j", [](const Args& a) {
    return comb(K::Words, j_involution(arg_words(a[0])));
  });
  add("ascent_set", {"word"}, "the set M(f)", [](const Args& a) {
    Subset m = ascent_set(word_label(a[0]));
    return scalar(set_text(m), set_json(m));
  });
  add("make_topology", {"n", "pairs"}, "validated preorder from pairs (i,j) meaning i<=j", [](const Args& a) {
    const std::size_t n = arg_size(a[0]);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::string text(a[1]);
    std::erase_if(text, [](char c) { return c == '(' || c == ')' || c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c)); });
    Word flat = parse_word(text);
    if (flat.size() % 2 != 0) bad_arg(a[1], "expected pairs");
    for (std::size_t k = 0; k < flat.size(); k += 2) {
      const int i = flat[k];
      const int j = flat[k + 1];
      if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n) {
        bad_arg(a[1], "pair element out of range");
      }
      leq[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = true;
    }
    return comb(K::Topologies, TopComb(make_topology(n, leq)));
  });
  add("open_sets", {"T"}, "open sets by size then lexicographically", [](const Args& a) {
    std::string text;
    auto json = Json::array();
    for (Subset o : open_sets(parse_math_topology(a[0]))) {
      text += (text.empty() ? "" : ", ") + set_text(o);
      json.push_back(set_json(o));
    }
    return scalar(text, json);
  });
  add("topology_of_word", {"word"}, "T_f", [](const Args& a) {
    return comb(K::Topologies, TopComb(topology_of_word(word_label(a[0]))));
  });
  add("restrict_std", {"T", "Y"}, "Std(T|Y)", [](const Args& a) {
    return comb(K::Topologies, TopComb(restrict_std(parse_math_topology(a[0]), arg_set(a[1]))));
  });
  add("iota", {"x"}, "the involution of complements", [](const Args& a) {
    return comb(K::Topologies, iota(arg_topologies(a[0])));
  });
  add("classes", {"T"}, "equivalence classes", [](const Args& a) {
    std::string text;
    auto json = Json::array();
    for (Subset c : classes(parse_math_topology(a[0]))) {
      text += (text.empty() ? "" : ", ") + set_text(c);
      json.push_back(set_json(c));
    }
    return scalar(text, json);
  });
  add("bar", {"T"}, "T0 quotient", [](const Args& a) {
    return comb(K::Topologies, TopComb(bar(parse_math_topology(a[0]))));
  });
  add("c_defect", {"T"}, "degree minus number of classes", [](const Args& a) {
    return count(c_defect(parse_math_topology(a[0])));
  });
  add("is_t0", {"T"}, "antisymmetry", [](const Args& a) { return boolean(is_t0(parse_math_topology(a[0]))); });
  add("refinement_leq", {"T", "T'"}, "refinement order", [](const Args& a) {
    return boolean(refinement_leq(parse_math_topology(a[0]), parse_math_topology(a[1])));
  });
  add("count_topologies", {"n"}, "number of topologies on [n]", [](const Args& a) {
    return count(topologies_of_degree(arg_size(a[0])).size());
  });
  add("count_packed_words", {"n"}, "number of packed words of length n", [](const Args& a) {
    return count(packed_words_of_length(arg_size(a[0])).size());
  });

  add("qpoly_add", {"a", "b"}, "polynomial sum", [](const Args& a) {
    QPoly p = QPoly::parse(a[0]) + QPoly::parse(a[1]);
    return scalar(p.to_string(), p.to_string());
  });
  add("qpoly_mul", {"a", "b"}, "polynomial product", [](const Args& a) {
    QPoly p = QPoly::parse(a[0]) * QPoly::parse(a[1]);
    return scalar(p.to_string(), p.to_string());
  });
  add("qpoly_neg", {"a"}, "polynomial negation", [](const Args& a) {
    QPoly p = -QPoly::parse(a[0]);
    return scalar(p.to_string(), p.to_string());
  });
  add("qpoly_eval", {"a", "point"}, "evaluation at (q1,q2,q3)", [](const Args& a) {
    std::string v = to_string(QPoly::parse(a[0]).evaluate(arg_point(a[1])));
    return scalar(v, v);
  });
  add("exact_rank", {"matrix"}, "rank over Q of a JSON integer matrix", [](const Args& a) {
    return count(exact_rank(arg_matrix(a[0])));
  });

  add("product_dot", {"x", "y"}, "x . y", [](const Args& a) {
    return comb(K::Topologies, product_dot(arg_topologies(a[0]), arg_topologies(a[1])));
  });
  add("product_down", {"x", "y"}, "x -> y", [](const Args& a) {
    return comb(K::Topologies, product_down(arg_topologies(a[0]), arg_topologies(a[1])));
  });
  add("coproduct", {"x"}, "Delta", [](const Args& a) {
    return comb(K::TopologyTensor, coproduct(arg_topologies(a[0])));
  });
  add("counit", {"x"}, "epsilon", [](const Args& a) {
    QPoly c = arg_topologies(a[0]).coeff(Topology());
    return scalar(c.to_string(), c.to_string());
  });
  add("antipode", {"x"}, "S", [](const Args& a) { return comb(K::Topologies, antipode(arg_topologies(a[0]))); });
  add("decompose", {"T", "kind"}, "factorization into indecomposables", [](const Args& a) {
    const auto kind = arg_kind(a[1]);
    const auto result = decompose(parse_math_topology(a[0]), kind);
    std::string text;
    auto factors = Json::array();
    for (const auto& f : result.factors) {
      if (!text.empty()) text += kind == ProductKind::Dot ? " . " : " -> ";
      text += hasse_text(f);
      factors.push_back(f.key());
    }
    return scalar(text, {{"kind", kind == ProductKind::Dot ? "dot" : "down"}, {"factors", factors}});
  });
  add("indecomposability_class", {"T"}, "bi, dot-only or down-only", [](const Args& a) {
    std::string c = to_string(indecomposability_class(parse_math_topology(a[0])));
    return scalar(c, c);
  });
  add("theta_q", {"x"}, "q^c(T) bar(T), with q written q1", [](const Args& a) {
    return comb(K::Topologies, theta_q(arg_topologies(a[0])));
  });
  add("theta_0", {"x"}, "keeps the T0 labels", [](const Args& a) {
    return comb(K::Topologies, theta_0(arg_topologies(a[0])));
  });
  add("to_ribbon", {"x"}, "standard basis to ribbon basis", [](const Args& a) {
    return comb(K::Ribbons, to_ribbon(arg_topologies(a[0])));
  });
  add("from_ribbon", {"r"}, "ribbon basis to standard basis", [](const Args& a) {
    return comb(K::Topologies, from_ribbon(arg_ribbons(a[0])));
  });
  add("ribbon_product_dot", {"r", "s"}, "product in the ribbon basis", [](const Args& a) {
    return comb(K::Ribbons, ribbon_product_dot(arg_ribbons(a[0]), arg_ribbons(a[1])));
  });
  add("ribbon_product_down", {"r", "s"}, "down product in the ribbon basis", [](const Args& a) {
    return comb(K::Ribbons, ribbon_product_down(arg_ribbons(a[0]), arg_ribbons(a[1])));
  });
  add("ribbon_coproduct", {"r"}, "coproduct in the ribbon basis", [](const Args& a) {
    return comb(K::RibbonTensor, ribbon_coproduct(arg_ribbons(a[0])));
  });
  add("pictures_count", {"T", "T'"}, "number of pictures", [](const Args& a) {
    return count(pictures_count(parse_math_topology(a[0]), parse_math_topology(a[1])));
  });
  add("pairing", {"x", "y"}, "Hopf pairing", [](const Args& a) {
    QPoly p = pairing(arg_topologies(a[0]), arg_topologies(a[1]));
    return scalar(p.to_string(), p.to_string());
  });
  add("gram_rank", {"n"}, "rank of the degree-n Gram matrix", [](const Args& a) {
    return count(gram_rank(arg_size(a[0])));
  });

  add("wqsym_product", {"x", "y"}, "product of WQSym", [](const Args& a) {
    return comb(K::Words, wqsym_product(arg_words(a[0]), arg_words(a[1])));
  });
  add("shuffle_product", {"x", "y"}, "shifted shuffle of packed words", [](const Args& a) {
    return comb(K::Words, shuffle_product(arg_words(a[0]), arg_words(a[1])));
  });
  add("fqsym_product", {"x", "y"}, "product of FQSym", [](const Args& a) {
    return comb(K::Permutations, fqsym_product(arg_perms(a[0]), arg_perms(a[1])));
  });
  add("wqsym_coproduct", {"x"}, "coproduct of WQSym", [](const Args& a) {
    return comb(K::WordTensor, wqsym_coproduct(arg_words(a[0])));
  });
  add("varpi", {"x"}, "projection onto permutations", [](const Args& a) {
    return comb(K::Permutations, varpi(arg_words(a[0])));
  });
  add("word_leq", {"g", "f"}, "g <= f", [](const Args& a) {
    return boolean(word_leq(word_label(a[0]), word_label(a[1])));
  });
  add("word_leq_prime", {"g", "f"}, "g <=' f", [](const Args& a) {
    return boolean(word_leq_prime(word_label(a[0]), word_label(a[1])));
  });
  add("phi", {"variant", "x"}, "phi_(1,0,0) or phi_(0,1,0)", [](const Args& a) {
    return comb(K::Words, phi(arg_variant(a[0]), arg_words(a[1])));
  });
  add("std_fiber", {"sigma"}, "packed words standardising to sigma", [](const Args& a) {
    return word_set(std_fiber(perm_label(a[0])));
  });
  add("order_iso_check", {"n"}, "Std and M criterion against the order", [](const Args& a) {
    const auto rep = order_iso_check(arg_size(a[0]));
    return scalar("pairs=" + std::to_string(rep.pairs) + " mismatches=" + std::to_string(rep.mismatches),
                  {{"pairs", rep.pairs}, {"mismatches", rep.mismatches}});
  });

  add("generalized_partitions", {"T"}, "generalized T-partitions", [](const Args& a) {
    const auto parts = generalized_partitions(parse_math_topology(a[0]));
    std::vector<PackedWord> words;
    auto json = Json::array();
    for (const auto& p : parts) {
      words.push_back(p.word);
      json.push_back({{"word", label_key(p.word)}, {"l1", p.stats.l1}, {"l2", p.stats.l2}, {"l3", p.stats.l3}});
    }
    OpResult out = word_set(words);
    out.json = {{"partitions", json}};
    return out;
  });
  add("partition_stats", {"T", "f"}, "(l1,l2,l3) of a generalized partition", [](const Args& a) {
    const Topology t = parse_math_topology(a[0]);
    const PackedWord f = word_label(a[1]);
    if (f.size() != t.degree()) throw Error(ErrorKind::SizeMismatch, "word length differs from the degree");
    if (!is_generalized_partition(t, f)) bad_arg(a[1], "not a generalized partition of the topology");
    const auto s = partition_stats(t, f);
    return scalar("(" + std::to_string(s.l1) + "," + std::to_string(s.l2) + "," + std::to_string(s.l3) + ")",
                  {{"l1", s.l1}, {"l2", s.l2}, {"l3", s.l3}});
  });
  add("strict_partitions", {"T"}, "strict T-partitions", [](const Args& a) {
    return word_set(strict_partitions(parse_math_topology(a[0])));
  });
  add("gamma_q", {"x"}, "Gamma_q", [](const Args& a) { return comb(K::Words, gamma_q(arg_topologies(a[0]))); });
  add("linear_extensions", {"T"}, "linear extensions as packed words", [](const Args& a) {
    return word_set(linear_extensions(parse_math_topology(a[0])));
  });
  add("l_morphism", {"x"}, "L", [](const Args& a) { return comb(K::Words, l_morphism(arg_topologies(a[0]))); });
  add("stanley_decomposition", {"T"}, "down-sets of the linear extensions", [](const Args& a) {
    std::string text;
    Json json = Json::object();
    for (const auto& [f, down] : stanley_decomposition(parse_math_topology(a[0]))) {
      if (!text.empty()) text += "; ";
      text += math_label(f) + ": " + word_set(down).math;
      auto keys = Json::array();
      for (const auto& g : down) keys.push_back(label_key(g));
      json[label_key(f)] = keys;
    }
    return scalar(text, json);
  });
  add("l_kernel_basis", {"n"}, "basis of the kernel of L in degree n", [](const Args& a) {
    std::string text;
    auto json = Json::array();
    for (const auto& k : l_kernel_basis(arg_size(a[0]))) {
      text += (text.empty() ? "" : "\n") + render_math(k);
      json.push_back(to_json(k));
    }
    return scalar(text, json);
  });

  std::sort(r.begin(), r.end(), [](const Entry& x, const Entry& y) { return x.info.name < y.info.name; });
  return r;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = build_registry();
  return r;
}

}  // namespace

const std::vector<OpInfo>& operations() {
  static const std::vector<OpInfo> infos = [] {
    std::vector<OpInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

OpResult run_op(std::string_view name, const std::vector<std::string>& args) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    if (args.size() != e.info.params.size()) {
      throw Error(ErrorKind::Parse, "operation " + e.info.name + " takes " + std::to_string(e.info.params.size()) +
                                        " argument(s), got " + std::to_string(args.size()));
    }
    return e.run(args);
  }
  throw Error(ErrorKind::UnknownOperation, "unknown operation '" + std::string(name) + "'");
}

std::string canonical_math(ValueKind kind, std::string_view text) {
  switch (kind) {
    case ValueKind::Topologies:
      return render_math(arg_topologies(text));
    case ValueKind::Words:
      return render_math(arg_words(text));
    case ValueKind::Permutations:
      return render_math(arg_perms(text));
    case ValueKind::Ribbons:
      return render_math(arg_ribbons(text));
    case ValueKind::TopologyTensor:
      return render_math(parse_math<std::pair<Topology, Topology>>(text, [](std::string_view l) {
        auto [x, y] = detail::split_tensor(l);
        return std::pair{parse_math_topology(x), parse_math_topology(y)};
      }));
    case ValueKind::WordTensor:
      return render_math(parse_math<std::pair<PackedWord, PackedWord>>(text, [](std::string_view l) {
        auto [x, y] = detail::split_tensor(l);
        return std::pair{word_label(x), word_label(y)};
      }));
    case ValueKind::RibbonTensor:
      return render_math(parse_math<std::pair<RibbonLabel, RibbonLabel>>(text, [](std::string_view l) {
        auto [x, y] = detail::split_tensor(l);
        return std::pair{parse_math_ribbon(x), parse_math_ribbon(y)};
      }));
    case ValueKind::WordSet: {
      std::string_view s = trim(text);
      if (s.size() < 2 || s.front() != '{' || s.back() != '}') bad_arg(text, "expected {(..), ...}");
      s = trim(s.substr(1, s.size() - 2));
      std::vector<PackedWord> words;
      std::size_t start = 0;
      int depth = 0;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '(') ++depth;
        if (i < s.size() && s[i] == ')') --depth;
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
          auto item = trim(s.substr(start, i - start));
          if (!item.empty()) words.push_back(word_label(item));
          start = i + 1;
        }
      }
      return word_set(words).math;
    }
    case ValueKind::Scalar:
      return std::string(trim(text));
  }
  return std::string(text);
}

}  // namespace topohopf

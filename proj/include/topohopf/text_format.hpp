#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "topohopf/lincomb.hpp"
#include "topohopf/packed_word.hpp"
#include "topohopf/topology.hpp"

namespace topohopf {

// Basis keys: "n:b11...bnn" for topologies, "3,3,1" for words (empty word
// is the empty string), "R[n:...]" for ribbons.
std::string label_key(const Topology& t);
std::string label_key(const PackedWord& f);
std::string label_key(const Permutation& s);
std::string label_key(const RibbonLabel& r);

/// Accepts "n:bits", the Hasse form "[n|1<2,{1,3}<2]" and "n|1<2,{1,3}".
/// Relations are closed reflexively and transitively. Throws Error(Parse).
Topology parse_topology(std::string_view text);

/// Accepts "3,3,1", "(3,3,1)", "(331)" and "" or "()" for the empty word.
Word parse_word(std::string_view text);
/// parse_word then validation. Throws Error(NotPacked).
PackedWord parse_packed_word(std::string_view text);
/// Throws Error(NotPermutation).
Permutation parse_permutation(std::string_view text);

/// Hasse form: covering relations of the class poset, each class written
/// as its element or as "{a,b}"; classes with no cover listed alone when
/// they are not singletons. Example: "[3|{1,3}<2]".
std::string hasse_text(const Topology& t);

// Display labels for LinComb rendering: keys for topologies, "(1,2,1)" for
// words, "R[key]" for ribbons and "left (x) right" for tensors.
std::string display_label(const Topology& t);
std::string display_label(const PackedWord& f);
std::string display_label(const Permutation& s);
std::string display_label(const RibbonLabel& r);
template <class A, class B>
std::string display_label(const std::pair<A, B>& p) {
  return display_label(p.first) + " (x) " + display_label(p.second);
}

/// "coeff * label" terms in label order joined by " + "; multi-term
/// coefficients are parenthesised. The zero combination renders as "0".
template <class L>
std::string render(const LinComb<L>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [label, c] : x) {
    if (!out.empty()) out += " + ";
    std::string coeff = c.to_string();
    if (c.terms().size() > 1) coeff = "(" + coeff + ")";
    out += coeff + " * " + display_label(label);
  }
  return out;
}

// Math notation: "(12) + q1*(11)", "R[2|1<2] - [2|{1,2}]",
// "(1 - q1 - q2)*(122)", "(112) ⊗ (321)". The unit label is written "1".
std::string math_label(const Topology& t);
std::string math_label(const PackedWord& f);
std::string math_label(const Permutation& s);
std::string math_label(const RibbonLabel& r);
template <class A, class B>
std::string math_label(const std::pair<A, B>& p) {
  return math_label(p.first) + " ⊗ " + math_label(p.second);
}

template <class L>
std::string render_math(const LinComb<L>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [label, c] : x) {
    const bool single = c.terms().size() == 1;
    const bool negative = single && c.terms().begin()->second < 0;
    const QPoly mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!(mag == QPoly(1))) out += (single ? mag.to_string() : "(" + mag.to_string() + ")") + "*";
    out += math_label(label);
  }
  return out;
}

namespace detail {

struct MathTerm {
  QPoly coeff;
  std::string label;
};

/// Splits a math-notation sum into signed terms with their label text.
std::vector<MathTerm> split_math_terms(std::string_view text);

std::pair<std::string, std::string> split_tensor(std::string_view label);

}  // namespace detail

/// Parses math notation with `parse_label` for each label. Throws Error(Parse).
template <class L, class F>
LinComb<L> parse_math(std::string_view text, F parse_label) {
  LinComb<L> out;
  for (const auto& term : detail::split_math_terms(text)) out.add(parse_label(term.label), term.coeff);
  return out;
}

Topology parse_math_topology(std::string_view text);
PackedWord parse_math_word(std::string_view text);
RibbonLabel parse_math_ribbon(std::string_view text);

}  // namespace topohopf

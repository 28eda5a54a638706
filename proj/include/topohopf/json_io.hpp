#pragma once

#include <algorithm>
#include <json.hpp>
#include <string>
#include <vector>

#include "topohopf/errors.hpp"
#include "topohopf/lincomb.hpp"
#include "topohopf/text_format.hpp"

namespace topohopf {

struct SuiteReport;

/// {"terms":[{"basis":key,"coeff":poly},...]} with terms sorted by key.
template <class L>
nlohmann::ordered_json to_json(const LinComb<L>& x) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [label, c] : x) rows.emplace_back(label_key(label), c.to_string());
  std::sort(rows.begin(), rows.end());
  auto terms = nlohmann::ordered_json::array();
  for (auto& [key, coeff] : rows) terms.push_back({{"basis", key}, {"coeff", coeff}});
  return {{"terms", terms}};
}

/// Tensors use "basis_left" and "basis_right".
template <class A, class B>
nlohmann::ordered_json to_json(const Tensor2<A, B>& x) {
  std::vector<std::tuple<std::string, std::string, std::string>> rows;
  for (const auto& [ab, c] : x) rows.emplace_back(label_key(ab.first), label_key(ab.second), c.to_string());
  std::sort(rows.begin(), rows.end());
  auto terms = nlohmann::ordered_json::array();
  for (auto& [left, right, coeff] : rows) {
    terms.push_back({{"basis_left", left}, {"basis_right", right}, {"coeff", coeff}});
  }
  return {{"terms", terms}};
}

nlohmann::ordered_json to_json(const SuiteReport& report);

template <class X>
std::string emit_json(const X& x) {
  return to_json(x).dump();
}

namespace detail {

inline const nlohmann::json& json_terms(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw Error(ErrorKind::Parse, "expected an object with a \"terms\" array");
  }
  return j["terms"];
}

inline std::string json_string(const nlohmann::json& term, const char* field) {
  if (!term.is_object() || !term.contains(field) || !term[field].is_string()) {
    throw Error(ErrorKind::Parse, std::string("term is missing the string field \"") + field + "\"");
  }
  return term[field].get<std::string>();
}

inline nlohmann::json parse_json_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace detail

/// Inverse of emit_json for combinations; `parse_key` reads a basis key.
template <class L, class F>
LinComb<L> lincomb_from_json(std::string_view text, F parse_key) {
  LinComb<L> out;
  const auto doc = detail::parse_json_text(text);
  for (const auto& term : detail::json_terms(doc)) {
    out.add(parse_key(detail::json_string(term, "basis")), QPoly::parse(detail::json_string(term, "coeff")));
  }
  return out;
}

template <class A, class B, class F, class G>
Tensor2<A, B> tensor_from_json(std::string_view text, F parse_left, G parse_right) {
  Tensor2<A, B> out;
  const auto doc = detail::parse_json_text(text);
  for (const auto& term : detail::json_terms(doc)) {
    out.add({parse_left(detail::json_string(term, "basis_left")), parse_right(detail::json_string(term, "basis_right"))},
            QPoly::parse(detail::json_string(term, "coeff")));
  }
  return out;
}

// Basis key readers matching label_key.
inline Topology topology_from_key(std::string_view key) { return parse_topology(key); }
inline PackedWord word_from_key(std::string_view key) { return parse_packed_word("(" + std::string(key) + ")"); }
inline Permutation permutation_from_key(std::string_view key) {
  return parse_permutation("(" + std::string(key) + ")");
}
inline RibbonLabel ribbon_from_key(std::string_view key) { return parse_math_ribbon(key); }

}  // namespace topohopf

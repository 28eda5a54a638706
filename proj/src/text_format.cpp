#include "topohopf/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "topohopf/errors.hpp"

namespace topohopf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::Parse, "cannot parse '" + std::string(text) + "': " + why);
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) parse_error(context, "expected an integer");
  return value;
}

// Splits on `sep` at bracket depth zero.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

Topology parse_relations(std::size_t n, std::string_view rels, std::string_view context) {
  if (n > kMaxDegree) parse_error(context, "degree too large");
  std::array<Subset, kMaxDegree> rows{};
  auto element = [&](std::string_view s) {
    int v = parse_int(s, context);
    if (v < 1 || static_cast<std::size_t>(v) > n) parse_error(context, "element " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v - 1);
  };
  auto group = [&](std::string_view g) {
    g = trim(g);
    Subset members = 0;
    if (!g.empty() && g.front() == '{') {
      if (g.back() != '}') parse_error(context, "unbalanced '{'");
      for (auto part : split_top(g.substr(1, g.size() - 2), ',')) members |= Subset{1} << element(part);
    } else {
      members = Subset{1} << element(g);
    }
    return members;
  };
  rels = trim(rels);
  if (!rels.empty()) {
    for (auto item : split_top(rels, ',')) {
      Subset previous = 0;
      for (auto g : split_top(item, '<')) {
        Subset members = group(g);
        for (Subset m = members; m != 0; m &= m - 1) rows[static_cast<std::size_t>(std::countr_zero(m))] |= members;
        for (Subset m = previous; m != 0; m &= m - 1) rows[static_cast<std::size_t>(std::countr_zero(m))] |= members;
        previous = members;
      }
    }
  }
  return Topology::closure_of(std::span<const Subset>(rows.data(), n));
}

std::string group_text(Subset members) {
  if (cardinality(members) == 1) return std::to_string(std::countr_zero(members) + 1);
  std::string out = "{";
  for (Subset m = members; m != 0; m &= m - 1) {
    if (out.size() > 1) out += ",";
    out += std::to_string(std::countr_zero(m) + 1);
  }
  return out + "}";
}

std::string word_text(std::span<const int> letters, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(letters[i]);
  }
  return out;
}

}  // namespace

std::string label_key(const Topology& t) { return t.key(); }
std::string label_key(const PackedWord& f) { return word_text(f.letters(), ","); }
std::string label_key(const Permutation& s) { return label_key(s.word()); }
std::string label_key(const RibbonLabel& r) { return "R[" + r.t.key() + "]"; }

Topology parse_topology(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') parse_error(text, "unbalanced '['");
    s = trim(s.substr(1, s.size() - 2));
  }
  if (auto colon = s.find(':'); colon != std::string_view::npos) {
    const int n = parse_int(s.substr(0, colon), text);
    std::string_view bits = trim(s.substr(colon + 1));
    if (n < 0 || static_cast<std::size_t>(n) > kMaxDegree) parse_error(text, "degree out of range");
    const auto size = static_cast<std::size_t>(n);
    if (bits.size() != size * size) parse_error(text, "expected " + std::to_string(size * size) + " relation bits");
    std::array<Subset, kMaxDegree> rows{};
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        char b = bits[i * size + j];
        if (b != '0' && b != '1') parse_error(text, "relation bits must be 0 or 1");
        if (b == '1') rows[i] |= Subset{1} << j;
      }
    }
    return Topology::from_rows(std::span<const Subset>(rows.data(), size));
  }
  auto bar_pos = s.find('|');
  if (bar_pos == std::string_view::npos) parse_error(text, "expected 'n:bits' or 'n|relations'");
  const int n = parse_int(s.substr(0, bar_pos), text);
  if (n < 0) parse_error(text, "negative degree");
  return parse_relations(static_cast<std::size_t>(n), s.substr(bar_pos + 1), text);
}

Word parse_word(std::string_view text) {
  std::string_view s = trim(text);
  Word out;
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') parse_error(text, "unbalanced '('");
    s = trim(s.substr(1, s.size() - 2));
    if (s.find(',') == std::string_view::npos) {
      for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) parse_error(text, "expected digits");
        out.push_back(ch - '0');
      }
      return out;
    }
  }
  if (s.empty()) return out;
  for (auto part : split_top(s, ',')) out.push_back(parse_int(part, text));
  return out;
}

PackedWord parse_packed_word(std::string_view text) { return PackedWord(parse_word(text)); }

Permutation parse_permutation(std::string_view text) { return Permutation(parse_packed_word(text)); }

std::string hasse_text(const Topology& t) {
  const auto cls = classes(t);
  const Topology q = bar(t);
  const std::size_t k = cls.size();
  std::vector<std::string> items;
  for (std::size_t a = 0; a < k; ++a) {
    bool related = false;
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b && (q.leq(a, b) || q.leq(b, a))) related = true;
      if (!q.lt(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < k && cover; ++c) cover = !(q.lt(a, c) && q.lt(c, b));
      if (cover) items.push_back(group_text(cls[a]) + "<" + group_text(cls[b]));
    }
    if (!related && cardinality(cls[a]) > 1) items.push_back(group_text(cls[a]));
  }
  std::string out = "[" + std::to_string(t.degree()) + "|";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ",";
    out += items[i];
  }
  return out + "]";
}

std::string display_label(const Topology& t) { return t.key(); }
std::string display_label(const PackedWord& f) { return "(" + word_text(f.letters(), ",") + ")"; }
std::string display_label(const Permutation& s) { return display_label(s.word()); }
std::string display_label(const RibbonLabel& r) { return "R[" + r.t.key() + "]"; }

std::string math_label(const Topology& t) { return t.empty() ? "1" : hasse_text(t); }

std::string math_label(const PackedWord& f) {
  if (f.empty()) return "1";
  const bool small = f.max_letter() < 10;
  return "(" + word_text(f.letters(), small ? "" : ",") + ")";
}

std::string math_label(const Permutation& s) { return math_label(s.word()); }

std::string math_label(const RibbonLabel& r) { return "R" + hasse_text(r.t); }

namespace detail {

std::vector<MathTerm> split_math_terms(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) parse_error(text, "empty expression");
  if (s == "0") return {};
  std::vector<MathTerm> terms;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view term = trim(s.substr(start, end - start));
    bool negative = false;
    if (!term.empty() && (term.front() == '-' || term.front() == '+')) {
      negative = term.front() == '-';
      term = trim(term.substr(1));
    }
    if (term.empty()) parse_error(text, "empty term");
    auto factors = split_top(term, '*');
    QPoly coeff(1);
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) coeff *= QPoly::parse(trim(factors[i]));
    if (negative) coeff = -coeff;
    terms.push_back({coeff, std::string(trim(factors.back()))});
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if ((ch == '+' || ch == '-') && depth == 0 && i > 0 && !trim(s.substr(start, i - start)).empty()) {
      flush(i);
      start = i;
    }
  }
  flush(s.size());
  return terms;
}

std::pair<std::string, std::string> split_tensor(std::string_view label) {
  static constexpr std::string_view kTensor = "⊗";
  auto pos = label.find(kTensor);
  std::size_t width = kTensor.size();
  if (pos == std::string_view::npos) {
    pos = label.find("(x)");
    width = 3;
  }
  if (pos == std::string_view::npos) parse_error(label, "expected a tensor");
  return {std::string(trim(label.substr(0, pos))), std::string(trim(label.substr(pos + width)))};
}

}  // namespace detail

Topology parse_math_topology(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "1") return Topology();
  return parse_topology(s);
}

PackedWord parse_math_word(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "1") return PackedWord();
  if (s.empty() || s.front() != '(') parse_error(text, "expected a parenthesised word");
  return parse_packed_word(s);
}

RibbonLabel parse_math_ribbon(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty() || s.front() != 'R') parse_error(text, "expected R[...]");
  return RibbonLabel{parse_topology(s.substr(1))};
}

}  // namespace topohopf

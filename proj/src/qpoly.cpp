#include "topohopf/qpoly.hpp"

#include <cctype>

#include "topohopf/errors.hpp"

namespace topohopf {

QPoly::QPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

QPoly QPoly::monomial(const BigInt& coeff, unsigned a, unsigned b, unsigned c) {
  QPoly p;
  if (coeff != 0) p.terms_.emplace(Monomial{{a, b, c}}, coeff);
  return p;
}

QPoly QPoly::q(int index, unsigned power) {
  if (index < 1 || index > 3) throw Error(ErrorKind::Parse, "q index must be 1, 2 or 3");
  Monomial m;
  m.exp[static_cast<std::size_t>(index - 1)] = power;
  QPoly p;
  p.terms_.emplace(m, 1);
  return p;
}

BigInt QPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

unsigned QPoly::degree_in(int index) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp[static_cast<std::size_t>(index - 1)]);
  return d;
}

void QPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m{{ma.exp[0] + mb.exp[0], ma.exp[1] + mb.exp[1], ma.exp[2] + mb.exp[2]}};
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Rational QPoly::evaluate(const QPoint& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = Rational(c);
    for (std::size_t v = 0; v < 3; ++v) {
      for (unsigned e = 0; e < m.exp[v]; ++e) term *= point[v];
    }
    total += term;
  }
  return total;
}

QPoly QPoly::swap_q1_q2() const {
  QPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{{m.exp[1], m.exp[0], m.exp[2]}}, c);
  return out;
}

std::string QPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < 3; ++v) {
      if (m.exp[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "q" + std::to_string(v + 1);
      if (m.exp[v] > 1) mono += "^" + std::to_string(m.exp[v]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  QPoly parse_all() {
    QPoly p = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, "cannot parse polynomial '" + std::string(text_) + "': " + why + " at offset " +
                                      std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  QPoly sum() {
    QPoly total;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    QPoly t = product();
    total = negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        total += product();
      } else if (accept('-')) {
        total -= product();
      } else {
        return total;
      }
    }
  }

  QPoly product() {
    QPoly p = power();
    while (accept('*')) p *= power();
    return p;
  }

  QPoly power() {
    QPoly base = atom();
    if (accept('^')) {
      unsigned e = static_cast<unsigned>(integer());
      QPoly out(1);
      for (unsigned i = 0; i < e; ++i) out *= base;
      return out;
    }
    return base;
  }

  QPoly atom() {
    skip_space();
    if (accept('(')) {
      QPoly inner = sum();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (accept('-')) return -atom();
    if (pos_ < text_.size() && text_[pos_] == 'q') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '3') fail("expected q1, q2 or q3");
      int index = text_[pos_++] - '0';
      return QPoly::q(index);
    }
    return QPoly(BigInt(integer_text()));
  }

  std::string integer_text() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number or q1..q3");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned long integer() { return std::stoul(integer_text()); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly QPoly::parse(std::string_view text) { return PolyParser(text).parse_all(); }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace topohopf

#pragma once

#include <compare>
#include <functional>
#include <type_traits>
#include <map>
#include <utility>

#include "topohopf/qpoly.hpp"
#include "topohopf/topology.hpp"

namespace topohopf {

/// Finitely supported map from basis labels to QPoly; no zero terms are
/// ever stored. Iteration follows the label order.
template <class L>
class LinComb {
 public:
  using Label = L;
  using Map = std::map<L, QPoly>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  explicit LinComb(L label, QPoly coeff = QPoly(1)) { add(label, coeff); }

  void add(const L& label, const QPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(label, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  QPoly coeff(const L& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? QPoly() : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Map& terms() const noexcept { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [l, c] : other.terms_) add(l, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [l, c] : other.terms_) add(l, -c);
    return *this;
  }
  LinComb& operator*=(const QPoly& scalar) {
    if (scalar.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= scalar;
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const QPoly& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const QPoly& s) { return a *= s; }
  LinComb operator-() const {
    LinComb out = *this;
    for (auto& [l, c] : out.terms_) c = -c;
    return out;
  }
  bool operator==(const LinComb& other) const = default;

  /// Applies f to every coefficient, dropping zeros.
  template <class F>
  LinComb map_coeffs(F f) const {
    LinComb out;
    for (const auto& [l, c] : terms_) out.add(l, f(c));
    return out;
  }

 private:
  Map terms_;
};

template <class A, class B>
using Tensor2 = LinComb<std::pair<A, B>>;

/// R_T, a label of the ribbon basis.
struct RibbonLabel {
  Topology t;
  auto operator<=>(const RibbonLabel&) const = default;
  bool operator==(const RibbonLabel&) const = default;
};

namespace detail {

template <class M>
LinComb<M> as_lincomb(const M& label) {
  return LinComb<M>(label);
}
template <class M>
LinComb<M> as_lincomb(LinComb<M> x) {
  return x;
}

template <class T>
struct LabelOf {
  using type = T;
};
template <class M>
struct LabelOf<LinComb<M>> {
  using type = M;
};

template <class R>
using label_of_t = typename LabelOf<std::decay_t<R>>::type;

}  // namespace detail

/// Extends a map on labels (returning a label or a LinComb) linearly.
template <class L, class F>
auto linear_extend(F f, const LinComb<L>& x) {
  using M = detail::label_of_t<std::invoke_result_t<F, const L&>>;
  LinComb<M> out;
  for (const auto& [l, c] : x) {
    for (const auto& [m, d] : detail::as_lincomb(f(l))) out.add(m, c * d);
  }
  return out;
}

/// Extends a map on label pairs bilinearly.
template <class L1, class L2, class F>
auto bilinear_extend(F op, const LinComb<L1>& x, const LinComb<L2>& y) {
  using M = detail::label_of_t<std::invoke_result_t<F, const L1&, const L2&>>;
  LinComb<M> out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      QPoly c = ca * cb;
      for (const auto& [m, d] : detail::as_lincomb(op(a, b))) out.add(m, c * d);
    }
  }
  return out;
}

/// x (x) y.
template <class A, class B>
Tensor2<A, B> tensor(const LinComb<A>& x, const LinComb<B>& y) {
  Tensor2<A, B> out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out.add({a, b}, ca * cb);
  }
  return out;
}

/// (f (x) g) applied to a tensor.
template <class A, class B, class F, class G>
auto tensor_map(F f, G g, const Tensor2<A, B>& t) {
  using M = detail::label_of_t<std::invoke_result_t<F, const A&>>;
  using N = detail::label_of_t<std::invoke_result_t<G, const B&>>;
  Tensor2<M, N> out;
  for (const auto& [ab, c] : t) {
    const auto left = detail::as_lincomb(f(ab.first));
    const auto right = detail::as_lincomb(g(ab.second));
    for (const auto& [m, cm] : left) {
      for (const auto& [n, cn] : right) out.add({m, n}, c * cm * cn);
    }
  }
  return out;
}

/// Product in the tensor square: (a (x) b)(c (x) d) = ac (x) bd.
template <class A, class B, class F>
auto tensor_product(F op, const Tensor2<A, B>& s, const Tensor2<A, B>& t) {
  using M = detail::label_of_t<std::invoke_result_t<F, const A&, const A&>>;
  Tensor2<M, M> out;
  for (const auto& [ab, c1] : s) {
    for (const auto& [cd, c2] : t) {
      const auto left = detail::as_lincomb(op(ab.first, cd.first));
      const auto right = detail::as_lincomb(op(ab.second, cd.second));
      QPoly c = c1 * c2;
      for (const auto& [m, cm] : left) {
        for (const auto& [n, cn] : right) out.add({m, n}, c * cm * cn);
      }
    }
  }
  return out;
}

/// Swaps tensor factors.
template <class A, class B>
Tensor2<B, A> flip(const Tensor2<A, B>& t) {
  Tensor2<B, A> out;
  for (const auto& [ab, c] : t) out.add({ab.second, ab.first}, c);
  return out;
}

/// Specialises every coefficient at `point`; zero values are dropped.
template <class L>
std::map<L, Rational> evaluate(const LinComb<L>& x, const QPoint& point) {
  std::map<L, Rational> out;
  for (const auto& [l, c] : x) {
    Rational v = c.evaluate(point);
    if (v != 0) out.emplace(l, v);
  }
  return out;
}

}  // namespace topohopf

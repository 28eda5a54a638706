#include "topohopf/ribbon.hpp"

#include <algorithm>
#include <map>

#include "topohopf/enumerate.hpp"
#include "topohopf/errors.hpp"

namespace topohopf {

namespace {

const std::vector<Topology>& graded_piece(std::size_t n) {
  if (n > kRibbonDegreeCap) {
    throw Error(ErrorKind::CapExceeded, "ribbon basis operations are limited to degree " +
                                            std::to_string(kRibbonDegreeCap) + ", got " + std::to_string(n));
  }
  return topologies_of_degree(n);
}

// Restrictions to [k] and to the rest (standardised) both match.
bool restricts_to(const Topology& t, std::size_t k, const Topology& a, const Topology& b) {
  const Subset low = k == 0 ? 0 : (Subset{1} << k) - 1;
  return restrict_std(t, low) == a && restrict_std(t, t.ground() & ~low) == b;
}

RibbonComb direct_product(const Topology& a, const Topology& b, bool down) {
  const std::size_t k = a.degree();
  const Subset low = k == 0 ? 0 : (Subset{1} << k) - 1;
  RibbonComb out;
  for (const Topology& t : graded_piece(k + b.degree())) {
    if (down) {
      const Subset high = t.ground() & ~low;
      bool below = true;
      for (std::size_t i = 0; i < k && below; ++i) below = (t.up_set(i) & high) == high;
      if (!below) continue;
    }
    if (restricts_to(t, k, a, b)) out.add(RibbonLabel{t}, QPoly(1));
  }
  return out;
}

}  // namespace

std::vector<Topology> refinement_down_set(const Topology& t) {
  std::vector<Topology> out;
  for (const Topology& s : graded_piece(t.degree())) {
    if (refinement_leq(s, t)) out.push_back(s);
  }
  return out;
}

TopComb ribbon_in_standard(const Topology& t) {
  auto below = refinement_down_set(t);
  // Larger relations sit lower in the refinement order; process from t down.
  std::stable_sort(below.begin(), below.end(),
                   [](const Topology& a, const Topology& b) { return a.relation_size() < b.relation_size(); });
  std::map<Topology, BigInt> mu;
  for (std::size_t i = 0; i < below.size(); ++i) {
    if (below[i] == t) {
      mu[t] = 1;
      continue;
    }
    BigInt sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (refinement_leq(below[i], below[j])) sum += mu[below[j]];
    }
    mu[below[i]] = -sum;
  }
  TopComb out;
  for (const auto& [s, m] : mu) out.add(s, QPoly(m));
  return out;
}

RibbonComb to_ribbon(const TopComb& x) {
  RibbonComb out;
  for (const auto& [t, c] : x) {
    for (const Topology& s : refinement_down_set(t)) out.add(RibbonLabel{s}, c);
  }
  return out;
}

TopComb from_ribbon(const RibbonComb& x) {
  return linear_extend([](const RibbonLabel& r) { return ribbon_in_standard(r.t); }, x);
}

RibbonComb ribbon_product_dot(const Topology& a, const Topology& b) { return direct_product(a, b, false); }

RibbonComb ribbon_product_down(const Topology& a, const Topology& b) { return direct_product(a, b, true); }

RibbonTensor ribbon_coproduct(const Topology& t) {
  RibbonTensor out;
  for (Subset o : open_sets(t)) {
    const Subset rest = t.ground() & ~o;
    bool strictly_below = true;
    for (Subset m = rest; m != 0 && strictly_below; m &= m - 1) {
      auto i = static_cast<std::size_t>(std::countr_zero(m));
      for (Subset p = o; p != 0 && strictly_below; p &= p - 1) {
        strictly_below = t.lt(i, static_cast<std::size_t>(std::countr_zero(p)));
      }
    }
    if (strictly_below) out.add({RibbonLabel{restrict_std(t, rest)}, RibbonLabel{restrict_std(t, o)}}, QPoly(1));
  }
  return out;
}

RibbonComb ribbon_product_dot(const RibbonComb& x, const RibbonComb& y) {
  return bilinear_extend([](const RibbonLabel& a, const RibbonLabel& b) { return ribbon_product_dot(a.t, b.t); }, x, y);
}

RibbonComb ribbon_product_down(const RibbonComb& x, const RibbonComb& y) {
  return bilinear_extend([](const RibbonLabel& a, const RibbonLabel& b) { return ribbon_product_down(a.t, b.t); }, x,
                         y);
}

RibbonTensor ribbon_coproduct(const RibbonComb& x) {
  RibbonTensor out;
  for (const auto& [r, c] : x) {
    RibbonTensor d = ribbon_coproduct(r.t);
    d *= c;
    out += d;
  }
  return out;
}

}  // namespace topohopf

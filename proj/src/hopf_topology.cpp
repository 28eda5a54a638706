#include "topohopf/hopf_topology.hpp"

#include "topohopf/errors.hpp"

namespace topohopf {

namespace {

Topology combine(const Topology& a, const Topology& b, bool down) {
  const std::size_t n = a.degree();
  const std::size_t m = b.degree();
  TopologyBuilder builder(n + m);
  const Subset upper = ((n + m == 0 ? Subset{0} : (Subset{1} << (n + m)) - 1)) & ~a.ground();
  for (std::size_t i = 0; i < n; ++i) builder.set_row(i, a.up_set(i) | (down ? upper : 0));
  for (std::size_t j = 0; j < m; ++j) builder.set_row(n + j, b.up_set(j) << n);
  return builder.build();
}

}  // namespace

Topology product_dot(const Topology& a, const Topology& b) { return combine(a, b, false); }

Topology product_down(const Topology& a, const Topology& b) { return combine(a, b, true); }

TopTensor coproduct(const Topology& t) {
  TopTensor out;
  for (Subset o : open_sets(t)) out.add({restrict_std(t, t.ground() & ~o), restrict_std(t, o)}, QPoly(1));
  return out;
}

QPoly counit(const Topology& t) { return t.empty() ? QPoly(1) : QPoly(); }

TopComb product_dot(const TopComb& x, const TopComb& y) {
  return bilinear_extend([](const Topology& a, const Topology& b) { return product_dot(a, b); }, x, y);
}

TopComb product_down(const TopComb& x, const TopComb& y) {
  return bilinear_extend([](const Topology& a, const Topology& b) { return product_down(a, b); }, x, y);
}

TopTensor coproduct(const TopComb& x) {
  TopTensor out;
  for (const auto& [t, c] : x) {
    TopTensor d = coproduct(t);
    d *= c;
    out += d;
  }
  return out;
}

TopComb iota(const TopComb& x) {
  return linear_extend([](const Topology& t) { return iota(t); }, x);
}

FactorizationResult decompose(const Topology& t, ProductKind kind) {
  if (t.empty()) throw Error(ErrorKind::EmptyInput, "cannot factor the empty topology");
  const std::size_t n = t.degree();
  std::vector<std::size_t> cuts{0};
  for (std::size_t m = 1; m < n; ++m) {
    const Subset low = (Subset{1} << m) - 1;
    const Subset high = t.ground() & ~low;
    bool split = true;
    for (std::size_t i = 0; i < m && split; ++i) {
      Subset forward = t.up_set(i) & high;
      split = kind == ProductKind::Dot ? forward == 0 : forward == high;
    }
    for (std::size_t j = m; j < n && split; ++j) split = (t.up_set(j) & low) == 0;
    if (split) cuts.push_back(m);
  }
  cuts.push_back(n);
  FactorizationResult out{{}, kind};
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Subset block = ((Subset{1} << cuts[k + 1]) - 1) & ~((Subset{1} << cuts[k]) - 1);
    out.factors.push_back(restrict_std(t, block));
  }
  return out;
}

const char* to_string(IndecClass c) noexcept {
  switch (c) {
    case IndecClass::Bi: return "bi";
    case IndecClass::DotOnly: return "dot-only";
    case IndecClass::DownOnly: return "down-only";
  }
  return "unknown";
}

IndecClass indecomposability_class(const Topology& t) {
  const bool dot_indec = decompose(t, ProductKind::Dot).factors.size() == 1;
  const bool down_indec = decompose(t, ProductKind::Down).factors.size() == 1;
  if (dot_indec && down_indec) return IndecClass::Bi;
  if (dot_indec) return IndecClass::DotOnly;
  if (down_indec) return IndecClass::DownOnly;
  throw Error(ErrorKind::EmptyInput, "topology " + t.key() + " decomposes for both products");
}

TopComb theta_q(const Topology& t) {
  return TopComb(bar(t), QPoly::q(1, static_cast<unsigned>(c_defect(t))));
}

TopComb theta_q(const TopComb& x) {
  return linear_extend([](const Topology& t) { return theta_q(t); }, x);
}

TopComb theta_0(const TopComb& x) {
  TopComb out;
  for (const auto& [t, c] : x) {
    if (is_t0(t)) out.add(t, c);
  }
  return out;
}

TopComb AntipodeEngine::operator()(const Topology& t) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
  }
  TopComb s;
  if (t.empty()) {
    s = TopComb(t);
  } else {
    s = -TopComb(t);
    for (const auto& [pair, c] : coproduct(t)) {
      const auto& [left, right] = pair;
      if (left.empty() || right.empty()) continue;
      TopComb term = product_dot((*this)(left), TopComb(right));
      s -= c * term;
    }
  }
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(t, std::move(s)).first->second;
}

TopComb AntipodeEngine::apply(const TopComb& x) {
  return linear_extend([this](const Topology& t) { return (*this)(t); }, x);
}

TopComb antipode(const TopComb& x) {
  static AntipodeEngine engine;
  return engine.apply(x);
}

}  // namespace topohopf

#include "topohopf/pairing.hpp"

#include <algorithm>
#include <map>

#include "topohopf/enumerate.hpp"

namespace topohopf {

namespace {

std::vector<std::size_t> class_sizes(const Topology& t) {
  std::vector<std::size_t> sizes;
  for (Subset c : classes(t)) sizes.push_back(cardinality(c));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

struct PictureSearch {
  const Topology& a;
  const Topology& b;
  std::size_t n;
  std::array<std::size_t, kMaxDegree> image{};
  Subset used = 0;
  std::size_t count = 0;

  bool compatible(std::size_t i, std::size_t v) const {
    if (cardinality(a.class_of(i)) != cardinality(b.class_of(v))) return false;
    for (std::size_t p = 0; p < i; ++p) {
      const std::size_t w = image[p];
      if (a.equiv(p, i) != b.equiv(w, v)) return false;
      if (a.lt(p, i) && !(w < v)) return false;
      if (a.lt(i, p) && !(v < w)) return false;
      // f(p) <_b f(i) forces p < i, which holds; the reverse is forbidden.
      if (b.lt(v, w)) return false;
    }
    return true;
  }

  void run(std::size_t i) {
    if (i == n) {
      ++count;
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      if (!compatible(i, v)) continue;
      image[i] = v;
      used |= Subset{1} << v;
      run(i + 1);
      used &= ~(Subset{1} << v);
    }
  }
};

template <bool Parallel>
IntMatrix gram_impl(std::size_t n) {
  const auto& tops = topologies_of_degree(n);
  const std::size_t size = tops.size();
  IntMatrix m(size, std::vector<BigInt>(size, 0));
  std::vector<std::vector<std::size_t>> sizes(size);
  for (std::size_t i = 0; i < size; ++i) sizes[i] = class_sizes(tops[i]);
  auto fill_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (sizes[i] != sizes[j]) continue;
      m[i][j] = pictures_count(tops[i], tops[j]);
    }
  };
  const auto rows = static_cast<std::ptrdiff_t>(size);
  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < rows; ++i) fill_row(static_cast<std::size_t>(i));
  } else {
    for (std::ptrdiff_t i = 0; i < rows; ++i) fill_row(static_cast<std::size_t>(i));
  }
  return m;
}

}  // namespace

std::size_t pictures_count(const Topology& a, const Topology& b) {
  if (a.degree() != b.degree()) return 0;
  if (class_sizes(a) != class_sizes(b)) return 0;
  PictureSearch search{a, b, a.degree()};
  search.run(0);
  return search.count;
}

QPoly pairing(const TopComb& x, const TopComb& y) {
  QPoly total;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      const std::size_t p = pictures_count(a, b);
      if (p != 0) total += ca * cb * QPoly(BigInt(p));
    }
  }
  return total;
}

IntMatrix gram_matrix(std::size_t n) { return gram_impl<true>(n); }

IntMatrix gram_matrix_serial(std::size_t n) { return gram_impl<false>(n); }

std::size_t gram_rank(std::size_t n) {
  const IntMatrix m = gram_matrix(n);
  const auto& tops = topologies_of_degree(n);
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < tops.size(); ++i) blocks[class_sizes(tops[i])].push_back(i);
  std::size_t rank = 0;
  for (const auto& [key, idx] : blocks) {
    IntMatrix block(idx.size(), std::vector<BigInt>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t c = 0; c < idx.size(); ++c) block[r][c] = m[idx[r]][idx[c]];
    }
    rank += exact_rank(std::move(block));
  }
  return rank;
}

}  // namespace topohopf

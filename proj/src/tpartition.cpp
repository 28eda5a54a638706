#include "topohopf/tpartition.hpp"

#include <algorithm>

#include "topohopf/enumerate.hpp"
#include "topohopf/exact_linalg.hpp"

namespace topohopf {

bool is_generalized_partition(const Topology& t, const PackedWord& f) {
  if (f.size() != t.degree()) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (t.leq(i, j) && f[i] > f[j]) return false;
    }
  }
  return true;
}

bool is_strict_partition(const Topology& t, const PackedWord& f) {
  if (!is_generalized_partition(t, f)) return false;
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (t.lt(i, j) && !(f[i] < f[j])) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (t.equiv(i, k) && f[i] == f[j] && f[j] == f[k] && !(t.equiv(i, j) && t.equiv(j, k))) return false;
      }
    }
  }
  return true;
}

PartitionStats partition_stats(const Topology& t, const PackedWord& f) {
  PartitionStats s;
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!t.lt(i, j) || f[i] != f[j]) continue;
      if (i < j) ++s.l1;
      if (i > j) ++s.l2;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (t.equiv(i, k) && !t.equiv(i, j) && !t.equiv(j, k) && f[i] == f[j] && f[j] == f[k]) ++s.l3;
      }
    }
  }
  return s;
}

std::vector<GeneralizedPartition> generalized_partitions(const Topology& t) {
  std::vector<GeneralizedPartition> out;
  for (const PackedWord& f : packed_words_of_length(t.degree())) {
    if (is_generalized_partition(t, f)) out.push_back({f, partition_stats(t, f)});
  }
  return out;
}

std::vector<PackedWord> strict_partitions(const Topology& t) {
  std::vector<PackedWord> out;
  for (const auto& p : generalized_partitions(t)) {
    if (p.stats.strict()) out.push_back(p.word);
  }
  return out;
}

WordComb gamma_q(const Topology& t) {
  WordComb out;
  for (const auto& p : generalized_partitions(t)) out.add(p.word, QPoly::monomial(1, p.stats.l1, p.stats.l2, p.stats.l3));
  return out;
}

WordComb gamma_q(const TopComb& x) {
  return linear_extend([](const Topology& t) { return gamma_q(t); }, x);
}

WordComb swap_q1_q2(const WordComb& x) {
  WordComb out;
  for (const auto& [w, c] : x) out.add(w, c.swap_q1_q2());
  return out;
}

namespace {

void topological_sorts(const Topology& poset, Subset placed, std::vector<int>& rank_of, int next,
                       std::vector<std::vector<int>>& out) {
  const std::size_t k = poset.degree();
  if (placed == poset.ground()) {
    out.push_back(rank_of);
    return;
  }
  for (std::size_t c = 0; c < k; ++c) {
    if ((placed >> c) & 1U) continue;
    // Every strict predecessor of c must already be placed.
    if ((poset.down_set(c) & ~(Subset{1} << c) & ~placed) != 0) continue;
    rank_of[c] = next;
    topological_sorts(poset, placed | (Subset{1} << c), rank_of, next + 1, out);
  }
}

}  // namespace

std::vector<PackedWord> linear_extensions(const Topology& t) {
  const auto cls = classes(t);
  const Topology quotient = bar(t);
  std::vector<int> rank_of(cls.size(), 0);
  std::vector<std::vector<int>> sorts;
  topological_sorts(quotient, 0, rank_of, 1, sorts);
  std::vector<PackedWord> out;
  out.reserve(sorts.size());
  for (const auto& ranks : sorts) {
    Word f(t.degree());
    for (std::size_t c = 0; c < cls.size(); ++c) {
      for (Subset m = cls[c]; m != 0; m &= m - 1) f[static_cast<std::size_t>(std::countr_zero(m))] = ranks[c];
    }
    out.emplace_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

WordComb l_morphism(const Topology& t) {
  WordComb out;
  for (const auto& f : linear_extensions(t)) out.add(f, QPoly(1));
  return out;
}

WordComb l_morphism(const TopComb& x) {
  return linear_extend([](const Topology& t) { return l_morphism(t); }, x);
}

std::map<PackedWord, std::vector<PackedWord>> stanley_decomposition(const Topology& t) {
  std::map<PackedWord, std::vector<PackedWord>> out;
  for (const auto& f : linear_extensions(t)) {
    std::vector<PackedWord> below;
    for (const auto& [g, c] : phi(PhiVariant::P100, f)) below.push_back(g);
    out.emplace(f, std::move(below));
  }
  return out;
}

std::vector<TopComb> l_kernel_basis(std::size_t n) {
  const auto& tops = topologies_of_degree(n);
  const auto& words = packed_words_of_length(n);
  IntMatrix m(words.size(), std::vector<BigInt>(tops.size(), 0));
  for (std::size_t c = 0; c < tops.size(); ++c) {
    for (const auto& f : linear_extensions(tops[c])) {
      auto row = std::lower_bound(words.begin(), words.end(), f) - words.begin();
      m[static_cast<std::size_t>(row)][c] = 1;
    }
  }
  std::vector<TopComb> out;
  for (const auto& v : integer_nullspace(m, tops.size())) {
    TopComb k;
    for (std::size_t c = 0; c < tops.size(); ++c) k.add(tops[c], QPoly(v[c]));
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace topohopf

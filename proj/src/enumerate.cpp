#include "topohopf/enumerate.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <string>

#include "topohopf/errors.hpp"

namespace topohopf {

namespace {

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded,
                std::string(what) + " of size " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  }
}

void grow_partitions(std::vector<int>& rgs, int blocks, std::size_t n, std::vector<std::vector<int>>& out) {
  if (rgs.size() == n) {
    out.push_back(rgs);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    rgs.push_back(b);
    grow_partitions(rgs, std::max(blocks, b + 1), n, out);
    rgs.pop_back();
  }
}

// Extends each poset on [k-1] by a new maximal-index element k-1 placed
// above a down-closed D and below an up-closed U with D x U inside <.
void extend_posets(const std::vector<std::vector<Subset>>& smaller, std::size_t k,
                   std::vector<std::vector<Subset>>& out) {
  const std::size_t m = k - 1;
  const Subset full = m == 0 ? 0 : (Subset{1} << m) - 1;
  for (const auto& rows : smaller) {
    std::vector<Subset> down(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if ((rows[i] >> j) & 1U) down[j] |= Subset{1} << i;
      }
    }
    auto down_closed = [&](Subset s) {
      for (Subset t = s; t != 0; t &= t - 1) {
        if ((down[static_cast<std::size_t>(std::countr_zero(t))] & ~s) != 0) return false;
      }
      return true;
    };
    auto up_closed = [&](Subset s) {
      for (Subset t = s; t != 0; t &= t - 1) {
        if ((rows[static_cast<std::size_t>(std::countr_zero(t))] & ~s) != 0) return false;
      }
      return true;
    };
    for (Subset d = 0;; ++d) {
      if (down_closed(d)) {
        // Every u in U must lie above all of D.
        Subset allowed = full & ~d;
        for (Subset t = d; t != 0; t &= t - 1) allowed &= rows[static_cast<std::size_t>(std::countr_zero(t))];
        for (Subset u = allowed;; u = (u - 1) & allowed) {
          if (up_closed(u)) {
            std::vector<Subset> next(k);
            for (std::size_t i = 0; i < m; ++i) next[i] = rows[i] | (((d >> i) & 1U) ? (Subset{1} << m) | u : 0);
            next[m] = u | (Subset{1} << m);
            out.push_back(std::move(next));
          }
          if (u == 0) break;
        }
      }
      if (d == full) break;
    }
  }
}

std::vector<Topology> topologies_for_partition(const std::vector<int>& rgs,
                                               const std::vector<std::vector<Subset>>& posets) {
  const std::size_t n = rgs.size();
  const auto k = static_cast<std::size_t>(rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1);
  std::array<Subset, kMaxDegree> block_mask{};
  for (std::size_t i = 0; i < n; ++i) block_mask[static_cast<std::size_t>(rgs[i])] |= Subset{1} << i;
  std::vector<Topology> out;
  out.reserve(posets.size());
  std::array<Subset, kMaxDegree> rows{};
  for (const auto& poset : posets) {
    std::array<Subset, kMaxDegree> block_up{};
    for (std::size_t b = 0; b < k; ++b) {
      for (Subset t = poset[b]; t != 0; t &= t - 1) block_up[b] |= block_mask[static_cast<std::size_t>(std::countr_zero(t))];
    }
    for (std::size_t i = 0; i < n; ++i) rows[i] = block_up[static_cast<std::size_t>(rgs[i])];
    out.push_back(Topology::closure_of(std::span<const Subset>(rows.data(), n)));
  }
  return out;
}

template <bool Parallel>
std::vector<Topology> enumerate_impl(std::size_t n, std::size_t cap) {
  check_cap(n, cap, "topology enumeration");
  check_cap(n, kMaxDegree, "topology enumeration");
  const auto partitions = set_partitions(n);
  std::vector<std::vector<std::vector<Subset>>> posets(n + 1);
  for (std::size_t k = 0; k <= n; ++k) posets[k] = labeled_posets(k);
  std::vector<std::vector<Topology>> chunks(partitions.size());
  const auto count = static_cast<std::ptrdiff_t>(partitions.size());
  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t p = 0; p < count; ++p) {
      const auto& rgs = partitions[static_cast<std::size_t>(p)];
      auto k = static_cast<std::size_t>(rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1);
      chunks[static_cast<std::size_t>(p)] = topologies_for_partition(rgs, posets[k]);
    }
  } else {
    for (std::ptrdiff_t p = 0; p < count; ++p) {
      const auto& rgs = partitions[static_cast<std::size_t>(p)];
      auto k = static_cast<std::size_t>(rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1);
      chunks[static_cast<std::size_t>(p)] = topologies_for_partition(rgs, posets[k]);
    }
  }
  std::vector<Topology> out;
  for (auto& chunk : chunks) out.insert(out.end(), chunk.begin(), chunk.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<int>> set_partitions(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs;
  grow_partitions(rgs, 0, n, out);
  return out;
}

std::vector<std::vector<Subset>> labeled_posets(std::size_t k) {
  check_cap(k, kMaxDegree, "poset enumeration");
  std::vector<std::vector<Subset>> current{{}};
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<std::vector<Subset>> next;
    extend_posets(current, size, next);
    current = std::move(next);
  }
  return current;
}

std::vector<Topology> enumerate_topologies(std::size_t n, std::size_t cap) { return enumerate_impl<true>(n, cap); }

std::vector<Topology> enumerate_topologies_serial(std::size_t n, std::size_t cap) {
  return enumerate_impl<false>(n, cap);
}

const std::vector<Topology>& topologies_of_degree(std::size_t n) {
  check_cap(n, kDefaultTopologyCap, "topology enumeration");
  static std::array<std::once_flag, kDefaultTopologyCap + 1> flags;
  static std::array<std::vector<Topology>, kDefaultTopologyCap + 1> cache;
  std::call_once(flags[n], [n] { cache[n] = enumerate_topologies(n); });
  return cache[n];
}

std::vector<PackedWord> enumerate_packed_words(std::size_t n, std::size_t cap) {
  check_cap(n, cap, "packed word enumeration");
  std::vector<PackedWord> out;
  for (const auto& rgs : set_partitions(n)) {
    const int k = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<int> letter_of_block(static_cast<std::size_t>(k));
    std::iota(letter_of_block.begin(), letter_of_block.end(), 1);
    do {
      Word w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = letter_of_block[static_cast<std::size_t>(rgs[i])];
      out.emplace_back(std::move(w));
    } while (std::next_permutation(letter_of_block.begin(), letter_of_block.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<PackedWord>& packed_words_of_length(std::size_t n) {
  check_cap(n, kDefaultWordCap, "packed word enumeration");
  static std::array<std::once_flag, kDefaultWordCap + 1> flags;
  static std::array<std::vector<PackedWord>, kDefaultWordCap + 1> cache;
  std::call_once(flags[n], [n] { cache[n] = enumerate_packed_words(n); });
  return cache[n];
}

std::vector<Permutation> enumerate_permutations(std::size_t n, std::size_t cap) {
  check_cap(n, cap, "permutation enumeration");
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(PackedWord(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace topohopf

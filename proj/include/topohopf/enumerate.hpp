#pragma once

#include <cstddef>
#include <vector>

#include "topohopf/packed_word.hpp"
#include "topohopf/topology.hpp"

namespace topohopf {

inline constexpr std::size_t kDefaultTopologyCap = 6;
inline constexpr std::size_t kDefaultWordCap = 8;

/// Every topology on [n] once, sorted by canonical key. Throws
/// Error(CapExceeded) when n > cap. Set partitions are processed in
/// parallel when OpenMP is available.
std::vector<Topology> enumerate_topologies(std::size_t n, std::size_t cap = kDefaultTopologyCap);

/// Single-threaded reference for enumerate_topologies.
std::vector<Topology> enumerate_topologies_serial(std::size_t n, std::size_t cap = kDefaultTopologyCap);

/// Cached enumerate_topologies(n) for n <= kDefaultTopologyCap.
const std::vector<Topology>& topologies_of_degree(std::size_t n);

/// Packed words of length n in word order (lexicographic for fixed length).
std::vector<PackedWord> enumerate_packed_words(std::size_t n, std::size_t cap = kDefaultWordCap);

/// Cached enumerate_packed_words(n) for n <= kDefaultWordCap.
const std::vector<PackedWord>& packed_words_of_length(std::size_t n);

/// Permutations of [n] in lexicographic order.
std::vector<Permutation> enumerate_permutations(std::size_t n, std::size_t cap = kDefaultWordCap);

/// Set partitions of [n] as restricted growth strings: block[i] is the
/// 0-based index of the block of i, blocks numbered by first occurrence.
std::vector<std::vector<int>> set_partitions(std::size_t n);

/// Labeled partial orders on [k] as up-set rows.
std::vector<std::vector<Subset>> labeled_posets(std::size_t k);

}  // namespace topohopf

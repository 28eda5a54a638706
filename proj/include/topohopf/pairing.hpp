#pragma once

#include <cstddef>
#include <vector>

#include "topohopf/exact_linalg.hpp"
#include "topohopf/hopf_topology.hpp"

namespace topohopf {

/// Number of pictures from a to b: bijections f with i <_a j => f(i) < f(j),
/// f(i) <_b f(j) => i < j, and i ~_a j <=> f(i) ~_b f(j).
std::size_t pictures_count(const Topology& a, const Topology& b);

/// Bilinear extension of pictures_count.
QPoly pairing(const TopComb& x, const TopComb& y);

/// Gram matrix on topologies_of_degree(n), rows filled in parallel.
IntMatrix gram_matrix(std::size_t n);

/// Single-threaded reference for gram_matrix.
IntMatrix gram_matrix_serial(std::size_t n);

/// Rank of the degree-n Gram matrix. Pictures preserve class sizes, so the
/// matrix splits into blocks by the multiset of class sizes and the rank is
/// summed over blocks.
std::size_t gram_rank(std::size_t n);

}  // namespace topohopf

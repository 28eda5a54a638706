#pragma once

#include <cstddef>
#include <vector>

#include "topohopf/qpoly.hpp"

namespace topohopf {

/// Dense row-major integer matrix.
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Rank over Q by fraction-free (Bareiss) elimination. Row updates of each
/// elimination step run in parallel when OpenMP is available.
std::size_t exact_rank(IntMatrix m);

/// Single-threaded reference for exact_rank.
std::size_t exact_rank_serial(IntMatrix m);

/// Basis of {x : m x = 0}, each vector scaled to primitive integers with a
/// positive leading entry; one vector per free column in increasing order.
std::vector<std::vector<BigInt>> integer_nullspace(const IntMatrix& m, std::size_t columns);

}  // namespace topohopf

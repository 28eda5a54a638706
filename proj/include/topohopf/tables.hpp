#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "topohopf/qpoly.hpp"

namespace topohopf {

/// A small table of integers with named columns, row per degree.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<BigInt>> rows;
};

/// Topologies and T0 topologies on [n], n = 1..max.
Table counts_table(std::size_t max_n);

/// Indecomposables for the dot product, for the down product, and for both,
/// counted by factorizing every topology. n = 1..max.
Table indec_table(std::size_t max_n);

/// Packed words of length n next to the fiber sizes 2^|M(s)| summed over
/// permutations s. n = 1..max.
Table fubini_table(std::size_t max_n);

/// Number of topologies of each degree 0..max_n.
std::vector<BigInt> topology_counts(std::size_t max_n);

/// Coefficients 1..max_n of (F - 1) / F and (-2 + 3F - F^2) / F, where F
/// is the generating series of `counts` (counts[0] must be 1).
std::vector<BigInt> indecomposable_series(const std::vector<BigInt>& counts);
std::vector<BigInt> bi_indecomposable_series(const std::vector<BigInt>& counts);

}  // namespace topohopf

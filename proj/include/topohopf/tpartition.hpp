#pragma once

#include <compare>
#include <map>
#include <vector>

#include "topohopf/hopf_topology.hpp"
#include "topohopf/wqsym.hpp"

namespace topohopf {

struct PartitionStats {
  unsigned l1 = 0;
  unsigned l2 = 0;
  unsigned l3 = 0;

  bool strict() const noexcept { return l2 == 0 && l3 == 0; }
  auto operator<=>(const PartitionStats&) const = default;
};

struct GeneralizedPartition {
  PackedWord word;
  PartitionStats stats;
};

/// i <=_T j implies f(i) <= f(j).
bool is_generalized_partition(const Topology& t, const PackedWord& f);

/// The strictness clauses checked directly: i <_T j with i > j forces
/// f(i) < f(j), and i < j < k, i ~ k, f(i) = f(j) = f(k) forces i ~ j ~ k.
bool is_strict_partition(const Topology& t, const PackedWord& f);

/// The l1, l2, l3 counts of a generalized partition f of t.
PartitionStats partition_stats(const Topology& t, const PackedWord& f);

/// Generalized T-partitions in word order, each with its statistics.
std::vector<GeneralizedPartition> generalized_partitions(const Topology& t);

/// The generalized partitions with l2 = l3 = 0.
std::vector<PackedWord> strict_partitions(const Topology& t);

/// Sum of q1^l1 q2^l2 q3^l3 f over generalized partitions.
WordComb gamma_q(const Topology& t);
WordComb gamma_q(const TopComb& x);

/// Exchanges q1 and q2 in every coefficient.
WordComb swap_q1_q2(const WordComb& x);

/// Words constant exactly on the classes and increasing along <_T, from
/// the topological sorts of bar(T). Sorted in word order.
std::vector<PackedWord> linear_extensions(const Topology& t);

/// Sum of the linear extensions.
WordComb l_morphism(const Topology& t);
WordComb l_morphism(const TopComb& x);

/// Each linear extension f with the down-set {g : g <= f}.
std::map<PackedWord, std::vector<PackedWord>> stanley_decomposition(const Topology& t);

/// Basis of the kernel of L on the degree-n piece, as integer
/// combinations of topologies.
std::vector<TopComb> l_kernel_basis(std::size_t n);

}  // namespace topohopf

#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "topohopf/packed_word.hpp"

namespace topohopf {

/// Largest ground set a Topology can hold.
inline constexpr std::size_t kMaxDegree = 16;

/// A finite topology on [n], stored as its specialisation preorder.
///
/// Row i is the up-set of i: bit j of `up_set(i)` is set iff i <=_T j.
/// Elements are 0-based in this API and 1-based in every text format. The
/// open sets are the up-closed subsets. Instances are immutable and always
/// reflexive and transitive.
class Topology {
 public:
  /// The empty topology, unit of both products.
  Topology() = default;

  /// Validates reflexivity and transitivity of `leq` (n x n, row-major
  /// meaning leq[i][j] <=> i <= j). Throws Error(NotReflexive) or
  /// NotTransitiveError.
  static Topology from_matrix(const std::vector<std::vector<bool>>& leq);

  /// Validates as from_matrix, rows given as up-set masks.
  static Topology from_rows(std::span<const Subset> rows);

  /// Reflexive-transitive closure of an arbitrary relation given by rows.
  static Topology closure_of(std::span<const Subset> rows);

  std::size_t degree() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  bool leq(std::size_t i, std::size_t j) const noexcept { return (rows_[i] >> j) & 1U; }
  bool lt(std::size_t i, std::size_t j) const noexcept { return leq(i, j) && !leq(j, i); }
  bool equiv(std::size_t i, std::size_t j) const noexcept { return leq(i, j) && leq(j, i); }

  Subset up_set(std::size_t i) const noexcept { return rows_[i]; }
  Subset down_set(std::size_t i) const noexcept;
  Subset class_of(std::size_t i) const noexcept { return rows_[i] & down_set(i); }
  Subset ground() const noexcept { return n_ == 0 ? 0 : (Subset{1} << n_) - 1; }

  /// Number of pairs (i, j) with i <= j, diagonal included.
  std::size_t relation_size() const noexcept;

  /// True iff `set` is up-closed, i.e. an open set.
  bool is_open(Subset set) const noexcept;

  /// Canonical key order: degree, then the row-major bit string.
  std::strong_ordering operator<=>(const Topology& other) const noexcept;
  bool operator==(const Topology& other) const noexcept;

  /// Text form "n:b11b12...bnn".
  std::string key() const;

 private:
  struct Unchecked {};
  Topology(std::size_t n, std::span<const Subset> rows, Unchecked);

  friend class TopologyBuilder;

  std::uint8_t n_ = 0;
  std::array<Subset, kMaxDegree> rows_{};
};

inline std::size_t degree(const Topology& t) { return t.degree(); }

/// Assembles rows for a relation already known to be a preorder. Used by
/// the structural operations whose output is a preorder by construction.
class TopologyBuilder {
 public:
  explicit TopologyBuilder(std::size_t n);
  void set(std::size_t i, std::size_t j) { rows_[i] |= Subset{1} << j; }
  void set_row(std::size_t i, Subset row) { rows_[i] = row; }
  Subset row(std::size_t i) const { return rows_[i]; }
  Topology build() const;

 private:
  std::size_t n_;
  std::array<Subset, kMaxDegree> rows_{};
};

/// make_topology with a boolean matrix; same as Topology::from_matrix.
Topology make_topology(std::size_t n, const std::vector<std::vector<bool>>& leq);

/// All open sets sorted by size, then lexicographically by element list.
std::vector<Subset> open_sets(const Topology& t);

/// Preorder whose up-closed sets are exactly `opens`: i <= j iff every
/// member of `opens` containing i also contains j.
Topology topology_from_open_sets(std::size_t n, std::span<const Subset> opens);

/// T_f: i <= j iff f(i) <= f(j).
Topology topology_of_word(const PackedWord& f);

/// Std(T|_Y): restriction re-indexed along the increasing bijection Y -> [|Y|].
Topology restrict_std(const Topology& t, Subset y);

/// The topology of complements; transposes the relation.
Topology iota(const Topology& t);

/// Equivalence classes of ~_T ordered by their minimum.
std::vector<Subset> classes(const Topology& t);

/// The T0 quotient on the classes, indexed by increasing minimum.
Topology bar(const Topology& t);

/// deg(T) minus the number of classes.
std::size_t c_defect(const Topology& t);

bool is_t0(const Topology& t);

/// Refinement order: every open set of `a` is open in `b`, i.e. the
/// relation of `b` is contained in that of `a`. Throws SizeMismatch.
bool refinement_leq(const Topology& a, const Topology& b);

/// Number of elements in a subset.
inline std::size_t cardinality(Subset s) { return static_cast<std::size_t>(std::popcount(s)); }

}  // namespace topohopf

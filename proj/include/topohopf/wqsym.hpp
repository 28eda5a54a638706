#pragma once

#include <optional>
#include <vector>

#include "topohopf/lincomb.hpp"
#include "topohopf/packed_word.hpp"

namespace topohopf {

using WordComb = LinComb<PackedWord>;
using WordTensor = Tensor2<PackedWord, PackedWord>;
using PermComb = LinComb<Permutation>;

/// Sum of the packed words f'' with Pack(prefix) = f and Pack(suffix) = g,
/// generated from the letter sets of prefix and suffix.
WordComb wqsym_product(const PackedWord& f, const PackedWord& g);

/// Reference for wqsym_product: filters every packed word of length
/// |f| + |g|. Limited by the packed word enumeration cap.
WordComb wqsym_product_filtered(const PackedWord& f, const PackedWord& g);

/// The wqsym_product terms whose prefix and suffix alphabets are disjoint.
WordComb shuffle_product(const PackedWord& f, const PackedWord& g);

/// Shifted shuffle of permutations.
PermComb fqsym_product(const Permutation& s, const Permutation& t);

/// Sum over k = 0..max(f) of f|[k] (x) Pack(f|>k).
WordTensor wqsym_coproduct(const PackedWord& f);

/// Keeps the permutations, kills every other packed word.
PermComb varpi(const WordComb& x);

/// Permutations viewed as packed words.
WordComb as_words(const PermComb& x);

WordComb wqsym_product(const WordComb& x, const WordComb& y);
WordComb shuffle_product(const WordComb& x, const WordComb& y);
PermComb fqsym_product(const PermComb& x, const PermComb& y);
WordTensor wqsym_coproduct(const WordComb& x);
WordComb j_involution(const WordComb& x);

/// g <= f for the order on packed words of equal length. Throws
/// Error(SizeMismatch).
bool word_leq(const PackedWord& g, const PackedWord& f);

/// The mirrored order: its second clause reads f(i) < f(j), i < j implies
/// g(i) < g(j). Throws Error(SizeMismatch).
bool word_leq_prime(const PackedWord& g, const PackedWord& f);

enum class PhiVariant { P100, P010 };

/// P100: sum of g <= f. P010: j o P100 o j, the sum of g <=' f.
WordComb phi(PhiVariant variant, const PackedWord& f);
WordComb phi(PhiVariant variant, const WordComb& x);

/// All packed words standardising to s, built from the subsets of M(s).
std::vector<PackedWord> std_fiber(const Permutation& s);

struct OrderIsoReport {
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  std::optional<std::pair<PackedWord, PackedWord>> first_mismatch;
};

/// Compares word_leq(g, f) with "Std(g) = Std(f) and M(g) inside M(f)" on
/// every pair of packed words of length n.
OrderIsoReport order_iso_check(std::size_t n);

}  // namespace topohopf

#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace topohopf {

/// Bitmask over positions or ground-set elements, bit i standing for the
/// 0-based element i (element i + 1 in the 1-based external convention).
using Subset = std::uint32_t;

/// Upper bound on word length for the bitmask-based routines.
inline constexpr std::size_t kMaxWordLength = 32;

/// Arbitrary word over positive integers.
using Word = std::vector<int>;

/// A word whose letter set is {1, ..., m} for some m >= 0.
///
/// Positions are 0-based in this API; letters are the positive integers
/// themselves. The empty word is the unit of WQSym.
class PackedWord {
 public:
  PackedWord() = default;
  PackedWord(std::initializer_list<int> letters);

  /// Throws Error(NotPacked) unless the letters form an initial segment.
  explicit PackedWord(Word letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int max_letter() const noexcept { return max_; }
  int operator[](std::size_t pos) const { return letters_[pos]; }
  std::span<const int> letters() const noexcept { return letters_; }

  bool is_permutation() const noexcept { return static_cast<std::size_t>(max_) == letters_.size(); }

  /// Length first, then lexicographic on letters.
  std::strong_ordering operator<=>(const PackedWord& other) const;
  bool operator==(const PackedWord& other) const = default;

 private:
  struct Unchecked {};
  PackedWord(Word letters, int max, Unchecked) : letters_(std::move(letters)), max_(max) {}

  friend PackedWord pack(std::span<const int> word);

  Word letters_;
  int max_ = 0;
};

/// A bijective packed word; labels the FQSym basis.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(NotPermutation) if `word` has a repeated letter.
  explicit Permutation(PackedWord word);
  Permutation(std::initializer_list<int> letters) : Permutation(PackedWord(letters)) {}

  const PackedWord& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  int operator[](std::size_t pos) const { return word_[pos]; }

  /// Position (0-based) holding the value v (1-based).
  std::size_t position_of(int value) const;

  std::strong_ordering operator<=>(const Permutation& other) const = default;
  bool operator==(const Permutation& other) const = default;

 private:
  PackedWord word_;
};

inline std::size_t degree(const PackedWord& f) { return f.size(); }
inline std::size_t degree(const Permutation& s) { return s.size(); }

/// Relabels the letters of `word` by the increasing bijection onto [m].
PackedWord pack(std::span<const int> word);

/// Subword of `word` keeping the letters that satisfy `keep`, order preserved.
template <std::predicate<int> Pred>
Word restrict_word(std::span<const int> word, Pred keep) {
  Word out;
  for (int letter : word) {
    if (keep(letter)) out.push_back(letter);
  }
  return out;
}

/// Subword keeping letters in the (1-based) letter set `letters`.
Word restrict_word(std::span<const int> word, std::span<const int> letters);

/// Standardisation: ties broken left to right.
Permutation std_word(const PackedWord& f);

/// Relabels letters by the decreasing bijection onto [max f].
PackedWord j_involution(const PackedWord& f);

/// The set M(f) as a mask over 0-based positions: i is in M(f) iff
/// f(i) < max f, i is the last position carrying f(i), and every position
/// carrying f(i) + 1 lies strictly after i.
Subset ascent_set(const PackedWord& f);

}  // namespace topohopf

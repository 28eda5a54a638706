#include "topohopf/packed_word.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "topohopf/errors.hpp"

namespace topohopf {

namespace {

int checked_max(const Word& letters) {
  int max = 0;
  for (int letter : letters) {
    if (letter < 1) throw Error(ErrorKind::NotPacked, "letters must be positive, got " + std::to_string(letter));
    max = std::max(max, letter);
  }
  std::vector<bool> seen(static_cast<std::size_t>(max) + 1, false);
  for (int letter : letters) seen[static_cast<std::size_t>(letter)] = true;
  for (int v = 1; v <= max; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::NotPacked, "word is not packed: letter " + std::to_string(v) + " is missing");
    }
  }
  return max;
}

}  // namespace

PackedWord::PackedWord(std::initializer_list<int> letters) : PackedWord(Word(letters)) {}

PackedWord::PackedWord(Word letters) : letters_(std::move(letters)) { max_ = checked_max(letters_); }

std::strong_ordering PackedWord::operator<=>(const PackedWord& other) const {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(), other.letters_.begin(),
                                                other.letters_.end());
}

Permutation::Permutation(PackedWord word) : word_(std::move(word)) {
  if (!word_.is_permutation()) throw Error(ErrorKind::NotPermutation, "packed word has a repeated letter");
}

std::size_t Permutation::position_of(int value) const {
  auto letters = word_.letters();
  return static_cast<std::size_t>(std::find(letters.begin(), letters.end(), value) - letters.begin());
}

PackedWord pack(std::span<const int> word) {
  Word alphabet(word.begin(), word.end());
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  Word out;
  out.reserve(word.size());
  for (int letter : word) {
    out.push_back(static_cast<int>(std::lower_bound(alphabet.begin(), alphabet.end(), letter) - alphabet.begin()) + 1);
  }
  return PackedWord(std::move(out), static_cast<int>(alphabet.size()), PackedWord::Unchecked{});
}

Word restrict_word(std::span<const int> word, std::span<const int> letters) {
  return restrict_word(word, [&](int letter) { return std::find(letters.begin(), letters.end(), letter) != letters.end(); });
}

Permutation std_word(const PackedWord& f) {
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
  Word sigma(f.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) sigma[order[rank]] = static_cast<int>(rank) + 1;
  return Permutation(PackedWord(std::move(sigma)));
}

PackedWord j_involution(const PackedWord& f) {
  Word out(f.letters().begin(), f.letters().end());
  for (int& letter : out) letter = f.max_letter() + 1 - letter;
  return PackedWord(std::move(out));
}

Subset ascent_set(const PackedWord& f) {
  const std::size_t n = f.size();
  // last[v] = last position carrying v, first[v] = first position carrying v.
  std::vector<std::size_t> last(static_cast<std::size_t>(f.max_letter()) + 2, 0);
  std::vector<std::size_t> first(static_cast<std::size_t>(f.max_letter()) + 2, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = static_cast<std::size_t>(f[i]);
    last[v] = i;
    first[v] = std::min(first[v], i);
  }
  Subset mask = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto v = static_cast<std::size_t>(f[i]);
    if (f[i] < f.max_letter() && last[v] == i && first[v + 1] > i) mask |= Subset{1} << i;
  }
  return mask;
}

}  // namespace topohopf

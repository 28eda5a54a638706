#include "topohopf/wqsym.hpp"

#include <algorithm>

#include "topohopf/enumerate.hpp"
#include "topohopf/errors.hpp"

namespace topohopf {

namespace {

// Calls visit(mask) for every subset of [universe] with `size` elements.
template <class F>
void for_each_subset(std::size_t universe, std::size_t size, F visit) {
  if (size > universe) return;
  if (size == 0) {
    visit(Subset{0});
    return;
  }
  Subset s = (Subset{1} << size) - 1;
  const Subset limit = Subset{1} << universe;
  while (s < limit) {
    visit(s);
    // Next subset of the same size (Gosper's hack).
    Subset c = s & -s;
    Subset r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

// The increasing map [m] -> letters of `set`, 1-based both sides.
std::vector<int> letters_of(Subset set) {
  std::vector<int> out{0};
  for (Subset t = set; t != 0; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
  return out;
}

void append_relabelled(Word& out, const PackedWord& f, const std::vector<int>& map) {
  for (int letter : f.letters()) out.push_back(map[static_cast<std::size_t>(letter)]);
}

WordComb generate_product(const PackedWord& f, const PackedWord& g, bool disjoint) {
  const auto m = static_cast<std::size_t>(f.max_letter());
  const auto mp = static_cast<std::size_t>(g.max_letter());
  WordComb out;
  const std::size_t k_min = disjoint ? m + mp : std::max(m, mp);
  for (std::size_t k = k_min; k <= m + mp; ++k) {
    const Subset all = k == 0 ? 0 : (Subset{1} << k) - 1;
    for_each_subset(k, m, [&](Subset a) {
      const Subset forced = all & ~a;
      const std::size_t extra = mp - (k - m);
      // C runs over the subsets of A of size `extra`.
      const auto a_letters = letters_of(a);
      for_each_subset(m, extra, [&](Subset pick) {
        Subset c = 0;
        for (Subset t = pick; t != 0; t &= t - 1) {
          c |= Subset{1} << (a_letters[static_cast<std::size_t>(std::countr_zero(t)) + 1] - 1);
        }
        Word w;
        w.reserve(f.size() + g.size());
        append_relabelled(w, f, a_letters);
        append_relabelled(w, g, letters_of(forced | c));
        out.add(PackedWord(std::move(w)), QPoly(1));
      });
    });
  }
  return out;
}

bool same_length(const PackedWord& g, const PackedWord& f) {
  if (g.size() != f.size()) {
    throw Error(ErrorKind::SizeMismatch, "packed words of lengths " + std::to_string(g.size()) + " and " +
                                             std::to_string(f.size()) + " are not comparable");
  }
  return true;
}

}  // namespace

WordComb wqsym_product(const PackedWord& f, const PackedWord& g) { return generate_product(f, g, false); }

WordComb shuffle_product(const PackedWord& f, const PackedWord& g) { return generate_product(f, g, true); }

WordComb wqsym_product_filtered(const PackedWord& f, const PackedWord& g) {
  WordComb out;
  const std::size_t n = f.size();
  for (const PackedWord& w : packed_words_of_length(n + g.size())) {
    auto letters = w.letters();
    if (w.max_letter() > f.max_letter() + g.max_letter()) continue;
    if (pack(letters.first(n)) == f && pack(letters.subspan(n)) == g) out.add(w, QPoly(1));
  }
  return out;
}

PermComb fqsym_product(const Permutation& s, const Permutation& t) {
  const std::size_t n = s.size();
  const std::size_t total = n + t.size();
  const Subset all = total == 0 ? 0 : (Subset{1} << total) - 1;
  PermComb out;
  for_each_subset(total, n, [&](Subset a) {
    Word w;
    w.reserve(total);
    append_relabelled(w, s.word(), letters_of(a));
    append_relabelled(w, t.word(), letters_of(all & ~a));
    out.add(Permutation(PackedWord(std::move(w))), QPoly(1));
  });
  return out;
}

WordTensor wqsym_coproduct(const PackedWord& f) {
  WordTensor out;
  for (int k = 0; k <= f.max_letter(); ++k) {
    Word low = restrict_word(f.letters(), [k](int x) { return x <= k; });
    Word high = restrict_word(f.letters(), [k](int x) { return x > k; });
    out.add({PackedWord(std::move(low)), pack(high)}, QPoly(1));
  }
  return out;
}

PermComb varpi(const WordComb& x) {
  PermComb out;
  for (const auto& [w, c] : x) {
    if (w.is_permutation()) out.add(Permutation(w), c);
  }
  return out;
}

WordComb as_words(const PermComb& x) {
  WordComb out;
  for (const auto& [s, c] : x) out.add(s.word(), c);
  return out;
}

WordComb wqsym_product(const WordComb& x, const WordComb& y) {
  return bilinear_extend([](const PackedWord& a, const PackedWord& b) { return wqsym_product(a, b); }, x, y);
}

WordComb shuffle_product(const WordComb& x, const WordComb& y) {
  return bilinear_extend([](const PackedWord& a, const PackedWord& b) { return shuffle_product(a, b); }, x, y);
}

PermComb fqsym_product(const PermComb& x, const PermComb& y) {
  return bilinear_extend([](const Permutation& a, const Permutation& b) { return fqsym_product(a, b); }, x, y);
}

WordTensor wqsym_coproduct(const WordComb& x) {
  WordTensor out;
  for (const auto& [w, c] : x) {
    WordTensor d = wqsym_coproduct(w);
    d *= c;
    out += d;
  }
  return out;
}

WordComb j_involution(const WordComb& x) {
  return linear_extend([](const PackedWord& w) { return j_involution(w); }, x);
}

bool word_leq(const PackedWord& g, const PackedWord& f) {
  same_length(g, f);
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (f[i] == f[j] && g[i] != g[j]) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (f[i] <= f[j] && g[i] > g[j]) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (f[i] > f[j] && !(g[i] > g[j])) return false;
    }
  }
  return true;
}

bool word_leq_prime(const PackedWord& g, const PackedWord& f) {
  same_length(g, f);
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (f[i] == f[j] && g[i] != g[j]) return false;
      if (f[i] <= f[j] && g[i] > g[j]) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (f[i] < f[j] && !(g[i] < g[j])) return false;
    }
  }
  return true;
}

WordComb phi(PhiVariant variant, const PackedWord& f) {
  if (variant == PhiVariant::P010) return j_involution(phi(PhiVariant::P100, j_involution(f)));
  // Comparable words share the standardisation of f.
  WordComb out;
  for (const PackedWord& g : std_fiber(std_word(f))) {
    if (word_leq(g, f)) out.add(g, QPoly(1));
  }
  return out;
}

WordComb phi(PhiVariant variant, const WordComb& x) {
  return linear_extend([variant](const PackedWord& f) { return phi(variant, f); }, x);
}

std::vector<PackedWord> std_fiber(const Permutation& s) {
  const std::size_t n = s.size();
  if (n == 0) return {PackedWord()};
  const Subset m = ascent_set(s.word());
  std::vector<PackedWord> out;
  // Enumerate I as submasks of M(s).
  for (Subset i = m;; i = (i - 1) & m) {
    Word f(n);
    int letter = 1;
    f[s.position_of(1)] = letter;
    for (int v = 1; v < static_cast<int>(n); ++v) {
      const std::size_t pos = s.position_of(v);
      const bool in_m = (m >> pos) & 1U;
      const bool in_i = (i >> pos) & 1U;
      if (in_i || !in_m) ++letter;
      f[s.position_of(v + 1)] = letter;
    }
    out.emplace_back(std::move(f));
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrderIsoReport order_iso_check(std::size_t n) {
  OrderIsoReport report;
  const auto& words = packed_words_of_length(n);
  std::vector<Permutation> stds;
  std::vector<Subset> ms;
  for (const auto& w : words) {
    stds.push_back(std_word(w));
    ms.push_back(ascent_set(w));
  }
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = 0; b < words.size(); ++b) {
      ++report.pairs;
      const bool criterion = stds[a] == stds[b] && (ms[a] & ~ms[b]) == 0;
      if (word_leq(words[a], words[b]) != criterion) {
        if (report.mismatches++ == 0) report.first_mismatch.emplace(words[a], words[b]);
      }
    }
  }
  return report;
}

}  // namespace topohopf

#pragma once

// Brute-force reimplementations straight from the definitions, used to
// cross-check the library. Nothing here calls the library's algorithms;
// only its value types are shared.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "topohopf/topology.hpp"

namespace oracle {

using Rel = std::vector<std::vector<bool>>;  // rel[i][j] <=> i <= j, 0-based
using W = std::vector<int>;

inline Rel relation(const topohopf::Topology& t) {
  const std::size_t n = t.degree();
  Rel r(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r[i][j] = t.leq(i, j);
  }
  return r;
}

inline topohopf::Topology topology(const Rel& r) { return topohopf::Topology::from_matrix(r); }

inline bool is_preorder(const Rel& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!r[i][i]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (r[i][j] && r[j][k] && !r[i][k]) return false;
      }
    }
  }
  return true;
}

/// Every preorder on [n], by testing all 2^(n^2 - n) off-diagonal relations.
inline std::vector<Rel> all_preorders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) off.emplace_back(i, j);
    }
  }
  std::vector<Rel> out;
  for (unsigned long mask = 0; mask < (1UL << off.size()); ++mask) {
    Rel r(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t b = 0; b < off.size(); ++b) {
      if ((mask >> b) & 1UL) r[off[b].first][off[b].second] = true;
    }
    if (is_preorder(r)) out.push_back(r);
  }
  return out;
}

inline bool lt(const Rel& r, std::size_t i, std::size_t j) { return r[i][j] && !r[j][i]; }
inline bool sim(const Rel& r, std::size_t i, std::size_t j) { return r[i][j] && r[j][i]; }

inline W pack(const W& w) {
  std::set<int> letters(w.begin(), w.end());
  std::map<int, int> rank;
  int k = 0;
  for (int l : letters) rank[l] = ++k;
  W out;
  for (int l : w) out.push_back(rank[l]);
  return out;
}

inline bool packed(const W& w) { return pack(w) == w; }

/// All packed words of length n, by filtering all words over [n].
inline std::vector<W> packed_words(std::size_t n) {
  std::vector<W> out;
  W w(n, 1);
  while (true) {
    if (packed(w)) out.push_back(w);
    std::size_t i = 0;
    while (i < n && w[i] == static_cast<int>(n)) w[i++] = 1;
    if (i == n) break;
    ++w[i];
  }
  return out;
}

/// Number of bijections f with the four picture clauses.
inline std::size_t pictures(const Rel& a, const Rel& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return 0;
  std::vector<std::size_t> f(n);
  std::iota(f.begin(), f.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i) {
      for (std::size_t j = 0; ok && j < n; ++j) {
        if (lt(a, i, j) && !(f[i] < f[j])) ok = false;
        if (lt(b, f[i], f[j]) && !(i < j)) ok = false;
        if (sim(a, i, j) != sim(b, f[i], f[j])) ok = false;
      }
    }
    count += ok ? 1 : 0;
  } while (std::next_permutation(f.begin(), f.end()));
  return count;
}

/// Restriction of r to the elements of `keep` (increasing), re-indexed.
inline Rel restrict(const Rel& r, const std::vector<std::size_t>& keep) {
  Rel out(keep.size(), std::vector<bool>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) out[a][b] = r[keep[a]][keep[b]];
  }
  return out;
}

/// Delta(T) as (left, right) pairs over the up-closed subsets O.
inline std::multiset<std::pair<std::string, std::string>> coproduct(const Rel& r) {
  const std::size_t n = r.size();
  std::multiset<std::pair<std::string, std::string>> out;
  for (unsigned long o = 0; o < (1UL << n); ++o) {
    bool open = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (((o >> i) & 1UL) && r[i][j] && !((o >> j) & 1UL)) open = false;
      }
    }
    if (!open) continue;
    std::vector<std::size_t> in, out_;
    for (std::size_t i = 0; i < n; ++i) (((o >> i) & 1UL) ? in : out_).push_back(i);
    out.emplace(topology(restrict(r, out_)).key(), topology(restrict(r, in)).key());
  }
  return out;
}

/// Disjoint union with b shifted; with `down`, every element of a below
/// every element of b.
inline Rel product(const Rel& a, const Rel& b, bool down) {
  const std::size_t k = a.size(), l = b.size();
  Rel r(k + l, std::vector<bool>(k + l));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) r[i][j] = a[i][j];
    for (std::size_t j = 0; j < l; ++j) r[i][k + j] = down;
  }
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) r[k + i][k + j] = b[i][j];
  }
  return r;
}

/// f . g in WQSym by filtering all packed words of length |f| + |g|.
inline std::multiset<W> wqsym_product(const W& f, const W& g) {
  std::multiset<W> out;
  for (const auto& h : packed_words(f.size() + g.size())) {
    W left(h.begin(), h.begin() + static_cast<long>(f.size()));
    W right(h.begin() + static_cast<long>(f.size()), h.end());
    if (pack(left) == f && pack(right) == g) out.insert(h);
  }
  return out;
}

/// The shifted shuffle: terms of f . g whose halves use disjoint letters.
inline std::multiset<W> shifted_shuffle(const W& f, const W& g) {
  std::multiset<W> out;
  for (const auto& h : wqsym_product(f, g)) {
    std::set<int> left(h.begin(), h.begin() + static_cast<long>(f.size()));
    bool disjoint = true;
    for (std::size_t p = f.size(); p < h.size(); ++p) disjoint = disjoint && !left.count(h[p]);
    if (disjoint) out.insert(h);
  }
  return out;
}

/// Delta(f) = sum over k of pack(f restricted to letters <= k) (x) pack(rest).
inline std::vector<std::pair<W, W>> wqsym_coproduct(const W& f) {
  const int m = f.empty() ? 0 : *std::max_element(f.begin(), f.end());
  std::vector<std::pair<W, W>> out;
  for (int k = 0; k <= m; ++k) {
    W low, high;
    for (int l : f) (l <= k ? low : high).push_back(l);
    out.emplace_back(pack(low), pack(high));
  }
  return out;
}

struct Stats {
  std::size_t l1 = 0, l2 = 0, l3 = 0;
};

inline bool generalized(const Rel& r, const W& f) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[i][j] && f[i] > f[j]) return false;
    }
  }
  return true;
}

/// The two strictness clauses, read literally.
inline bool strict(const Rel& r, const W& f) {
  const std::size_t n = r.size();
  if (!generalized(r, f)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (lt(r, i, j) && i > j && !(f[i] < f[j])) return false;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (i < j && sim(r, i, k) && f[i] == f[j] && f[j] == f[k] && !(sim(r, i, j) && sim(r, j, k))) return false;
      }
    }
  }
  return true;
}

inline Stats stats(const Rel& r, const W& f) {
  const std::size_t n = r.size();
  Stats s;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (lt(r, i, j) && f[i] == f[j]) (i < j ? s.l1 : s.l2)++;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (i < j && sim(r, i, k) && !sim(r, i, j) && !sim(r, j, k) && f[i] == f[j] && f[j] == f[k]) ++s.l3;
      }
    }
  }
  return s;
}

/// Ordered partitions into the classes compatible with the preorder.
inline std::vector<W> linear_extensions(const Rel& r) {
  std::vector<W> out;
  for (const auto& f : packed_words(r.size())) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < r.size(); ++i) {
      for (std::size_t j = 0; ok && j < r.size(); ++j) {
        if ((f[i] == f[j]) != sim(r, i, j)) ok = false;
        if (r[i][j] && f[i] > f[j]) ok = false;
      }
    }
    if (ok) out.push_back(f);
  }
  return out;
}

/// The order on packed words, clause by clause.
inline bool word_leq(const W& g, const W& f) {
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (f[i] <= f[j] && !(g[i] <= g[j])) return false;
      if (f[i] > f[j] && i < j && !(g[i] > g[j])) return false;
      if (f[i] == f[j] && g[i] != g[j]) return false;
    }
  }
  return true;
}

}  // namespace oracle

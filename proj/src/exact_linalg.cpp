#include "topohopf/exact_linalg.hpp"

#include <algorithm>

namespace topohopf {

namespace {

template <bool Parallel>
std::size_t bareiss_rank(IntMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const auto& prow = m[r];
    const BigInt& p = prow[c];
    const auto first = static_cast<std::ptrdiff_t>(r + 1);
    const auto last = static_cast<std::ptrdiff_t>(rows);
    auto update = [&](std::size_t i) {
      auto& row = m[i];
      if (row[c] == 0) {
        // Row i is unaffected by the pivot except for the common scaling.
        for (std::size_t j = c + 1; j < cols; ++j) {
          if (row[j] != 0) row[j] = row[j] * p / prev;
        }
        return;
      }
      const BigInt factor = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) row[j] = (p * row[j] - factor * prow[j]) / prev;
      row[c] = 0;
    };
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = first; i < last; ++i) update(static_cast<std::size_t>(i));
    } else {
      for (std::ptrdiff_t i = first; i < last; ++i) update(static_cast<std::size_t>(i));
    }
    prev = p;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t exact_rank(IntMatrix m) { return bareiss_rank<true>(std::move(m)); }

std::size_t exact_rank_serial(IntMatrix m) { return bareiss_rank<false>(std::move(m)); }

std::vector<std::vector<BigInt>> integer_nullspace(const IntMatrix& m, std::size_t columns) {
  std::vector<std::vector<Rational>> a;
  a.reserve(m.size());
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < columns; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a[k][free];
    BigInt lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(x)));
    std::vector<BigInt> w(columns);
    BigInt g = 0;
    for (std::size_t j = 0; j < columns; ++j) {
      w[j] = numerator(Rational(v[j] * lcm));
      g = boost::multiprecision::gcd(g, BigInt(abs(w[j])));
    }
    if (g > 1) {
      for (auto& x : w) x /= g;
    }
    auto lead = std::find_if(w.begin(), w.end(), [](const BigInt& x) { return x != 0; });
    if (lead != w.end() && *lead < 0) {
      for (auto& x : w) x = -x;
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace topohopf

#include "topohopf/tables.hpp"

#include "topohopf/enumerate.hpp"
#include "topohopf/errors.hpp"
#include "topohopf/hopf_topology.hpp"
#include "topohopf/wqsym.hpp"

namespace topohopf {

namespace {

using Series = std::vector<BigInt>;

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded,
                std::string(what) + " table is limited to n <= " + std::to_string(cap) + ", got " + std::to_string(n));
  }
}

Series multiply(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// 1 / a for a series with constant term 1.
Series inverse(const Series& a) {
  Series out(a.size(), 0);
  out[0] = 1;
  for (std::size_t n = 1; n < a.size(); ++n) {
    BigInt s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += a[k] * out[n - k];
    out[n] = -s;
  }
  return out;
}

}  // namespace

std::vector<BigInt> topology_counts(std::size_t max_n) {
  check_cap(max_n, kDefaultTopologyCap, "topology count");
  std::vector<BigInt> out;
  for (std::size_t n = 0; n <= max_n; ++n) out.emplace_back(topologies_of_degree(n).size());
  return out;
}

Table counts_table(std::size_t max_n) {
  check_cap(max_n, kDefaultTopologyCap, "topology count");
  Table t{"counts", {"n", "topologies", "t0"}, {}};
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto& all = topologies_of_degree(n);
    std::size_t t0 = 0;
    for (const auto& top : all) t0 += is_t0(top) ? 1 : 0;
    t.rows.push_back({BigInt(n), BigInt(all.size()), BigInt(t0)});
  }
  return t;
}

Table indec_table(std::size_t max_n) {
  check_cap(max_n, kDefaultTopologyCap, "indecomposable");
  Table t{"indec", {"n", "dot", "down", "both"}, {}};
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t dot = 0;
    std::size_t down = 0;
    std::size_t both = 0;
    for (const auto& top : topologies_of_degree(n)) {
      const bool d1 = decompose(top, ProductKind::Dot).factors.size() == 1;
      const bool d2 = decompose(top, ProductKind::Down).factors.size() == 1;
      dot += d1 ? 1 : 0;
      down += d2 ? 1 : 0;
      both += (d1 && d2) ? 1 : 0;
    }
    t.rows.push_back({BigInt(n), BigInt(dot), BigInt(down), BigInt(both)});
  }
  return t;
}

Table fubini_table(std::size_t max_n) {
  check_cap(max_n, kDefaultWordCap, "Fubini");
  Table t{"fubini", {"n", "packed_words", "fiber_sum"}, {}};
  for (std::size_t n = 1; n <= max_n; ++n) {
    BigInt fibers = 0;
    for (const auto& s : enumerate_permutations(n)) fibers += BigInt(1) << cardinality(ascent_set(s.word()));
    t.rows.push_back({BigInt(n), BigInt(packed_words_of_length(n).size()), fibers});
  }
  return t;
}

std::vector<BigInt> indecomposable_series(const std::vector<BigInt>& counts) {
  if (counts.empty() || counts[0] != 1) throw Error(ErrorKind::EmptyInput, "series must start with 1");
  Series f_minus_one = counts;
  f_minus_one[0] = 0;
  Series q = multiply(f_minus_one, inverse(counts));
  return {q.begin() + 1, q.end()};
}

std::vector<BigInt> bi_indecomposable_series(const std::vector<BigInt>& counts) {
  if (counts.empty() || counts[0] != 1) throw Error(ErrorKind::EmptyInput, "series must start with 1");
  Series num = multiply(counts, counts);
  for (auto& c : num) c = -c;
  for (std::size_t i = 0; i < counts.size(); ++i) num[i] += 3 * counts[i];
  num[0] -= 2;
  Series q = multiply(num, inverse(counts));
  return {q.begin() + 1, q.end()};
}

}  // namespace topohopf

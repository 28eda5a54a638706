#include "topohopf/topology.hpp"

#include <algorithm>

#include "topohopf/errors.hpp"

namespace topohopf {

namespace {

void check_degree(std::size_t n) {
  if (n > kMaxDegree) {
    throw Error(ErrorKind::CapExceeded, "topology degree " + std::to_string(n) + " exceeds " + std::to_string(kMaxDegree));
  }
}

// Gathers the bits of `row` selected by `mask` into the low bits.
Subset compress(Subset row, Subset mask) {
  Subset out = 0;
  std::size_t k = 0;
  for (Subset m = mask; m != 0; m &= m - 1) {
    auto bit = static_cast<std::size_t>(std::countr_zero(m));
    if ((row >> bit) & 1U) out |= Subset{1} << k;
    ++k;
  }
  return out;
}

bool set_lex_less(Subset a, Subset b) {
  if (a == b) return false;
  Subset d = a ^ b;
  return (a >> std::countr_zero(d)) & 1U;
}

}  // namespace

Topology::Topology(std::size_t n, std::span<const Subset> rows, Unchecked) : n_(static_cast<std::uint8_t>(n)) {
  std::copy_n(rows.begin(), n, rows_.begin());
}

Topology Topology::from_rows(std::span<const Subset> rows) {
  const std::size_t n = rows.size();
  check_degree(n);
  const Subset ground = n == 0 ? 0 : (Subset{1} << n) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    if ((rows[i] & ~ground) != 0) throw Error(ErrorKind::Parse, "relation row has bits beyond the degree");
    if (!((rows[i] >> i) & 1U)) {
      throw Error(ErrorKind::NotReflexive, "relation is not reflexive: (" + std::to_string(i + 1) + "," +
                                               std::to_string(i + 1) + ") is missing");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!((rows[i] >> j) & 1U)) continue;
      Subset missing = rows[j] & ~rows[i];
      if (missing != 0) {
        auto k = static_cast<std::size_t>(std::countr_zero(missing));
        throw NotTransitiveError({i + 1, j + 1, k + 1}, "relation is not transitive: " + std::to_string(i + 1) +
                                                            "<=" + std::to_string(j + 1) + " and " +
                                                            std::to_string(j + 1) + "<=" + std::to_string(k + 1) +
                                                            " but not " + std::to_string(i + 1) + "<=" +
                                                            std::to_string(k + 1));
      }
    }
  }
  return Topology(n, rows, Unchecked{});
}

Topology Topology::from_matrix(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  check_degree(n);
  std::array<Subset, kMaxDegree> rows{};
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw Error(ErrorKind::SizeMismatch, "relation matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (leq[i][j]) rows[i] |= Subset{1} << j;
    }
  }
  return from_rows(std::span<const Subset>(rows.data(), n));
}

Topology Topology::closure_of(std::span<const Subset> rows) {
  const std::size_t n = rows.size();
  check_degree(n);
  std::array<Subset, kMaxDegree> closed{};
  for (std::size_t i = 0; i < n; ++i) closed[i] = rows[i] | (Subset{1} << i);
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((closed[i] >> k) & 1U) closed[i] |= closed[k];
    }
  }
  return Topology(n, std::span<const Subset>(closed.data(), n), Unchecked{});
}

Subset Topology::down_set(std::size_t i) const noexcept {
  Subset out = 0;
  for (std::size_t k = 0; k < n_; ++k) {
    if ((rows_[k] >> i) & 1U) out |= Subset{1} << k;
  }
  return out;
}

std::size_t Topology::relation_size() const noexcept {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n_; ++i) total += cardinality(rows_[i]);
  return total;
}

bool Topology::is_open(Subset set) const noexcept {
  for (Subset m = set; m != 0; m &= m - 1) {
    if ((rows_[static_cast<std::size_t>(std::countr_zero(m))] & ~set) != 0) return false;
  }
  return true;
}

std::strong_ordering Topology::operator<=>(const Topology& other) const noexcept {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  for (std::size_t i = 0; i < n_; ++i) {
    Subset d = rows_[i] ^ other.rows_[i];
    if (d == 0) continue;
    // First differing bit in row-major string order; '1' sorts after '0'.
    return ((rows_[i] >> std::countr_zero(d)) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

bool Topology::operator==(const Topology& other) const noexcept {
  if (n_ != other.n_) return false;
  return std::equal(rows_.begin(), rows_.begin() + n_, other.rows_.begin());
}

std::string Topology::key() const {
  std::string out = std::to_string(n_) + ":";
  out.reserve(out.size() + std::size_t{n_} * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out.push_back(leq(i, j) ? '1' : '0');
  }
  return out;
}

TopologyBuilder::TopologyBuilder(std::size_t n) : n_(n) {
  check_degree(n);
  for (std::size_t i = 0; i < n; ++i) rows_[i] = Subset{1} << i;
}

Topology TopologyBuilder::build() const {
  return Topology(n_, std::span<const Subset>(rows_.data(), n_), Topology::Unchecked{});
}

Topology make_topology(std::size_t n, const std::vector<std::vector<bool>>& leq) {
  if (leq.size() != n) throw Error(ErrorKind::SizeMismatch, "relation matrix does not have n rows");
  return Topology::from_matrix(leq);
}

std::vector<Subset> open_sets(const Topology& t) {
  std::vector<Subset> out;
  const Subset limit = t.ground();
  for (Subset s = 0;; ++s) {
    if (t.is_open(s)) out.push_back(s);
    if (s == limit) break;
  }
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
    return set_lex_less(a, b);
  });
  return out;
}

Topology topology_from_open_sets(std::size_t n, std::span<const Subset> opens) {
  check_degree(n);
  std::array<Subset, kMaxDegree> rows{};
  const Subset ground = n == 0 ? 0 : (Subset{1} << n) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    Subset row = ground;
    for (Subset o : opens) {
      if ((o >> i) & 1U) row &= o;
    }
    rows[i] = row;
  }
  return Topology::from_rows(std::span<const Subset>(rows.data(), n));
}

Topology topology_of_word(const PackedWord& f) {
  TopologyBuilder b(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f[i] <= f[j]) b.set(i, j);
    }
  }
  return b.build();
}

Topology restrict_std(const Topology& t, Subset y) {
  y &= t.ground();
  TopologyBuilder b(cardinality(y));
  std::size_t k = 0;
  for (Subset m = y; m != 0; m &= m - 1) {
    auto i = static_cast<std::size_t>(std::countr_zero(m));
    b.set_row(k++, compress(t.up_set(i), y));
  }
  return b.build();
}

Topology iota(const Topology& t) {
  TopologyBuilder b(t.degree());
  for (std::size_t i = 0; i < t.degree(); ++i) b.set_row(i, t.down_set(i));
  return b.build();
}

std::vector<Subset> classes(const Topology& t) {
  std::vector<Subset> out;
  Subset seen = 0;
  for (std::size_t i = 0; i < t.degree(); ++i) {
    if ((seen >> i) & 1U) continue;
    Subset c = t.class_of(i);
    seen |= c;
    out.push_back(c);
  }
  return out;
}

Topology bar(const Topology& t) {
  auto cls = classes(t);
  TopologyBuilder b(cls.size());
  for (std::size_t a = 0; a < cls.size(); ++a) {
    auto rep = static_cast<std::size_t>(std::countr_zero(cls[a]));
    for (std::size_t c = 0; c < cls.size(); ++c) {
      if (t.leq(rep, static_cast<std::size_t>(std::countr_zero(cls[c])))) b.set(a, c);
    }
  }
  return b.build();
}

std::size_t c_defect(const Topology& t) { return t.degree() - classes(t).size(); }

bool is_t0(const Topology& t) {
  for (std::size_t i = 0; i < t.degree(); ++i) {
    if (t.class_of(i) != (Subset{1} << i)) return false;
  }
  return true;
}

bool refinement_leq(const Topology& a, const Topology& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorKind::SizeMismatch, "refinement order compares topologies of degrees " +
                                             std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
  }
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if ((b.up_set(i) & ~a.up_set(i)) != 0) return false;
  }
  return true;
}

}  // namespace topohopf

#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "topohopf/lincomb.hpp"
#include "topohopf/topology.hpp"

namespace topohopf {

using TopComb = LinComb<Topology>;
using TopTensor = Tensor2<Topology, Topology>;

/// Disjoint union, the second relation shifted by deg(a).
Topology product_dot(const Topology& a, const Topology& b);

/// product_dot plus every pair (i, j + deg(a)).
Topology product_down(const Topology& a, const Topology& b);

/// Sum over open sets O of Std(T|[n]\O) (x) Std(T|O).
TopTensor coproduct(const Topology& t);

/// 1 for the empty topology, 0 otherwise.
QPoly counit(const Topology& t);

TopComb product_dot(const TopComb& x, const TopComb& y);
TopComb product_down(const TopComb& x, const TopComb& y);
TopTensor coproduct(const TopComb& x);
TopComb iota(const TopComb& x);

enum class ProductKind { Dot, Down };

struct FactorizationResult {
  std::vector<Topology> factors;
  ProductKind kind;
};

/// Unique maximal factorization into kind-indecomposables. A down split at
/// m requires [m] <_T ([n] \ [m]) strictly, since x -> y adds no pair back
/// from the second factor to the first. Throws Error(EmptyInput).
FactorizationResult decompose(const Topology& t, ProductKind kind);

enum class IndecClass {
  Bi,        ///< indecomposable for both products
  DotOnly,   ///< indecomposable for the dot product only
  DownOnly,  ///< indecomposable for the down product only
};

const char* to_string(IndecClass c) noexcept;

/// Throws Error(EmptyInput).
IndecClass indecomposability_class(const Topology& t);

/// q1^c(T) * bar(T).
TopComb theta_q(const Topology& t);
TopComb theta_q(const TopComb& x);

/// Kills every label that is not T0.
TopComb theta_0(const TopComb& x);

/// Antipode by the recursion S(T) = -T - sum' S(T1) T2 over the reduced
/// coproduct. Results are memoised; one instance may be shared by threads.
class AntipodeEngine {
 public:
  TopComb operator()(const Topology& t);
  TopComb apply(const TopComb& x);

 private:
  std::mutex mutex_;
  std::map<Topology, TopComb> memo_;
};

TopComb antipode(const TopComb& x);

}  // namespace topohopf

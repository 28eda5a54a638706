#pragma once

#include <vector>

#include "topohopf/hopf_topology.hpp"

namespace topohopf {

using RibbonComb = LinComb<RibbonLabel>;
using RibbonTensor = Tensor2<RibbonLabel, RibbonLabel>;

/// Ribbon-basis operations enumerate whole graded pieces, so degrees are
/// limited to the cached topology enumeration.
inline constexpr std::size_t kRibbonDegreeCap = 5;

/// {T' : T' <= T} in the refinement order, sorted by canonical key.
std::vector<Topology> refinement_down_set(const Topology& t);

/// R_T written in the standard basis: sum over T' <= T of mu(T', T) T'.
TopComb ribbon_in_standard(const Topology& t);

/// Standard basis to ribbon basis: T = sum over T' <= T of R_T'.
RibbonComb to_ribbon(const TopComb& x);

/// Ribbon basis to standard basis, through ribbon_in_standard.
TopComb from_ribbon(const RibbonComb& x);

/// R_T . R_T' by the direct restriction formula.
RibbonComb ribbon_product_dot(const Topology& a, const Topology& b);

/// R_T -> R_T': as ribbon_product_dot with [k] below the rest.
RibbonComb ribbon_product_down(const Topology& a, const Topology& b);

/// Delta(R_T): open sets O with [n] \ O <_T O.
RibbonTensor ribbon_coproduct(const Topology& t);

RibbonComb ribbon_product_dot(const RibbonComb& x, const RibbonComb& y);
RibbonComb ribbon_product_down(const RibbonComb& x, const RibbonComb& y);
RibbonTensor ribbon_coproduct(const RibbonComb& x);

}  // namespace topohopf

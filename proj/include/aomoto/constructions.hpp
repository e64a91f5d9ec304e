#pragma once

#include "aomoto/algebra.hpp"

namespace aomoto {

inline constexpr int kDefaultTensorDegreeCap = 12;

/// A (x) B with (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb' and
/// D(a (x) b) = dA(a) (x) b + (-1)^{|a|} a (x) dB(b).
///
/// Degree-q basis: pairs (u, v) ordered by A-degree descending, then u, then v,
/// so A^1 comes before B^1 in degree one. Top is the sum of the tops when both
/// factors are complete (capped, losing completeness if the cap bites), else the
/// smallest top among the incomplete factors.
Algebra tensor_product(const Algebra& a, const Algebra& b, int degree_cap = kDefaultTensorDegreeCap);

/// A v B: positive-degree pieces are A^q (+) B^q, cross products vanish, d = dA + dB.
/// Top is the larger top when both are complete, else the smallest incomplete top.
Algebra wedge_sum(const Algebra& a, const Algebra& b);

/// The ground field as an algebra (top 1, complete, A^1 = 0).
Algebra ground_algebra(PrimeField field);

}  // namespace aomoto

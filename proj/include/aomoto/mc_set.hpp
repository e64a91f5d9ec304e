#pragma once

#include <optional>
#include <vector>

#include "aomoto/algebra.hpp"
#include "aomoto/parallel.hpp"

namespace aomoto {

/// Points of MC(A) = {a in A^1 : a^2 + d(a) = 0} in lexicographic order.
struct MCSet {
    std::uint32_t p = 2;
    std::size_t n = 0;
    std::vector<Point> points;

    bool contains(const Point& x) const;
};

/// p^n, or ResourceError when it exceeds `cap`.
std::uint64_t checked_point_count(std::uint32_t p, std::size_t n, std::uint64_t cap);

/// a^2 + d(a) in A^2. Requires top >= 2.
Element mc_defect(const Algebra& a, const Point& x);
bool in_mc(const Algebra& a, const Point& x);

/// Exhaustive over F_p^{c_1}, except when p != 2 and degree-one squares vanish:
/// then MC(A) = ker(d: A^1 -> A^2) and only that subspace is enumerated.
/// Throws PreconditionError if top < 2 on an incomplete algebra, ResourceError past the enumeration cap.
MCSet mc_set(const Algebra& a, const EngineOptions& options = {});

Point negate(const Point& x, const PrimeField& f);

struct InvolutionCheck {
    bool closed = true;
    std::optional<Point> counterexample;
};

/// a in MC(A) implies -a in MC(A).
InvolutionCheck mc_involution_check(const Algebra& a, const MCSet& mc);

}  // namespace aomoto

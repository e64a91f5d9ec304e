#pragma once

#include <vector>

#include "aomoto/algebra.hpp"

namespace aomoto {

/// A connected double cover Y -> X given by its class alpha in H^1(X; Z_2).
struct CoverSpec {
    Algebra base;
    Point alpha;
    bool torsion_free = false;  // asserted by the caller; switches to bound mode
};

/// alpha^2 = 0 in A^2. PreconditionError for alpha = 0 or p != 2.
bool z4_liftable(const CoverSpec& spec);

struct CoverBetti {
    std::vector<std::size_t> betti;       // b_q(Y; Z_2), or upper bounds
    std::vector<std::size_t> correction;  // dim H^q(A, alpha *)
    bool upper_bound = false;
};

/// b_0 = 1 and b_q(Y) = c_q + dim H^q(A, alpha *) for q >= 1 in the reliable range,
/// where the correction complex is cup product with alpha (no Bockstein term).
/// PreconditionError "alpha^2 != 0" when the cover does not lift to Z_4.
CoverBetti cover_betti(const CoverSpec& spec);

}  // namespace aomoto

#include "aomoto/covers.hpp"

#include "aomoto/complex.hpp"
#include "aomoto/errors.hpp"

namespace aomoto {

namespace {

Element checked_alpha(const CoverSpec& spec)
{
    const Algebra& a = spec.base;
    if (a.field().characteristic() != 2)
        throw PreconditionError("double covers are classified over F_2; the base algebra is over F_" +
                                std::to_string(a.field().characteristic()));
    if (a.top() < 2)
        throw PreconditionError("alpha^2 lives in degree 2, beyond the truncation");
    const Element alpha = a.point_element(spec.alpha);
    if (alpha.is_zero())
        throw PreconditionError("alpha = 0 classifies the trivial (disconnected) cover");
    return alpha;
}

}  // namespace

bool z4_liftable(const CoverSpec& spec)
{
    const Element alpha = checked_alpha(spec);
    return spec.base.multiply(alpha, alpha).is_zero();
}

CoverBetti cover_betti(const CoverSpec& spec)
{
    const Element alpha = checked_alpha(spec);
    const Algebra& a = spec.base;
    const Element square = a.multiply(alpha, alpha);
    if (!square.is_zero())
        throw PreconditionError("alpha^2 != 0 (alpha^2 = " + a.format(square) + "); the cover formula does not apply");

    const Algebra cup = with_zero_differential(a);
    const CochainComplex c = AomotoFamily(cup).complex(spec.alpha);
    CoverBetti out;
    out.upper_bound = spec.torsion_free;
    for (int q = 0; static_cast<std::size_t>(q) < c.maps.size(); ++q) {
        out.correction.push_back(c.betti(q));
        out.betti.push_back(q == 0 ? 1 : a.dim(q) + out.correction.back());
    }
    return out;
}

}  // namespace aomoto

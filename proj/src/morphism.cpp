#include "aomoto/morphism.hpp"

#include <algorithm>
#include <stdexcept>

#include "aomoto/constructions.hpp"

namespace aomoto {

Element Morphism::apply(const Element& u) const
{
    if (u.degree < 0 || u.degree > top())
        throw std::out_of_range("morphism is not defined in degree " + std::to_string(u.degree));
    return {u.degree, maps[u.degree].apply(u.coeffs)};
}

ValidationReport validate_morphism(const Morphism& phi)
{
    ValidationReport report;
    const Algebra& s = phi.source;
    const Algebra& t = phi.target;
    if (!(s.field() == t.field())) {
        report.violations.push_back({"field", "", "source and target fields differ"});
        return report;
    }
    const int top = std::min(s.top(), t.top());
    if (phi.top() != top) {
        report.violations.push_back({"shape", "", "expected maps in degrees 0.." + std::to_string(top)});
        return report;
    }
    for (int i = 0; i <= top; ++i)
        if (phi.maps[i].rows() != t.dim(i) || phi.maps[i].cols() != s.dim(i)) {
            report.violations.push_back({"shape", "degree " + std::to_string(i), "matrix has wrong shape"});
            return report;
        }

    if (phi.apply(s.unit()) != t.unit())
        report.violations.push_back({"unit", "1", "phi(1) != 1"});

    for (int i = 1; i <= top; ++i)
        for (int j = 1; i + j <= top; ++j)
            for (std::size_t u = 0; u < s.dim(i); ++u)
                for (std::size_t v = 0; v < s.dim(j); ++v) {
                    const Element eu = s.basis(i, u), ev = s.basis(j, v);
                    const Element lhs = phi.apply(s.multiply(eu, ev));
                    const Element rhs = t.multiply(phi.apply(eu), phi.apply(ev));
                    if (lhs != rhs)
                        report.violations.push_back({"multiplicativity",
                                                     "(" + s.labels(i)[u] + ", " + s.labels(j)[v] + ")",
                                                     "phi(uv) != phi(u)phi(v)"});
                }

    for (int i = 0; i < top; ++i)
        for (std::size_t u = 0; u < s.dim(i); ++u) {
            const Element eu = s.basis(i, u);
            const Element lhs = phi.apply(s.d(eu));
            const Element rhs = t.d(phi.apply(eu));
            if (lhs != rhs)
                report.violations.push_back({"differential", s.labels(i)[u],
                                             "phi(d u) = " + t.format(lhs) + " but d(phi u) = " + t.format(rhs)});
        }
    return report;
}

Morphism identity_morphism(const Algebra& a)
{
    Morphism phi{a, a, {}};
    for (int i = 0; i <= a.top(); ++i)
        phi.maps.push_back(Matrix::identity(a.field(), a.dim(i)));
    return phi;
}

Morphism wedge_inclusion(const Algebra& a, const Algebra& b)
{
    Algebra target = wedge_sum(a, b);
    const int top = std::min(a.top(), target.top());
    Morphism phi{a, target, {}};
    for (int i = 0; i <= top; ++i) {
        Matrix m(a.field(), target.dim(i), a.dim(i));
        for (std::size_t u = 0; u < a.dim(i); ++u)
            m.set(u, u, 1);
        phi.maps.push_back(std::move(m));
    }
    return phi;
}

}  // namespace aomoto

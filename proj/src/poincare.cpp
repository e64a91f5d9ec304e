#include "aomoto/poincare.hpp"

#include <algorithm>
#include <set>

#include "aomoto/errors.hpp"
#include "aomoto/mc_set.hpp"
#include "aomoto/resonance.hpp"

namespace aomoto {

Scalar PDStructure::epsilon(const Element& top_element) const { return top_element.coeffs.at(0); }

namespace {

// rows: basis of A^i, columns: basis of A^{m-i}
Matrix pairing_matrix(const Algebra& a, int i, int m)
{
    Matrix p(a.field(), a.dim(i), a.dim(m - i));
    for (std::size_t u = 0; u < a.dim(i); ++u)
        for (std::size_t v = 0; v < a.dim(m - i); ++v)
            p.set(u, v, a.product(i, u, m - i, v).at(0));
    return p;
}

}  // namespace

PDDetection detect_pd(const Algebra& a)
{
    PDDetection out;
    if (!a.complete()) {
        out.failure = "the algebra is a truncation (not complete)";
        return out;
    }
    const int m = a.top();
    if (a.dim(m) != 1) {
        out.failure = "top degree " + std::to_string(m) + " has dimension " + std::to_string(a.dim(m)) + ", not 1";
        out.degree = m;
        return out;
    }
    PDStructure pd;
    pd.m = m;
    pd.omega = a.basis(m, 0);
    for (int i = 0; i <= m; ++i) {
        const Matrix p = pairing_matrix(a, i, m);
        if (p.rows() != p.cols() || rank(p) != p.rows()) {
            out.failure = "the pairing A^" + std::to_string(i) + " x A^" + std::to_string(m - i) + " -> A^" +
                          std::to_string(m) + " is singular";
            out.degree = i;
            return out;
        }
    }
    for (int i = 0; i <= m; ++i)
        pd.duals.push_back(poincare_duals(a, pd, i));
    out.structure = std::move(pd);
    return out;
}

PDStructure require_pd(const Algebra& a)
{
    PDDetection d = detect_pd(a);
    if (!d.structure)
        throw PreconditionError("not a Poincare duality algebra: " + d.failure);
    return *d.structure;
}

std::vector<Element> poincare_duals(const Algebra& a, const PDStructure& pd, int i)
{
    const Matrix p = pairing_matrix(a, i, pd.m);
    std::vector<Element> out;
    for (std::size_t u = 0; u < a.dim(i); ++u) {
        Vector rhs(a.dim(i), 0);
        rhs[u] = 1;
        auto x = solve_linear(p, rhs);
        if (!x)
            throw PreconditionError("pairing in degree " + std::to_string(i) + " is singular");
        out.push_back({pd.m - i, *x});
    }
    return out;
}

Element poincare_dual(const Algebra& a, const PDStructure& pd, const Element& u)
{
    if (u.is_zero())
        throw PreconditionError("the zero element has no Poincare dual");
    const int i = u.degree;
    Matrix row(a.field(), 1, a.dim(pd.m - i));
    for (std::size_t v = 0; v < a.dim(pd.m - i); ++v)
        row.set(0, v, pd.epsilon(a.multiply(u, a.basis(pd.m - i, v))));
    auto x = solve_linear(row, Vector{1});
    if (!x)
        throw PreconditionError("element pairs to zero with its complementary degree");
    return {pd.m - i, *x};
}

PDCdgaCheck check_pd_cdga(const Algebra& a)
{
    const PDStructure pd = require_pd(a);
    PDCdgaCheck out;
    if (pd.m < 1)
        return out;
    const Matrix& d = a.differential(pd.m - 1);
    for (std::size_t u = 0; u < a.dim(pd.m - 1); ++u)
        if (!Element{pd.m, d.column(u)}.is_zero()) {
            out.ok = false;
            out.witness = a.labels(pd.m - 1)[u];
            return out;
        }
    return out;
}

Orientation orientability(const Algebra& a)
{
    if (a.field().characteristic() != 2)
        throw PreconditionError("orientability is read off the mod-2 Bockstein; the algebra is over F_" +
                                std::to_string(a.field().characteristic()));
    const PDStructure pd = require_pd(a);
    const int m = pd.m;
    Orientation out;
    if (a.differential(m - 1).is_zero())
        return out;
    out.orientable = false;

    const std::size_t n = a.dim(1), k = a.dim(m - 1);
    Matrix system(a.field(), k, n);
    Vector rhs(k, 0);
    for (std::size_t u = 0; u < k; ++u) {
        const Element eu = a.basis(m - 1, u);
        for (std::size_t j = 0; j < n; ++j)
            system.set(u, j, pd.epsilon(a.multiply(a.basis(1, j), eu)));
        rhs[u] = pd.epsilon(a.d(eu));
    }
    auto w = solve_linear(system, rhs);
    if (!w)
        throw PreconditionError("no degree-one class represents u -> epsilon(d u)");
    const Element w1 = a.point_element(*w);
    for (std::size_t u = 0; u < k; ++u) {
        const Element eu = a.basis(m - 1, u);
        if (!a.add(a.multiply(w1, eu), a.d(eu)).is_zero())
            throw PreconditionError("delta_{w1} does not vanish on " + a.labels(m - 1)[u]);
    }
    out.w1 = *w;
    return out;
}

SymmetryReport pd_symmetry_check(const Algebra& a, const EngineOptions& options)
{
    const PDCdgaCheck cdga = check_pd_cdga(a);
    if (!cdga.ok)
        throw PreconditionError("not a PD-cdga: d(" + *cdga.witness + ") != 0");
    const int m = a.top();
    const PrimeField& f = a.field();
    SymmetryReport out;
    const MCSet mc = mc_set(a, options);

    std::vector<std::vector<std::size_t>> profile;
    for (int i = 0; i <= m; ++i)
        profile.push_back(dimension_profile(a, i, mc.points, options));

    auto position = [&](const Point& x) -> std::optional<std::size_t> {
        auto it = std::lower_bound(mc.points.begin(), mc.points.end(), x);
        if (it == mc.points.end() || *it != x)
            return std::nullopt;
        return static_cast<std::size_t>(it - mc.points.begin());
    };

    std::size_t max_depth = 0;
    for (std::size_t k = 0; k < mc.points.size(); ++k) {
        auto neg = position(negate(mc.points[k], f));
        if (!neg) {
            out.witnesses.push_back("-" + format_point(mc.points[k]) + " is not in MC(A)");
            continue;
        }
        for (int i = 0; i <= m; ++i) {
            max_depth = std::max(max_depth, profile[i][k]);
            if (profile[i][k] != profile[m - i][*neg])
                out.witnesses.push_back("dim H^" + std::to_string(i) + " at " + format_point(mc.points[k]) + " is " +
                                        std::to_string(profile[i][k]) + " but dim H^" + std::to_string(m - i) +
                                        " at its negative is " + std::to_string(profile[m - i][*neg]));
        }
    }

    for (int i = 0; i <= m; ++i)
        for (std::size_t s = 1; s <= max_depth; ++s) {
            std::set<Point> image, target;
            for (std::size_t k = 0; k < mc.points.size(); ++k) {
                if (profile[i][k] >= s)
                    image.insert(negate(mc.points[k], f));
                if (profile[m - i][k] >= s)
                    target.insert(mc.points[k]);
            }
            if (image != target)
                out.witnesses.push_back("-R^" + std::to_string(i) + "_" + std::to_string(s) + " != R^" +
                                        std::to_string(m - i) + "_" + std::to_string(s));
        }

    for (std::size_t k = 0; k < mc.points.size(); ++k)
        if (profile[m][k] >= 1)
            out.top_variety.push_back(mc.points[k]);
    if (out.top_variety != std::vector<Point>{Point(a.dim(1), 0)})
        out.witnesses.push_back("R^" + std::to_string(m) + "_1 is not {0}");
    out.passed = out.witnesses.empty();
    return out;
}

}  // namespace aomoto

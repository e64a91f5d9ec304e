#include "aomoto/mc_set.hpp"

#include <algorithm>

#include "aomoto/errors.hpp"

namespace aomoto {

bool MCSet::contains(const Point& x) const { return std::binary_search(points.begin(), points.end(), x); }

std::uint64_t checked_point_count(std::uint32_t p, std::size_t n, std::uint64_t cap)
{
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (count > cap / p)
            throw ResourceError("enumerating F_" + std::to_string(p) + "^" + std::to_string(n) +
                                " exceeds the point cap of " + std::to_string(cap));
        count *= p;
    }
    if (count > cap)
        throw ResourceError("enumerating F_" + std::to_string(p) + "^" + std::to_string(n) +
                            " exceeds the point cap of " + std::to_string(cap));
    return count;
}

namespace {

// A complete algebra of top 1 has A^2 = 0, so every point is Maurer-Cartan.
void require_degree_two(const Algebra& a)
{
    if (a.top() < 2 && !a.complete())
        throw PreconditionError("the Maurer-Cartan equation lives in A^2, but the algebra is truncated at degree " +
                                std::to_string(a.top()));
}

// Quadratic form x -> x^2 + d(x), with precomputed coefficient vectors.
class DefectForm {
 public:
    explicit DefectForm(const Algebra& a) : p_(a.field().characteristic()), n_(a.dim(1)), c2_(a.dim(2))
    {
        const PrimeField& f = a.field();
        for (std::size_t i = 0; i < n_; ++i) {
            linear_.push_back(a.differential(1).column(i));
            for (std::size_t j = i; j < n_; ++j) {
                Vector v = a.product(1, i, 1, j);
                if (j != i)
                    f.axpy(v, 1, a.product(1, j, 1, i));
                quadratic_.push_back(std::move(v));
            }
        }
    }

    bool vanishes(const Point& x) const
    {
        std::vector<std::uint64_t> acc(c2_, 0);
        std::size_t k = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i] == 0) {
                k += n_ - i;
                continue;
            }
            for (std::size_t r = 0; r < c2_; ++r)
                acc[r] += static_cast<std::uint64_t>(x[i]) * linear_[i][r];
            for (std::size_t j = i; j < n_; ++j, ++k) {
                if (x[j] == 0)
                    continue;
                const std::uint64_t c = static_cast<std::uint64_t>(x[i]) * x[j] % p_;
                for (std::size_t r = 0; r < c2_; ++r)
                    acc[r] += c * quadratic_[k][r];
            }
        }
        return std::all_of(acc.begin(), acc.end(), [this](std::uint64_t v) { return v % p_ == 0; });
    }

 private:
    std::uint32_t p_;
    std::size_t n_, c2_;
    std::vector<Vector> linear_;
    std::vector<Vector> quadratic_;
};

}  // namespace

Element mc_defect(const Algebra& a, const Point& x)
{
    require_degree_two(a);
    if (a.top() < 2)
        return a.zero(2);
    const Element e = a.point_element(x);
    return a.add(a.multiply(e, e), a.d(e));
}

bool in_mc(const Algebra& a, const Point& x) { return mc_defect(a, x).is_zero(); }

MCSet mc_set(const Algebra& a, const EngineOptions& options)
{
    require_degree_two(a);
    const PrimeField& f = a.field();
    const std::uint32_t p = f.characteristic();
    MCSet mc{p, a.dim(1), {}};

    if (a.top() < 2) {
        const std::uint64_t count = checked_point_count(p, mc.n, options.enumeration_cap);
        for (std::uint64_t k = 0; k < count; ++k)
            mc.points.push_back(point_from_index(k, mc.n, p));
        return mc;
    }

    if (p != 2 && a.degree_one_squares_vanish()) {
        const std::vector<Vector> kernel = kernel_basis(a.differential(1));
        const std::uint64_t count = checked_point_count(p, kernel.size(), options.enumeration_cap);
        for (std::uint64_t k = 0; k < count; ++k) {
            const Point coeffs = point_from_index(k, kernel.size(), p);
            Point x(mc.n, 0);
            for (std::size_t b = 0; b < kernel.size(); ++b)
                f.axpy(x, coeffs[b], kernel[b]);
            mc.points.push_back(std::move(x));
        }
        std::sort(mc.points.begin(), mc.points.end());
        return mc;
    }

    const std::uint64_t count = checked_point_count(p, mc.n, options.enumeration_cap);
    const DefectForm form(a);
    auto blocks = map_blocks(count, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<Point> found;
        for (std::uint64_t k = begin; k < end; ++k) {
            Point x = point_from_index(k, mc.n, p);
            if (form.vanishes(x))
                found.push_back(std::move(x));
        }
        return found;
    });
    for (auto& block : blocks)
        for (auto& x : block)
            mc.points.push_back(std::move(x));
    return mc;
}

Point negate(const Point& x, const PrimeField& f)
{
    Point out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = f.neg(x[i]);
    return out;
}

InvolutionCheck mc_involution_check(const Algebra& a, const MCSet& mc)
{
    for (const Point& x : mc.points) {
        const Point y = negate(x, a.field());
        if (!mc.contains(y))
            return {false, x};
    }
    return {};
}

}  // namespace aomoto

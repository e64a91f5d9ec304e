#include "aomoto/complex.hpp"

#include "aomoto/errors.hpp"
#include "aomoto/mc_set.hpp"

namespace aomoto {

bool CochainComplex::squares_to_zero() const
{
    for (std::size_t i = 0; i + 1 < maps.size(); ++i)
        if (!(maps[i + 1] * maps[i]).is_zero())
            return false;
    return true;
}

std::size_t CochainComplex::betti(int q) const
{
    if (q < 0 || static_cast<std::size_t>(q) >= maps.size())
        throw PreconditionError("cohomology in degree " + std::to_string(q) + " is outside the complex");
    std::size_t b = dims[q] - rank(maps[q]);
    if (q > 0)
        b -= rank(maps[q - 1]);
    return b;
}

std::vector<std::size_t> CochainComplex::betti() const
{
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < maps.size(); ++q)
        out.push_back(betti(static_cast<int>(q)));
    return out;
}

AomotoFamily::AomotoFamily(const Algebra& a) : a_(a)
{
    for (int q = 0; a.reliable(q); ++q) {
        d_.push_back(a.differential(q));
        std::vector<Matrix> mult;
        for (std::size_t j = 0; j < a.dim(1); ++j)
            mult.push_back(a.left_multiplication(a.basis(1, j), q));
        mult_.push_back(std::move(mult));
    }
}

Matrix AomotoFamily::delta(const Point& x, int q) const
{
    if (q < 0 || q >= degrees())
        throw PreconditionError("delta^" + std::to_string(q) + " needs degree " + std::to_string(q + 1) +
                                ", beyond the truncation");
    Matrix m = d_[q];
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] == 0)
            continue;
        const Matrix& l = mult_[q][j];
        for (std::size_t r = 0; r < l.rows(); ++r)
            for (std::size_t c = 0; c < l.cols(); ++c)
                if (l(r, c))
                    m.add_to(r, c, a_.field().mul(x[j], l(r, c)));
    }
    return m;
}

std::size_t AomotoFamily::betti(const Point& x, int q) const
{
    if (!a_.reliable(q))
        throw PreconditionError("H^" + std::to_string(q) + " is outside the reliable range of an algebra truncated at " +
                                std::to_string(a_.top()) + (a_.complete() ? " (complete)" : " (incomplete)"));
    std::size_t b = a_.dim(q) - rank(delta(x, q));
    if (q > 0)
        b -= rank(delta(x, q - 1));
    return b;
}

CochainComplex AomotoFamily::complex(const Point& x) const
{
    CochainComplex c;
    for (int q = 0; q < degrees(); ++q) {
        c.dims.push_back(a_.dim(q));
        c.maps.push_back(delta(x, q));
    }
    c.dims.push_back(c.maps.empty() ? a_.dim(0) : c.maps.back().rows());
    return c;
}

CochainComplex aomoto_complex(const Algebra& a, const Point& x)
{
    if (!in_mc(a, x))
        throw PreconditionError("point " + format_point(x) + " is not in MC(A): a^2 + d(a) = " +
                                a.format(mc_defect(a, x)));
    CochainComplex c = AomotoFamily(a).complex(x);
    if (!c.squares_to_zero())
        throw PreconditionError("delta_a does not square to zero; the algebra is not a valid cdga");
    return c;
}

std::vector<std::size_t> aomoto_betti(const Algebra& a, const Point& x)
{
    return aomoto_complex(a, x).betti();
}

bool AffineForm::evaluate(const Point& x) const
{
    bool v = constant;
    for (std::size_t j = 0; j < x.size() && j < 64; ++j)
        if ((linear >> j) & 1U)
            v ^= (x[j] & 1U) != 0;
    return v;
}

std::string AffineForm::format() const
{
    std::string s;
    for (std::size_t j = 0; j < 64; ++j)
        if ((linear >> j) & 1U) {
            if (!s.empty())
                s += " + ";
            s += "x" + std::to_string(j + 1);
        }
    if (constant)
        s += s.empty() ? "1" : " + 1";
    return s.empty() ? "0" : s;
}

CochainComplex UniversalComplex::specialize(const Point& x) const
{
    if (x.size() != n)
        throw std::invalid_argument("point has the wrong number of coordinates");
    const PrimeField f2(2);
    CochainComplex c{dims, {}};
    for (std::size_t i = 0; i < maps.size(); ++i) {
        Matrix m(f2, dims[i + 1], dims[i]);
        for (std::size_t r = 0; r < dims[i + 1]; ++r)
            for (std::size_t col = 0; col < dims[i]; ++col)
                m.set(r, col, entry(static_cast<int>(i), r, col).evaluate(x) ? 1 : 0);
        c.maps.push_back(std::move(m));
    }
    return c;
}

UniversalComplex universal_complex(const Algebra& a)
{
    if (a.field().characteristic() != 2)
        throw PreconditionError("the universal complex is only built over F_2");
    if (a.top() < 2)
        throw PreconditionError("the universal complex needs A^2");
    const std::size_t n = a.dim(1);
    if (n > 64)
        throw PreconditionError("the universal complex supports at most 64 degree-one generators");
    for (std::size_t j = 0; j < n; ++j) {
        const Element e = a.basis(1, j);
        if (a.multiply(e, e) != a.d(e))
            throw PreconditionError("MC(A) is a proper subset of A^1 (" + a.labels(1)[j] +
                                    "^2 != d(" + a.labels(1)[j] + ")); the universal complex over its "
                                    "coordinate ring is not supported");
    }
    const AomotoFamily family(a);
    UniversalComplex u;
    u.n = n;
    const CochainComplex zero = family.complex(Point(n, 0));
    u.dims = zero.dims;
    for (int q = 0; q < family.degrees(); ++q) {
        const Matrix& d = zero.maps[q];
        std::vector<AffineForm> entries(d.rows() * d.cols());
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t c = 0; c < d.cols(); ++c)
                entries[r * d.cols() + c].constant = d(r, c) != 0;
        for (std::size_t j = 0; j < n; ++j) {
            Point x(n, 0);
            x[j] = 1;
            const Matrix l = family.delta(x, q) + d;  // over F_2 this isolates e_j * (.)
            for (std::size_t r = 0; r < l.rows(); ++r)
                for (std::size_t c = 0; c < l.cols(); ++c)
                    if (l(r, c))
                        entries[r * l.cols() + c].linear |= std::uint64_t{1} << j;
        }
        u.maps.push_back(std::move(entries));
    }
    return u;
}

}  // namespace aomoto

#include "aomoto/anf.hpp"

#include <algorithm>
#include <stdexcept>

#include "aomoto/errors.hpp"

namespace aomoto {

namespace {

std::uint64_t mask_of(const Point& x)
{
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] & 1U)
            m |= std::uint64_t{1} << j;
    return m;
}

}  // namespace

bool BooleanPolynomial::evaluate(const Point& x) const
{
    const std::uint64_t xm = mask_of(x);
    std::uint8_t v = 0;
    for (std::uint64_t m = 0; m < coeffs.size(); ++m)
        if (coeffs[m] && (m & xm) == m)
            v ^= 1;
    return v != 0;
}

std::string BooleanPolynomial::format() const
{
    std::vector<std::vector<std::size_t>> terms;
    for (std::uint64_t m = 0; m < coeffs.size(); ++m) {
        if (!coeffs[m])
            continue;
        std::vector<std::size_t> vars;
        for (std::size_t j = 0; j < n; ++j)
            if ((m >> j) & 1U)
                vars.push_back(j + 1);
        terms.push_back(std::move(vars));
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    if (terms.empty())
        return "0";
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty())
            s += " + ";
        if (t.empty()) {
            s += "1";
            continue;
        }
        for (std::size_t k = 0; k < t.size(); ++k)
            s += (k ? "*x" : "x") + std::to_string(t[k]);
    }
    return s;
}

BooleanPolynomial variety_equation(const std::vector<Point>& points, std::size_t n, std::uint32_t p)
{
    if (p != 2)
        throw PreconditionError("defining equations are only produced over F_2");
    if (n > kMaxAnfVariables)
        throw PreconditionError("too many variables for a truth-table interpolation");
    BooleanPolynomial f{n, std::vector<std::uint8_t>(std::size_t{1} << n, 1)};
    for (const Point& x : points) {
        if (x.size() != n)
            throw std::invalid_argument("point has the wrong number of coordinates");
        for (Scalar c : x)
            if (c > 1)
                throw std::invalid_argument("coordinate outside F_2");
        f.coeffs[mask_of(x)] = 0;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        for (std::size_t m = 0; m < f.coeffs.size(); ++m)
            if (m & bit)
                f.coeffs[m] ^= f.coeffs[m ^ bit];
    }
    return f;
}

std::vector<Point> zero_set(const BooleanPolynomial& f)
{
    std::vector<std::uint8_t> values = f.coeffs;
    for (std::size_t j = 0; j < f.n; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        for (std::size_t m = 0; m < values.size(); ++m)
            if (m & bit)
                values[m] ^= values[m ^ bit];
    }
    std::vector<Point> out;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << f.n); ++k) {
        const Point x = point_from_index(k, f.n, 2);
        if (!values[mask_of(x)])
            out.push_back(x);
    }
    return out;
}

}  // namespace aomoto

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aomoto/algebra.hpp"

namespace aomoto {

/// Multilinear polynomial over F_2 in x_1..x_n; coeffs[m] is the coefficient of
/// the monomial whose variables are the set bits of m (bit j is x_{j+1}).
struct BooleanPolynomial {
    std::size_t n = 0;
    std::vector<std::uint8_t> coeffs;

    bool evaluate(const Point& x) const;
    /// Terms ordered by degree, then lexicographically by variable index:
    /// "0", "1", "x1 + x1*x2", ...
    std::string format() const;
    friend bool operator==(const BooleanPolynomial&, const BooleanPolynomial&) = default;
};

inline constexpr std::size_t kMaxAnfVariables = 24;

/// The unique multilinear f with f(x) = 1 exactly when x is not in `points`,
/// obtained from the indicator by the binary Moebius transform.
/// Throws PreconditionError if p != 2 or n > kMaxAnfVariables.
BooleanPolynomial variety_equation(const std::vector<Point>& points, std::size_t n, std::uint32_t p = 2);

/// V(f) in lexicographic order.
std::vector<Point> zero_set(const BooleanPolynomial& f);

}  // namespace aomoto

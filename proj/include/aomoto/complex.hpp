#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aomoto/algebra.hpp"

namespace aomoto {

/// C^0 -> C^1 -> ... with maps[i]: C^i -> C^{i+1}.
struct CochainComplex {
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;

    bool squares_to_zero() const;
    /// dim H^q = dims[q] - rank maps[q] - rank maps[q-1], for q < maps.size().
    std::size_t betti(int q) const;
    std::vector<std::size_t> betti() const;
};

/// The maps delta_a = a * (.) + d, assembled as D^q + sum_j x_j L_j^q from
/// precomputed multiplication matrices L_j (by e_j) and the differential D.
class AomotoFamily {
 public:
    explicit AomotoFamily(const Algebra& a);

    const Algebra& algebra() const { return a_; }
    /// Number of maps delta^0 .. delta^{degrees()-1}; H^q is available for q < degrees().
    int degrees() const { return static_cast<int>(d_.size()); }

    Matrix delta(const Point& x, int q) const;
    /// Throws PreconditionError unless q is in the reliable range.
    std::size_t betti(const Point& x, int q) const;
    CochainComplex complex(const Point& x) const;

 private:
    const Algebra& a_;
    std::vector<Matrix> d_;
    std::vector<std::vector<Matrix>> mult_;  // mult_[q][j]: A^q -> A^{q+1}, u -> e_j u
};

/// Throws PreconditionError when x is not in MC(A).
CochainComplex aomoto_complex(const Algebra& a, const Point& x);

/// b_q(A, x) for every q in the reliable range.
std::vector<std::size_t> aomoto_betti(const Algebra& a, const Point& x);

/// c + sum_j bit_j x_{j+1} over F_2.
struct AffineForm {
    bool constant = false;
    std::uint64_t linear = 0;

    bool evaluate(const Point& x) const;
    std::string format() const;
    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// Aomoto-Bockstein complex over the Boolean ring Z_2[x_1..x_n]/(x_i^2 + x_i).
struct UniversalComplex {
    std::size_t n = 0;
    std::vector<std::size_t> dims;
    std::vector<std::vector<AffineForm>> maps;  // row-major, dims[i+1] x dims[i]

    const AffineForm& entry(int i, std::size_t r, std::size_t c) const { return maps[i][r * dims[i] + c]; }
    CochainComplex specialize(const Point& x) const;
};

/// Requires p = 2, c_1 <= 64 and MC(A) = A^1 (e_j^2 = d(e_j) for every j).
UniversalComplex universal_complex(const Algebra& a);

}  // namespace aomoto

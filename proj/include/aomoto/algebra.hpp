#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aomoto/field.hpp"
#include "aomoto/matrix.hpp"

namespace aomoto {

/// Homogeneous element: a degree together with coordinates in the chosen basis of that degree.
struct Element {
    int degree = 0;
    Vector coeffs;

    bool is_zero() const;
    friend bool operator==(const Element&, const Element&) = default;
};

/// Coordinates (x_1, ..., x_n) of a degree-one element sum x_j e_j.
using Point = Vector;

struct Violation {
    std::string kind;     // "unit", "commutativity", "associativity", "d^2", "leibniz", ...
    std::string witness;  // offending basis pair/triple, e.g. "(a, a)"
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(std::string_view kind, std::string_view witness = {}) const;
};

/// Connected graded-commutative algebra over F_p, truncated at degree `top`,
/// given by structure constants on a basis, with a degree +1 differential.
///
/// `complete` means A^i = 0 for every i > top. Otherwise degrees above `top`
/// exist but are not represented, and anything that would need them (products
/// landing above top, the differential out of degree top) is undefined.
class Algebra {
 public:
    Algebra(PrimeField field, int top, bool complete, std::vector<std::vector<std::string>> labels);

    const PrimeField& field() const { return field_; }
    int top() const { return top_; }
    bool complete() const { return complete_; }

    /// dim A^degree; zero for negative degrees and for degrees above top when complete.
    /// Throws PreconditionError for degrees above an incomplete truncation.
    std::size_t dim(int degree) const;
    std::vector<std::size_t> dims() const;

    /// H^q is computable from the stored data: q < top, or q <= top when complete.
    bool reliable(int q) const { return q >= 0 && (q < top_ || (q == top_ && complete_)); }

    const std::vector<std::string>& labels(int degree) const { return labels_.at(static_cast<std::size_t>(degree)); }
    std::optional<std::pair<int, std::size_t>> find_label(std::string_view name) const;

    /// Coordinates of u*v in degree i+j, for basis indices u in A^i and v in A^j, i + j <= top.
    const Vector& product(int i, std::size_t u, int j, std::size_t v) const;
    void set_product(int i, std::size_t u, int j, std::size_t v, Vector value);

    /// d: A^i -> A^{i+1} as a dim(i+1) x dim(i) matrix; defined for i < top, and i == top when complete.
    const Matrix& differential(int i) const;
    void set_differential(int i, Matrix m);
    bool has_zero_differential() const;

    Element zero(int degree) const;
    Element unit() const;
    Element basis(int degree, std::size_t index) const;
    Element point_element(const Point& x) const;

    Element add(const Element& u, const Element& v) const;
    Element scale(const Element& u, Scalar c) const;
    /// Throws PreconditionError when |u| + |v| > top.
    Element multiply(const Element& u, const Element& v) const;
    Element d(const Element& u) const;

    /// Left multiplication by `a` as a matrix A^degree -> A^{degree + |a|}.
    Matrix left_multiplication(const Element& a, int degree) const;

    /// True when e_j^2 = 0 for every degree-one basis element (so a^2 = 0 for all a in A^1).
    bool degree_one_squares_vanish() const;

    std::string format(const Element& u) const;

    /// Equality of all data including labels.
    friend bool operator==(const Algebra& a, const Algebra& b);
    friend bool same_structure(const Algebra& a, const Algebra& b);

 private:
    std::size_t slot(int i, std::size_t u, int j, std::size_t v) const;

    PrimeField field_;
    int top_;
    bool complete_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::size_t> dims_;
    // products_[i][j][u * dim(j) + v], for i + j <= top
    std::vector<std::vector<std::vector<Vector>>> products_;
    // differentials_[i] for 0 <= i < top, plus the zero map out of degree top when complete
    std::vector<Matrix> differentials_;
};

/// Same field, truncation, dimensions, structure constants and differential; labels ignored.
bool same_structure(const Algebra& a, const Algebra& b);

/// Checks unit, graded commutativity, associativity, d^2 = 0 and the Leibniz rule
/// on basis elements; each violation names its witness.
ValidationReport validate_cdga(const Algebra& a);

/// Copy of `a` with the differential replaced by zero.
Algebra with_zero_differential(const Algebra& a);

/// Degree <= new_top part of `a`. Complete if `a` is complete and has nothing above new_top.
Algebra truncate(const Algebra& a, int new_top);

/// Enumerates every point of F_p^n in lexicographic order (x_1 most significant).
/// Point index k corresponds to the base-p digits of k.
Point point_from_index(std::uint64_t index, std::size_t n, std::uint32_t p);
std::uint64_t index_from_point(const Point& x, std::uint32_t p);

std::string format_point(const Point& x);

}  // namespace aomoto

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aomoto/algebra.hpp"

namespace aomoto {

struct Generator {
    std::string name;
    int degree = 1;
};

/// Generators, relations and differential of a finitely presented CDGA.
///
/// Expressions use `+`, `-`, `*`, `^`, parentheses, integer constants and
/// generator names. For p = 2 the free algebra is the polynomial ring; for odd
/// p odd-degree generators anticommute and square to zero.
struct Presentation {
    PrimeField field{2};
    std::vector<Generator> generators;
    std::vector<std::string> relations;
    std::vector<std::pair<std::string, std::string>> differentials;  // generator -> d(generator)
    int top = 2;
};

/// Degree <= top part of the quotient by the ideal generated by the relations.
///
/// In each degree the quotient basis consists of the monomials that are not
/// leading terms of the ideal, where a leading term is the smallest monomial
/// (lexicographic, first generator most significant) of an echelon row. Basis
/// elements are listed largest first. The result is complete iff the quotient
/// vanishes in degrees top+1 .. top+max(generator degree).
///
/// Throws ParseError for malformed or inhomogeneous expressions and
/// PreconditionError when d does not preserve the ideal or d^2 != 0 on a generator.
Algebra present_algebra(const Presentation& p);

}  // namespace aomoto

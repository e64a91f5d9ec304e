#pragma once

#include <string>
#include <string_view>

#include "aomoto/algebra.hpp"
#include "aomoto/presentation.hpp"

namespace aomoto {

/// Reads either file mode:
///
///   cdga v1                      cdga-presentation v1
///   field 2                      field 2
///   top 2                        top 2
///   complete true                gens a1:1 a2:1
///   basis 0: 1                   rel a1^2
///   basis 1: a1 a2               rel a2^3
///   basis 2: a2^2                rel a1*a2
///   mul a2 a2 = a2^2             diff a2 = a2^2
///   diff a2 = a2^2
///
/// '#' starts a comment. In basis mode unlisted products and differentials are
/// zero, and a product listed in one order determines the other by the sign
/// rule. Throws ParseError naming the line; axioms are left to validate_cdga.
Algebra parse_algebra_file(std::string_view text);

/// The presentation part of a presentation-mode file (ParseError on basis-mode input).
Presentation parse_presentation(std::string_view text);

/// Canonical basis-mode text: every degree listed, products u*v for
/// (deg u, index u) <= (deg v, index v) with nonzero value, nonzero differentials.
std::string serialize_algebra(const Algebra& a);

/// Coordinates "1,0,1" -> point over F_p; ParseError on bad syntax or length.
Point parse_point(std::string_view text, const PrimeField& f, std::size_t n);

}  // namespace aomoto

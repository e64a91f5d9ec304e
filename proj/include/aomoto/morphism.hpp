#pragma once

#include <vector>

#include "aomoto/algebra.hpp"

namespace aomoto {

/// Degree-preserving linear map given by matrices maps[i]: source^i -> target^i
/// for 0 <= i <= min(source.top(), target.top()).
struct Morphism {
    Algebra source;
    Algebra target;
    std::vector<Matrix> maps;

    int top() const { return static_cast<int>(maps.size()) - 1; }
    Element apply(const Element& u) const;
};

/// Checks shapes, unit, multiplicativity on basis pairs and phi d = d phi;
/// witnesses are source basis pairs "(u, v)" or single elements.
ValidationReport validate_morphism(const Morphism& phi);

Morphism identity_morphism(const Algebra& a);

/// Inclusion of the left summand A -> A v B.
Morphism wedge_inclusion(const Algebra& a, const Algebra& b);

}  // namespace aomoto

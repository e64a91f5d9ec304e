#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aomoto/algebra.hpp"
#include "aomoto/morphism.hpp"

namespace aomoto {

/// Catalog entry: a name plus positional parameters, e.g. {"torus", {"3"}} or
/// {"sphere_bundle", {"twisted"}}, and an optional characteristic.
struct SpaceId {
    std::string name;
    std::vector<std::string> args;
    std::optional<std::uint32_t> p;
};

enum class Flavor {
    Natural,           // the Bockstein (or the example's own differential)
    ZeroDifferential,  // same algebra, d = 0
};

struct SpaceInfo {
    std::string syntax;       // e.g. "rp(n)"
    std::string ranges;       // e.g. "1 <= n <= 12"
    std::string fields;       // supported characteristics
    std::string description;
    bool complete = true;
    bool manifold = false;    // closed-manifold cohomology, expected to be PD
};

/// Validated algebra for a catalog id. ParseError for unknown names or parameters out of range.
Algebra build_space(const SpaceId& id, Flavor flavor = Flavor::Natural);

/// Stable listing of every catalog entry.
std::vector<SpaceInfo> list_spaces();

/// Canonical text form, e.g. "torus(3)", "conf_e3(p=5)".
std::string space_key(const SpaceId& id);

/// Parameter tuples exercised by the shipped example files and catalog-wide tests.
std::vector<SpaceId> catalog_instances();

bool is_manifold(const SpaceId& id);

/// Lambda(a) with zero differential, and its inclusion into dbab(p).
Algebra dbab_subalgebra(std::uint32_t p);
Morphism dbab_inclusion(std::uint32_t p);

}  // namespace aomoto

#pragma once

#include <string>
#include <vector>

#include "aomoto/algebra.hpp"
#include "aomoto/mc_set.hpp"
#include "aomoto/morphism.hpp"
#include "aomoto/parallel.hpp"

namespace aomoto {

/// dim H^q(A, delta_a) over MC(A), and the loci R^q_s for the requested depths.
struct VarietyReport {
    std::uint32_t p = 2;
    std::size_t n = 0;
    int q = 0;
    std::vector<Point> mc_points;
    std::vector<std::size_t> profile;  // parallel to mc_points
    std::vector<std::size_t> depths;
    std::vector<std::vector<Point>> varieties;  // parallel to depths
    std::vector<std::string> equations;         // parallel to depths when requested over F_2

    /// {a in MC(A) : dim H^q(A, delta_a) >= s}, for any s.
    std::vector<Point> points(std::size_t s) const;
};

/// Rejects the usual flavor (zero differential) when some degree-one square is nonzero.
void check_resonance_flavor(const Algebra& a);

/// dim H^q(A, delta_x) for each x, evaluated in blocks across workers.
std::vector<std::size_t> dimension_profile(const Algebra& a, int q, const std::vector<Point>& points,
                                           const EngineOptions& options = {});

/// Throws PreconditionError when q is outside the reliable range or the flavor guard fails.
VarietyReport resonance_variety(const Algebra& a, int q, const std::vector<std::size_t>& depths,
                                const EngineOptions& options = {}, bool with_equations = false);

std::vector<Point> resonance(const Algebra& a, int q, std::size_t s, const EngineOptions& options = {});

struct InducedCheck {
    bool applicable = false;
    std::string hypothesis;  // what was detected, or why it does not apply
    bool passed = false;
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;
};

/// For phi iso in degrees <= q and mono in degree q+1: checks on the actual
/// point sets that phi(MC(A)) embeds (q = 0) or is all of MC(B) (q >= 1),
/// that R^i_s is identified for i <= q when q >= 1, and that phi sends
/// R^{q+1}_s(A) into R^{q+1}_s(B), for every depth s.
InducedCheck induced_resonance_check(const Morphism& phi, int q, const EngineOptions& options = {});

}  // namespace aomoto

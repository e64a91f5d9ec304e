#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aomoto/algebra.hpp"
#include "aomoto/parallel.hpp"

namespace aomoto {

/// Poincare duality data: formal dimension m = top, orientation class omega
/// (the top basis vector) with epsilon(omega) = 1, and the dual basis of
/// A^{m-i} for every basis of A^i.
struct PDStructure {
    int m = 0;
    Element omega;
    std::vector<std::vector<Element>> duals;  // duals[i][u] in A^{m-i}

    Scalar epsilon(const Element& top_element) const;
};

struct PDDetection {
    std::optional<PDStructure> structure;
    std::string failure;  // empty on success
    int degree = -1;      // degree of a singular pairing, when that is the reason
};

/// Requires a complete algebra with c_m = 1; tests each pairing A^i x A^{m-i} -> F_p.
PDDetection detect_pd(const Algebra& a);

/// Like detect_pd but throws PreconditionError with the failure reason.
PDStructure require_pd(const Algebra& a);

/// The dual basis of A^{m-i} to the basis of A^i: epsilon(e_c * dual_u) = [c == u].
std::vector<Element> poincare_duals(const Algebra& a, const PDStructure& pd, int i);

/// One solution x of epsilon(u * x) = 1 (free variables zero). PreconditionError if u = 0.
Element poincare_dual(const Algebra& a, const PDStructure& pd, const Element& u);

struct PDCdgaCheck {
    bool ok = true;
    std::optional<std::string> witness;  // basis element of A^{m-1} with d != 0
};

/// d(A^{m-1}) = 0. Throws PreconditionError if the algebra is not PD.
PDCdgaCheck check_pd_cdga(const Algebra& a);

struct Orientation {
    bool orientable = true;
    std::optional<Point> w1;
};

/// p = 2 and PD required. Non-orientable iff the differential is nonzero on
/// A^{m-1}; then w1 is the class with epsilon(w1 * u) = epsilon(d u) on A^{m-1}.
Orientation orientability(const Algebra& a);

struct SymmetryReport {
    bool passed = true;
    std::vector<std::string> witnesses;
    std::vector<Point> top_variety;  // R^m_1
};

/// For a PD-CDGA: dim H^i(delta_a) = dim H^{m-i}(delta_{-a}) on MC(A), negation
/// carries R^i_s onto R^{m-i}_s, and R^m_1 = {0}.
SymmetryReport pd_symmetry_check(const Algebra& a, const EngineOptions& options = {});

}  // namespace aomoto

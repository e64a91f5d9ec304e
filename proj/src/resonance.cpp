#include "aomoto/resonance.hpp"

#include <algorithm>
#include <map>

#include "aomoto/anf.hpp"
#include "aomoto/complex.hpp"
#include "aomoto/errors.hpp"

namespace aomoto {

std::vector<Point> VarietyReport::points(std::size_t s) const
{
    std::vector<Point> out;
    for (std::size_t k = 0; k < mc_points.size(); ++k)
        if (profile[k] >= s)
            out.push_back(mc_points[k]);
    return out;
}

void check_resonance_flavor(const Algebra& a)
{
    if (a.has_zero_differential() && !a.degree_one_squares_vanish())
        throw PreconditionError(
            "resonance of a zero-differential algebra needs a^2 = 0 for all a in A^1; "
            "use the Bockstein differential instead");
}

std::vector<std::size_t> dimension_profile(const Algebra& a, int q, const std::vector<Point>& points,
                                           const EngineOptions& options)
{
    if (!a.reliable(q))
        throw PreconditionError("H^" + std::to_string(q) + " is outside the reliable range (top " +
                                std::to_string(a.top()) + (a.complete() ? ", complete)" : ", incomplete)"));
    const AomotoFamily family(a);
    auto blocks = map_blocks(points.size(), options.workers, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::size_t> dims;
        for (std::uint64_t k = begin; k < end; ++k)
            dims.push_back(family.betti(points[k], q));
        return dims;
    });
    std::vector<std::size_t> out;
    for (const auto& b : blocks)
        out.insert(out.end(), b.begin(), b.end());
    return out;
}

VarietyReport resonance_variety(const Algebra& a, int q, const std::vector<std::size_t>& depths,
                                const EngineOptions& options, bool with_equations)
{
    if (!a.reliable(q))
        throw PreconditionError("H^" + std::to_string(q) + " is outside the reliable range (top " +
                                std::to_string(a.top()) + (a.complete() ? ", complete)" : ", incomplete)"));
    check_resonance_flavor(a);
    VarietyReport report;
    report.p = a.field().characteristic();
    report.n = a.dim(1);
    report.q = q;
    report.mc_points = mc_set(a, options).points;
    report.profile = dimension_profile(a, q, report.mc_points, options);
    report.depths = depths;
    for (std::size_t s : depths) {
        report.varieties.push_back(report.points(s));
        if (with_equations && report.p == 2)
            report.equations.push_back(variety_equation(report.varieties.back(), report.n).format());
    }
    return report;
}

std::vector<Point> resonance(const Algebra& a, int q, std::size_t s, const EngineOptions& options)
{
    return resonance_variety(a, q, {s}, options).varieties.front();
}

namespace {

bool is_iso(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.cols(); }
bool is_mono(const Matrix& m) { return rank(m) == m.cols(); }

}  // namespace

InducedCheck induced_resonance_check(const Morphism& phi, int q, const EngineOptions& options)
{
    InducedCheck out;
    const Algebra& s = phi.source;
    const Algebra& t = phi.target;
    if (q < 0 || q + 1 > phi.top()) {
        out.hypothesis = "not applicable: the morphism is not defined in degree " + std::to_string(q + 1);
        return out;
    }
    for (int i = 0; i <= q; ++i)
        if (!is_iso(phi.maps[i])) {
            out.hypothesis = "not applicable: phi^" + std::to_string(i) + " is not an isomorphism";
            return out;
        }
    if (!is_mono(phi.maps[q + 1])) {
        out.hypothesis = "not applicable: phi^" + std::to_string(q + 1) + " is not injective";
        return out;
    }
    if (!s.reliable(q + 1) || !t.reliable(q + 1)) {
        out.hypothesis = "not applicable: H^" + std::to_string(q + 1) + " is outside the reliable range";
        return out;
    }
    out.applicable = true;
    out.hypothesis = "phi^i iso for i <= " + std::to_string(q) + ", phi^" + std::to_string(q + 1) + " mono";

    const MCSet mc_s = mc_set(s, options);
    const MCSet mc_t = mc_set(t, options);
    std::vector<Point> image;
    for (const Point& x : mc_s.points) {
        Point y = phi.maps[1].apply(x);
        if (!mc_t.contains(y))
            out.witnesses.push_back("MC: image of " + format_point(x) + " is not in MC(B)");
        image.push_back(std::move(y));
    }
    std::vector<Point> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        out.witnesses.push_back("MC: the induced map is not injective");
    if (q >= 1 && sorted.size() != mc_t.points.size())
        out.witnesses.push_back("MC: the induced map is not onto MC(B)");

    std::map<Point, std::size_t> target_index;
    for (std::size_t k = 0; k < mc_t.points.size(); ++k)
        target_index.emplace(mc_t.points[k], k);

    const int first = q == 0 ? 1 : 0;
    for (int i = first; i <= q + 1; ++i) {
        const std::vector<std::size_t> ps = dimension_profile(s, i, mc_s.points, options);
        const std::vector<std::size_t> pt = dimension_profile(t, i, mc_t.points, options);
        const bool equality = i <= q;
        std::size_t max_depth = 0;
        for (std::size_t d : ps)
            max_depth = std::max(max_depth, d);
        for (std::size_t d : pt)
            max_depth = std::max(max_depth, d);
        for (std::size_t depth = 1; depth <= max_depth; ++depth) {
            std::size_t in_source = 0, in_target = 0;
            for (std::size_t k = 0; k < mc_s.points.size(); ++k) {
                auto it = target_index.find(image[k]);
                if (it == target_index.end())
                    continue;
                const bool a_in = ps[k] >= depth;
                const bool b_in = pt[it->second] >= depth;
                in_source += a_in;
                const std::string where = "R^" + std::to_string(i) + "_" + std::to_string(depth) + ": " +
                                          format_point(mc_s.points[k]);
                if (a_in && !b_in)
                    out.witnesses.push_back(where + " maps outside the target variety");
                if (equality && b_in && !a_in)
                    out.witnesses.push_back(where + " is not in the source variety but its image is");
            }
            for (std::size_t d : pt)
                in_target += d >= depth;
            if (!equality)
                out.notes.push_back("R^" + std::to_string(i) + "_" + std::to_string(depth) + ": " +
                                    std::to_string(in_source) + " source points, " + std::to_string(in_target) +
                                    " target points" + (in_source < in_target ? " (strict)" : ""));
        }
    }
    out.passed = out.witnesses.empty();
    return out;
}

}  // namespace aomoto

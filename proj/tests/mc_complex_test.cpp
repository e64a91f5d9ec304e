#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "aomoto/complex.hpp"
#include "aomoto/constructions.hpp"
#include "aomoto/errors.hpp"
#include "aomoto/mc_set.hpp"
#include "aomoto/spaces.hpp"
#include "oracle.hpp"

using namespace aomoto;

namespace {

Algebra space(const std::string& name, std::vector<std::string> args = {}, std::optional<std::uint32_t> p = {})
{
    return build_space(SpaceId{name, std::move(args), p});
}

std::vector<Point> to_points(const std::vector<oracle::Pt>& pts) { return {pts.begin(), pts.end()}; }

std::vector<std::pair<SpaceId, SpaceId>> catalog_pairs()
{
    return {
        {{"toy", {}, {}}, {"rp", {"2"}, {}}},
        {{"surface_nonor", {"2"}, {}}, {"rp", {"3"}, {}}},
        {{"dbab", {}, {}}, {"torus", {"2"}, 3}},
        {{"lens41", {}, {}}, {"sphere_bundle", {"twisted"}, {}}},
        {{"mca_quad", {}, {}}, {"toy", {}, {}}},
        {{"dbab", {}, {}}, {"surface_or", {"1"}, 3}},
        {{"surface_nonor", {"3"}, {}}, {"susp_wedge", {}, {}}},
    };
}

}  // namespace

// ---- MC sets ------------------------------------------------------------

TEST(MCSet, KnownExamples)
{
    EXPECT_EQ(mc_set(space("toy")).points.size(), 4U);
    EXPECT_EQ(mc_set(space("rp", {"3"})).points, (std::vector<Point>{{0}, {1}}));
    EXPECT_EQ(mc_set(space("dbab")).points, (std::vector<Point>{{0, 0}, {1, 0}, {2, 0}}));
}

TEST(MCSet, MatchesBruteForceOnEveryCatalogInstance)
{
    for (const SpaceId& id : catalog_instances()) {
        const Algebra a = build_space(id);
        if (a.top() < 2 || std::pow(a.field().characteristic(), a.dim(1)) > 5000)
            continue;
        Algebra complete_part = a.complete() ? a : truncate(a, 2);
        // the oracle only reads degrees <= 2 here
        oracle::Model m = oracle::from_algebra(complete_part);
        m.dims.resize(3);
        EXPECT_EQ(mc_set(a).points, to_points(oracle::mc(m))) << space_key(id);
    }
}

TEST(MCSet, AllOfDegreeOneWhenSquaresAreTheDifferential)
{
    for (int g = 1; g <= 10; ++g) {
        const Algebra a = space("surface_nonor", {std::to_string(g)});
        EXPECT_EQ(mc_set(a).points.size(), std::size_t{1} << g) << "g=" << g;
    }
    for (int n = 2; n <= 8; ++n)
        EXPECT_EQ(mc_set(space("rp", {std::to_string(n)})).points.size(), 2U);
}

TEST(MCSet, ContainsZeroAndIsSorted)
{
    for (const SpaceId& id : catalog_instances()) {
        const Algebra a = build_space(id);
        if (a.top() < 2)
            continue;
        const MCSet mc = mc_set(a);
        ASSERT_FALSE(mc.points.empty()) << space_key(id);
        EXPECT_TRUE(mc.contains(Point(a.dim(1), 0))) << space_key(id);
        EXPECT_TRUE(std::is_sorted(mc.points.begin(), mc.points.end())) << space_key(id);
        EXPECT_TRUE(mc_involution_check(a, mc).closed) << space_key(id);
    }
}

TEST(MCSet, InvolutionExamples)
{
    const Algebra d = space("dbab");
    EXPECT_TRUE(mc_involution_check(d, mc_set(d)).closed);
    const Algebra m2 = space("surface_or", {"2"}, 3);
    const MCSet mc = mc_set(m2);
    EXPECT_EQ(mc.points.size(), 81U);
    EXPECT_TRUE(mc_involution_check(m2, mc).closed);
    EXPECT_EQ(negate({1, 2, 0}, PrimeField(3)), (Point{2, 1, 0}));
}

TEST(MCSet, ResourceCap)
{
    const Algebra t = space("torus", {"8"});
    EXPECT_THROW(mc_set(t, EngineOptions{1, 100}), ResourceError);
    EXPECT_EQ(checked_point_count(3, 4, 81), 81U);
    EXPECT_THROW(checked_point_count(3, 5, 81), ResourceError);
    EXPECT_THROW(checked_point_count(2, 64, ~std::uint64_t{0} >> 1), ResourceError);
}

TEST(MCSet, NeedsDegreeTwo)
{
    EXPECT_THROW(mc_set(Algebra(PrimeField(2), 1, false, {{"1"}, {"a"}})), PreconditionError);
    // complete at top 1: A^2 = 0 and every point qualifies
    EXPECT_EQ(mc_set(build_space({"torus", {"1"}, 3})).points, (std::vector<Point>{{0}, {1}, {2}}));
}

TEST(MCSet, ProductAndCoproduct)
{
    for (const auto& [x, y] : catalog_pairs()) {
        const Algebra a = build_space(x), b = build_space(y);
        const MCSet ma = mc_set(a), mb = mc_set(b);
        std::vector<Point> product;
        for (const Point& u : ma.points)
            for (const Point& v : mb.points) {
                Point w = u;
                w.insert(w.end(), v.begin(), v.end());
                product.push_back(w);
            }
        EXPECT_EQ(mc_set(tensor_product(a, b)).points, product) << space_key(x) << " (x) " << space_key(y);
        EXPECT_EQ(mc_set(wedge_sum(a, b)).points, product) << space_key(x) << " v " << space_key(y);
    }
}

TEST(MCSet, SameResultForAnyWorkerCount)
{
    for (const SpaceId& id : {SpaceId{"surface_or", {"3"}, 3}, SpaceId{"toy", {}, {}}, SpaceId{"mca_quad", {}, {}},
                              SpaceId{"torus", {"6"}, {}}, SpaceId{"surface_nonor", {"9"}, {}}}) {
        const Algebra a = build_space(id);
        const MCSet one = mc_set(a, {1, 1U << 24});
        for (unsigned w : {2U, 3U, 8U})
            EXPECT_EQ(mc_set(a, {w, 1U << 24}).points, one.points) << space_key(id) << " workers " << w;
    }
}

TEST(MapBlocks, ContiguousBlocksInOrder)
{
    for (unsigned w : {1U, 2U, 8U, 50U}) {
        const auto blocks = map_blocks(37, w, [](std::uint64_t b, std::uint64_t e) {
            std::vector<std::uint64_t> v;
            for (auto k = b; k < e; ++k)
                v.push_back(k);
            return v;
        });
        std::vector<std::uint64_t> flat;
        for (const auto& b : blocks)
            flat.insert(flat.end(), b.begin(), b.end());
        ASSERT_EQ(flat.size(), 37U);
        for (std::uint64_t k = 0; k < 37; ++k)
            EXPECT_EQ(flat[k], k);
    }
    EXPECT_THROW(map_blocks(10, 4,
                            [](std::uint64_t b, std::uint64_t) -> int {
                                if (b > 0)
                                    throw ResourceError("boom");
                                return 0;
                            }),
                 ResourceError);
}

// ---- Aomoto complexes ---------------------------------------------------

TEST(AomotoComplex, AtZeroIsTheDifferential)
{
    const Algebra a = space("rp", {"5"});
    const CochainComplex c = aomoto_complex(a, {0});
    for (int i = 0; i < 5; ++i)
        EXPECT_EQ(c.maps[i], a.differential(i)) << i;
}

TEST(AomotoComplex, ToyAtOneOne)
{
    const CochainComplex c = aomoto_complex(space("toy"), {1, 1});
    EXPECT_EQ(c.maps[0], Matrix(PrimeField(2), 2, 1, {1, 1}));
    EXPECT_EQ(c.maps[1], Matrix(PrimeField(2), 1, 2, {0, 0}));
    EXPECT_TRUE(c.squares_to_zero());
}

TEST(AomotoComplex, InfiniteProjectiveSpaceAlternates)
{
    const Algebra a = space("rp_inf", {"6"});
    const CochainComplex c = aomoto_complex(a, {1});
    for (int i = 0; i < 6; ++i)
        EXPECT_EQ(c.maps[i](0, 0), i % 2 == 0 ? 1U : 0U) << "delta^" << i;
}

TEST(AomotoComplex, RejectsPointsOutsideMC)
{
    EXPECT_THROW(aomoto_complex(space("mca_quad"), {1, 0}), PreconditionError);
    EXPECT_THROW(aomoto_complex(space("dbab"), {0, 1}), PreconditionError);
}

TEST(AomotoComplex, SquaresToZeroOnEveryMCPoint)
{
    for (const SpaceId& id : catalog_instances()) {
        const Algebra a = build_space(id);
        if (a.top() < 2 || std::pow(a.field().characteristic(), a.dim(1)) > 300)
            continue;
        for (const Point& x : mc_set(a).points)
            ASSERT_TRUE(aomoto_complex(a, x).squares_to_zero()) << space_key(id) << " " << format_point(x);
    }
}

TEST(AomotoBetti, Examples)
{
    for (int n = 2; n <= 8; ++n) {
        const auto b = aomoto_betti(space("rp", {std::to_string(n)}), {0});
        ASSERT_EQ(b.size(), static_cast<std::size_t>(n + 1));
        for (int q = 1; q < n; ++q)
            EXPECT_EQ(b[q], 0U) << "RP^" << n << " BH^" << q;
    }
    const Algebra m2 = space("surface_or", {"2"});
    for (const Point& x : mc_set(m2).points)
        if (x != Point(4, 0))
            EXPECT_EQ(aomoto_betti(m2, x)[1], 2U);
    EXPECT_EQ(aomoto_betti(space("toy"), {0, 0})[1], 1U);
    // reliable range of a truncation stops below top
    EXPECT_EQ(aomoto_betti(space("rp_inf", {"6"}), {0}).size(), 6U);
}

TEST(AomotoBetti, MatchesOracleOnCatalog)
{
    for (const SpaceId& id : catalog_instances()) {
        const Algebra a = build_space(id);
        if (!a.complete() || a.top() < 2 || std::pow(a.field().characteristic(), a.dim(1)) > 300)
            continue;
        const oracle::Model m = oracle::from_algebra(a);
        for (const Point& x : mc_set(a).points) {
            const auto b = aomoto_betti(a, x);
            for (int q = 0; q <= a.top(); ++q)
                ASSERT_EQ(static_cast<int>(b[q]), oracle::betti(m, x, q)) << space_key(id) << " q=" << q;
        }
    }
}

// ---- universal complex --------------------------------------------------

TEST(UniversalComplex, ToyEntries)
{
    const UniversalComplex u = universal_complex(space("toy"));
    // the trailing zero is the target of the map out of the top degree
    ASSERT_EQ(u.dims, (std::vector<std::size_t>{1, 2, 1, 0}));
    EXPECT_EQ(u.entry(0, 0, 0).format(), "x1");
    EXPECT_EQ(u.entry(0, 1, 0).format(), "x2");
    EXPECT_EQ(u.entry(1, 0, 0).format(), "0");
    EXPECT_EQ(u.entry(1, 0, 1).format(), "x2 + 1");
}

TEST(UniversalComplex, InfiniteProjectiveSpace)
{
    const UniversalComplex u = universal_complex(space("rp_inf", {"8"}));
    for (int i = 0; i < 8; ++i)
        EXPECT_EQ(u.entry(i, 0, 0).format(), i % 2 == 0 ? "x1" : "x1 + 1") << i;
}

TEST(UniversalComplex, ZeroDifferentialHasLinearEntries)
{
    for (const char* g : {"1", "2", "3"}) {
        const UniversalComplex u = universal_complex(with_zero_differential(space("surface_or", {g})));
        for (const auto& m : u.maps)
            for (const AffineForm& f : m)
                EXPECT_FALSE(f.constant);
    }
}

TEST(UniversalComplex, Rejections)
{
    EXPECT_THROW(universal_complex(space("dbab")), PreconditionError);
    EXPECT_THROW(universal_complex(space("mca_quad")), PreconditionError);
}

TEST(UniversalComplex, SpecializationMatchesDirectComplex)
{
    std::vector<Algebra> algebras;
    for (const SpaceId& id : catalog_instances()) {
        if (id.p.value_or(2) != 2)
            continue;
        try {
            const Algebra a = build_space(id);
            if (a.top() >= 2 && a.dim(1) <= 12 && mc_set(a).points.size() == std::size_t{1} << a.dim(1))
                algebras.push_back(a);
        } catch (const PreconditionError&) {
        }
    }
    ASSERT_GE(algebras.size(), 10U);
    std::mt19937 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const Algebra& a = algebras[trial % algebras.size()];
        Point x(a.dim(1));
        for (Scalar& c : x)
            c = rng() & 1;
        const UniversalComplex u = universal_complex(a);
        const CochainComplex direct = aomoto_complex(a, x);
        const CochainComplex special = u.specialize(x);
        ASSERT_EQ(special.maps.size(), direct.maps.size());
        for (std::size_t i = 0; i < direct.maps.size(); ++i)
            ASSERT_EQ(special.maps[i], direct.maps[i]) << "trial " << trial;
    }
}

#include <gtest/gtest.h>

#include <chrono>
#include <numeric>
#include <random>

#include "aomoto/field.hpp"
#include "aomoto/matrix.hpp"
#include "oracle.hpp"

using namespace aomoto;

namespace {

Matrix random_matrix(std::mt19937& rng, PrimeField f, std::size_t r, std::size_t c, double density = 0.5)
{
    Matrix m(f, r, c);
    std::uniform_int_distribution<std::uint32_t> value(1, f.characteristic() - 1);
    std::bernoulli_distribution nonzero(density);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (nonzero(rng))
                m.set(i, j, value(rng));
    return m;
}

int naive_rank(const Matrix& m)
{
    std::vector<oracle::Vec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Vector r = m.row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    return oracle::rank_of(rows, static_cast<int>(m.field().characteristic()));
}

// Determinant by permutation expansion (Leibniz formula), for tiny minors.
long long permutation_determinant(const std::vector<std::vector<long long>>& a, int p)
{
    const int n = static_cast<int>(a.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        long long term = inversions % 2 ? -1 : 1;
        for (int i = 0; i < n; ++i)
            term = term * a[i][perm[i]] % p;
        total = (total + term) % p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return ((total % p) + p) % p;
}

bool all_minors_vanish(const Matrix& m, std::size_t r)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    if (r > rows || r > cols)
        return true;
    const int p = static_cast<int>(m.field().characteristic());
    for (unsigned rs = 0; rs < (1U << rows); ++rs) {
        if (static_cast<std::size_t>(__builtin_popcount(rs)) != r)
            continue;
        for (unsigned cs = 0; cs < (1U << cols); ++cs) {
            if (static_cast<std::size_t>(__builtin_popcount(cs)) != r)
                continue;
            std::vector<std::vector<long long>> sub;
            for (std::size_t i = 0; i < rows; ++i) {
                if (!(rs >> i & 1))
                    continue;
                sub.emplace_back();
                for (std::size_t j = 0; j < cols; ++j)
                    if (cs >> j & 1)
                        sub.back().push_back(m(i, j));
            }
            if (permutation_determinant(sub, p) != 0)
                return false;
        }
    }
    return true;
}

}  // namespace

TEST(PrimeField, RejectsCompositesAndRange)
{
    EXPECT_THROW(PrimeField(1), std::invalid_argument);
    EXPECT_THROW(PrimeField(4), std::invalid_argument);
    EXPECT_THROW(PrimeField(257), std::invalid_argument);
    EXPECT_NO_THROW(PrimeField(251));
}

TEST(PrimeField, InversesAndSigns)
{
    for (std::uint32_t p : {2U, 3U, 5U, 7U, 251U}) {
        const PrimeField f(p);
        for (Scalar a = 1; a < p; ++a)
            EXPECT_EQ(f.mul(a, f.inv(a)), 1U) << "p=" << p << " a=" << a;
        EXPECT_EQ(f.sign(3), f.neg(1));
        EXPECT_EQ(f.sign(4), 1U);
        EXPECT_EQ(f.reduce(-1), p - 1);
    }
}

TEST(Rank, TrivialCases)
{
    const PrimeField f2(2), f3(3);
    EXPECT_EQ(rank(Matrix(f2, 3, 4)), 0U);
    EXPECT_EQ(rank(Matrix(f3, 3, 4)), 0U);
    for (std::size_t n : {1U, 5U, 70U})
        EXPECT_EQ(rank(Matrix::identity(f2, n)), n);
    EXPECT_EQ(rank(Matrix::identity(f3, 9)), 9U);
    EXPECT_EQ(rank(Matrix(f2, 0, 5)), 0U);
    // toy delta^1 at (0,1): the 1x2 zero map
    EXPECT_EQ(rank(Matrix(f2, 1, 2, {0, 0})), 0U);
}

TEST(Rank, AgreesWithNaiveEliminationOverF2)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> size(1, 64);
    for (int trial = 0; trial < 150; ++trial) {
        const double density = trial % 3 == 0 ? 0.1 : 0.5;
        const Matrix m = random_matrix(rng, PrimeField(2), size(rng), size(rng), density);
        ASSERT_EQ(static_cast<int>(rank(m)), naive_rank(m)) << "trial " << trial;
    }
}

TEST(Rank, AgreesWithNaiveEliminationOverOddPrimes)
{
    std::mt19937 rng(12);
    std::uniform_int_distribution<std::size_t> size(1, 20);
    for (std::uint32_t p : {3U, 5U, 7U, 251U})
        for (int trial = 0; trial < 40; ++trial) {
            const Matrix m = random_matrix(rng, PrimeField(p), size(rng), size(rng), 0.4);
            ASSERT_EQ(static_cast<int>(rank(m)), naive_rank(m)) << "p=" << p << " trial " << trial;
        }
}

TEST(Rank, InvariantUnderRowAndColumnPermutation)
{
    std::mt19937 rng(13);
    for (std::uint32_t p : {2U, 3U})
        for (int trial = 0; trial < 50; ++trial) {
            const PrimeField f(p);
            const Matrix m = random_matrix(rng, f, 12, 9, 0.3);
            std::vector<std::size_t> rp(12), cp(9);
            std::iota(rp.begin(), rp.end(), 0);
            std::iota(cp.begin(), cp.end(), 0);
            std::shuffle(rp.begin(), rp.end(), rng);
            std::shuffle(cp.begin(), cp.end(), rng);
            Matrix shuffled(f, 12, 9);
            for (std::size_t i = 0; i < 12; ++i)
                for (std::size_t j = 0; j < 9; ++j)
                    shuffled.set(rp[i], cp[j], m(i, j));
            ASSERT_EQ(rank(m), rank(shuffled));
        }
}

TEST(Rank, MinorsVanishExactlyBelowRank)
{
    std::mt19937 rng(14);
    std::uniform_int_distribution<std::size_t> size(1, 4);
    std::uniform_int_distribution<int> prime_pick(0, 2);
    const std::uint32_t primes[] = {2, 3, 5};
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix m = random_matrix(rng, PrimeField(primes[prime_pick(rng)]), size(rng), size(rng), 0.5);
        const std::size_t r = rank(m);
        for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k)
            ASSERT_EQ(all_minors_vanish(m, k), k > r) << "trial " << trial << " k=" << k;
    }
}

TEST(KernelBasis, Examples)
{
    const PrimeField f(2);
    EXPECT_TRUE(kernel_basis(Matrix::identity(f, 4)).empty());
    const auto zero = kernel_basis(Matrix(f, 2, 2));
    ASSERT_EQ(zero.size(), 2U);
    EXPECT_EQ(zero[0], (Vector{1, 0}));
    EXPECT_EQ(zero[1], (Vector{0, 1}));
    // Klein bottle delta^1 at a1 + a2: (x1 y1 + x2 y2 + y1 + y2) w vanishes identically
    const auto klein = kernel_basis(Matrix(f, 1, 2, {0, 0}));
    ASSERT_EQ(klein.size(), 2U);
    EXPECT_EQ(klein[0], (Vector{1, 0}));
    EXPECT_EQ(klein[1], (Vector{0, 1}));
}

TEST(KernelBasis, RankNullityAndAnnihilation)
{
    std::mt19937 rng(15);
    std::uniform_int_distribution<std::size_t> size(1, 16);
    for (std::uint32_t p : {2U, 3U, 7U})
        for (int trial = 0; trial < 60; ++trial) {
            const Matrix m = random_matrix(rng, PrimeField(p), size(rng), size(rng), 0.3);
            const auto ker = kernel_basis(m);
            ASSERT_EQ(rank(m) + ker.size(), m.cols());
            for (const Vector& v : ker)
                for (Scalar x : m.apply(v))
                    ASSERT_EQ(x, 0U);
            // Reduced echelon form: each basis vector has a 1 at its own free column and
            // zero at the other free columns.
            Matrix stacked(PrimeField(p), m.cols(), ker.size());
            for (std::size_t k = 0; k < ker.size(); ++k)
                stacked.set_column(k, ker[k]);
            ASSERT_EQ(rank(stacked), ker.size());
        }
}

TEST(SolveLinear, Examples)
{
    const PrimeField f(3);
    const Vector v{2, 1, 0};
    EXPECT_EQ(solve_linear(Matrix::identity(f, 3), v), v);
    EXPECT_FALSE(solve_linear(Matrix(f, 3, 3), v).has_value());
    // RP^3 degree-one pairing: eps(a * a^2) = 1
    EXPECT_EQ(solve_linear(Matrix(PrimeField(2), 1, 1, {1}), Vector{1}), (Vector{1}));
}

TEST(SolveLinear, SolutionsSatisfyTheSystem)
{
    std::mt19937 rng(16);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    for (std::uint32_t p : {2U, 5U})
        for (int trial = 0; trial < 80; ++trial) {
            const PrimeField f(p);
            const Matrix m = random_matrix(rng, f, size(rng), size(rng), 0.4);
            Vector v(m.rows());
            std::uniform_int_distribution<Scalar> value(0, p - 1);
            for (Scalar& x : v)
                x = value(rng);
            const auto x = solve_linear(m, v);
            if (x)
                ASSERT_EQ(m.apply(*x), v);
            else  // inconsistent: appending v raises the rank
            {
                Matrix aug(f, m.rows(), m.cols() + 1);
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    for (std::size_t j = 0; j < m.cols(); ++j)
                        aug.set(i, j, m(i, j));
                    aug.set(i, m.cols(), v[i]);
                }
                ASSERT_EQ(rank(aug), rank(m) + 1);
            }
        }
}

TEST(Matrix, ProductTransposeAndBlockSum)
{
    const PrimeField f(5);
    const Matrix a(f, 2, 3, {1, 2, 3, 4, 0, 1});
    const Matrix b(f, 3, 1, {1, 1, 1});
    EXPECT_EQ(a * b, Matrix(f, 2, 1, {1, 0}));
    EXPECT_EQ(a.transpose().transpose(), a);
    const Matrix s = Matrix::block_sum(a, b);
    EXPECT_EQ(s.rows(), 5U);
    EXPECT_EQ(s.cols(), 4U);
    EXPECT_EQ(rank(s), rank(a) + rank(b));
    EXPECT_EQ(Matrix(f, 1, 1, {-1})(0, 0), 4U);
}

TEST(Performance, Rank256OverF2UnderOneMillisecond)
{
    std::mt19937 rng(17);
    std::vector<Matrix> inputs;
    for (int k = 0; k < 20; ++k)
        inputs.push_back(random_matrix(rng, PrimeField(2), 256, 256));
    std::size_t total = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const Matrix& m : inputs)
        total += rank(m);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() / inputs.size();
    EXPECT_GT(total, 0U);
    EXPECT_LT(ms, 1.0) << "mean rank time " << ms << " ms";
}

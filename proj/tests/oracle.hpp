#pragma once

// Independent reference computations for the tests and the acceptance run.
// Nothing here calls the engine's linear algebra, MC search or complexes:
// algebras are hand-written structure constants (or read off an Algebra
// through its plain accessors) and all ranks use the naive elimination below.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "aomoto/algebra.hpp"

namespace oracle {

using Vec = std::vector<int>;
using Pt = std::vector<std::uint32_t>;

struct Model {
    int p = 2;
    std::vector<int> dims;                         // dims[0..top], top degree complete
    std::function<Vec(int, int, int, int)> mul;    // e^i_u * e^j_v in degree i+j
    std::function<Vec(int, int)> diff;             // d e^i_u in degree i+1
    int top() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int q) const { return q >= 0 && q <= top() ? dims[q] : 0; }
};

inline int mod(long long x, int p) { return static_cast<int>(((x % p) + p) % p); }

inline int inverse(int a, int p)
{
    for (int b = 1; b < p; ++b)
        if (a * b % p == 1)
            return b;
    return 0;
}

// Rows of the matrix; plain Gaussian elimination.
inline int rank_of(std::vector<Vec> rows, int p)
{
    int r = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (mod(rows[i][c], p)) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(rows[r], rows[piv]);
        const int inv = inverse(mod(rows[r][c], p), p);
        for (int& x : rows[r])
            x = mod(x * inv, p);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && mod(rows[i][c], p)) {
                const int f = mod(rows[i][c], p);
                for (int k = 0; k < cols; ++k)
                    rows[i][k] = mod(rows[i][k] - f * rows[r][k], p);
            }
        ++r;
    }
    return r;
}

// Every point of F_p^n, x_1 most significant.
inline std::vector<Pt> all_points(int p, int n)
{
    std::vector<Pt> out;
    Pt x(n, 0);
    while (true) {
        out.push_back(x);
        int k = n - 1;
        while (k >= 0 && x[k] == static_cast<std::uint32_t>(p - 1))
            x[k--] = 0;
        if (k < 0)
            break;
        ++x[k];
    }
    return out;
}

// (x * e^q_u + d e^q_u) in degree q+1, as a column
inline Vec delta_column(const Model& m, const Pt& x, int q, int u)
{
    Vec col(m.dim(q + 1), 0);
    if (q + 1 > m.top())
        return col;
    const Vec d = m.diff(q, u);
    for (int k = 0; k < m.dim(q + 1); ++k)
        col[k] = d[k];
    for (int j = 0; j < m.dim(1); ++j)
        if (x[j]) {
            const Vec prod = m.mul(1, j, q, u);
            for (int k = 0; k < m.dim(q + 1); ++k)
                col[k] = mod(col[k] + static_cast<int>(x[j]) * prod[k], m.p);
        }
    return col;
}

inline int delta_rank(const Model& m, const Pt& x, int q)
{
    if (q < 0 || q >= m.top() || m.dim(q) == 0 || m.dim(q + 1) == 0)
        return 0;
    std::vector<Vec> cols;  // rank of the transpose
    for (int u = 0; u < m.dim(q); ++u)
        cols.push_back(delta_column(m, x, q, u));
    return rank_of(cols, m.p);
}

inline bool in_mc(const Model& m, const Pt& x)
{
    Vec v(m.dim(2), 0);
    for (int i = 0; i < m.dim(1); ++i) {
        if (!x[i])
            continue;
        const Vec d = m.diff(1, i);
        for (int k = 0; k < m.dim(2); ++k)
            v[k] = mod(v[k] + static_cast<int>(x[i]) * d[k], m.p);
        for (int j = 0; j < m.dim(1); ++j)
            if (x[j]) {
                const Vec prod = m.mul(1, i, 1, j);
                for (int k = 0; k < m.dim(2); ++k)
                    v[k] = mod(v[k] + static_cast<int>(x[i] * x[j]) * prod[k], m.p);
            }
    }
    return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

inline std::vector<Pt> mc(const Model& m)
{
    std::vector<Pt> out;
    for (const Pt& x : all_points(m.p, m.dim(1)))
        if (in_mc(m, x))
            out.push_back(x);
    return out;
}

inline int betti(const Model& m, const Pt& x, int q)
{
    return m.dim(q) - delta_rank(m, x, q) - delta_rank(m, x, q - 1);
}

inline std::vector<Pt> resonance(const Model& m, int q, int s)
{
    std::vector<Pt> out;
    for (const Pt& x : mc(m))
        if (betti(m, x, q) >= s)
            out.push_back(x);
    return out;
}

inline Vec unit_vector(int n, int k)
{
    Vec v(n, 0);
    if (k >= 0)
        v[k] = 1;
    return v;
}

// Graded pieces of a complete algebra read through the plain accessors.
inline Model from_algebra(const aomoto::Algebra& a)
{
    Model m;
    m.p = static_cast<int>(a.field().characteristic());
    for (int q = 0; q <= a.top(); ++q)
        m.dims.push_back(static_cast<int>(a.dim(q)));
    m.mul = [&a](int i, int u, int j, int v) {
        if (i + j > a.top())
            return Vec{};
        const auto& c = a.product(i, u, j, v);
        return Vec(c.begin(), c.end());
    };
    m.diff = [&a](int i, int u) {
        if (i >= a.top())
            return Vec{};
        const auto col = a.differential(i).column(u);
        return Vec(col.begin(), col.end());
    };
    return m;
}

// ---- hand-written models ------------------------------------------------

// Exterior algebra on n degree-one classes; subsets as bitmasks ordered by value.
inline Model exterior(int n, int p)
{
    std::vector<std::vector<int>> by_degree(n + 1);
    for (int s = 0; s < (1 << n); ++s)
        by_degree[__builtin_popcount(s)].push_back(s);
    // degree one listed as e_1 .. e_n
    std::sort(by_degree[1].begin(), by_degree[1].end());
    Model m;
    m.p = p;
    for (const auto& d : by_degree)
        m.dims.push_back(static_cast<int>(d.size()));
    m.mul = [by_degree, n, p](int i, int u, int j, int v) {
        if (i + j > n)
            return Vec{};
        const int s = by_degree[i][u], t = by_degree[j][v];
        Vec out(by_degree[i + j].size(), 0);
        if (s & t)
            return out;
        int swaps = 0;  // moving each element of t past the larger elements of s
        for (int b = 0; b < n; ++b)
            if (t >> b & 1)
                swaps += __builtin_popcount(s >> (b + 1));
        const int idx = static_cast<int>(
            std::find(by_degree[i + j].begin(), by_degree[i + j].end(), s | t) - by_degree[i + j].begin());
        out[idx] = swaps % 2 ? p - 1 : 1;
        return out;
    };
    m.diff = [m](int i, int) { return Vec(m.dim(i + 1), 0); };
    return m;
}

// Degree one e_0..e_{k-1}; one top class w in degree 2; e_u e_v = form(u, v) w.
inline Model degree_two(int p, int k, std::function<int(int, int)> form, std::function<int(int)> d1)
{
    Model m;
    m.p = p;
    m.dims = {1, k, 1};
    m.mul = [form, k, p](int i, int u, int j, int v) {
        if (i == 0)
            return unit_vector(j == 0 ? 1 : (j == 1 ? k : 1), v);
        if (j == 0)
            return unit_vector(i == 1 ? k : 1, u);
        if (i == 1 && j == 1)
            return Vec{mod(form(u, v), p)};
        return Vec{};
    };
    m.diff = [d1, k](int i, int u) {
        if (i == 0)
            return Vec(k, 0);
        if (i == 1)
            return Vec{d1(u)};
        return Vec{};
    };
    return m;
}

// M_g with basis a1, b1, ..., ag, bg and a_i b_i = w.
inline Model surface_or(int g, int p)
{
    return degree_two(
        p, 2 * g,
        [](int u, int v) {
            if (u / 2 != v / 2 || u == v)
                return 0;
            return u % 2 == 0 ? 1 : -1;
        },
        [](int) { return 0; });
}

// N_g over F_2: a_i^2 = w, a_i a_j = 0, d a_i = w; `bockstein` false gives d = 0.
inline Model surface_nonor(int g, bool bockstein = true)
{
    return degree_two(
        2, g, [](int u, int v) { return u == v ? 1 : 0; }, [bockstein](int) { return bockstein ? 1 : 0; });
}

// Truncated polynomial F_2[a]/(a^{n+1}) with d(a^i) = a^{i+1} for odd i (optionally off).
inline Model rp(int n, bool bockstein = true)
{
    Model m;
    m.p = 2;
    m.dims.assign(n + 1, 1);
    m.mul = [n](int i, int, int j, int) { return i + j <= n ? Vec{1} : Vec{}; };
    m.diff = [n, bockstein](int i, int) {
        if (i >= n)
            return Vec{};
        return Vec{bockstein && i % 2 == 1 ? 1 : 0};
    };
    return m;
}

// One class per degree 0..3 (1, a, b, ab), a^2 = 0; d b = ab when `twisted`.
// Covers L(4,1) and both sphere bundles over the circle.
inline Model three_manifold(bool twisted)
{
    Model m;
    m.p = 2;
    m.dims = {1, 1, 1, 1};
    m.mul = [](int i, int, int j, int) {
        if (i + j > 3)
            return Vec{};
        if (i == 0 || j == 0)
            return Vec{1};
        return Vec{(i + j == 3) ? 1 : 0};  // a*b = ab, a*a = 0
    };
    m.diff = [twisted](int i, int) {
        if (i >= 3)
            return Vec{};
        return Vec{twisted && i == 2 ? 1 : 0};
    };
    return m;
}

// S^1 v Sigma RP^2: classes in degrees 1, 2, 3, all products zero, d(a2) = a3.
inline Model susp_wedge(bool bockstein)
{
    Model m;
    m.p = 2;
    m.dims = {1, 1, 1, 1};
    m.mul = [](int i, int, int j, int) {
        if (i + j > 3)
            return Vec{};
        return Vec{(i == 0 || j == 0) ? 1 : 0};
    };
    m.diff = [bockstein](int i, int) {
        if (i >= 3)
            return Vec{};
        return Vec{bockstein && i == 2 ? 1 : 0};
    };
    return m;
}

// Z_2[a1, a2]/(a1^2, a2^3, a1 a2), degree-two class a2^2, d(a2) = a2^2.
inline Model toy()
{
    return degree_two(2, 2, [](int u, int v) { return u == 1 && v == 1 ? 1 : 0; }, [](int u) { return u; });
}

// Exterior on a, b over F_p with d(b) = b a = -ab.
inline Model dbab(int p)
{
    return degree_two(
        p, 2,
        [](int u, int v) {
            if (u == v)
                return 0;
            return u == 0 ? 1 : -1;
        },
        [](int u) { return u == 1 ? -1 : 0; });
}

}  // namespace oracle

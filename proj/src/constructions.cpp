#include "aomoto/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace aomoto {

namespace {

void require_same_field(const Algebra& a, const Algebra& b)
{
    if (!(a.field() == b.field()))
        throw std::invalid_argument("algebras over different fields (F_" + std::to_string(a.field().characteristic()) +
                                    " and F_" + std::to_string(b.field().characteristic()) + ")");
}

// Labels of positive degrees, prefixed with "L." / "R." when the two sides share a name.
std::pair<std::vector<std::vector<std::string>>, std::vector<std::vector<std::string>>> side_labels(
    const Algebra& a, const Algebra& b)
{
    std::set<std::string> names;
    for (int i = 1; i <= a.top(); ++i)
        names.insert(a.labels(i).begin(), a.labels(i).end());
    bool clash = false;
    for (int i = 1; i <= b.top() && !clash; ++i)
        for (const std::string& s : b.labels(i))
            clash = clash || names.count(s) > 0;

    auto collect = [clash](const Algebra& x, const char* prefix) {
        std::vector<std::vector<std::string>> out;
        for (int i = 0; i <= x.top(); ++i) {
            out.push_back(x.labels(i));
            if (clash && i > 0)
                for (std::string& s : out.back())
                    s = prefix + s;
        }
        return out;
    };
    return {collect(a, "L."), collect(b, "R.")};
}

// Tops of incomplete inputs bound the degrees that are actually known.
int combined_top(const Algebra& a, const Algebra& b, int complete_top)
{
    if (a.complete() && b.complete())
        return complete_top;
    int top = complete_top;
    if (!a.complete())
        top = std::min(top, a.top());
    if (!b.complete())
        top = std::min(top, b.top());
    return top;
}

}  // namespace

Algebra tensor_product(const Algebra& a, const Algebra& b, int degree_cap)
{
    require_same_field(a, b);
    const PrimeField& f = a.field();
    const int full = a.top() + b.top();
    int top = combined_top(a, b, std::min(full, degree_cap));
    const bool complete = a.complete() && b.complete() && full <= degree_cap;
    if (top < 1)
        top = 1;

    auto [la, lb] = side_labels(a, b);
    auto dim_a = [&](int i) { return i <= a.top() ? a.dim(i) : 0; };
    auto dim_b = [&](int j) { return j <= b.top() ? b.dim(j) : 0; };

    // offset[q][i]: first index of the block A^i (x) B^{q-i} inside degree q
    std::vector<std::vector<std::size_t>> offset(top + 1, std::vector<std::size_t>(top + 1, 0));
    std::vector<std::vector<std::string>> labels(top + 1);
    for (int q = 0; q <= top; ++q) {
        std::size_t pos = 0;
        for (int i = q; i >= 0; --i) {
            offset[q][i] = pos;
            const int j = q - i;
            for (std::size_t u = 0; u < dim_a(i); ++u)
                for (std::size_t v = 0; v < dim_b(j); ++v) {
                    if (i == 0 && j == 0)
                        labels[q].push_back("1");
                    else if (j == 0)
                        labels[q].push_back(la[i][u]);
                    else if (i == 0)
                        labels[q].push_back(lb[j][v]);
                    else
                        labels[q].push_back(la[i][u] + "|" + lb[j][v]);
                }
            pos += dim_a(i) * dim_b(j);
        }
    }

    Algebra out(f, top, complete, labels);
    auto index = [&](int q, int i, std::size_t u, std::size_t v) { return offset[q][i] + u * dim_b(q - i) + v; };

    for (int q1 = 0; q1 <= top; ++q1)
        for (int q2 = 0; q1 + q2 <= top; ++q2)
            for (int i1 = q1; i1 >= 0; --i1)
                for (int i2 = q2; i2 >= 0; --i2) {
                    const int j1 = q1 - i1, j2 = q2 - i2;
                    const int q = q1 + q2;
                    const bool a_fits = i1 + i2 <= a.top();
                    const bool b_fits = j1 + j2 <= b.top();
                    const Scalar sign = f.sign(static_cast<long long>(j1) * i2);
                    for (std::size_t u1 = 0; u1 < dim_a(i1); ++u1)
                        for (std::size_t v1 = 0; v1 < dim_b(j1); ++v1)
                            for (std::size_t u2 = 0; u2 < dim_a(i2); ++u2)
                                for (std::size_t v2 = 0; v2 < dim_b(j2); ++v2) {
                                    Vector value(out.dim(q), 0);
                                    if (a_fits && b_fits) {
                                        const Vector& pa = a.product(i1, u1, i2, u2);
                                        const Vector& pb = b.product(j1, v1, j2, v2);
                                        for (std::size_t x = 0; x < pa.size(); ++x) {
                                            if (!pa[x])
                                                continue;
                                            for (std::size_t y = 0; y < pb.size(); ++y)
                                                if (pb[y])
                                                    value[index(q, i1 + i2, x, y)] =
                                                        f.mul(sign, f.mul(pa[x], pb[y]));
                                        }
                                    }
                                    out.set_product(q1, index(q1, i1, u1, v1), q2, index(q2, i2, u2, v2),
                                                    std::move(value));
                                }
                }

    for (int q = 0; q < top; ++q) {
        Matrix m(f, out.dim(q + 1), out.dim(q));
        for (int i = q; i >= 0; --i) {
            const int j = q - i;
            for (std::size_t u = 0; u < dim_a(i); ++u)
                for (std::size_t v = 0; v < dim_b(j); ++v) {
                    const std::size_t col = index(q, i, u, v);
                    if (i + 1 <= a.top()) {
                        const Vector du = a.differential(i).column(u);
                        for (std::size_t x = 0; x < du.size(); ++x)
                            if (du[x])
                                m.add_to(index(q + 1, i + 1, x, v), col, du[x]);
                    }
                    if (j + 1 <= b.top()) {
                        const Vector dv = b.differential(j).column(v);
                        const Scalar sign = f.sign(i);
                        for (std::size_t y = 0; y < dv.size(); ++y)
                            if (dv[y])
                                m.add_to(index(q + 1, i, u, y), col, f.mul(sign, dv[y]));
                    }
                }
        }
        out.set_differential(q, std::move(m));
    }
    return out;
}

Algebra wedge_sum(const Algebra& a, const Algebra& b)
{
    require_same_field(a, b);
    const PrimeField& f = a.field();
    const int top = combined_top(a, b, std::max(a.top(), b.top()));
    const bool complete = a.complete() && b.complete();

    auto [la, lb] = side_labels(a, b);
    auto dim_a = [&](int i) { return i <= a.top() ? a.dim(i) : 0; };
    auto dim_b = [&](int j) { return j <= b.top() ? b.dim(j) : 0; };

    std::vector<std::vector<std::string>> labels(top + 1);
    labels[0] = {"1"};
    for (int q = 1; q <= top; ++q) {
        if (q <= a.top())
            labels[q] = la[q];
        if (q <= b.top())
            labels[q].insert(labels[q].end(), lb[q].begin(), lb[q].end());
    }
    Algebra out(f, top, complete, labels);

    for (int i = 1; i <= top; ++i)
        for (int j = 1; i + j <= top; ++j) {
            const int q = i + j;
            for (std::size_t u = 0; u < dim_a(i); ++u)
                for (std::size_t v = 0; v < dim_a(j); ++v) {
                    Vector value(out.dim(q), 0);
                    if (q <= a.top()) {
                        const Vector& pa = a.product(i, u, j, v);
                        std::copy(pa.begin(), pa.end(), value.begin());
                    }
                    out.set_product(i, u, j, v, std::move(value));
                }
            for (std::size_t u = 0; u < dim_b(i); ++u)
                for (std::size_t v = 0; v < dim_b(j); ++v) {
                    Vector value(out.dim(q), 0);
                    if (q <= b.top()) {
                        const Vector& pb = b.product(i, u, j, v);
                        std::copy(pb.begin(), pb.end(), value.begin() + static_cast<std::ptrdiff_t>(dim_a(q)));
                    }
                    out.set_product(i, dim_a(i) + u, j, dim_a(j) + v, std::move(value));
                }
        }

    for (int q = 1; q < top; ++q) {
        Matrix m(f, out.dim(q + 1), out.dim(q));
        if (q + 1 <= a.top())
            for (std::size_t u = 0; u < dim_a(q); ++u)
                for (std::size_t x = 0; x < dim_a(q + 1); ++x)
                    m.set(x, u, a.differential(q)(x, u));
        if (q + 1 <= b.top())
            for (std::size_t v = 0; v < dim_b(q); ++v)
                for (std::size_t y = 0; y < dim_b(q + 1); ++y)
                    m.set(dim_a(q + 1) + y, dim_a(q) + v, b.differential(q)(y, v));
        out.set_differential(q, std::move(m));
    }
    return out;
}

Algebra ground_algebra(PrimeField field) { return Algebra(field, 1, true, {{"1"}, {}}); }

}  // namespace aomoto

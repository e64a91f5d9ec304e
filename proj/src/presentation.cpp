#include "aomoto/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "aomoto/errors.hpp"

namespace aomoto {

namespace {

using Monomial = std::vector<int>;  // exponent per generator
using Poly = std::map<Monomial, Scalar>;

class FreeAlgebra {
 public:
    FreeAlgebra(PrimeField f, std::vector<int> degrees) : f_(f), degrees_(std::move(degrees)) {}

    const PrimeField& field() const { return f_; }
    std::size_t rank() const { return degrees_.size(); }
    int generator_degree(std::size_t g) const { return degrees_[g]; }
    bool odd_exterior(std::size_t g) const { return f_.characteristic() != 2 && degrees_[g] % 2 != 0; }

    int degree(const Monomial& m) const
    {
        int d = 0;
        for (std::size_t g = 0; g < m.size(); ++g)
            d += m[g] * degrees_[g];
        return d;
    }

    Monomial unit() const { return Monomial(rank(), 0); }
    Monomial generator(std::size_t g) const
    {
        Monomial m = unit();
        m[g] = 1;
        return m;
    }

    // m1 * m2 = sign * product, or nothing when an odd generator appears twice.
    std::optional<std::pair<Monomial, Scalar>> multiply(const Monomial& a, const Monomial& b) const
    {
        Monomial out(rank());
        long long swaps = 0;
        int odd_in_b_before = 0;
        for (std::size_t g = 0; g < rank(); ++g) {
            out[g] = a[g] + b[g];
            if (odd_exterior(g)) {
                if (out[g] > 1)
                    return std::nullopt;
                if (a[g])
                    swaps += odd_in_b_before;
                if (b[g])
                    ++odd_in_b_before;
            }
        }
        return std::make_pair(std::move(out), f_.sign(swaps));
    }

    Poly multiply(const Poly& a, const Poly& b) const
    {
        Poly out;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b)
                if (auto prod = multiply(ma, mb))
                    accumulate(out, prod->first, f_.mul(f_.mul(ca, cb), prod->second));
        return out;
    }

    void accumulate(Poly& p, const Monomial& m, Scalar c) const
    {
        if (c == 0)
            return;
        Scalar& slot = p[m];
        slot = f_.add(slot, c);
        if (slot == 0)
            p.erase(m);
    }

    Poly add(Poly a, const Poly& b, Scalar scale = 1) const
    {
        for (const auto& [m, c] : b)
            accumulate(a, m, f_.mul(c, scale));
        return a;
    }

 private:
    PrimeField f_;
    std::vector<int> degrees_;
};

class ExpressionParser {
 public:
    ExpressionParser(const FreeAlgebra& alg, const std::map<std::string, std::size_t>& names, std::string_view text)
        : alg_(alg), names_(names), text_(text)
    {
    }

    Poly parse()
    {
        Poly p = expression();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

 private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("in expression '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) +
                         ": " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly constant(long long c) const
    {
        Poly p;
        alg_.accumulate(p, alg_.unit(), alg_.field().reduce(c));
        return p;
    }

    Poly expression()
    {
        Poly acc;
        Scalar sign = accept('-') ? alg_.field().neg(1) : (accept('+'), 1);
        acc = alg_.add(acc, term(), sign);
        for (;;) {
            if (accept('+'))
                acc = alg_.add(acc, term());
            else if (accept('-'))
                acc = alg_.add(acc, term(), alg_.field().neg(1));
            else
                return acc;
        }
    }

    Poly term()
    {
        Poly acc = factor();
        while (accept('*'))
            acc = alg_.multiply(acc, factor());
        return acc;
    }

    Poly factor()
    {
        Poly base = primary();
        if (accept('^')) {
            const long long e = number();
            if (e < 0 || e > 256)
                fail("exponent out of range");
            Poly out = constant(1);
            for (long long i = 0; i < e; ++i)
                out = alg_.multiply(out, base);
            return out;
        }
        return base;
    }

    long long number()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        if (pos_ - start > 9)
            fail("number too large");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    Poly primary()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expression();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return constant(number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            auto it = names_.find(name);
            if (it == names_.end()) {
                pos_ = start;
                fail("unknown generator '" + name + "'");
            }
            Poly p;
            alg_.accumulate(p, alg_.generator(it->second), 1);
            return p;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const FreeAlgebra& alg_;
    const std::map<std::string, std::size_t>& names_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Returns the common degree of all terms, or nullopt for the zero polynomial.
std::optional<int> homogeneous_degree(const FreeAlgebra& alg, const Poly& p, const std::string& text)
{
    std::optional<int> deg;
    for (const auto& [m, c] : p) {
        const int d = alg.degree(m);
        if (deg && *deg != d)
            throw ParseError("expression '" + text + "' is not homogeneous");
        deg = d;
    }
    return deg;
}

void enumerate_monomials(const FreeAlgebra& alg, std::size_t g, int remaining, Monomial& cur,
                         std::vector<Monomial>& out)
{
    if (g == alg.rank()) {
        if (remaining == 0)
            out.push_back(cur);
        return;
    }
    const int dg = alg.generator_degree(g);
    int max_e = remaining / dg;
    if (alg.odd_exterior(g))
        max_e = std::min(max_e, 1);
    for (int e = max_e; e >= 0; --e) {
        cur[g] = e;
        enumerate_monomials(alg, g + 1, remaining - e * dg, cur, out);
    }
    cur[g] = 0;
}

// Row space kept fully reduced; the pivot of each row is its last nonzero entry,
// i.e. the smallest monomial in the descending enumeration order.
class EchelonSpace {
 public:
    EchelonSpace(PrimeField f, std::size_t width) : f_(f), width_(width), pivot_row_(width, -1) {}

    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == width_; }
    bool is_pivot(std::size_t c) const { return pivot_row_[c] >= 0; }
    const std::vector<Vector>& rows() const { return rows_; }

    void reduce(Vector& v) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar c = v[pivots_[r]];
            if (c)
                f_.axpy(v, f_.neg(c), rows_[r]);
        }
    }

    void insert(Vector v)
    {
        reduce(v);
        std::size_t c = width_;
        for (std::size_t k = width_; k-- > 0;)
            if (v[k]) {
                c = k;
                break;
            }
        if (c == width_)
            return;
        v = f_.scaled(v, f_.inv(v[c]));
        for (Vector& row : rows_)
            if (row[c])
                f_.axpy(row, f_.neg(row[c]), v);
        pivot_row_[c] = static_cast<long>(rows_.size());
        pivots_.push_back(c);
        rows_.push_back(std::move(v));
    }

 private:
    PrimeField f_;
    std::size_t width_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<long> pivot_row_;
};

std::string monomial_label(const Monomial& m, const std::vector<Generator>& gens)
{
    std::string s;
    for (std::size_t g = 0; g < m.size(); ++g) {
        if (m[g] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += gens[g].name;
        if (m[g] > 1)
            s += '^' + std::to_string(m[g]);
    }
    return s.empty() ? "1" : s;
}

bool valid_name(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

class Builder {
 public:
    explicit Builder(const Presentation& p) : p_(p), alg_(p.field, degrees(p)) {}

    Algebra build()
    {
        if (p_.top < 1)
            throw ParseError("top must be at least 1");
        for (std::size_t g = 0; g < p_.generators.size(); ++g) {
            const Generator& gen = p_.generators[g];
            if (!valid_name(gen.name))
                throw ParseError("invalid generator name '" + gen.name + "'");
            if (gen.degree < 1)
                throw ParseError("generator '" + gen.name + "' must have positive degree");
            if (!names_.emplace(gen.name, g).second)
                throw ParseError("duplicate generator '" + gen.name + "'");
            gmax_ = std::max(gmax_, gen.degree);
        }
        maxdeg_ = p_.top + gmax_;

        std::vector<std::pair<Poly, int>> relations;
        for (const std::string& text : p_.relations) {
            Poly r = ExpressionParser(alg_, names_, text).parse();
            auto deg = homogeneous_degree(alg_, r, text);
            if (!deg)
                continue;
            if (*deg == 0)
                throw ParseError("relation '" + text + "' is a nonzero constant");
            relations.emplace_back(std::move(r), *deg);
        }

        dgen_.assign(alg_.rank(), Poly{});
        std::set<std::string> seen;
        for (const auto& [name, text] : p_.differentials) {
            auto it = names_.find(name);
            if (it == names_.end())
                throw ParseError("differential of unknown generator '" + name + "'");
            if (!seen.insert(name).second)
                throw ParseError("differential of '" + name + "' given twice");
            Poly value = ExpressionParser(alg_, names_, text).parse();
            auto deg = homogeneous_degree(alg_, value, text);
            const int want = alg_.generator_degree(it->second) + 1;
            if (deg && *deg != want)
                throw ParseError("d(" + name + ") must have degree " + std::to_string(want));
            dgen_[it->second] = std::move(value);
        }

        for (int n = 0; n <= maxdeg_; ++n) {
            Monomial cur = alg_.unit();
            monomials_.emplace_back();
            enumerate_monomials(alg_, 0, n, cur, monomials_.back());
            std::map<Monomial, std::size_t> index;
            for (std::size_t k = 0; k < monomials_.back().size(); ++k)
                index.emplace(monomials_.back()[k], k);
            index_.push_back(std::move(index));
        }

        for (int n = 0; n <= maxdeg_; ++n) {
            EchelonSpace space(alg_.field(), monomials_[n].size());
            for (const auto& [r, deg] : relations)
                if (deg == n && !space.full())
                    space.insert(to_vector(r, n));
            for (std::size_t g = 0; g < alg_.rank() && !space.full(); ++g) {
                const int lower = n - alg_.generator_degree(g);
                if (lower < 0)
                    continue;
                Poly gen;
                alg_.accumulate(gen, alg_.generator(g), 1);
                for (const Vector& row : ideal_[lower].rows()) {
                    if (space.full())
                        break;
                    space.insert(to_vector(alg_.multiply(gen, to_poly(row, lower)), n));
                }
            }
            std::vector<std::size_t> basis;
            for (std::size_t k = 0; k < monomials_[n].size(); ++k)
                if (!space.is_pivot(k))
                    basis.push_back(k);
            basis_.push_back(std::move(basis));
            ideal_.push_back(std::move(space));
        }

        bool complete = true;
        for (int n = p_.top + 1; n <= maxdeg_; ++n)
            complete = complete && basis_[n].empty();

        std::vector<std::vector<std::string>> labels;
        for (int n = 0; n <= p_.top; ++n) {
            labels.emplace_back();
            for (std::size_t k : basis_[n])
                labels.back().push_back(monomial_label(monomials_[n][k], p_.generators));
        }
        Algebra a(p_.field, p_.top, complete, labels);

        for (int i = 0; i <= p_.top; ++i)
            for (int j = 0; i + j <= p_.top; ++j)
                for (std::size_t u = 0; u < basis_[i].size(); ++u)
                    for (std::size_t v = 0; v < basis_[j].size(); ++v) {
                        Poly pu, pv;
                        alg_.accumulate(pu, monomials_[i][basis_[i][u]], 1);
                        alg_.accumulate(pv, monomials_[j][basis_[j][v]], 1);
                        a.set_product(i, u, j, v, quotient_coords(alg_.multiply(pu, pv), i + j));
                    }

        for (int i = 0; i < p_.top; ++i) {
            Matrix m(alg_.field(), basis_[i + 1].size(), basis_[i].size());
            for (std::size_t u = 0; u < basis_[i].size(); ++u)
                m.set_column(u, quotient_coords(d_monomial(monomials_[i][basis_[i][u]]), i + 1));
            a.set_differential(i, std::move(m));
        }

        for (std::size_t k = 0; k < relations.size(); ++k) {
            const auto& [r, deg] = relations[k];
            if (deg + 1 > maxdeg_)
                continue;
            if (!in_ideal(d_poly(r), deg + 1))
                throw PreconditionError("differential does not preserve the ideal: d(" + p_.relations[k] +
                                        ") is not in the ideal");
        }
        for (std::size_t g = 0; g < alg_.rank(); ++g) {
            const int deg = alg_.generator_degree(g);
            if (deg + 2 > maxdeg_)
                continue;
            if (!in_ideal(d_poly(dgen_[g]), deg + 2))
                throw PreconditionError("d^2 != 0 on generator " + p_.generators[g].name);
        }
        return a;
    }

 private:
    static std::vector<int> degrees(const Presentation& p)
    {
        std::vector<int> d;
        for (const Generator& g : p.generators)
            d.push_back(g.degree);
        return d;
    }

    Vector to_vector(const Poly& p, int n) const
    {
        Vector v(monomials_[n].size(), 0);
        for (const auto& [m, c] : p)
            v[index_[n].at(m)] = c;
        return v;
    }

    Poly to_poly(const Vector& v, int n) const
    {
        Poly p;
        for (std::size_t k = 0; k < v.size(); ++k)
            alg_.accumulate(p, monomials_[n][k], v[k]);
        return p;
    }

    Vector quotient_coords(const Poly& p, int n) const
    {
        Vector v = to_vector(p, n);
        ideal_[n].reduce(v);
        Vector out;
        for (std::size_t k : basis_[n])
            out.push_back(v[k]);
        return out;
    }

    bool in_ideal(const Poly& p, int n) const
    {
        Vector v = to_vector(p, n);
        ideal_[n].reduce(v);
        return std::all_of(v.begin(), v.end(), [](Scalar c) { return c == 0; });
    }

    // Leibniz extension: m = g * m' with g the first generator occurring in m.
    const Poly& d_monomial(const Monomial& m)
    {
        auto it = dcache_.find(m);
        if (it != dcache_.end())
            return it->second;
        Poly out;
        std::size_t g = 0;
        while (g < m.size() && m[g] == 0)
            ++g;
        if (g < m.size()) {
            Monomial rest = m;
            --rest[g];
            Poly gen, prest;
            alg_.accumulate(gen, alg_.generator(g), 1);
            alg_.accumulate(prest, rest, 1);
            out = alg_.multiply(dgen_[g], prest);
            const Poly tail = alg_.multiply(gen, d_monomial(rest));
            out = alg_.add(out, tail, alg_.field().sign(alg_.generator_degree(g)));
        }
        return dcache_.emplace(m, std::move(out)).first->second;
    }

    Poly d_poly(const Poly& p)
    {
        Poly out;
        for (const auto& [m, c] : p)
            out = alg_.add(out, d_monomial(m), c);
        return out;
    }

    const Presentation& p_;
    FreeAlgebra alg_;
    std::map<std::string, std::size_t> names_;
    int gmax_ = 1;
    int maxdeg_ = 0;
    std::vector<Poly> dgen_;
    std::vector<std::vector<Monomial>> monomials_;
    std::vector<std::map<Monomial, std::size_t>> index_;
    std::vector<EchelonSpace> ideal_;
    std::vector<std::vector<std::size_t>> basis_;
    std::map<Monomial, Poly> dcache_;
};

}  // namespace

Algebra present_algebra(const Presentation& p) { return Builder(p).build(); }

}  // namespace aomoto

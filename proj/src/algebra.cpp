#include "aomoto/algebra.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "aomoto/errors.hpp"

namespace aomoto {

bool Element::is_zero() const
{
    for (Scalar c : coeffs)
        if (c != 0)
            return false;
    return true;
}

bool ValidationReport::has(std::string_view kind, std::string_view witness) const
{
    for (const Violation& v : violations)
        if (v.kind == kind && (witness.empty() || v.witness == witness))
            return true;
    return false;
}

Algebra::Algebra(PrimeField field, int top, bool complete, std::vector<std::vector<std::string>> labels)
    : field_(field), top_(top), complete_(complete), labels_(std::move(labels))
{
    if (top_ < 1)
        throw std::invalid_argument("algebra truncation degree must be at least 1");
    if (labels_.size() != static_cast<std::size_t>(top_) + 1)
        throw std::invalid_argument("algebra needs one label list per degree 0..top");
    if (labels_[0].empty())
        throw std::invalid_argument("degree 0 must contain the unit");
    for (const auto& l : labels_)
        dims_.push_back(l.size());

    products_.resize(static_cast<std::size_t>(top_) + 1);
    for (int i = 0; i <= top_; ++i) {
        products_[i].resize(static_cast<std::size_t>(top_ - i) + 1);
        for (int j = 0; i + j <= top_; ++j)
            products_[i][j].assign(dims_[i] * dims_[j], Vector(dims_[i + j], 0));
    }
    for (int i = 0; i <= top_; ++i)
        for (std::size_t u = 0; u < dims_[i]; ++u) {
            Vector e(dims_[i], 0);
            e[u] = 1;
            products_[0][i][u] = e;
            products_[i][0][u * dims_[0]] = e;
        }

    for (int i = 0; i < top_; ++i)
        differentials_.emplace_back(field_, dims_[i + 1], dims_[i]);
    differentials_.emplace_back(field_, 0, dims_[top_]);
}

std::size_t Algebra::dim(int degree) const
{
    if (degree < 0)
        return 0;
    if (degree <= top_)
        return dims_[degree];
    if (complete_)
        return 0;
    throw PreconditionError("degree " + std::to_string(degree) + " lies above the truncation degree " +
                            std::to_string(top_) + " of an incomplete algebra");
}

std::vector<std::size_t> Algebra::dims() const { return dims_; }

std::optional<std::pair<int, std::size_t>> Algebra::find_label(std::string_view name) const
{
    for (int i = 0; i <= top_; ++i)
        for (std::size_t u = 0; u < labels_[i].size(); ++u)
            if (labels_[i][u] == name)
                return std::make_pair(i, u);
    return std::nullopt;
}

std::size_t Algebra::slot(int i, std::size_t u, int j, std::size_t v) const
{
    if (i < 0 || j < 0 || i + j > top_)
        throw PreconditionError("product of degrees " + std::to_string(i) + " and " + std::to_string(j) +
                                " exceeds truncation degree " + std::to_string(top_));
    if (u >= dims_[i] || v >= dims_[j])
        throw std::out_of_range("basis index out of range");
    return u * dims_[j] + v;
}

const Vector& Algebra::product(int i, std::size_t u, int j, std::size_t v) const
{
    return products_[i][j][slot(i, u, j, v)];
}

void Algebra::set_product(int i, std::size_t u, int j, std::size_t v, Vector value)
{
    if (value.size() != dims_[i + j])
        throw std::invalid_argument("product value has wrong length");
    for (Scalar& c : value)
        c %= field_.characteristic();
    products_[i][j][slot(i, u, j, v)] = std::move(value);
}

const Matrix& Algebra::differential(int i) const
{
    if (i >= 0 && i < top_)
        return differentials_[i];
    if (i == top_ && complete_)
        return differentials_[top_];
    throw PreconditionError("differential out of degree " + std::to_string(i) + " is not defined (top " +
                            std::to_string(top_) + (complete_ ? ", complete)" : ", incomplete)"));
}

void Algebra::set_differential(int i, Matrix m)
{
    if (i < 0 || i >= top_)
        throw std::out_of_range("differential degree out of range");
    if (m.rows() != dims_[i + 1] || m.cols() != dims_[i] || !(m.field() == field_))
        throw std::invalid_argument("differential matrix has wrong shape");
    differentials_[i] = std::move(m);
}

bool Algebra::has_zero_differential() const
{
    for (const Matrix& m : differentials_)
        if (!m.is_zero())
            return false;
    return true;
}

Element Algebra::zero(int degree) const { return {degree, Vector(dim(degree), 0)}; }

Element Algebra::unit() const { return basis(0, 0); }

Element Algebra::basis(int degree, std::size_t index) const
{
    Element e = zero(degree);
    e.coeffs.at(index) = 1;
    return e;
}

Element Algebra::point_element(const Point& x) const
{
    if (x.size() != dim(1))
        throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, A^1 has dimension " +
                                    std::to_string(dim(1)));
    Element e{1, x};
    for (Scalar& c : e.coeffs)
        c %= field_.characteristic();
    return e;
}

Element Algebra::add(const Element& u, const Element& v) const
{
    if (u.degree != v.degree)
        throw std::invalid_argument("adding elements of different degrees");
    Element out = u;
    field_.axpy(out.coeffs, 1, v.coeffs);
    return out;
}

Element Algebra::scale(const Element& u, Scalar c) const { return {u.degree, field_.scaled(u.coeffs, c)}; }

Element Algebra::multiply(const Element& u, const Element& v) const
{
    const int deg = u.degree + v.degree;
    if (deg > top_)
        throw PreconditionError("product degree " + std::to_string(deg) + " exceeds truncation degree " +
                                std::to_string(top_));
    Element out = zero(deg);
    for (std::size_t a = 0; a < u.coeffs.size(); ++a) {
        if (u.coeffs[a] == 0)
            continue;
        for (std::size_t b = 0; b < v.coeffs.size(); ++b) {
            if (v.coeffs[b] == 0)
                continue;
            field_.axpy(out.coeffs, field_.mul(u.coeffs[a], v.coeffs[b]), product(u.degree, a, v.degree, b));
        }
    }
    return out;
}

Element Algebra::d(const Element& u) const
{
    const Matrix& m = differential(u.degree);
    return {u.degree + 1, m.apply(u.coeffs)};
}

Matrix Algebra::left_multiplication(const Element& a, int degree) const
{
    const int target = degree + a.degree;
    if (target > top_) {
        if (complete_)
            return Matrix(field_, 0, dim(degree));
        throw PreconditionError("multiplication into degree " + std::to_string(target) +
                                " of an incomplete truncation");
    }
    Matrix m(field_, dim(target), dim(degree));
    for (std::size_t u = 0; u < dim(degree); ++u)
        m.set_column(u, multiply(a, basis(degree, u)).coeffs);
    return m;
}

bool Algebra::degree_one_squares_vanish() const
{
    if (top_ < 2)
        return true;
    if (field_.characteristic() != 2) {
        // graded commutativity forces 2a^2 = 0; check the stored constants anyway
        for (std::size_t u = 0; u < dims_[1]; ++u)
            for (std::size_t v = 0; v < dims_[1]; ++v) {
                Vector s = product(1, u, 1, v);
                field_.axpy(s, 1, product(1, v, 1, u));
                for (Scalar c : s)
                    if (c)
                        return false;
            }
        return true;
    }
    for (std::size_t u = 0; u < dims_[1]; ++u)
        for (Scalar c : product(1, u, 1, u))
            if (c)
                return false;
    return true;
}

std::string Algebra::format(const Element& u) const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < u.coeffs.size(); ++i) {
        if (u.coeffs[i] == 0)
            continue;
        if (!first)
            out << " + ";
        first = false;
        if (u.coeffs[i] != 1)
            out << u.coeffs[i] << '*';
        out << labels(u.degree)[i];
    }
    return first ? "0" : out.str();
}

bool operator==(const Algebra& a, const Algebra& b)
{
    return a.labels_ == b.labels_ && same_structure(a, b);
}

bool same_structure(const Algebra& a, const Algebra& b)
{
    return a.field_ == b.field_ && a.top_ == b.top_ && a.complete_ == b.complete_ && a.dims_ == b.dims_ &&
           a.products_ == b.products_ && a.differentials_ == b.differentials_;
}

namespace {

constexpr std::size_t kMaxViolationsPerKind = 16;

std::string pair_witness(const Algebra& a, int i, std::size_t u, int j, std::size_t v)
{
    return "(" + a.labels(i)[u] + ", " + a.labels(j)[v] + ")";
}

class Collector {
 public:
    explicit Collector(ValidationReport& r) : report_(r) {}
    void add(const std::string& kind, std::string witness, std::string detail)
    {
        std::size_t& n = counts_[kind];
        if (n++ < kMaxViolationsPerKind)
            report_.violations.push_back({kind, std::move(witness), std::move(detail)});
    }

 private:
    ValidationReport& report_;
    std::map<std::string, std::size_t> counts_;
};

}  // namespace

ValidationReport validate_cdga(const Algebra& a)
{
    ValidationReport report;
    Collector sink(report);
    const PrimeField& f = a.field();
    const int top = a.top();

    if (a.dim(0) != 1) {
        sink.add("connected", "degree 0", "dim A^0 = " + std::to_string(a.dim(0)));
        return report;
    }

    for (int i = 0; i <= top; ++i)
        for (std::size_t u = 0; u < a.dim(i); ++u) {
            const Element e = a.basis(i, u);
            if (a.product(0, 0, i, u) != e.coeffs || a.product(i, u, 0, 0) != e.coeffs)
                sink.add("unit", "(1, " + a.labels(i)[u] + ")", "1 is not a two-sided unit");
        }

    for (int i = 1; i <= top; ++i)
        for (int j = i; i + j <= top; ++j)
            for (std::size_t u = 0; u < a.dim(i); ++u)
                for (std::size_t v = (i == j ? u : 0); v < a.dim(j); ++v) {
                    Vector expected = f.scaled(a.product(i, u, j, v), f.sign(static_cast<long long>(i) * j));
                    if (a.product(j, v, i, u) != expected)
                        sink.add("commutativity", pair_witness(a, i, u, j, v),
                                 "v*u != (-1)^{|u||v|} u*v");
                }

    for (int i = 1; i <= top; ++i)
        for (int j = 1; i + j < top; ++j)
            for (int k = 1; i + j + k <= top; ++k)
                for (std::size_t u = 0; u < a.dim(i); ++u)
                    for (std::size_t v = 0; v < a.dim(j); ++v) {
                        const Element uv{i + j, a.product(i, u, j, v)};
                        for (std::size_t w = 0; w < a.dim(k); ++w) {
                            const Element vw{j + k, a.product(j, v, k, w)};
                            const Element left = a.multiply(uv, a.basis(k, w));
                            const Element right = a.multiply(a.basis(i, u), vw);
                            if (left != right)
                                sink.add("associativity",
                                         "(" + a.labels(i)[u] + ", " + a.labels(j)[v] + ", " + a.labels(k)[w] + ")",
                                         "(uv)w != u(vw)");
                        }
                    }

    for (int i = 0; i + 2 <= top; ++i) {
        const Matrix dd = a.differential(i + 1) * a.differential(i);
        for (std::size_t u = 0; u < a.dim(i); ++u)
            if (!Element{i + 2, dd.column(u)}.is_zero())
                sink.add("d^2", a.labels(i)[u], "d(d(u)) = " + a.format({i + 2, dd.column(u)}));
    }

    for (int i = 0; i < top; ++i)
        for (int j = 0; i + j < top; ++j)
            for (std::size_t u = 0; u < a.dim(i); ++u)
                for (std::size_t v = 0; v < a.dim(j); ++v) {
                    const Element eu = a.basis(i, u);
                    const Element ev = a.basis(j, v);
                    const Element lhs = a.d(Element{i + j, a.product(i, u, j, v)});
                    Element rhs = a.multiply(a.d(eu), ev);
                    rhs = a.add(rhs, a.scale(a.multiply(eu, a.d(ev)), f.sign(i)));
                    if (lhs != rhs)
                        sink.add("leibniz", pair_witness(a, i, u, j, v),
                                 "d(uv) = " + a.format(lhs) + " but d(u)v +- u d(v) = " + a.format(rhs));
                }

    return report;
}

Algebra with_zero_differential(const Algebra& a)
{
    Algebra out = a;
    for (int i = 0; i < a.top(); ++i)
        out.set_differential(i, Matrix(a.field(), a.dim(i + 1), a.dim(i)));
    return out;
}

Algebra truncate(const Algebra& a, int new_top)
{
    if (new_top < 1 || new_top > a.top())
        throw std::invalid_argument("truncation degree out of range");
    bool complete = a.complete();
    for (int i = new_top + 1; i <= a.top(); ++i)
        complete = complete && a.dim(i) == 0;
    std::vector<std::vector<std::string>> labels;
    for (int i = 0; i <= new_top; ++i)
        labels.push_back(a.labels(i));
    Algebra out(a.field(), new_top, complete, labels);
    for (int i = 0; i <= new_top; ++i)
        for (int j = 0; i + j <= new_top; ++j)
            for (std::size_t u = 0; u < a.dim(i); ++u)
                for (std::size_t v = 0; v < a.dim(j); ++v)
                    out.set_product(i, u, j, v, a.product(i, u, j, v));
    for (int i = 0; i < new_top; ++i)
        out.set_differential(i, a.differential(i));
    return out;
}

Point point_from_index(std::uint64_t index, std::size_t n, std::uint32_t p)
{
    Point x(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        x[k] = static_cast<Scalar>(index % p);
        index /= p;
    }
    return x;
}

std::uint64_t index_from_point(const Point& x, std::uint32_t p)
{
    std::uint64_t index = 0;
    for (Scalar c : x)
        index = index * p + c;
    return index;
}

std::string format_point(const Point& x)
{
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(x[i]);
    }
    return s + ")";
}

}  // namespace aomoto

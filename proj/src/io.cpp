#include "aomoto/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "aomoto/errors.hpp"

namespace aomoto {

namespace {

struct Line {
    std::size_t number;
    std::string keyword;
    std::string rest;
};

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what)
{
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Header line plus keyword/rest pairs of the remaining non-empty lines.
std::pair<Line, std::vector<Line>> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty())
            continue;
        const std::size_t space = line.find_first_of(" \t");
        Line l{number, line.substr(0, space), space == std::string::npos ? "" : trim(line.substr(space))};
        lines.push_back(std::move(l));
    }
    if (lines.empty())
        throw ParseError("empty algebra file");
    Line header = lines.front();
    lines.erase(lines.begin());
    return {header, lines};
}

long long parse_integer(const std::string& s, std::size_t line, const char* what)
{
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        fail(line, std::string("expected an integer ") + what + ", got '" + s + "'");
    return v;
}

PrimeField parse_field(const std::string& s, std::size_t line)
{
    const long long p = parse_integer(s, line, "characteristic");
    if (p < 2 || p > PrimeField::kMaxCharacteristic || !is_prime(static_cast<std::uint32_t>(p)))
        fail(line, "field characteristic must be a prime in [2, 251], got " + s);
    return PrimeField(static_cast<std::uint32_t>(p));
}

int parse_top(const std::string& s, std::size_t line)
{
    const long long top = parse_integer(s, line, "top degree");
    if (top < 1 || top > 64)
        fail(line, "top must lie in [1, 64]");
    return static_cast<int>(top);
}

bool valid_basis_name(const std::string& s)
{
    if (s == "1")
        return true;
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' || c == '*' || c == '.' || c == '|';
    });
}

class BasisReader {
 public:
    Algebra read(const std::vector<Line>& lines)
    {
        std::optional<PrimeField> field;
        std::optional<int> top;
        std::optional<bool> complete;
        std::map<int, std::pair<std::vector<std::string>, std::size_t>> basis;
        for (const Line& l : lines) {
            if (l.keyword == "field") {
                if (field)
                    fail(l.number, "field given twice");
                field = parse_field(l.rest, l.number);
            } else if (l.keyword == "top") {
                if (top)
                    fail(l.number, "top given twice");
                top = parse_top(l.rest, l.number);
            } else if (l.keyword == "complete") {
                if (complete)
                    fail(l.number, "complete given twice");
                if (l.rest != "true" && l.rest != "false")
                    fail(l.number, "complete must be true or false");
                complete = l.rest == "true";
            } else if (l.keyword == "basis") {
                const std::size_t colon = l.rest.find(':');
                if (colon == std::string::npos)
                    fail(l.number, "expected 'basis <degree>: <names>'");
                const long long deg = parse_integer(trim(l.rest.substr(0, colon)), l.number, "degree");
                if (deg < 0 || deg > 64)
                    fail(l.number, "degree out of range");
                if (basis.count(static_cast<int>(deg)))
                    fail(l.number, "basis of degree " + std::to_string(deg) + " given twice");
                basis[static_cast<int>(deg)] = {split_ws(l.rest.substr(colon + 1)), l.number};
            } else if (l.keyword != "mul" && l.keyword != "diff") {
                fail(l.number, "unknown directive '" + l.keyword + "'");
            }
        }
        if (!field)
            throw ParseError("missing 'field' line");
        if (!top)
            throw ParseError("missing 'top' line");
        if (!complete)
            throw ParseError("missing 'complete' line");

        std::vector<std::vector<std::string>> labels(*top + 1);
        labels[0] = {"1"};
        for (const auto& [deg, entry] : basis) {
            const auto& [names, number] = entry;
            if (deg > *top)
                fail(number, "basis degree " + std::to_string(deg) + " exceeds top " + std::to_string(*top));
            if (deg == 0) {
                if (names != std::vector<std::string>{"1"})
                    fail(number, "degree 0 must be spanned by the unit '1'");
                continue;
            }
            for (const std::string& n : names) {
                if (!valid_basis_name(n) || n == "1")
                    fail(number, "invalid basis name '" + n + "'");
                if (!names_.emplace(n, std::make_pair(deg, labels[deg].size())).second)
                    fail(number, "duplicate basis name '" + n + "'");
                labels[deg].push_back(n);
            }
        }
        names_.emplace("1", std::make_pair(0, std::size_t{0}));
        Algebra a(*field, *top, *complete, labels);

        std::set<std::pair<std::string, std::string>> listed;
        std::vector<std::tuple<std::string, std::string, Vector>> products;
        std::set<std::string> diffs;
        for (const Line& l : lines) {
            if (l.keyword == "mul") {
                const std::size_t eq = l.rest.find('=');
                if (eq == std::string::npos)
                    fail(l.number, "expected 'mul <u> <v> = <terms>'");
                const std::vector<std::string> uv = split_ws(l.rest.substr(0, eq));
                if (uv.size() != 2)
                    fail(l.number, "expected two basis names before '='");
                const auto [du, iu] = lookup(uv[0], l.number);
                const auto [dv, iv] = lookup(uv[1], l.number);
                if (du == 0 || dv == 0)
                    fail(l.number, "products with the unit are implicit");
                if (du + dv > *top)
                    fail(l.number, "product degree " + std::to_string(du + dv) + " exceeds top");
                if (!listed.emplace(uv[0], uv[1]).second)
                    fail(l.number, "product " + uv[0] + " " + uv[1] + " given twice");
                Vector value = combination(a, l.rest.substr(eq + 1), du + dv, l.number);
                a.set_product(du, iu, dv, iv, value);
                products.emplace_back(uv[0], uv[1], std::move(value));
            } else if (l.keyword == "diff") {
                const std::size_t eq = l.rest.find('=');
                if (eq == std::string::npos)
                    fail(l.number, "expected 'diff <u> = <terms>'");
                const std::string u = trim(l.rest.substr(0, eq));
                const auto [du, iu] = lookup(u, l.number);
                if (du >= *top)
                    fail(l.number, "differential out of the top degree is not stored");
                if (!diffs.insert(u).second)
                    fail(l.number, "differential of " + u + " given twice");
                const Vector value = combination(a, l.rest.substr(eq + 1), du + 1, l.number);
                Matrix m = a.differential(du);
                m.set_column(iu, value);
                a.set_differential(du, std::move(m));
            }
        }
        for (const auto& [u, v, value] : products) {
            if (listed.count({v, u}))
                continue;
            const auto [du, iu] = names_.at(u);
            const auto [dv, iv] = names_.at(v);
            a.set_product(dv, iv, du, iu, a.field().scaled(value, a.field().sign(static_cast<long long>(du) * dv)));
        }
        return a;
    }

 private:
    std::pair<int, std::size_t> lookup(const std::string& name, std::size_t line) const
    {
        auto it = names_.find(name);
        if (it == names_.end())
            fail(line, "unknown basis element '" + name + "'");
        return it->second;
    }

    Vector combination(const Algebra& a, const std::string& text, int degree, std::size_t line) const
    {
        Vector out(a.dim(degree), 0);
        const std::string body = trim(text);
        if (body == "0")
            return out;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t plus = body.find('+', pos);
            if (plus == std::string::npos)
                plus = body.size();
            const std::string term = trim(body.substr(pos, plus - pos));
            pos = plus + 1;
            if (term.empty())
                fail(line, "empty term in '" + body + "'");
            long long coeff = 1;
            std::string name = term;
            if (std::isdigit(static_cast<unsigned char>(term[0])) || term[0] == '-') {
                const std::size_t star = term.find('*');
                if (star == std::string::npos) {
                    if (term != "1")
                        fail(line, "expected '<coeff>*<name>', got '" + term + "'");
                } else {
                    coeff = parse_integer(trim(term.substr(0, star)), line, "coefficient");
                    name = trim(term.substr(star + 1));
                }
            }
            const auto [deg, idx] = lookup(name, line);
            if (deg != degree)
                fail(line, "'" + name + "' has degree " + std::to_string(deg) + ", expected " + std::to_string(degree));
            out[idx] = a.field().add(out[idx], a.field().reduce(coeff));
        }
        return out;
    }

    std::map<std::string, std::pair<int, std::size_t>> names_;
};

Presentation read_presentation(const std::vector<Line>& lines)
{
    Presentation p;
    bool have_field = false, have_top = false;
    for (const Line& l : lines) {
        if (l.keyword == "field") {
            if (have_field)
                fail(l.number, "field given twice");
            p.field = parse_field(l.rest, l.number);
            have_field = true;
        } else if (l.keyword == "top") {
            if (have_top)
                fail(l.number, "top given twice");
            p.top = parse_top(l.rest, l.number);
            have_top = true;
        } else if (l.keyword == "gens") {
            for (const std::string& g : split_ws(l.rest)) {
                const std::size_t colon = g.find(':');
                if (colon == std::string::npos)
                    fail(l.number, "expected '<name>:<degree>', got '" + g + "'");
                const long long deg = parse_integer(g.substr(colon + 1), l.number, "generator degree");
                if (deg < 1 || deg > 64)
                    fail(l.number, "generator degree out of range");
                p.generators.push_back({g.substr(0, colon), static_cast<int>(deg)});
            }
        } else if (l.keyword == "rel") {
            if (l.rest.empty())
                fail(l.number, "empty relation");
            p.relations.push_back(l.rest);
        } else if (l.keyword == "diff") {
            const std::size_t eq = l.rest.find('=');
            if (eq == std::string::npos)
                fail(l.number, "expected 'diff <generator> = <polynomial>'");
            p.differentials.emplace_back(trim(l.rest.substr(0, eq)), trim(l.rest.substr(eq + 1)));
        } else {
            fail(l.number, "unknown directive '" + l.keyword + "'");
        }
    }
    if (!have_field)
        throw ParseError("missing 'field' line");
    if (!have_top)
        throw ParseError("missing 'top' line");
    return p;
}

}  // namespace

Presentation parse_presentation(std::string_view text)
{
    auto [header, lines] = tokenize(text);
    if (header.keyword != "cdga-presentation" || header.rest != "v1")
        fail(header.number, "expected header 'cdga-presentation v1'");
    return read_presentation(lines);
}

Algebra parse_algebra_file(std::string_view text)
{
    auto [header, lines] = tokenize(text);
    if (header.keyword == "cdga" && header.rest == "v1")
        return BasisReader().read(lines);
    if (header.keyword == "cdga-presentation" && header.rest == "v1")
        return present_algebra(read_presentation(lines));
    fail(header.number, "expected header 'cdga v1' or 'cdga-presentation v1'");
}

std::string serialize_algebra(const Algebra& a)
{
    std::ostringstream out;
    out << "cdga v1\n";
    out << "field " << a.field().characteristic() << "\n";
    out << "top " << a.top() << "\n";
    out << "complete " << (a.complete() ? "true" : "false") << "\n";
    for (int i = 0; i <= a.top(); ++i) {
        out << "basis " << i << ":";
        for (const std::string& s : a.labels(i))
            out << ' ' << s;
        out << "\n";
    }
    for (int i = 1; i <= a.top(); ++i)
        for (int j = i; i + j <= a.top(); ++j)
            for (std::size_t u = 0; u < a.dim(i); ++u)
                for (std::size_t v = (i == j ? u : 0); v < a.dim(j); ++v) {
                    const Element value{i + j, a.product(i, u, j, v)};
                    const Element swapped{i + j, a.product(j, v, i, u)};
                    const bool same = i == j && u == v;
                    const bool irregular =
                        !same && swapped.coeffs !=
                                     a.field().scaled(value.coeffs, a.field().sign(static_cast<long long>(i) * j));
                    if (!value.is_zero() || irregular)
                        out << "mul " << a.labels(i)[u] << ' ' << a.labels(j)[v] << " = " << a.format(value) << "\n";
                    if (irregular)
                        out << "mul " << a.labels(j)[v] << ' ' << a.labels(i)[u] << " = " << a.format(swapped)
                            << "\n";
                }
    for (int i = 0; i < a.top(); ++i)
        for (std::size_t u = 0; u < a.dim(i); ++u) {
            const Element value{i + 1, a.differential(i).column(u)};
            if (!value.is_zero())
                out << "diff " << a.labels(i)[u] << " = " << a.format(value) << "\n";
        }
    return out.str();
}

Point parse_point(std::string_view text, const PrimeField& f, std::size_t n)
{
    Point x;
    std::string s(text);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos)
            comma = s.size();
        const std::string part = trim(s.substr(pos, comma - pos));
        pos = comma + 1;
        long long v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw ParseError("bad coordinate '" + part + "' in '" + s + "'");
        x.push_back(f.reduce(v));
    }
    if (x.size() != n)
        throw ParseError("expected " + std::to_string(n) + " coordinates, got " + std::to_string(x.size()));
    return x;
}

}  // namespace aomoto

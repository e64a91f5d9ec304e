#include "aomoto/spaces.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "aomoto/errors.hpp"
#include "aomoto/presentation.hpp"

namespace aomoto {

namespace {

int int_arg(const SpaceId& id, std::size_t k, int lo, int hi, const char* what)
{
    if (k >= id.args.size())
        throw ParseError(id.name + ": missing parameter " + what);
    const std::string& s = id.args[k];
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(id.name + ": parameter " + what + " must be an integer, got '" + s + "'");
    if (v < lo || v > hi)
        throw ParseError(id.name + ": " + what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "], got " + std::to_string(v));
    return v;
}

void expect_args(const SpaceId& id, std::size_t n)
{
    if (id.args.size() != n)
        throw ParseError(id.name + " takes " + std::to_string(n) + " parameter(s), got " +
                         std::to_string(id.args.size()));
}

PrimeField field_for(const SpaceId& id, std::uint32_t fallback, bool any_prime, bool odd_only = false)
{
    const std::uint32_t p = id.p.value_or(fallback);
    if (!is_prime(p) || p > PrimeField::kMaxCharacteristic)
        throw ParseError("characteristic must be a prime <= 251, got " + std::to_string(p));
    if (!any_prime && p != 2)
        throw ParseError(id.name + " is a mod-2 cohomology algebra; only p = 2 is supported");
    if (odd_only && p == 2)
        throw ParseError(id.name + " needs an odd characteristic");
    return PrimeField(p);
}

std::string gen(const char* stem, int i) { return stem + std::to_string(i); }

Algebra exterior_algebra(PrimeField f, int n)
{
    // degree-q basis: q-subsets of {1..n} in lexicographic order
    std::vector<std::vector<std::vector<int>>> subsets(n + 1);
    std::function<void(int, std::vector<int>&)> walk = [&](int next, std::vector<int>& cur) {
        subsets[cur.size()].push_back(cur);
        for (int i = next; i <= n; ++i) {
            cur.push_back(i);
            walk(i + 1, cur);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    walk(1, cur);
    std::vector<std::map<std::vector<int>, std::size_t>> index(n + 1);
    std::vector<std::vector<std::string>> labels(n + 1);
    for (int q = 0; q <= n; ++q) {
        std::sort(subsets[q].begin(), subsets[q].end());
        for (std::size_t k = 0; k < subsets[q].size(); ++k) {
            index[q].emplace(subsets[q][k], k);
            std::string s;
            for (int i : subsets[q][k])
                s += (s.empty() ? "" : "*") + gen("a", i);
            labels[q].push_back(s.empty() ? "1" : s);
        }
    }
    Algebra a(f, n, true, labels);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            for (std::size_t u = 0; u < subsets[i].size(); ++u)
                for (std::size_t v = 0; v < subsets[j].size(); ++v) {
                    const auto& s = subsets[i][u];
                    const auto& t = subsets[j][v];
                    Vector value(subsets[i + j].size(), 0);
                    std::vector<int> merged;
                    long long inversions = 0;
                    bool overlap = false;
                    for (int x : s)
                        for (int y : t) {
                            overlap = overlap || x == y;
                            inversions += x > y;
                        }
                    if (!overlap) {
                        merged = s;
                        merged.insert(merged.end(), t.begin(), t.end());
                        std::sort(merged.begin(), merged.end());
                        value[index[i + j].at(merged)] = f.sign(inversions);
                    }
                    a.set_product(i, u, j, v, std::move(value));
                }
    return a;
}

Presentation presentation(PrimeField f, int top)
{
    Presentation p;
    p.field = f;
    p.top = top;
    return p;
}

Algebra torus(const SpaceId& id)
{
    expect_args(id, 1);
    const int n = int_arg(id, 0, 1, 8, "n");
    return exterior_algebra(field_for(id, 2, true), n);
}

Algebra surface_or(const SpaceId& id)
{
    expect_args(id, 1);
    const int g = int_arg(id, 0, 1, 6, "g");
    const PrimeField f = field_for(id, 2, true);
    Presentation p = presentation(f, 2);
    for (int i = 1; i <= g; ++i) {
        p.generators.push_back({gen("a", i), 1});
        p.generators.push_back({gen("b", i), 1});
    }
    for (int i = 1; i <= g; ++i) {
        if (f.characteristic() == 2) {
            p.relations.push_back(gen("a", i) + "^2");
            p.relations.push_back(gen("b", i) + "^2");
        }
        for (int j = i + 1; j <= g; ++j) {
            p.relations.push_back(gen("a", i) + "*" + gen("a", j));
            p.relations.push_back(gen("b", i) + "*" + gen("b", j));
        }
        for (int j = 1; j <= g; ++j)
            if (j != i)
                p.relations.push_back(gen("a", i) + "*" + gen("b", j));
        if (i > 1)
            p.relations.push_back(gen("a", i) + "*" + gen("b", i) + " - a1*b1");
    }
    return present_algebra(p);
}

Algebra surface_nonor(const SpaceId& id)
{
    expect_args(id, 1);
    const int g = int_arg(id, 0, 1, 10, "g");
    Presentation p = presentation(field_for(id, 2, false), 2);
    for (int i = 1; i <= g; ++i) {
        p.generators.push_back({gen("a", i), 1});
        p.differentials.emplace_back(gen("a", i), gen("a", i) + "^2");
    }
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j) {
            p.relations.push_back(gen("a", i) + "^2 + " + gen("a", j) + "^2");
            p.relations.push_back(gen("a", i) + "*" + gen("a", j));
        }
    if (g == 1)
        p.relations.push_back("a1^3");
    return present_algebra(p);
}

Algebra rp(const SpaceId& id)
{
    expect_args(id, 1);
    const int n = int_arg(id, 0, 1, 12, "n");
    Presentation p = presentation(field_for(id, 2, false), n);
    p.generators = {{"a", 1}};
    p.relations = {"a^" + std::to_string(n + 1)};
    p.differentials = {{"a", "a^2"}};
    return present_algebra(p);
}

Algebra rp_inf(const SpaceId& id)
{
    expect_args(id, 1);
    const int top = int_arg(id, 0, 2, 12, "top");
    Presentation p = presentation(field_for(id, 2, false), top);
    p.generators = {{"a", 1}};
    p.differentials = {{"a", "a^2"}};
    return present_algebra(p);
}

Algebra lens41(const SpaceId& id)
{
    expect_args(id, 0);
    Presentation p = presentation(field_for(id, 2, false), 3);
    p.generators = {{"a", 1}, {"b", 2}};
    p.relations = {"a^2", "b^2"};
    return present_algebra(p);
}

Algebra sphere_bundle(const SpaceId& id)
{
    expect_args(id, 1);
    const std::string& kind = id.args[0];
    if (kind != "trivial" && kind != "twisted")
        throw ParseError("sphere_bundle: expected 'trivial' or 'twisted', got '" + kind + "'");
    Presentation p = presentation(field_for(id, 2, false), 3);
    p.generators = {{"a", 1}, {"b", 2}};
    p.relations = {"a^2", "b^2"};
    if (kind == "twisted")
        p.differentials = {{"b", "a*b"}};
    return present_algebra(p);
}

Algebra dold(const SpaceId& id)
{
    expect_args(id, 2);
    const int m = int_arg(id, 0, 1, 6, "m");
    const int n = int_arg(id, 1, 0, 4, "n");
    Presentation p = presentation(field_for(id, 2, false), m + 2 * n);
    p.generators = {{"a", 1}, {"b", 2}};
    p.relations = {"a^" + std::to_string(m + 1), "b^" + std::to_string(n + 1)};
    p.differentials = {{"a", "a^2"}, {"b", "a*b"}};
    return present_algebra(p);
}

Algebra grass(const SpaceId& id)
{
    expect_args(id, 2);
    const int n = int_arg(id, 0, 1, 3, "n");
    const int top = int_arg(id, 1, 3, 12, "top");
    Presentation p = presentation(field_for(id, 2, false), top);
    for (int k = 1; k <= n; ++k)
        p.generators.push_back({gen("w", k), k});
    for (int k = 1; k <= n; ++k) {
        std::string value = "w1*" + gen("w", k);
        if (k < n && (k + 1) % 2 == 1)
            value += " + " + gen("w", k + 1);
        p.differentials.emplace_back(gen("w", k), value);
    }
    return present_algebra(p);
}

Algebra susp_wedge(const SpaceId& id)
{
    expect_args(id, 0);
    Presentation p = presentation(field_for(id, 2, false), 3);
    p.generators = {{"a1", 1}, {"a2", 2}, {"a3", 3}};
    p.relations = {"a1^2", "a1*a2", "a1*a3", "a2^2", "a2*a3", "a3^2"};
    p.differentials = {{"a2", "a3"}};
    return present_algebra(p);
}

Algebra conf_e3(const SpaceId& id)
{
    expect_args(id, 0);
    const PrimeField f = field_for(id, 3, true);
    Presentation p = presentation(f, 2);
    p.generators = {{"a1", 1}, {"a2", 1}, {"a3", 1}, {"b1", 1}, {"b2", 1}, {"b3", 1}};
    if (f.characteristic() == 2)
        for (const Generator& g : p.generators)
            p.relations.push_back(g.name + "^2");
    p.relations.push_back("(a1 - a2)*(b1 - b2)");
    p.relations.push_back("(a1 - a3)*(b1 - b3)");
    p.relations.push_back("(a2 - a3)*(b2 - b3)");
    return present_algebra(p);
}

Algebra toy(const SpaceId& id)
{
    expect_args(id, 0);
    Presentation p = presentation(field_for(id, 2, false), 2);
    p.generators = {{"a1", 1}, {"a2", 1}};
    p.relations = {"a1^2", "a2^3", "a1*a2"};
    p.differentials = {{"a2", "a2^2"}};
    return present_algebra(p);
}

Algebra mca_quad(const SpaceId& id)
{
    expect_args(id, 0);
    Presentation p = presentation(field_for(id, 2, false), 2);
    p.generators = {{"a1", 1}, {"a2", 1}};
    p.differentials = {{"a1", "a1*a2"}, {"a2", "a2^2"}};
    return present_algebra(p);
}

Algebra pdcdga(const SpaceId& id)
{
    expect_args(id, 1);
    const int k = int_arg(id, 0, 2, 6, "k");
    Presentation p = presentation(field_for(id, 2, false), 2 * k - 1);
    p.generators = {{"x", 1}};
    p.relations = {"x^" + std::to_string(2 * k)};
    p.differentials = {{"x", "x^2"}};
    return present_algebra(p);
}

Algebra non_pdcdga(const SpaceId& id)
{
    expect_args(id, 1);
    const int k = int_arg(id, 0, 1, 10, "k");
    Presentation p = presentation(field_for(id, 2, false), k + 1);
    p.generators = {{"x", 1}, {"y", k}};
    p.relations = {"x^2", "y^2"};
    p.differentials = {{"y", "x*y"}};
    return present_algebra(p);
}

Algebra dbab(const SpaceId& id)
{
    expect_args(id, 0);
    Presentation p = presentation(field_for(id, 3, true, true), 2);
    p.generators = {{"a", 1}, {"b", 1}};
    p.differentials = {{"b", "b*a"}};
    return present_algebra(p);
}

struct Entry {
    SpaceInfo info;
    std::uint32_t default_p;
    Algebra (*build)(const SpaceId&);
};

const std::vector<std::pair<std::string, Entry>>& registry()
{
    static const std::vector<std::pair<std::string, Entry>> entries = {
        {"torus", {{"torus(n)", "1 <= n <= 8", "any p", "exterior algebra on n degree-one classes", true, true}, 2, torus}},
        {"surface_or",
         {{"surface_or(g)", "1 <= g <= 6", "any p", "closed orientable surface of genus g", true, true}, 2, surface_or}},
        {"surface_nonor",
         {{"surface_nonor(g)", "1 <= g <= 10", "p = 2", "connected sum of g projective planes, d = Sq^1", true, true},
          2, surface_nonor}},
        {"rp", {{"rp(n)", "1 <= n <= 12", "p = 2", "real projective space, d(a) = a^2", true, true}, 2, rp}},
        {"rp_inf",
         {{"rp_inf(top)", "2 <= top <= 12, complete=false", "p = 2", "infinite real projective space, truncated",
           false, false},
          2, rp_inf}},
        {"lens41", {{"lens41", "", "p = 2", "lens space L(4,1), Sq^1 = 0", true, true}, 2, lens41}},
        {"sphere_bundle",
         {{"sphere_bundle(trivial|twisted)", "", "p = 2",
           "S^2-bundles over S^1; d(b) = ab on the twisted one", true, true},
          2, sphere_bundle}},
        {"dold",
         {{"dold(m,n)", "1 <= m <= 6, 0 <= n <= 4", "p = 2", "Dold manifold P(m,n), d(a) = a^2, d(b) = ab", true,
           true},
          2, dold}},
        {"grass",
         {{"grass(n,top)", "1 <= n <= 3, 3 <= top <= 12, complete=false", "p = 2",
           "Grassmannian of n-planes in R^infinity, d(w_k) = w_1 w_k + (k+1) w_{k+1}", false, false},
          2, grass}},
        {"susp_wedge",
         {{"susp_wedge", "", "p = 2", "circle wedge suspended projective plane, d(a2) = a3", true, false}, 2,
          susp_wedge}},
        {"conf_e3",
         {{"conf_e3", "", "any p (default 3)", "three labeled points on an elliptic curve", false, false}, 3,
          conf_e3}},
        {"toy", {{"toy", "", "p = 2", "Z2[a1,a2]/(a1^2, a2^3, a1 a2), d(a2) = a2^2", true, false}, 2, toy}},
        {"mca_quad",
         {{"mca_quad", "", "p = 2", "Z2[a1,a2] truncated, d(a1) = a1 a2, d(a2) = a2^2", false, false}, 2, mca_quad}},
        {"pdcdga", {{"pdcdga(k)", "2 <= k <= 6", "p = 2", "Z2[x]/(x^2k), d(x) = x^2", true, false}, 2, pdcdga}},
        {"non_pdcdga",
         {{"non_pdcdga(k)", "1 <= k <= 10", "p = 2", "Z2[x,y]/(x^2, y^2), |y| = k, d(y) = xy", true, false}, 2,
          non_pdcdga}},
        {"dbab", {{"dbab", "", "odd p (default 3)", "exterior algebra on a, b with d(b) = ba", true, false}, 3, dbab}},
    };
    return entries;
}

const Entry& lookup(const std::string& name)
{
    for (const auto& [key, entry] : registry())
        if (key == name)
            return entry;
    throw ParseError("unknown space '" + name + "' (see the catalog command)");
}

}  // namespace

Algebra build_space(const SpaceId& id, Flavor flavor)
{
    Algebra a = lookup(id.name).build(id);
    return flavor == Flavor::ZeroDifferential ? with_zero_differential(a) : a;
}

std::vector<SpaceInfo> list_spaces()
{
    std::vector<SpaceInfo> out;
    for (const auto& [key, entry] : registry())
        out.push_back(entry.info);
    return out;
}

std::string space_key(const SpaceId& id)
{
    const Entry& e = lookup(id.name);
    std::vector<std::string> parts = id.args;
    if (id.p && *id.p != e.default_p)
        parts.push_back("p=" + std::to_string(*id.p));
    if (parts.empty())
        return id.name;
    std::string s = id.name + "(";
    for (std::size_t k = 0; k < parts.size(); ++k)
        s += (k ? "," : "") + parts[k];
    return s + ")";
}

bool is_manifold(const SpaceId& id) { return lookup(id.name).info.manifold; }

std::vector<SpaceId> catalog_instances()
{
    return {
        {"torus", {"1"}, {}},          {"torus", {"2"}, {}},           {"torus", {"3"}, {}},
        {"torus", {"4"}, {}},          {"torus", {"2"}, 3},            {"torus", {"3"}, 3},
        {"surface_or", {"1"}, {}},     {"surface_or", {"2"}, {}},      {"surface_or", {"3"}, {}},
        {"surface_or", {"2"}, 3},      {"surface_or", {"3"}, 3},       {"surface_nonor", {"1"}, {}},
        {"surface_nonor", {"2"}, {}},  {"surface_nonor", {"3"}, {}},   {"surface_nonor", {"4"}, {}},
        {"rp", {"1"}, {}},             {"rp", {"2"}, {}},              {"rp", {"3"}, {}},
        {"rp", {"4"}, {}},             {"rp", {"5"}, {}},              {"rp", {"6"}, {}},
        {"rp_inf", {"6"}, {}},         {"lens41", {}, {}},             {"sphere_bundle", {"trivial"}, {}},
        {"sphere_bundle", {"twisted"}, {}}, {"dold", {"1", "1"}, {}},  {"dold", {"2", "1"}, {}},
        {"dold", {"1", "2"}, {}},      {"grass", {"1", "6"}, {}},      {"grass", {"2", "8"}, {}},
        {"grass", {"3", "8"}, {}},     {"susp_wedge", {}, {}},         {"conf_e3", {}, {}},
        {"toy", {}, {}},               {"mca_quad", {}, {}},           {"pdcdga", {"2"}, {}},
        {"pdcdga", {"3"}, {}},         {"non_pdcdga", {"1"}, {}},      {"non_pdcdga", {"2"}, {}},
        {"dbab", {}, {}},
    };
}

Algebra dbab_subalgebra(std::uint32_t p)
{
    const PrimeField f(p);
    return Algebra(f, 2, true, {{"1"}, {"a"}, {}});
}

Morphism dbab_inclusion(std::uint32_t p)
{
    Algebra source = dbab_subalgebra(p);
    Algebra target = build_space({"dbab", {}, p});
    Morphism phi{source, target, {}};
    for (int i = 0; i <= 2; ++i)
        phi.maps.emplace_back(target.field(), target.dim(i), source.dim(i));
    phi.maps[0].set(0, 0, 1);
    const auto a = target.find_label("a");
    phi.maps[1].set(a->second, 0, 1);
    return phi;
}

}  // namespace aomoto

#include "aomoto/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "aomoto/algebra.hpp"
#include "aomoto/complex.hpp"
#include "aomoto/covers.hpp"
#include "aomoto/errors.hpp"
#include "aomoto/io.hpp"
#include "aomoto/mc_set.hpp"
#include "aomoto/poincare.hpp"
#include "aomoto/resonance.hpp"
#include "aomoto/spaces.hpp"

namespace aomoto {

using nlohmann::json;

std::string sha256_hex(const std::string& bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

namespace {

struct Settings {
    bool json_output = false;
    unsigned workers = 1;
    std::uint64_t cap = std::uint64_t{1} << 24;

    EngineOptions options() const { return {std::max(1U, workers), cap}; }
};

Algebra load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_algebra_file(text.str());
}

json point_json(const Point& x) { return json(std::vector<Scalar>(x.begin(), x.end())); }

json points_json(const std::vector<Point>& pts)
{
    json arr = json::array();
    for (const Point& x : pts)
        arr.push_back(point_json(x));
    return arr;
}

json base_report(const std::string& command, const Algebra& a)
{
    json r;
    r["command"] = command;
    r["field"] = a.field().characteristic();
    r["dims"] = a.dims();
    r["fingerprint"] = sha256_hex(serialize_algebra(a));
    r["version"] = kEngineVersion;
    r["points"] = json::array();
    r["profile"] = json::array();
    r["equation"] = nullptr;
    r["verdict"] = nullptr;
    r["witnesses"] = json::array();
    return r;
}

std::string join_dims(const std::vector<std::size_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

// Left-aligned columns, two spaces apart.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c)
                width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size())
                line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << line << "\n";
    }
}

std::string point_text(const Algebra& a, const Point& x)
{
    return format_point(x) + "  " + a.format(a.point_element(x));
}

void header_text(std::ostream& out, const Algebra& a)
{
    out << "field F_" << a.field().characteristic() << ", dims " << join_dims(a.dims()) << ", top " << a.top()
        << (a.complete() ? " (complete)" : " (truncated)") << "\n";
}

int emit(std::ostream& out, const json& report)
{
    out << report.dump(2) << "\n";
    return 0;
}

int run_catalog(const Settings& s, std::ostream& out)
{
    const auto spaces = list_spaces();
    if (s.json_output) {
        json r;
        r["command"] = "catalog";
        r["version"] = kEngineVersion;
        json arr = json::array();
        for (const SpaceInfo& info : spaces)
            arr.push_back({{"id", info.syntax},
                           {"ranges", info.ranges},
                           {"fields", info.fields},
                           {"complete", info.complete},
                           {"manifold", info.manifold},
                           {"description", info.description}});
        r["spaces"] = arr;
        return emit(out, r);
    }
    std::vector<std::vector<std::string>> rows{{"id", "parameters", "field", "complete", "manifold", "description"}};
    for (const SpaceInfo& info : spaces)
        rows.push_back({info.syntax, info.ranges.empty() ? "-" : info.ranges, info.fields,
                        info.complete ? "yes" : "no", info.manifold ? "yes" : "no", info.description});
    print_table(out, rows);
    return 0;
}

int run_build(const Settings& s, const std::string& name, const std::vector<std::string>& params,
              std::optional<std::uint32_t> p, bool zero_diff, const std::string& output, std::ostream& out)
{
    const SpaceId id{name, params, p};
    const Algebra a = build_space(id, zero_diff ? Flavor::ZeroDifferential : Flavor::Natural);
    const std::string text = serialize_algebra(a);
    if (output.empty() || output == "-") {
        out << text;
        return 0;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file)
        throw ParseError("cannot write '" + output + "'");
    file << "# " << space_key(id) << (zero_diff ? ", zero differential" : "") << "\n" << text;
    if (s.json_output) {
        json r = base_report("build", a);
        r["details"] = {{"space", space_key(id)}, {"output", output}};
        return emit(out, r);
    }
    out << "wrote " << space_key(id) << " to " << output << "\n";
    header_text(out, a);
    return 0;
}

int run_validate(const Settings& s, const Algebra& a, std::ostream& out)
{
    const ValidationReport report = validate_cdga(a);
    if (s.json_output) {
        json r = base_report("validate", a);
        r["verdict"] = report.ok() ? "ok" : "invalid";
        for (const Violation& v : report.violations)
            r["witnesses"].push_back({{"kind", v.kind}, {"witness", v.witness}, {"detail", v.detail}});
        emit(out, r);
    } else {
        header_text(out, a);
        if (report.ok())
            out << "ok\n";
        else {
            std::vector<std::vector<std::string>> rows{{"violation", "witness", "detail"}};
            for (const Violation& v : report.violations)
                rows.push_back({v.kind, v.witness, v.detail});
            print_table(out, rows);
        }
    }
    return report.ok() ? 0 : 1;
}

int run_mc(const Settings& s, const Algebra& a, std::ostream& out)
{
    const MCSet mc = mc_set(a, s.options());
    if (s.json_output) {
        json r = base_report("mc", a);
        r["points"] = points_json(mc.points);
        r["verdict"] = mc.points.size() == checked_point_count(mc.p, mc.n, ~std::uint64_t{0}) ? "all of A^1"
                                                                                              : "proper subset";
        return emit(out, r);
    }
    header_text(out, a);
    out << "MC(A): " << mc.points.size() << " point(s)\n";
    for (const Point& x : mc.points)
        out << "  " << point_text(a, x) << "\n";
    return 0;
}

int run_betti(const Settings& s, const Algebra& a, const std::string& at, std::ostream& out)
{
    const Point x = at.empty() ? Point(a.dim(1), 0) : parse_point(at, a.field(), a.dim(1));
    const std::vector<std::size_t> b = aomoto_betti(a, x);
    if (s.json_output) {
        json r = base_report("betti", a);
        r["points"].push_back(point_json(x));
        r["profile"] = b;
        return emit(out, r);
    }
    header_text(out, a);
    out << "at " << format_point(x) << "\n";
    std::vector<std::vector<std::string>> rows{{"q", "c_q", "b_q"}};
    for (std::size_t q = 0; q < b.size(); ++q)
        rows.push_back({std::to_string(q), std::to_string(a.dim(static_cast<int>(q))), std::to_string(b[q])});
    print_table(out, rows);
    return 0;
}

bool is_bockstein_like(const Algebra& a)
{
    for (std::size_t j = 0; j < a.dim(1); ++j) {
        const Element e = a.basis(1, j);
        if (a.multiply(e, e) != a.d(e))
            return false;
    }
    return true;
}

int run_resonance(const Settings& s, const Algebra& input, int q, std::optional<std::size_t> depth, bool all_depths,
                  bool equations, bool zero_diff, bool bockstein, std::ostream& out)
{
    if (zero_diff && bockstein)
        throw ParseError("--zero-diff and --bockstein are mutually exclusive");
    if (bockstein) {
        if (input.field().characteristic() != 2)
            throw PreconditionError("the Bockstein flavor needs p = 2");
        if (input.top() < 2 || !is_bockstein_like(input))
            throw PreconditionError("the differential is not a Bockstein: d(e) != e^2 for some degree-one e");
    }
    const Algebra a = zero_diff ? with_zero_differential(input) : input;
    std::vector<std::size_t> depths;
    if (all_depths) {
        if (!a.reliable(q))
            throw PreconditionError("H^" + std::to_string(q) + " is outside the reliable range");
        for (std::size_t d = 1; d <= a.dim(q); ++d)
            depths.push_back(d);
    } else {
        depths.push_back(depth.value_or(1));
    }
    const bool want_equations = equations && a.field().characteristic() == 2;
    const VarietyReport rep = resonance_variety(a, q, depths, s.options(), want_equations);

    if (s.json_output) {
        json r = base_report("resonance", a);
        r["details"] = {{"q", q}, {"flavor", a.has_zero_differential() ? "usual" : "differential"}};
        for (std::size_t k = 0; k < rep.mc_points.size(); ++k)
            r["profile"].push_back({{"point", point_json(rep.mc_points[k])}, {"dim", rep.profile[k]}});
        if (!all_depths) {
            r["details"]["s"] = depths.front();
            r["points"] = points_json(rep.varieties.front());
            if (want_equations)
                r["equation"] = rep.equations.front();
        } else {
            json vars = json::array();
            for (std::size_t k = 0; k < depths.size(); ++k) {
                json v = {{"s", depths[k]}, {"points", points_json(rep.varieties[k])}};
                v["equation"] = want_equations ? json(rep.equations[k]) : json(nullptr);
                vars.push_back(v);
            }
            r["details"]["varieties"] = vars;
            if (!rep.varieties.empty())
                r["points"] = points_json(rep.varieties.front());
            if (want_equations && !rep.equations.empty())
                r["equation"] = rep.equations.front();
        }
        return emit(out, r);
    }

    header_text(out, a);
    out << "dim H^" << q << "(A, delta_a) over MC(A)\n";
    std::vector<std::vector<std::string>> rows{{"point", "element", "dim"}};
    for (std::size_t k = 0; k < rep.mc_points.size(); ++k)
        rows.push_back({format_point(rep.mc_points[k]), a.format(a.point_element(rep.mc_points[k])),
                        std::to_string(rep.profile[k])});
    print_table(out, rows);
    for (std::size_t k = 0; k < depths.size(); ++k) {
        out << "R^" << q << "_" << depths[k] << ": ";
        if (rep.varieties[k].empty())
            out << "empty";
        for (std::size_t i = 0; i < rep.varieties[k].size(); ++i)
            out << (i ? " " : "") << format_point(rep.varieties[k][i]);
        out << "\n";
        if (want_equations)
            out << "  equation: " << rep.equations[k] << " = 0\n";
    }
    return 0;
}

int run_pd(const Settings& s, const Algebra& a, std::ostream& out, std::ostream& err)
{
    const PDDetection det = detect_pd(a);
    if (!det.structure) {
        if (s.json_output) {
            json r = base_report("pd", a);
            r["verdict"] = "not PD";
            r["witnesses"].push_back(det.failure);
            emit(out, r);
        } else {
            header_text(out, a);
            out << "not a Poincare duality algebra\n";
        }
        err << "error: " << det.failure << "\n";
        return 1;
    }
    const PDStructure& pd = *det.structure;
    const PDCdgaCheck cdga = check_pd_cdga(a);
    if (s.json_output) {
        json r = base_report("pd", a);
        r["verdict"] = "PD";
        json duals = json::array();
        for (int i = 0; i <= pd.m; ++i)
            for (std::size_t u = 0; u < a.dim(i); ++u)
                duals.push_back({{"element", a.labels(i)[u]}, {"dual", a.format(pd.duals[i][u])}});
        r["details"] = {{"m", pd.m},
                        {"orientation_class", a.labels(pd.m)[0]},
                        {"duals", duals},
                        {"pd_cdga", cdga.ok}};
        if (cdga.witness)
            r["witnesses"].push_back(*cdga.witness);
        return emit(out, r);
    }
    header_text(out, a);
    out << "Poincare duality algebra of dimension " << pd.m << ", orientation class " << a.labels(pd.m)[0] << "\n";
    std::vector<std::vector<std::string>> rows{{"element", "dual"}};
    for (int i = 0; i <= pd.m; ++i)
        for (std::size_t u = 0; u < a.dim(i); ++u)
            rows.push_back({a.labels(i)[u], a.format(pd.duals[i][u])});
    print_table(out, rows);
    out << "pd-cdga: " << (cdga.ok ? "yes" : "no, d(" + *cdga.witness + ") != 0") << "\n";
    return 0;
}

int run_orient(const Settings& s, const Algebra& a, std::ostream& out)
{
    const Orientation o = orientability(a);
    if (s.json_output) {
        json r = base_report("orient", a);
        r["verdict"] = o.orientable ? "orientable" : "non-orientable";
        if (o.w1)
            r["points"].push_back(point_json(*o.w1));
        return emit(out, r);
    }
    header_text(out, a);
    if (o.orientable)
        out << "orientable\n";
    else
        out << "non-orientable, w1 = " << point_text(a, *o.w1) << "\n";
    return 0;
}

int run_cover(const Settings& s, const Algebra& a, const std::string& alpha, bool torsion_free, std::ostream& out)
{
    const CoverSpec spec{a, parse_point(alpha, a.field(), a.dim(1)), torsion_free};
    const CoverBetti b = cover_betti(spec);
    if (s.json_output) {
        json r = base_report("cover", a);
        r["points"].push_back(point_json(spec.alpha));
        r["profile"] = b.betti;
        r["verdict"] = b.upper_bound ? "upper bound" : "exact";
        r["details"] = {{"correction", b.correction}, {"z4_liftable", true}};
        return emit(out, r);
    }
    header_text(out, a);
    out << "alpha = " << point_text(a, spec.alpha) << ", alpha^2 = 0 (lifts to a Z_4 cover)\n";
    std::vector<std::vector<std::string>> rows{
        {"q", "b_q(X)", "correction", b.upper_bound ? "b_q(Y) <=" : "b_q(Y)"}};
    for (std::size_t q = 0; q < b.betti.size(); ++q)
        rows.push_back({std::to_string(q), std::to_string(a.dim(static_cast<int>(q))), std::to_string(b.correction[q]),
                        std::to_string(b.betti[q])});
    print_table(out, rows);
    return 0;
}

}  // namespace

int execute_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Resonance varieties, Maurer-Cartan sets and Poincare duality for finite CDGAs over prime fields",
                 "aomoto"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings settings;
    app.add_flag("--json", settings.json_output, "Emit a JSON report");
    app.add_option("--workers", settings.workers, "Worker threads for point enumeration")->check(CLI::Range(1U, 256U));
    app.add_option("--cap", settings.cap, "Maximum number of enumerated points");

    std::string file, output, at, alpha, space;
    std::vector<std::string> params;
    std::optional<std::uint32_t> p;
    bool zero_diff = false, bockstein = false, all_depths = false, equations = false, torsion_free = false;
    int q = 0;
    std::optional<std::size_t> depth;

    auto* catalog = app.add_subcommand("catalog", "List the built-in spaces");
    auto* build = app.add_subcommand("build", "Write a catalog algebra in basis-mode file format");
    build->add_option("space", space, "Catalog name")->required();
    build->add_option("params", params, "Parameters, e.g. 3 or twisted");
    build->add_option("--p", p, "Characteristic");
    build->add_flag("--zero-diff", zero_diff, "Replace the differential by zero");
    build->add_option("-o,--output", output, "Output file (default: standard output)");

    auto* validate = app.add_subcommand("validate", "Check the CDGA axioms");
    auto* mc = app.add_subcommand("mc", "Maurer-Cartan set");
    auto* betti = app.add_subcommand("betti", "Betti numbers of the Aomoto complex");
    betti->add_option("--at", at, "Point as comma-separated coordinates (default 0)");
    auto* resonance_cmd = app.add_subcommand("resonance", "Resonance varieties");
    resonance_cmd->add_option("--q", q, "Cohomological degree")->required()->check(CLI::NonNegativeNumber);
    auto* s_opt = resonance_cmd->add_option("--s", depth, "Depth (default 1)");
    auto* all_opt = resonance_cmd->add_flag("--all-depths", all_depths, "Every depth 1..c_q");
    s_opt->excludes(all_opt);
    resonance_cmd->add_flag("--equations", equations, "Canonical defining polynomial (F_2 only)");
    auto* zd = resonance_cmd->add_flag("--zero-diff", zero_diff, "Usual resonance: drop the differential");
    auto* bk = resonance_cmd->add_flag("--bockstein", bockstein, "Bockstein resonance: require d(e) = e^2");
    zd->excludes(bk);
    auto* pd = app.add_subcommand("pd", "Poincare duality structure");
    auto* orient = app.add_subcommand("orient", "Orientability and w1 from the Bockstein");
    auto* cover = app.add_subcommand("cover", "Betti numbers of a double cover");
    cover->add_option("--alpha", alpha, "Characteristic class as comma-separated coordinates")->required();
    cover->add_flag("--torsion-free", torsion_free, "Integral homology of the base is torsion-free (bound mode)");
    for (CLI::App* sub : {validate, mc, betti, resonance_cmd, pd, orient, cover})
        sub->add_option("file", file, "Algebra file")->required();

    std::vector<const char*> argv{"aomoto"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (catalog->parsed())
            return run_catalog(settings, out);
        if (build->parsed())
            return run_build(settings, space, params, p, zero_diff, output, out);
        const Algebra a = load(file);
        if (validate->parsed())
            return run_validate(settings, a, out);
        if (mc->parsed())
            return run_mc(settings, a, out);
        if (betti->parsed())
            return run_betti(settings, a, at, out);
        if (resonance_cmd->parsed())
            return run_resonance(settings, a, q, depth, all_depths, equations, zero_diff, bockstein, out);
        if (pd->parsed())
            return run_pd(settings, a, out, err);
        if (orient->parsed())
            return run_orient(settings, a, out);
        if (cover->parsed())
            return run_cover(settings, a, alpha, torsion_free, out);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace aomoto

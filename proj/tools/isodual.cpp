#include "isodual/catalog.hpp"
#include "isodual/error.hpp"
#include "isodual/io.hpp"
#include "isodual/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace isodual;

namespace
{

enum Exit
{
    ok = 0,
    failed = 1,
    invalid_input = 2,
    io_failure = 3,
    solver_cap = 4,
    incompatible = 5,
    bad_certificate = 6,
};

struct Common
{
    std::uint64_t seed = IrrepOptions{}.seed;
    std::optional<double> tol;
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--seed", c.seed, "Seed for the irrep solver and random self-tests");
    cmd->add_option("--tol", c.tol, "Override the spec's orthogonal-block tolerance");
    cmd->add_option("--out", c.out, "Write JSON here instead of stdout");
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json"}));
}

void emit(const Json& j, const Common& c)
{
    if (c.out.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_json_file(c.out, j);
}

GroupSpec load(const std::string& source, const Common& c)
{
    GroupSpec spec = load_spec(source);
    if (c.tol)
        spec.tol = *c.tol;
    return spec;
}

//! Load and reject specs that violate an axiom.
GroupSpec load_valid(const std::string& source, const Common& c)
{
    GroupSpec spec = load(source, c);
    auto v = validate_spec(spec);
    if (!v.empty())
        throw FormatError("invalid spec, " + v.front().axiom + ": " + v.front().detail);
    return spec;
}

int run_analyze(const std::string& source, const std::vector<long long>& moduli, const Common& c)
{
    GroupSpec spec = load(source, c);
    auto violations = validate_spec(spec);
    StructureReport report;
    if (violations.empty())
        report = find_m0(spec);
    emit(report_to_json(spec, report, violations, moduli), c);
    return violations.empty() ? ok : invalid_input;
}

int run_dual(const std::string& source, long long modulus, const Common& c)
{
    GroupSpec spec = load_valid(source, c);
    IrrepOptions opt;
    opt.seed = c.seed;
    auto atlas = enumerate_dual(spec, modulus, opt);
    emit(atlas_to_json(atlas), c);
    return atlas.passed() ? ok : failed;
}

int run_fourier(const std::string& source, const std::string& file, bool inverse, bool check,
                const Common& c)
{
    GroupSpec spec = load_valid(source, c);
    Json in = read_json_file(file);
    long long modulus = 0;
    try {
        modulus = in.at("N").get<long long>();
    } catch (const Json::exception&) {
        throw FormatError("input file has no integer field 'N'");
    }
    auto group = build_quotient(spec, modulus);
    IrrepOptions opt;
    opt.seed = c.seed;

    if (inverse) {
        auto table = table_from_json(in, group);
        opt.seed = table.seed;
        auto ir = irreps(group, opt);
        auto u = inverse_transform(table, ir);
        Json outj = function_to_json(u);
        int code = ok;
        if (check) {
            double err = max_difference(transform(u, ir), table);
            outj["check"] = {{"round_trip_error", err}, {"passed", err <= 1e-8}};
            code = err <= 1e-8 ? ok : failed;
        }
        emit(outj, c);
        return code;
    }

    auto u = function_from_json(in, group);
    auto ir = irreps(group, opt);
    auto table = transform(u, ir);
    Json outj = table_to_json(table);
    int code = ok;
    if (check) {
        double planch = std::abs(inner_product(u, u) - plancherel_sum(table, table, ir));
        double round = max_difference(inverse_transform(table, ir), u);
        bool pass = planch <= 1e-8 && round <= 1e-8;
        outj["check"] = {{"plancherel_error", planch}, {"round_trip_error", round}, {"passed", pass}};
        code = pass ? ok : failed;
    }
    emit(outj, c);
    return code;
}

int run_split(const std::string& source, long long m, long long n, const Common& c)
{
    GroupSpec spec = load_valid(source, c);
    auto cert = split_quotient(spec, m, n);
    emit(certificate_to_json(cert), c);
    return cert.passed() ? ok : bad_certificate;
}

int run_verify(const std::string& source, const Common& c)
{
    GroupSpec spec = load(source, c);
    VerifyOptions opt;
    opt.seed = c.seed;
    auto checks = verify_group(spec, opt);
    const Check* bad = first_failure(checks);
    Json j{{"group", spec.name}, {"checks", to_json(checks)}, {"passed", bad == nullptr}};
    if (bad) {
        j["first_failure"] = bad->name;
        std::cerr << "verify failed: " << bad->name;
        if (!bad->detail.empty())
            std::cerr << " (" << bad->detail << ")";
        std::cerr << '\n';
    }
    emit(j, c);
    if (!bad)
        return ok;
    return bad->name.rfind("spec: ", 0) == 0 ? invalid_input : failed;
}

int exit_code_for(const std::exception& e)
{
    if (dynamic_cast<const IoError*>(&e))
        return io_failure;
    if (dynamic_cast<const CapExceeded*>(&e) || dynamic_cast<const ConvergenceFailure*>(&e))
        return solver_cap;
    if (dynamic_cast<const ShapeMismatch*>(&e) || dynamic_cast<const BadModulus*>(&e)
        || dynamic_cast<const NotCoprime*>(&e) || dynamic_cast<const IncompleteTable*>(&e))
        return incompatible;
    if (dynamic_cast<const FormatError*>(&e) || dynamic_cast<const DimensionMismatch*>(&e)
        || dynamic_cast<const NotAMember*>(&e) || dynamic_cast<const IntegralityViolation*>(&e))
        return invalid_input;
    return failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Structure, dual space and harmonic analysis of discrete isometry groups"};
    app.require_subcommand(1);

    Common common;
    std::string spec_source;
    std::vector<long long> moduli;
    long long modulus = 0, m = 0, n = 0;
    std::string file;
    bool inverse = false, check = false;

    auto* analyze = app.add_subcommand("analyze", "Validate a spec and report m0 and quotient orders");
    analyze->add_option("spec", spec_source, "Spec file or catalog:<name>")->required();
    analyze->add_option("--N", moduli, "Quotient moduli to report");
    add_common(analyze, common);

    auto* dual = app.add_subcommand("dual", "Wave-label atlas of the quotient G_N");
    dual->add_option("spec", spec_source, "Spec file or catalog:<name>")->required();
    dual->add_option("--N", modulus, "Quotient modulus (a multiple of m0)")->required();
    add_common(dual, common);

    auto* fourier = app.add_subcommand("fourier", "Fourier transform of a periodic function file");
    fourier->add_option("spec", spec_source, "Spec file or catalog:<name>")->required();
    fourier->add_option("file", file, "Function file, or table file with --inverse")->required();
    fourier->add_flag("--inverse", inverse, "Invert a Fourier table");
    fourier->add_flag("--check", check, "Run the Plancherel and round-trip self-test");
    add_common(fourier, common);

    auto* split = app.add_subcommand("split", "Semidirect splitting certificate for G_{nm}");
    split->add_option("spec", spec_source, "Spec file or catalog:<name>")->required();
    split->add_option("--m", m, "Multiple of m0")->required();
    split->add_option("--n", n, "Coprime to m and |rot(S)|")->required();
    add_common(split, common);

    auto* verify = app.add_subcommand("verify", "Run the full invariant suite");
    verify->add_option("spec", spec_source, "Spec file or catalog:<name>")->required();
    add_common(verify, common);

    auto* list = app.add_subcommand("catalog", "List the built-in groups or print one as a spec file");
    std::string show;
    list->add_option("--show", show, "Print the spec JSON of this entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : invalid_input;
    }

    try {
        if (*analyze)
            return run_analyze(spec_source, moduli, common);
        if (*dual)
            return run_dual(spec_source, modulus, common);
        if (*fourier)
            return run_fourier(spec_source, file, inverse, check, common);
        if (*split)
            return run_split(spec_source, m, n, common);
        if (*verify)
            return run_verify(spec_source, common);
        if (*list) {
            if (!show.empty()) {
                std::cout << spec_to_json(catalog_entry(show).spec).dump(2) << '\n';
                return ok;
            }
            for (const auto& e : catalog())
                std::cout << e.name << "  " << e.description << '\n';
            return ok;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return exit_code_for(e);
    }
    return failed;
}

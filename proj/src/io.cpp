#include "isodual/io.hpp"

#include "isodual/catalog.hpp"
#include "isodual/error.hpp"

#include <fstream>

namespace isodual
{

namespace
{

template<class T>
T field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw FormatError(std::string("field '") + key + "': " + e.what());
    }
}

Json matrix_to_json(const Eigen::MatrixXd& m)
{
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const Json& j, int dim)
{
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw FormatError("expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    Eigen::MatrixXd m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != dim)
            throw FormatError("matrix row " + std::to_string(r) + " has the wrong length");
        for (int c = 0; c < dim; ++c) {
            if (!j[r][c].is_number())
                throw FormatError("matrix entries must be numbers");
            m(r, c) = j[r][c].get<double>();
        }
    }
    return m;
}

Json point_to_json(const LatticePointOp& p)
{
    Json rows = Json::array();
    for (int i = 0; i < p.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < p.dim(); ++j)
            row.push_back(p(i, j));
        rows.push_back(row);
    }
    return rows;
}

LatticePointOp point_from_json(const Json& j, int dim)
{
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw FormatError("expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " integer matrix");
    std::vector<long long> a;
    for (int r = 0; r < dim; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != dim)
            throw FormatError("integer matrix row has the wrong length");
        for (int c = 0; c < dim; ++c) {
            if (!j[r][c].is_number_integer())
                throw FormatError("point parts must be integer matrices");
            a.push_back(j[r][c].get<long long>());
        }
    }
    return LatticePointOp(dim, std::move(a));
}

RationalVector rationals_from_json(const Json& j, int dim)
{
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw FormatError("expected " + std::to_string(dim) + " rationals");
    RationalVector v;
    for (const auto& x : j) {
        if (x.is_string())
            v.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
            v.push_back(Rational(x.get<long long>()));
        else
            throw FormatError("rationals are written as \"p/q\" strings");
    }
    return v;
}

Json complex_to_json(Complex z)
{
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw FormatError("complex numbers are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json shape_json(int rows, int cols)
{
    return Json::array({rows, cols});
}

std::pair<int, int> shape_from_json(const Json& j)
{
    auto s = field<std::vector<int>>(j, "shape");
    if (s.size() != 2 || s[0] < 1 || s[1] < 1)
        throw FormatError("shape must be [rows, cols] with positive entries");
    return {s[0], s[1]};
}

void check_group(const Json& j, const QuotientGroup& q)
{
    auto name = field<std::string>(j, "group");
    auto n = field<long long>(j, "N");
    if (name != q.spec().name)
        throw ShapeMismatch("file is for group '" + name + "', not '" + q.spec().name + "'");
    if (n != q.modulus())
        throw ShapeMismatch("file has period N = " + std::to_string(n) + ", expected "
                            + std::to_string(q.modulus()));
}

} // namespace

//---------------------------------------------------------------------------//

Json spec_to_json(const GroupSpec& spec)
{
    Json j;
    j["name"] = spec.name;
    j["d1"] = spec.d1;
    j["d2"] = spec.d2;
    j["tol"] = spec.tol;
    j["f_elements"] = Json::array();
    for (const auto& f : spec.f_elements)
        j["f_elements"].push_back(matrix_to_json(f.matrix()));
    j["t_lifts"] = Json::array();
    for (const auto& t : spec.t_lifts)
        j["t_lifts"].push_back({{"q", matrix_to_json(t.q.matrix())}});
    j["p_reps"] = Json::array();
    for (const auto& p : spec.p_reps)
        j["p_reps"].push_back(
            {{"q", matrix_to_json(p.q.matrix())}, {"p", point_to_json(p.p)}, {"tau", to_json(p.tau)}});
    if (spec.m0_bound_override)
        j["m0_bound"] = *spec.m0_bound_override;
    return j;
}

GroupSpec spec_from_json(const Json& j)
{
    GroupSpec spec;
    spec.name = field<std::string>(j, "name");
    spec.d1 = field<int>(j, "d1");
    spec.d2 = field<int>(j, "d2");
    if (spec.d1 < 0 || spec.d2 < 0)
        throw FormatError("dimensions must be nonnegative");
    if (j.contains("tol"))
        spec.tol = field<double>(j, "tol");
    if (j.contains("m0_bound"))
        spec.m0_bound_override = field<long long>(j, "m0_bound");

    const auto& fs = j.at("f_elements");
    if (!fs.is_array())
        throw FormatError("f_elements must be a list of matrices");
    for (const auto& f : fs)
        spec.f_elements.emplace_back(matrix_from_json(f, spec.d1));

    if (!j.contains("t_lifts") || !j["t_lifts"].is_array())
        throw FormatError("missing field 't_lifts'");
    int i = 0;
    for (const auto& t : j["t_lifts"]) {
        if (i >= spec.d2)
            throw FormatError("more t_lifts than d2");
        spec.t_lifts.push_back(
            Isometry::translation(OrthoMatrix(matrix_from_json(t.at("q"), spec.d1)), unit_vector(spec.d2, i)));
        ++i;
    }

    if (!j.contains("p_reps") || !j["p_reps"].is_array())
        throw FormatError("missing field 'p_reps'");
    for (const auto& p : j["p_reps"]) {
        if (!p.contains("q") || !p.contains("p") || !p.contains("tau"))
            throw FormatError("p_reps entries need q, p and tau");
        spec.p_reps.push_back(Isometry{OrthoMatrix(matrix_from_json(p["q"], spec.d1)),
                                       point_from_json(p["p"], spec.d2),
                                       rationals_from_json(p["tau"], spec.d2)});
    }
    return spec;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
    if (!out)
        throw IoError("write to '" + path + "' failed");
}

GroupSpec load_spec(const std::string& source)
{
    const std::string prefix = "catalog:";
    if (source.rfind(prefix, 0) == 0)
        return catalog_entry(source.substr(prefix.size())).spec;
    try {
        return spec_from_json(read_json_file(source));
    } catch (const Json::exception& e) {
        throw FormatError(e.what());
    } catch (const DimensionMismatch& e) {
        throw FormatError(e.what());
    }
}

//---------------------------------------------------------------------------//

Json to_json(const NormalForm& nf)
{
    return {{"n", nf.n}, {"f", nf.f}, {"p", nf.p}};
}

NormalForm normal_form_from_json(const Json& j)
{
    return NormalForm{field<std::vector<long long>>(j, "n"), field<int>(j, "f"), field<int>(j, "p")};
}

Json to_json(const RationalVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

Json to_json(const CMatrix& m)
{
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(complex_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

CMatrix cmatrix_from_json(const Json& j)
{
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw FormatError("matrix values are lists of rows");
    CMatrix m(j.size(), j[0].size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != j[0].size())
            throw FormatError("ragged matrix value");
        for (std::size_t c = 0; c < j[r].size(); ++c)
            m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

Json to_json(const std::vector<Check>& checks)
{
    Json a = Json::array();
    for (const auto& c : checks)
        a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return a;
}

Json report_to_json(const GroupSpec& spec, const StructureReport& report,
                    const std::vector<Violation>& violations, const std::vector<long long>& moduli)
{
    Json j;
    j["group"] = spec.name;
    j["valid"] = violations.empty();
    j["violations"] = Json::array();
    for (const auto& v : violations)
        j["violations"].push_back({{"axiom", v.axiom}, {"detail", v.detail}});
    j["d1"] = spec.d1;
    j["d2"] = spec.d2;
    if (!violations.empty())
        return j;
    j["m0"] = report.m0;
    j["m0_bound"] = report.m0_bound;
    j["aut_order"] = report.aut_order;
    j["is_space_group"] = report.is_space_group;
    j["f_order"] = report.f_order;
    j["point_order"] = report.point_order;
    j["scanned"] = Json::array();
    for (const auto& [m, ok] : report.scanned)
        j["scanned"].push_back({{"m", m}, {"normal", ok}});
    j["quotients"] = Json::array();
    for (long long n : moduli) {
        Json q{{"N", n}, {"valid", n % report.m0 == 0}};
        if (n % report.m0 == 0) {
            long long order = static_cast<long long>(report.f_order) * report.point_order;
            for (int i = 0; i < spec.d2; ++i)
                order *= n;
            q["order"] = order;
        }
        j["quotients"].push_back(q);
    }
    return j;
}

Json atlas_to_json(const Atlas& atlas)
{
    Json j;
    j["group"] = atlas.group_name;
    j["N"] = atlas.modulus;
    j["m0"] = atlas.m0;
    j["group_order"] = atlas.group->size();
    j["seed"] = atlas.irreps.seed;
    j["rep_set"] = Json::array();
    for (std::size_t c = 0; c < atlas.reps.classes.size(); ++c) {
        const auto& lg = atlas.little_groups[c];
        Json little = Json::array();
        for (const auto& e : lg.elements)
            little.push_back({{"p", e.p}, {"shift", to_json(e.shift)}});
        j["rep_set"].push_back({{"index", c},
                                {"dim", atlas.reps.classes[c].dim()},
                                {"candidate", atlas.reps.candidate_of_class[c]},
                                {"little_group", little}});
    }
    j["discarded"] = Json::array();
    for (const auto& p : atlas.reps.provenance)
        j["discarded"].push_back(
            {{"candidate", p.candidate}, {"class", p.class_index}, {"p", p.p}, {"k", to_json(p.k)}});
    j["labels"] = Json::array();
    for (const auto& e : atlas.entries)
        j["labels"].push_back({{"rho_index", e.label.rho},
                               {"k", to_json(e.label.k)},
                               {"orbit_size", e.label.orbit_size},
                               {"in_null_set", e.label.in_null_set},
                               {"induced_dim", e.induced.dim()},
                               {"irreducible", e.irreducible},
                               {"mackey_irreducible", e.mackey_irreducible},
                               {"multiplicities", e.multiplicities}});
    j["census"] = atlas.census();
    j["checks"] = to_json(atlas.checks);
    j["passed"] = atlas.passed();
    return j;
}

Json certificate_to_json(const SplitCertificate& c)
{
    Json j;
    j["group"] = c.group_name;
    j["m"] = c.m;
    j["n"] = c.n;
    j["N"] = c.modulus;
    j["a"] = c.a;
    j["tau"] = Json::array();
    for (const auto& t : c.tau)
        j["tau"].push_back(to_json(t));
    j["cocycle"] = Json::array();
    for (const auto& row : c.cocycle) {
        Json r = Json::array();
        for (const auto& v : row)
            r.push_back(to_json(v));
        j["cocycle"].push_back(r);
    }
    j["complement_translations"] = Json::array();
    for (const auto& t : c.complement.translations)
        j["complement_translations"].push_back(to_json(t));
    j["orders"] = {{"group", c.group_order}, {"normal", c.normal_order}, {"complement", c.complement_order}};
    j["normal_generators"] = Json::array();
    for (const auto& g : c.normal_generators)
        j["normal_generators"].push_back(to_json(g));
    j["complement_generators"] = Json::array();
    for (const auto& g : c.complement_generators)
        j["complement_generators"].push_back(to_json(g));
    j["direct"] = c.direct;
    j["checks"] = to_json(c.checks);
    j["passed"] = c.passed();
    return j;
}

//---------------------------------------------------------------------------//

Json function_to_json(const PeriodicFunction& u)
{
    Json j;
    j["group"] = u.group->spec().name;
    j["N"] = u.modulus();
    j["shape"] = shape_json(u.rows, u.cols);
    j["entries"] = Json::array();
    for (int g = 0; g < u.group->size(); ++g) {
        if (u.values[g].isZero(0.0))
            continue;
        Json e = to_json(u.group->element(g));
        e["value"] = to_json(u.values[g]);
        j["entries"].push_back(e);
    }
    return j;
}

PeriodicFunction function_from_json(const Json& j, const QuotientPtr& group)
{
    check_group(j, *group);
    auto [rows, cols] = shape_from_json(j);
    auto u = PeriodicFunction::zero(group, rows, cols);
    if (!j.contains("entries") || !j["entries"].is_array())
        throw FormatError("missing field 'entries'");
    const auto& spec = group->spec();
    for (const auto& e : j["entries"]) {
        auto nf = normal_form_from_json(e);
        if (static_cast<int>(nf.n.size()) != spec.d2 || nf.f < 0 || nf.f >= spec.f_order() || nf.p < 0
            || nf.p >= spec.point_order())
            throw FormatError("entry index out of range");
        auto value = cmatrix_from_json(e.at("value"));
        if (value.rows() != rows || value.cols() != cols)
            throw ShapeMismatch("entry value does not match the declared shape");
        u.values[group->index_of(nf)] = value;
    }
    return u;
}

Json table_to_json(const FourierTable& t)
{
    Json j;
    j["group"] = t.group->spec().name;
    j["N"] = t.group->modulus();
    j["seed"] = t.seed;
    j["shape"] = shape_json(t.rows, t.cols);
    j["entries"] = Json::array();
    for (const auto& [r, m] : t.entries)
        j["entries"].push_back({{"irrep", r}, {"dim", m.rows() / t.rows}, {"value", to_json(m)}});
    return j;
}

FourierTable table_from_json(const Json& j, const QuotientPtr& group)
{
    check_group(j, *group);
    FourierTable t;
    t.group = group;
    t.seed = field<std::uint64_t>(j, "seed");
    std::tie(t.rows, t.cols) = shape_from_json(j);
    if (!j.contains("entries") || !j["entries"].is_array())
        throw FormatError("missing field 'entries'");
    for (const auto& e : j["entries"])
        t.entries[field<int>(e, "irrep")] = cmatrix_from_json(e.at("value"));
    return t;
}

} // namespace isodual

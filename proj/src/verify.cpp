#include "isodual/verify.hpp"

#include "isodual/catalog.hpp"
#include "isodual/dual_space.hpp"
#include "isodual/error.hpp"
#include "isodual/fourier.hpp"
#include "isodual/splitting.hpp"

#include <numeric>
#include <random>

namespace isodual
{

namespace
{

constexpr double identity_tol = 1e-8;

std::string tag(long long n)
{
    return " (N=" + std::to_string(n) + ")";
}

void representation_checks(std::vector<Check>& out, const QuotientPtr& g, const VerifyOptions& opt)
{
    const std::string t = tag(g->modulus());
    const auto ir = irreps(g, IrrepOptions{4096, 8, opt.seed});
    long long squares = 0;
    double hom = 0, uni = 0, norm = 0;
    for (const auto& r : ir.irreps) {
        squares += static_cast<long long>(r.dim()) * r.dim();
        hom = std::max(hom, r.homomorphism_defect(50, opt.seed));
        uni = std::max(uni, r.unitarity_defect());
        norm = std::max(norm, std::abs(character_norm(r) - 1.0));
    }
    out.push_back({"irrep dimensions square-sum to the order" + t, squares == g->size(),
                   std::to_string(squares) + " vs " + std::to_string(g->size())});
    out.push_back({"irreps are homomorphisms" + t, hom <= identity_tol, "defect " + std::to_string(hom)});
    out.push_back({"irreps are unitary" + t, uni <= identity_tol, "defect " + std::to_string(uni)});
    out.push_back({"irreps have character norm 1" + t, norm <= structural_tol, "defect " + std::to_string(norm)});
    bool distinct = true;
    for (std::size_t a = 0; a < ir.irreps.size() && distinct; ++a)
        for (std::size_t b = a + 1; b < ir.irreps.size(); ++b)
            if (equivalent(ir.irreps[a], ir.irreps[b]))
                distinct = false;
    out.push_back({"irreps pairwise inequivalent" + t, distinct, ""});

    std::mt19937_64 rng(opt.seed);
    double planch = 0, round = 0, trans = 0, conv = 0;
    std::uniform_int_distribution<int> pick(0, g->size() - 1);
    for (int s = 0; s < opt.samples; ++s) {
        auto u = PeriodicFunction::random(g, 2, 3, rng);
        auto v = PeriodicFunction::random(g, 2, 3, rng);
        auto tu = transform(u, ir);
        auto tv = transform(v, ir);
        planch = std::max(planch, std::abs(inner_product(u, v) - plancherel_sum(tu, tv, ir)));
        round = std::max(round, max_difference(inverse_transform(tu, ir), u));

        const int gi = pick(rng);
        auto lhs = transform(translate(u, g->element(gi)), ir);
        for (auto& [r, m] : tu.entries) {
            CMatrix right = kron(CMatrix::Identity(3, 3), ir.irreps[r](g->inverse(gi)));
            CMatrix expect = m * right;
            trans = std::max(trans, (lhs.entries[r] - expect).cwiseAbs().maxCoeff());
        }

        SummableFunction w;
        w.rows = 4;
        w.cols = 2;
        std::normal_distribution<double> nd(0.0, 1.0);
        for (int k = 0; k < 3; ++k) {
            NormalForm nf = g->element(pick(rng));
            for (auto& x : nf.n)
                x += g->modulus() * static_cast<long long>(k - 1);
            CMatrix val(4, 2);
            for (Eigen::Index i = 0; i < val.size(); ++i)
                val(i) = Complex(nd(rng), nd(rng));
            auto [it, fresh] = w.support.emplace(nf, val);
            if (!fresh)
                it->second += val;
        }
        auto tw = transform(w, ir);
        auto tc = transform(convolve(w, u), ir);
        for (auto& [r, m] : tc.entries)
            conv = std::max(conv, (m - tw.entries[r] * tu.entries[r]).cwiseAbs().maxCoeff());
    }
    out.push_back({"Plancherel identity" + t, planch <= identity_tol, "error " + std::to_string(planch)});
    out.push_back({"Fourier round trip" + t, round <= identity_tol, "error " + std::to_string(round)});
    out.push_back({"translation identity" + t, trans <= identity_tol, "error " + std::to_string(trans)});
    out.push_back({"convolution identity" + t, conv <= identity_tol, "error " + std::to_string(conv)});
}

} // namespace

const Check* first_failure(const std::vector<Check>& checks)
{
    for (const auto& c : checks)
        if (!c.passed)
            return &c;
    return nullptr;
}

std::vector<Check> verify_group(const GroupSpec& spec, const VerifyOptions& opt)
{
    std::vector<Check> out;
    const auto violations = validate_spec(spec);
    for (const auto& v : violations)
        out.push_back({"spec: " + v.axiom, false, v.detail});
    if (!violations.empty())
        return out;
    out.push_back({"spec axioms", true, ""});

    StructureReport report;
    try {
        report = find_m0(spec);
    } catch (const Error& e) {
        out.push_back({"m0 search", false, e.what()});
        return out;
    }
    const long long m0 = report.m0;
    out.push_back({"m0 divides the bound", report.m0_bound % m0 == 0,
                   std::to_string(m0) + " | " + std::to_string(report.m0_bound)});
    out.push_back({"T^m0 is normal", is_power_normal(spec, m0), ""});
    bool minimal = true;
    for (long long d : divisors(m0))
        if (d < m0 && is_power_normal(spec, d))
            minimal = false;
    out.push_back({"no proper divisor of m0 is good", minimal, ""});
    out.push_back({"multiples of m0 are good", is_power_normal(spec, 2 * m0) && is_power_normal(spec, 3 * m0), ""});

    for (const auto& entry : catalog())
        if (entry.name == spec.name)
            out.push_back({"catalog expectations", entry.expected_m0 == m0
                                                       && entry.expected_f_order == spec.f_order()
                                                       && entry.expected_point_order == spec.point_order(),
                           "expected m0 = " + std::to_string(entry.expected_m0)});

    std::mt19937_64 rng(opt.seed);
    for (long long n : {m0, 2 * m0}) {
        long long order = static_cast<long long>(spec.f_order()) * spec.point_order();
        for (int i = 0; i < spec.d2; ++i)
            order *= n;
        if (order > opt.max_order) {
            out.push_back({"quotient checks" + tag(n), true, "skipped: order " + std::to_string(order)});
            continue;
        }
        auto g = build_quotient(spec, n, report);
        out.push_back({"order formula" + tag(n), g->size() == order,
                       std::to_string(g->size()) + " vs " + std::to_string(order)});
        out.push_back({"group axioms" + tag(n), g->verify_axioms(200, opt.seed), ""});
        bool tables = true;
        std::uniform_int_distribution<int> pick(0, g->size() - 1);
        for (int s = 0; s < 100; ++s) {
            int a = pick(rng), b = pick(rng);
            if (g->multiply(a, b) != g->multiply_exact(a, b))
                tables = false;
        }
        out.push_back({"tables agree with exact products" + tag(n), tables, ""});

        bool reduction = true;
        std::uniform_int_distribution<long long> expo(-3 * n, 3 * n);
        for (int s = 0; s < 20 && spec.d2 > 0; ++s) {
            std::vector<long long> e(spec.d2);
            for (auto& x : e)
                x = expo(rng);
            int j = static_cast<int>(rng() % spec.d2);
            auto shifted = e;
            shifted[j] += n;
            auto lhs = normal_form(spec, power_section(spec, shifted));
            auto rhs = normal_form(spec, compose(power_section(spec, e), power(spec.t_lifts[j], n)));
            if (!(lhs == rhs))
                reduction = false;
        }
        out.push_back({"mod-N reduction sound" + tag(n), reduction, ""});

        try {
            representation_checks(out, g, opt);
            auto atlas = enumerate_dual(spec, n, IrrepOptions{4096, 8, opt.seed});
            for (auto c : atlas.checks) {
                c.name = "dual: " + c.name + tag(n);
                out.push_back(c);
            }
        } catch (const Error& e) {
            out.push_back({"representation checks" + tag(n), false, e.what()});
        }
    }

    if (spec.d2 > 0 && spec.point_order() > 1) {
        bool coherent = true;
        std::uniform_int_distribution<long long> num(0, 59);
        std::uniform_int_distribution<int> pp(0, spec.point_order() - 1);
        std::uniform_int_distribution<long long> sh(0, m0 - 1);
        for (int s = 0; s < 200; ++s) {
            DualVector k(spec.d2), shift(spec.d2);
            for (int i = 0; i < spec.d2; ++i) {
                k[i] = Rational(num(rng), 60);
                shift[i] = Rational(sh(rng), m0);
            }
            auto a = dual_action_matrix(spec.p_reps[pp(rng)].p);
            DualVector k2 = a * k - shift;
            if (null_set_member(spec, m0, k) != null_set_member(spec, m0, k2))
                coherent = false;
        }
        out.push_back({"null set respects the shift relation", coherent, ""});
    }

    try {
        cocycle(spec);
        out.push_back({"cocycle integral", true, ""});
    } catch (const IntegralityViolation& e) {
        out.push_back({"cocycle integral", false, e.what()});
    }
    for (long long n = 2; n < 50; ++n) {
        if (std::gcd(n, m0) != 1 || std::gcd(n, static_cast<long long>(spec.point_order())) != 1)
            continue;
        long long order = static_cast<long long>(spec.f_order()) * spec.point_order();
        for (int i = 0; i < spec.d2; ++i)
            order *= n * m0;
        if (order > opt.max_order)
            break;
        auto cert = split_quotient(spec, m0, n);
        for (auto c : cert.checks) {
            c.name = "split: " + c.name + " (m=" + std::to_string(m0) + ", n=" + std::to_string(n) + ")";
            out.push_back(c);
        }
        break;
    }
    return out;
}

} // namespace isodual

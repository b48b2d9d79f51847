#include "isodual/splitting.hpp"

#include "isodual/error.hpp"

#include <boost/integer/mod_inverse.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace isodual
{

std::vector<LatticeVector> section_tau(const GroupSpec& spec)
{
    std::vector<LatticeVector> out;
    for (const auto& p : spec.p_reps)
        out.push_back(p.tau);
    return out;
}

namespace
{

int product_index(const GroupSpec& spec, int i, int j)
{
    int k = spec.p_index(spec.p_reps[i].p * spec.p_reps[j].p);
    if (k < 0)
        throw InternalInconsistency("point parts are not closed under products");
    return k;
}

std::string vec_string(const LatticeVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

//! Calls f on every k in {0..side-1}^d2 in lexicographic order.
template<class F>
void for_each_exponent(int d2, long long side, F&& f)
{
    std::vector<long long> k(d2, 0);
    while (true) {
        f(k);
        int i = d2 - 1;
        while (i >= 0 && ++k[i] == side)
            k[i--] = 0;
        if (i < 0)
            break;
    }
}

} // namespace

CocycleTable cocycle(const GroupSpec& spec)
{
    const auto tau = section_tau(spec);
    const int r = spec.point_order();
    CocycleTable table(r, std::vector<LatticeVector>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            auto v = tau[i] + spec.p_reps[i].p * tau[j] - tau[product_index(spec, i, j)];
            if (!is_integral(v))
                throw IntegralityViolation("cocycle value " + vec_string(v) + " at point parts ("
                                           + std::to_string(i) + ", " + std::to_string(j)
                                           + ") is not a lattice vector");
            table[i][j] = std::move(v);
        }
    return table;
}

long long a_coeff(long long n, long long r)
{
    if (n <= 0 || r <= 0 || std::gcd(n, r) != 1)
        throw NotCoprime("n = " + std::to_string(n) + " and |rot(S)| = " + std::to_string(r)
                         + " are not coprime");
    if (n == 1)
        return 0;
    long long x = boost::integer::mod_inverse(r % n, n);
    return x == 0 ? 0 : x - n;
}

ComplementSet complement_set(const GroupSpec& spec, long long n)
{
    const int r = spec.point_order();
    ComplementSet cs;
    cs.n = n;
    cs.a = a_coeff(n, r);
    const auto tau = section_tau(spec);
    const auto bar = cocycle(spec);
    for (int i = 0; i < r; ++i) {
        auto sum = zero_vector(spec.d2);
        for (int j = 0; j < r; ++j)
            sum = sum + bar[i][j];
        auto t = tau[i] - Rational(cs.a) * sum;
        auto delta = to_integers(t - tau[i]);
        cs.elements.push_back(compose(power_section(spec, delta), spec.p_reps[i]));
        cs.translations.push_back(std::move(t));
    }

    // T_S^n P_S^(n) is a group iff products of complement elements land in it.
    cs.closed = true;
    for (int i = 0; i < r && cs.closed; ++i)
        for (int j = 0; j < r; ++j) {
            int k = product_index(spec, i, j);
            auto diff = cs.translations[i] + spec.p_reps[i].p * cs.translations[j] - cs.translations[k];
            if (!is_integral(Rational(1, n) * diff)) {
                cs.closed = false;
                break;
            }
        }
    return cs;
}

//---------------------------------------------------------------------------//

SplitCertificate split_quotient(const GroupSpec& spec, long long m, long long n)
{
    const StructureReport report = find_m0(spec);
    if (m <= 0 || m % report.m0 != 0)
        throw BadModulus("m = " + std::to_string(m) + " is not a multiple of m0 = "
                         + std::to_string(report.m0));
    if (n <= 0 || std::gcd(n, m) != 1)
        throw NotCoprime("n = " + std::to_string(n) + " and m = " + std::to_string(m)
                         + " are not coprime");

    SplitCertificate cert;
    cert.group_name = spec.name;
    cert.m = m;
    cert.n = n;
    cert.modulus = n * m;
    cert.tau = section_tau(spec);
    cert.cocycle = cocycle(spec);
    cert.complement = complement_set(spec, n);
    cert.a = cert.complement.a;

    const auto g = build_quotient(spec, cert.modulus, report);
    const QuotientGroup& q = *g;
    cert.group_order = q.size();
    const int d2 = spec.d2;

    // (T^m)_N through the map Z_n^d2 -> G_N, k -> prod (g_i^m)^{k_i}.
    std::vector<int> gens;
    for (int i = 0; i < d2; ++i) {
        auto gi = power(spec.t_lifts[i], m);
        cert.normal_generators.push_back(q.element(q.index_of(gi)));
        gens.push_back(q.index_of(gi));
    }
    std::set<int> normal;
    for_each_exponent(d2, n, [&](const std::vector<long long>& k) {
        int x = q.identity();
        for (int i = 0; i < d2; ++i)
            for (long long e = 0; e < k[i]; ++e)
                x = q.multiply(x, gens[i]);
        normal.insert(x);
    });
    // Every t^m with t in T lies in the image.
    bool powers_inside = true;
    for_each_exponent(d2, n, [&](const std::vector<long long>& k) {
        if (!normal.count(q.index_of(power(power_section(spec, k), m))))
            powers_inside = false;
    });
    cert.normal_elements.assign(normal.begin(), normal.end());
    cert.normal_order = static_cast<long long>(normal.size());

    long long nd = 1;
    for (int i = 0; i < d2; ++i)
        nd *= n;

    cert.checks.push_back({"normal part isomorphic to Z_n^d2",
                           cert.normal_order == nd && powers_inside,
                           "order " + std::to_string(cert.normal_order) + ", expected "
                               + std::to_string(nd)});

    Check abelian{"normal part abelian", true, ""};
    Check exponent{"normal part has exponent n", true, ""};
    for (int a : normal) {
        int x = q.identity();
        for (long long e = 0; e < n; ++e)
            x = q.multiply(x, a);
        if (x != q.identity() && exponent.passed) {
            exponent.passed = false;
            exponent.detail = "element " + std::to_string(a) + " has order not dividing n";
        }
        for (int b : normal)
            if (q.multiply(a, b) != q.multiply(b, a) && abelian.passed) {
                abelian.passed = false;
                abelian.detail = "elements " + std::to_string(a) + " and " + std::to_string(b);
            }
    }
    cert.checks.push_back(abelian);
    cert.checks.push_back(exponent);

    Check normality{"normal part is normal", true, ""};
    for (int x = 0; x < q.size() && normality.passed; ++x)
        for (int a : normal)
            if (!normal.count(q.conjugate(a, x))) {
                normality.passed = false;
                normality.detail = "conjugate of " + std::to_string(a) + " by " + std::to_string(x);
                break;
            }
    cert.checks.push_back(normality);

    cert.checks.push_back({"complement set closed in S", cert.complement.closed, ""});

    // H = {t'(k) f p : k in {0..m-1}^d2, f in F, p in P^(n)} with t'_i = g_i^n.
    std::vector<Isometry> tn;
    for (int i = 0; i < d2; ++i) {
        tn.push_back(power(spec.t_lifts[i], n));
        cert.complement_generators.push_back(q.element(q.index_of(tn.back())));
    }
    for (int f = 0; f < spec.f_order(); ++f)
        cert.complement_generators.push_back(q.element(q.index_of(spec.f_isometry(f))));
    for (const auto& e : cert.complement.elements)
        cert.complement_generators.push_back(q.element(q.index_of(e)));

    std::set<int> h;
    long long listed = 0;
    for_each_exponent(d2, m, [&](const std::vector<long long>& k) {
        Isometry t = Isometry::identity(spec.d1, spec.d2);
        for (int i = 0; i < d2; ++i)
            t = compose(t, power(tn[i], k[i]));
        for (int f = 0; f < spec.f_order(); ++f)
            for (const auto& p : cert.complement.elements) {
                h.insert(q.index_of(compose(compose(t, spec.f_isometry(f)), p)));
                ++listed;
            }
    });
    cert.complement_elements.assign(h.begin(), h.end());
    cert.complement_order = static_cast<long long>(h.size());

    long long md = 1;
    for (int i = 0; i < d2; ++i)
        md *= m;
    const long long expected_h = static_cast<long long>(spec.f_order()) * spec.point_order() * md;
    cert.checks.push_back({"complement order |F| |rot(S)| m^d2",
                           cert.complement_order == expected_h && listed == expected_h,
                           "order " + std::to_string(cert.complement_order) + ", expected "
                               + std::to_string(expected_h)});

    Check subgroup{"complement is a subgroup", h.count(q.identity()) > 0, ""};
    for (int a : h) {
        if (!subgroup.passed)
            break;
        for (int b : h)
            if (!h.count(q.multiply(a, b))) {
                subgroup.passed = false;
                subgroup.detail = "product of " + std::to_string(a) + " and " + std::to_string(b);
                break;
            }
    }
    cert.checks.push_back(subgroup);

    std::vector<int> meet;
    std::set_intersection(normal.begin(), normal.end(), h.begin(), h.end(), std::back_inserter(meet));
    cert.checks.push_back({"trivial intersection", meet.size() == 1 && meet.front() == q.identity(),
                           std::to_string(meet.size()) + " common elements"});

    cert.checks.push_back({"order product", cert.group_order == cert.normal_order * cert.complement_order,
                           std::to_string(cert.group_order) + " = " + std::to_string(cert.normal_order)
                               + " * " + std::to_string(cert.complement_order)});

    cert.direct = true;
    for (int a : normal) {
        for (int b : h)
            if (q.multiply(a, b) != q.multiply(b, a)) {
                cert.direct = false;
                break;
            }
        if (!cert.direct)
            break;
    }
    return cert;
}

std::vector<NormalForm> order_two_witnesses(const GroupSpec& spec, long long bound)
{
    std::vector<NormalForm> out;
    const Isometry id = Isometry::identity(spec.d1, spec.d2);
    for_each_exponent(spec.d2, 2 * bound + 1, [&](const std::vector<long long>& k) {
        NormalForm nf;
        nf.n.resize(k.size());
        for (std::size_t i = 0; i < k.size(); ++i)
            nf.n[i] = k[i] - bound;
        for (int f = 0; f < spec.f_order(); ++f)
            for (int p = 1; p < spec.point_order(); ++p) {
                nf.f = f;
                nf.p = p;
                Isometry g = reconstruct(spec, nf);
                if (approx_equal(compose(g, g), id, spec.tol))
                    out.push_back(nf);
            }
    });
    return out;
}

} // namespace isodual

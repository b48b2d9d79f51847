#include "oracles.hpp"

#include "isodual/catalog.hpp"
#include "isodual/error.hpp"
#include "isodual/fourier.hpp"
#include "isodual/representation.hpp"

#include <doctest.h>

#include <map>
#include <numbers>
#include <random>

using namespace isodual;

namespace
{

const GroupSpec& spec(const std::string& name)
{
    return catalog_entry(name).spec;
}

std::map<int, int> dimension_census(const IrrepSet& s)
{
    std::map<int, int> out;
    for (const auto& r : s.irreps)
        ++out[r.dim()];
    return out;
}

CMatrix random_unitary(int d, std::mt19937_64& rng)
{
    std::normal_distribution<double> n;
    CMatrix a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            a(i, j) = Complex(n(rng), n(rng));
    Eigen::HouseholderQR<CMatrix> qr(a);
    return qr.householderQ();
}

DualVector k2(long long a, long long b, long long den)
{
    return {Rational(a, den), Rational(b, den)};
}

} // namespace

TEST_CASE("irreps of small quotients")
{
    auto p1 = irreps(build_quotient(spec("p1"), 2));
    CHECK(p1.irreps.size() == 4);
    CHECK(dimension_census(p1) == std::map<int, int>{{1, 4}});

    auto g3 = build_quotient(spec("pg"), 3);
    auto pg = irreps(g3);
    CHECK(dimension_census(pg) == std::map<int, int>{{1, 6}, {2, 3}});
    CHECK(static_cast<int>(pg.irreps.size()) == oracle::class_count(*g3));

    auto c3 = irreps(build_quotient(spec("helix-C3-tf"), 1));
    CHECK(dimension_census(c3) == std::map<int, int>{{1, 3}});
}

TEST_CASE("irreps are unitary homomorphisms with orthonormal characters")
{
    for (const auto& e : catalog()) {
        auto g = build_quotient(e.spec, 2 * find_m0(e.spec).m0);
        auto s = irreps(g);
        CAPTURE(e.name);
        int squares = 0;
        for (const auto& r : s.irreps) {
            squares += r.dim() * r.dim();
            CHECK(r.unitarity_defect() <= 1e-9);
            CHECK(r.homomorphism_defect(50, 1) <= 1e-9);
        }
        CHECK(squares == g->size());
        CHECK(static_cast<int>(s.irreps.size()) == oracle::class_count(*g));
        for (std::size_t i = 0; i < s.irreps.size(); ++i)
            for (std::size_t j = 0; j < s.irreps.size(); ++j) {
                Complex ip = character_inner(s.irreps[i].character(), s.irreps[j].character());
                CHECK(std::abs(ip - Complex(i == j ? 1.0 : 0.0)) <= 1e-6);
            }
    }
}

TEST_CASE("irrep cap")
{
    IrrepOptions opt;
    opt.cap = 10;
    CHECK_THROWS_AS(irreps(build_quotient(spec("pg"), 3), opt), CapExceeded);
}

TEST_CASE("equivalence")
{
    std::mt19937_64 rng(11);
    auto g3 = build_quotient(spec("pg"), 3);
    auto s = irreps(g3);
    for (const auto& r : s.irreps)
        CHECK(equivalent(r, conjugate_by(r, random_unitary(r.dim(), rng))));

    auto tf = tf_quotient(*g3);
    auto a = chi(spec("pg"), k2(1, 0, 3)).as_representation(tf);
    auto b = chi(spec("pg"), k2(2, 0, 3)).as_representation(tf);
    CHECK_FALSE(equivalent(a, b));
    auto c = chi(spec("pg"), {Rational(1, 3) + 2, Rational(-1)}).as_representation(tf);
    CHECK(equivalent(a, c));
}

TEST_CASE("wave characters")
{
    const auto& pg = spec("pg");
    auto zero = chi(pg, k2(0, 0, 1));
    CHECK(std::abs(zero(NormalForm{{4, -2}, 0, 0}) - Complex(1)) <= 1e-15);

    DualVector k = k2(1, 2, 5);
    auto c = chi(pg, k);
    for (const auto& n : oracle::box(2, 3)) {
        double ang = 2 * std::numbers::pi * (n[0] + 2.0 * n[1]) / 5.0;
        CHECK(std::abs(c(NormalForm{n, 0, 0}) - Complex(std::cos(ang), std::sin(ang))) <= 1e-12);
    }

    const auto& helix = spec("helix-C3");
    auto h = chi(helix, {Rational(1, 4)});
    for (int f = 0; f < helix.f_order(); ++f)
        CHECK(std::abs(h(NormalForm{{0}, f, 0}) - Complex(1)) <= 1e-15);
    CHECK_THROWS_AS(c(NormalForm{{0, 0}, 0, 1}), NotAMember);
    CHECK(c.kills_power(5));
    CHECK_FALSE(c.kills_power(3));
}

TEST_CASE("dual action")
{
    const auto& pg = spec("pg");
    auto g3 = build_quotient(pg, 3);
    auto tf = tf_quotient(*g3);
    for (const auto& j : oracle::box(2, 1)) {
        DualVector k = k2(j[0] < 0 ? 2 : j[0], j[1] < 0 ? 2 : j[1], 3);
        auto r = chi(pg, k).as_representation(tf);
        CHECK(equivalent(dual_action(*g3, NormalForm{{1, 2}, 0, 0}, r), r));
        auto flipped = chi(pg, {k[0], -k[1]}).as_representation(tf);
        CHECK(equivalent(dual_action(*g3, NormalForm{{0, 0}, 0, 1}, r), flipped));
    }

    // (g' g) . rho = g' . (g . rho)
    std::mt19937_64 rng(5);
    const auto& h = spec("helix-C3");
    auto g = build_quotient(h, 2);
    auto htf = tf_quotient(*g);
    auto hs = irreps(htf);
    std::uniform_int_distribution<int> pick(0, g->size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        int a = pick(rng), b = pick(rng);
        const auto& r = hs.irreps[trial % hs.irreps.size()];
        auto lhs = dual_action(*g, g->element(g->multiply(a, b)), r);
        auto rhs = dual_action(*g, g->element(a), dual_action(*g, g->element(b), r));
        for (int x = 0; x < htf->size(); ++x)
            CHECK((lhs(x) - rhs(x)).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("induction")
{
    auto p1 = build_quotient(spec("p1"), 2);
    auto triv = trivial_representation(tf_quotient(*p1));
    auto ind = induce(p1, triv);
    CHECK(ind.dim() == 1);
    CHECK(equivalent(ind, trivial_representation(p1)));

    const auto& pg = spec("pg");
    auto g3 = build_quotient(pg, 3);
    auto tf = tf_quotient(*g3);
    auto r = induce(g3, chi(pg, k2(1, 1, 3)).as_representation(tf));
    CHECK(r.dim() == 2);
    CHECK(r.homomorphism_defect(100, 2) <= 1e-12);
    for (int g = 0; g < g3->size(); ++g) {
        // Translations act block-diagonally, glides swap the two blocks.
        const CMatrix& m = r(g);
        bool diagonal = std::abs(m(0, 1)) < 1e-12 && std::abs(m(1, 0)) < 1e-12;
        bool swap = std::abs(m(0, 0)) < 1e-12 && std::abs(m(1, 1)) < 1e-12;
        CHECK((g3->element(g).p == 0 ? diagonal : swap));
    }
    CHECK(is_irreducible(r));

    for (const auto& e : catalog()) {
        auto g = build_quotient(e.spec, find_m0(e.spec).m0);
        auto t = tf_quotient(*g);
        for (const auto& s : irreps(t).irreps)
            CHECK(induce(g, s).dim() == e.spec.point_order() * s.dim());
    }
}

TEST_CASE("Mackey test")
{
    const auto& pg = spec("pg");
    auto g3 = build_quotient(pg, 3);
    auto tf = tf_quotient(*g3);
    CHECK(mackey_irreducible(*g3, chi(pg, k2(1, 1, 3)).as_representation(tf)));
    CHECK_FALSE(mackey_irreducible(*g3, chi(pg, k2(1, 0, 3)).as_representation(tf)));
    auto p1 = build_quotient(spec("p1"), 3);
    for (const auto& r : irreps(tf_quotient(*p1)).irreps)
        CHECK(mackey_irreducible(*p1, r));

    // Mackey agrees with the character norm of the induced representation.
    for (const auto& e : catalog()) {
        auto g = build_quotient(e.spec, 2 * find_m0(e.spec).m0);
        for (const auto& s : irreps(tf_quotient(*g)).irreps)
            CHECK(mackey_irreducible(*g, s) == is_irreducible(induce(g, s)));
    }
}

TEST_CASE("induction is constant on dual orbits")
{
    for (const auto& e : catalog()) {
        auto g = build_quotient(e.spec, find_m0(e.spec).m0 * 2);
        auto t = tf_quotient(*g);
        for (const auto& s : irreps(t).irreps)
            for (int p = 0; p < e.spec.point_order(); ++p) {
                NormalForm x{std::vector<long long>(e.spec.d2, 0), e.spec.f_identity(), p};
                CHECK(equivalent(induce(g, dual_action(*g, x, s)), induce(g, s)));
            }
    }
}

TEST_CASE("every irrep sits inside an induced representation")
{
    for (const auto& e : catalog()) {
        auto g = build_quotient(e.spec, find_m0(e.spec).m0 * 2);
        auto t = tf_quotient(*g);
        std::vector<Representation> induced;
        for (const auto& s : irreps(t).irreps)
            induced.push_back(induce(g, s));
        for (const auto& r : irreps(g).irreps) {
            int best = 0;
            for (const auto& ind : induced)
                best = std::max(best, multiplicity(ind, r));
            CHECK(best >= 1);
        }
    }
}

TEST_CASE("irreps of G_N lift to the irreps of G_kN trivial on T^N")
{
    for (const auto& name : {"pg", "helix-C3", "screw4"}) {
        const auto& s = spec(name);
        auto m0 = find_m0(s).m0;
        auto small = build_quotient(s, 2 * m0);
        auto large = build_quotient(s, 4 * m0);
        auto sub = power_subgroup(*large, 2 * m0);
        auto lo = irreps(small);
        auto hi = irreps(large);
        std::vector<const Representation*> trivial_on_sub;
        for (const auto& r : hi.irreps) {
            bool trivial = true;
            for (int x : sub)
                trivial = trivial
                          && (r(x) - CMatrix::Identity(r.dim(), r.dim())).cwiseAbs().maxCoeff() <= 1e-9;
            if (trivial)
                trivial_on_sub.push_back(&r);
        }
        CAPTURE(name);
        CHECK(trivial_on_sub.size() == lo.irreps.size());
        for (const auto& r : lo.irreps) {
            auto lifted = lift(r, large);
            CHECK(is_irreducible(lifted));
            int matches = 0;
            for (const auto* h : trivial_on_sub)
                matches += equivalent(lifted, *h) ? 1 : 0;
            CHECK(matches == 1);
        }
    }
}

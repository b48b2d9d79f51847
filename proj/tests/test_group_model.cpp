#include "oracles.hpp"

#include "isodual/catalog.hpp"
#include "isodual/error.hpp"
#include "isodual/quotient.hpp"

#include <doctest.h>

#include <numbers>
#include <set>

using namespace isodual;

namespace
{

const GroupSpec& spec(const std::string& name)
{
    return catalog_entry(name).spec;
}

bool has_axiom(const std::vector<Violation>& v, const std::string& axiom)
{
    for (const auto& x : v)
        if (x.axiom == axiom)
            return true;
    return false;
}

long long ipow(long long b, int e)
{
    long long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

TEST_CASE("catalog specs are valid")
{
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        CHECK(validate_spec(e.spec).empty());
        CHECK(e.spec.f_order() == e.expected_f_order);
        CHECK(e.spec.point_order() == e.expected_point_order);
    }
}

TEST_CASE("validation catches a broken F")
{
    GroupSpec s = spec("helix-C3");
    s.f_elements.pop_back();
    CHECK(has_axiom(validate_spec(s), "F not closed"));

    GroupSpec g = spec("pg");
    g.p_reps[1].tau = {Rational(1, 3), Rational(0)};
    CHECK_FALSE(validate_spec(g).empty());
}

TEST_CASE("normal forms")
{
    const auto& pg = spec("pg");
    auto id = normal_form(pg, Isometry::identity(0, 2));
    CHECK(id == NormalForm{{0, 0}, pg.f_identity(), 0});

    auto g2 = compose(pg.p_reps[1], pg.p_reps[1]);
    CHECK(normal_form(pg, g2) == NormalForm{{1, 0}, 0, 0});

    const auto& p1 = spec("p1");
    auto t = power_section(p1, {2, 3});
    CHECK(t.tau == LatticeVector{Rational(2), Rational(3)});
    CHECK(approx_equal(power_section(p1, {0, 0}), Isometry::identity(0, 2)));

    const auto& helix = spec("helix-C3");
    auto h5 = power_section(helix, {5});
    CHECK(approx_equal(h5, Isometry::translation(OrthoMatrix(rotation2(5.0)), {Rational(5)}), 1e-12));

    // Not a member: a translation by half a lattice vector.
    auto half = Isometry::translation(OrthoMatrix(Eigen::MatrixXd(0, 0)), {Rational(1, 2), Rational(0)});
    CHECK_THROWS_AS(normal_form(p1, half), NotAMember);
}

TEST_CASE("commutator of the twisted section lands in F")
{
    // The commutator t1 t2 t1^-1 t2^-1 equals (I4 (+) R(pi/2)^2) (+) id.
    const auto& s = spec("twistE8");
    const auto& t1 = s.t_lifts[0];
    const auto& t2 = s.t_lifts[1];
    auto c = compose(compose(t1, t2), compose(inverse(t1), inverse(t2)));
    auto nf = normal_form(s, c);
    Eigen::MatrixXd quarter = rotation2(std::numbers::pi / 2);
    Eigen::MatrixXd witness = block_diag({Eigen::MatrixXd::Identity(4, 4), quarter * quarter});
    CHECK(nf.n == std::vector<long long>{0, 0});
    CHECK(nf.p == 0);
    CHECK(nf.f == s.f_index(OrthoMatrix(witness)));
    CHECK(nf.f != s.f_identity());
}

TEST_CASE("power sections")
{
    CHECK(is_power_normal(spec("p1"), 1));
    CHECK_FALSE(is_power_normal(spec("twistE8"), 1));
    CHECK(in_power_section(spec("p1"), power_section(spec("p1"), {2, 4}), 2));
    CHECK_FALSE(in_power_section(spec("p1"), power_section(spec("p1"), {2, 3}), 2));
}

TEST_CASE("m0 agrees with the divisor-scan oracle")
{
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        auto r = find_m0(e.spec);
        CHECK(r.m0_bound % r.m0 == 0);
        CHECK(r.m0 == oracle::m0_scan(e.spec, r.m0_bound));
        CHECK(r.m0 == e.expected_m0);
        CHECK(is_power_normal(e.spec, 2 * r.m0));
        CHECK(is_power_normal(e.spec, 3 * r.m0));
    }
    CHECK(find_m0(spec("p1")).m0 == 1);
    CHECK(find_m0(spec("helix-C3")).m0 == 1);
    CHECK(find_m0(spec("p1")).is_space_group);
}

TEST_CASE("automorphisms of F")
{
    CHECK(automorphism_count(spec("p1")) == 1);
    CHECK(automorphism_count(spec("helix-C3")) == 2);
    CHECK(automorphism_count(spec("twistE8")) == 1);
    CHECK(divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("quotient order formula and enumeration")
{
    for (const auto& e : catalog()) {
        auto r = find_m0(e.spec);
        for (long long k : {1, 2, 3}) {
            long long N = k * r.m0;
            CAPTURE(e.name);
            CAPTURE(N);
            auto g = build_quotient(e.spec, N, r);
            CHECK(g->size() == ipow(N, e.spec.d2) * e.spec.f_order() * e.spec.point_order());
            for (int i = 0; i < g->size(); ++i)
                CHECK(g->index_of(g->representative(i)) == i);
            CHECK(g->verify_axioms(100, 3));
        }
    }
    CHECK(build_quotient(spec("pg"), 3)->size() == 18);
    auto p4 = build_quotient(spec("p1"), 4);
    CHECK(p4->size() == 16);
    CHECK(p4->is_abelian());
    CHECK_THROWS_AS(build_quotient(spec("twistE8"), 2), BadModulus);
}

TEST_CASE("table products match exact products")
{
    for (const auto& name : {"pg", "helix-C3", "twistE8"}) {
        auto g = build_quotient(spec(name), 2 * find_m0(spec(name)).m0);
        for (int a = 0; a < g->size(); a += 3)
            for (int b = 0; b < g->size(); b += 5)
                CHECK(g->multiply(a, b) == g->multiply_exact(a, b));
    }
}

TEST_CASE("mod-N reduction is sound")
{
    for (const auto& e : catalog()) {
        auto m0 = find_m0(e.spec).m0;
        const int d = e.spec.d2;
        for (long long N : {m0, 2 * m0}) {
            for (const auto& n : oracle::box(d, 2))
                for (int j = 0; j < d; ++j) {
                    auto shifted = n;
                    shifted[j] += N;
                    auto lhs = normal_form(e.spec, power_section(e.spec, shifted));
                    auto rhs = normal_form(e.spec, compose(power_section(e.spec, n),
                                                           power(e.spec.t_lifts[j], N)));
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("section is injective on the exponent box")
{
    for (const auto& e : catalog()) {
        auto N = 2 * find_m0(e.spec).m0;
        std::set<NormalForm> seen;
        auto g = build_quotient(e.spec, N);
        for (int i = 0; i < g->size(); ++i) {
            const auto& nf = g->element(i);
            if (nf.f != e.spec.f_identity() || nf.p != 0)
                continue;
            seen.insert(normal_form(e.spec, power_section(e.spec, nf.n)));
        }
        long long expect = 1;
        for (int i = 0; i < e.spec.d2; ++i)
            expect *= N;
        CHECK(static_cast<long long>(seen.size()) == expect);
    }
}

TEST_CASE("projection between quotients")
{
    const auto& s = spec("pg");
    auto g3 = build_quotient(s, 3);
    auto g6 = build_quotient(s, 6);
    for (int a = 0; a < g6->size(); a += 7)
        for (int b = 0; b < g6->size(); b += 11)
            CHECK(project(*g6, g6->multiply(a, b), *g3)
                  == g3->multiply(project(*g6, a, *g3), project(*g6, b, *g3)));
    CHECK_THROWS_AS(project(*g3, 0, *build_quotient(s, 2)), BadModulus);
}

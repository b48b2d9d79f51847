#include "oracles.hpp"

#include "isodual/catalog.hpp"
#include "isodual/error.hpp"
#include "isodual/splitting.hpp"

#include <doctest.h>

using namespace isodual;

namespace
{

const GroupSpec& spec(const std::string& name)
{
    return catalog_entry(name).spec;
}

void check_certificate(const GroupSpec& s, const SplitCertificate& c)
{
    CAPTURE(s.name);
    CAPTURE(c.m);
    CAPTURE(c.n);
    for (const auto& x : c.checks) {
        CAPTURE(x.name);
        CHECK(x.passed);
    }
    auto q = build_quotient(s, c.modulus);
    auto o = oracle::check_split(*q, c.normal_elements, c.complement_elements);
    CHECK(o.normal_is_subgroup);
    CHECK(o.normal_is_normal);
    CHECK(o.complement_is_subgroup);
    CHECK(o.trivial_intersection);
    CHECK(o.product_covers);
    CHECK(c.group_order == q->size());
    CHECK(c.normal_order * c.complement_order == c.group_order);
}

} // namespace

TEST_CASE("a(n) against the scan")
{
    CHECK(a_coeff(1, 2) == 0);
    CHECK(a_coeff(3, 2) == -1);
    for (long long r = 1; r <= 8; ++r)
        for (long long n = 1; n <= 60; ++n) {
            if (std::gcd(n, r) != 1) {
                CHECK_THROWS_AS(a_coeff(n, r), NotCoprime);
                continue;
            }
            CAPTURE(n);
            CAPTURE(r);
            long long a = a_coeff(n, r);
            CHECK(a == oracle::a_scan(n, r));
            CHECK(a <= 0);
        }
    // n = k m r + 1 gives a = -k m.
    for (long long k = 1; k <= 5; ++k)
        for (long long m = 1; m <= 4; ++m)
            for (long long r = 1; r <= 4; ++r)
                CHECK(a_coeff(k * m * r + 1, r) == -k * m);
    CHECK(a_coeff(1'000'003, 2) == oracle::a_scan(1'000'003, 2));
}

TEST_CASE("sections and cocycles")
{
    auto pm = cocycle(spec("pm"));
    for (const auto& row : pm)
        for (const auto& v : row)
            CHECK(v == zero_vector(2));

    auto pg = cocycle(spec("pg"));
    CHECK(section_tau(spec("pg"))[1] == LatticeVector{Rational(1, 2), Rational(0)});
    CHECK(pg[1][1] == LatticeVector{Rational(1), Rational(0)});
    CHECK(pg[0][1] == zero_vector(2));

    for (const auto& e : catalog())
        for (const auto& row : cocycle(e.spec))
            for (const auto& v : row)
                CHECK(is_integral(v));

    GroupSpec bad = spec("pg");
    bad.p_reps[1].tau = {Rational(1, 3), Rational(0)};
    CHECK_THROWS_AS(cocycle(bad), IntegralityViolation);
}

TEST_CASE("complement sets")
{
    auto pg = complement_set(spec("pg"), 3);
    CHECK(pg.a == -1);
    CHECK(pg.closed);
    CHECK(pg.translations[0] == zero_vector(2));
    CHECK(pg.translations[1] == LatticeVector{Rational(3, 2), Rational(0)});
    auto sq = compose(pg.elements[1], pg.elements[1]);
    CHECK(sq.p.is_identity());
    CHECK(sq.tau == LatticeVector{Rational(3), Rational(0)});

    auto one = complement_set(spec("pg"), 1);
    CHECK(one.translations == section_tau(spec("pg")));

    auto p1 = complement_set(spec("p1"), 5);
    CHECK(p1.translations.size() == 1);
}

TEST_CASE("pg splits at N = 3")
{
    auto c = split_quotient(spec("pg"), 1, 3);
    CHECK(c.passed());
    CHECK(c.group_order == 18);
    CHECK(c.normal_order == 9);
    CHECK(c.complement_order == 2);
    check_certificate(spec("pg"), c);

    // The complement is generated by the coset of (diag(1,-1), (3/2, 0)).
    auto q = build_quotient(spec("pg"), 3);
    Isometry gen{OrthoMatrix(Eigen::MatrixXd(0, 0)), LatticePointOp(2, {1, 0, 0, -1}),
                 {Rational(3, 2), Rational(0)}};
    int gi = q->index_of(gen);
    std::vector<int> expect{q->identity(), gi};
    auto got = c.complement_elements;
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
}

TEST_CASE("pg has no element of order two, yet its quotient splits")
{
    CHECK(order_two_witnesses(spec("pg"), 4).empty());
    CHECK(oracle::order_two_count(spec("pg"), 4) == 0);
    CHECK(oracle::order_two_count(spec("pm"), 2) > 0);
    CHECK_FALSE(order_two_witnesses(spec("pm"), 2).empty());
}

TEST_CASE("certificates for every catalog group")
{
    for (const auto& e : catalog()) {
        auto m0 = find_m0(e.spec).m0;
        const long long r = e.spec.point_order();
        for (long long m : {m0, 2 * m0})
            for (long long n = 1; n <= 7; ++n) {
                if (std::gcd(n, m) != 1 || std::gcd(n, r) != 1)
                    continue;
                long long order = e.spec.f_order() * r;
                for (int i = 0; i < e.spec.d2; ++i)
                    order *= n * m;
                if (order > 400)
                    continue;
                check_certificate(e.spec, split_quotient(e.spec, m, n));
            }
    }
}

TEST_CASE("G = TF gives a direct product")
{
    auto c = split_quotient(spec("helix-C3-tf"), 2, 3);
    CHECK(c.passed());
    CHECK(c.direct);
    auto q = build_quotient(spec("helix-C3-tf"), 6);
    for (int x : c.normal_elements)
        for (int h : c.complement_elements)
            CHECK(q->multiply_exact(x, h) == q->multiply_exact(h, x));
    check_certificate(spec("helix-C3-tf"), c);
    CHECK_FALSE(split_quotient(spec("pg"), 1, 3).direct);
}

TEST_CASE("split preconditions")
{
    CHECK_THROWS_AS(split_quotient(spec("pg"), 1, 2), NotCoprime);
    CHECK_THROWS_AS(split_quotient(spec("pg"), 2, 4), NotCoprime);
    CHECK_THROWS_AS(split_quotient(spec("twistE8"), 2, 3), BadModulus);
}

#include "oracles.hpp"

#include "isodual/catalog.hpp"
#include "isodual/dual_space.hpp"
#include "isodual/error.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace isodual;

namespace
{

const GroupSpec& spec(const std::string& name)
{
    return catalog_entry(name).spec;
}

DualVector k2(long long a, long long b, long long den)
{
    return {Rational(a, den), Rational(b, den)};
}

std::multiset<int> orbit_sizes(const std::vector<WaveLabel>& labels)
{
    std::multiset<int> out;
    for (const auto& l : labels)
        out.insert(l.orbit_size);
    return out;
}

} // namespace

TEST_CASE("dual grid")
{
    auto g = dual_grid(2, 3);
    CHECK(g.size() == 9);
    std::set<DualVector> s(g.begin(), g.end());
    CHECK(s.size() == 9);
    for (const auto& k : g)
        CHECK(k == frac(k));
}

TEST_CASE("representation sets")
{
    CHECK(rep_set(spec("p1")).classes.size() == 1);
    CHECK(rep_set(spec("pg")).classes.size() == 1);

    // F = Z3 with the flip exchanging the two non-trivial characters.
    auto h = rep_set(spec("helix-C3"));
    CHECK(h.classes.size() == 2);
    CHECK(h.provenance.size() == 1);
    CHECK(rep_set(spec("helix-C3-tf")).classes.size() == 3);
}

TEST_CASE("little groups")
{
    auto p1 = rep_set(spec("p1"));
    auto lp1 = little_group(p1, 0);
    CHECK(lp1.point_parts() == std::vector<int>{0});
    CHECK(lp1.translations() == std::vector<DualVector>{k2(0, 0, 1)});

    auto pg = rep_set(spec("pg"));
    auto lpg = little_group(pg, 0);
    CHECK(lpg.point_parts() == std::vector<int>{0, 1});
    for (const auto& e : lpg.elements)
        CHECK(e.shift == k2(0, 0, 1));

    for (const auto& e : catalog()) {
        auto rs = rep_set(e.spec);
        for (int r = 0; r < static_cast<int>(rs.classes.size()); ++r)
            for (const auto& c : check_little_group(rs, little_group(rs, r))) {
                CAPTURE(e.name);
                CAPTURE(c.name);
                CHECK(c.passed);
            }
    }
}

TEST_CASE("twisted group translations sit between L* and L*/m0")
{
    auto rs = rep_set(spec("twistE8"));
    for (int r = 0; r < static_cast<int>(rs.classes.size()); ++r) {
        auto lg = little_group(rs, r);
        for (const auto& t : lg.translations())
            CHECK(is_integral(scale(Rational(rs.m0), t)));
    }
}

TEST_CASE("null set membership")
{
    const auto& pg = spec("pg");
    CHECK(null_set_member(pg, 1, k2(1, 0, 3)));
    CHECK_FALSE(null_set_member(pg, 1, k2(1, 1, 3)));
    Eigen::VectorXd kf(2);
    kf << 1.0 / 3, 0.0;
    CHECK(null_set_member(pg, 1, kf, 1e-9));
    kf << 1.0 / 3, 1.0 / 3;
    CHECK_FALSE(null_set_member(pg, 1, kf, 1e-9));

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
    for (const auto& name : {"p1", "helix-C3-tf", "screw4", "twistE8"})
        for (int i = 0; i < 50; ++i) {
            DualVector k;
            for (int c = 0; c < spec(name).d2; ++c)
                k.push_back(Rational(num(rng), den(rng)));
            CHECK_FALSE(null_set_member(spec(name), find_m0(spec(name)).m0, k));
        }
}

TEST_CASE("orbits against brute-force enumeration")
{
    auto p1 = rep_set(spec("p1"));
    auto o = wave_orbits(spec("p1"), 1, little_group(p1, 0), 4);
    CHECK(o.size() == 16);
    for (const auto& l : o)
        CHECK(l.orbit_size == 1);

    auto pg = rep_set(spec("pg"));
    auto labels = wave_orbits(spec("pg"), 1, little_group(pg, 0), 3);
    CHECK(labels.size() == 6);
    CHECK(orbit_sizes(labels) == std::multiset<int>{1, 1, 1, 2, 2, 2});
    for (const auto& l : labels) {
        bool on_axis = l.k[1] == 0;
        CHECK(l.in_null_set == on_axis);
        CHECK(l.orbit_size == (on_axis ? 1 : 2));
        if (!on_axis)
            CHECK(l.k[1] == Rational(1, 3));
    }

    // Groups with trivial F: the little group of the trivial class is the
    // whole point group with zero shifts.
    for (const auto& name : {"p1", "pm", "pg"})
        for (long long N : {2, 3, 4, 5}) {
            auto rs = rep_set(spec(name));
            auto got = orbit_sizes(wave_orbits(spec(name), 1, little_group(rs, 0), N));
            CHECK(got == oracle::point_orbit_sizes(spec(name), N));
        }

    auto tw = rep_set(spec("twistE8"));
    CHECK_THROWS_AS(wave_orbits(spec("twistE8"), tw.m0, little_group(tw, 0), 2), BadModulus);
}

TEST_CASE("canonical representatives are lexicographic minima")
{
    for (const auto& e : catalog()) {
        auto rs = rep_set(e.spec);
        for (int r = 0; r < static_cast<int>(rs.classes.size()); ++r)
            for (const auto& l : wave_orbits(e.spec, rs.m0, little_group(rs, r), 2 * rs.m0)) {
                CHECK(static_cast<int>(l.orbit.size()) == l.orbit_size);
                for (const auto& k : l.orbit)
                    CHECK_FALSE(lex_less(k, l.k));
            }
    }
}

TEST_CASE("atlas of pg at N = 3")
{
    auto atlas = enumerate_dual(spec("pg"), 3);
    CHECK(atlas.passed());
    CHECK(atlas.entries.size() == 6);
    int irreducible = 0;
    for (const auto& e : atlas.entries) {
        CHECK(e.induced.dim() == 2);
        if (e.label.in_null_set) {
            CHECK_FALSE(e.irreducible);
            int parts = 0;
            for (int m : e.multiplicities)
                parts += m;
            CHECK(parts == 2);
        } else {
            CHECK(e.irreducible);
            CHECK(e.mackey_irreducible);
            ++irreducible;
        }
    }
    CHECK(irreducible == 3);
    std::map<int, int> census;
    for (int d : atlas.census())
        ++census[d];
    CHECK(census == std::map<int, int>{{1, 6}, {2, 3}});
}

TEST_CASE("atlas checks pass for every catalog group")
{
    for (const auto& e : catalog()) {
        auto m0 = find_m0(e.spec).m0;
        for (long long N : {m0, 2 * m0}) {
            auto atlas = enumerate_dual(e.spec, N);
            CAPTURE(e.name);
            CAPTURE(N);
            for (const auto& c : atlas.checks) {
                CAPTURE(c.name);
                CHECK(c.passed);
            }
            int squares = 0;
            for (int d : atlas.census())
                squares += d * d;
            CHECK(squares == atlas.group->size());
        }
    }
    auto p1 = enumerate_dual(spec("p1"), 4);
    CHECK(p1.entries.size() == 16);
    for (const auto& e : p1.entries)
        CHECK((e.irreducible && e.induced.dim() == 1));
}

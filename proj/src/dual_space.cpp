#include "isodual/dual_space.hpp"

#include "isodual/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace isodual
{

namespace
{

bool same_values(const CharacterTable& a, const CharacterTable& b, double tol = structural_tol)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol)
            return false;
    return true;
}

CharacterTable times(const CharacterTable& a, const CharacterTable& b)
{
    CharacterTable out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] * b[i];
    return out;
}

std::string format_vector(const DualVector& k)
{
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i)
            s += ", ";
        s += to_string(k[i]);
    }
    return s + ")";
}

NormalForm coset_rep(const GroupSpec& spec, int p)
{
    return NormalForm{std::vector<long long>(spec.d2, 0), spec.f_identity(), p};
}

//! Characters of p . rho for every coset representative p.
std::vector<CharacterTable> acted_characters(const QuotientGroup& g, const Representation& rho)
{
    std::vector<CharacterTable> out;
    for (int p = 0; p < g.spec().point_order(); ++p)
        out.push_back(dual_action(g, coset_rep(g.spec(), p), rho).character());
    return out;
}

std::vector<CharacterTable> wave_characters(const GroupSpec& spec, const QuotientGroup& tf,
                                            const std::vector<DualVector>& ks)
{
    std::vector<CharacterTable> out;
    out.reserve(ks.size());
    for (const auto& k : ks)
        out.push_back(chi(spec, k).on_quotient(tf));
    return out;
}

} // namespace

std::vector<DualVector> dual_grid(int d2, long long m)
{
    if (m <= 0)
        throw BadModulus("grid modulus must be positive");
    std::vector<DualVector> out;
    std::vector<long long> j(d2, 0);
    while (true) {
        DualVector k(d2);
        for (int i = 0; i < d2; ++i)
            k[i] = Rational(j[i], m);
        out.push_back(std::move(k));
        int i = d2 - 1;
        while (i >= 0 && ++j[i] == m)
            j[i--] = 0;
        if (i < 0)
            break;
    }
    return out;
}

//---------------------------------------------------------------------------//

RepSet rep_set(const GroupSpec& spec, const IrrepOptions& options)
{
    return rep_set(spec, find_m0(spec), options);
}

RepSet rep_set(const GroupSpec& spec, const StructureReport& report, const IrrepOptions& options)
{
    RepSet rs;
    rs.m0 = report.m0;
    rs.group = build_quotient(spec, report.m0, report);
    rs.tf = tf_quotient(*rs.group);
    IrrepSet candidates = irreps(rs.tf, options);
    rs.seed = candidates.seed;

    const auto ks = dual_grid(spec.d2, rs.m0);
    const auto waves = wave_characters(spec, *rs.tf, ks);
    std::vector<CharacterTable> kept;

    for (int c = 0; c < static_cast<int>(candidates.irreps.size()); ++c) {
        const auto& rho = candidates.irreps[c];
        const auto acted = acted_characters(*rs.group, rho);
        bool matched = false;
        for (int j = 0; j < static_cast<int>(kept.size()) && !matched; ++j)
            for (int p = 0; p < static_cast<int>(acted.size()) && !matched; ++p)
                for (std::size_t ki = 0; ki < ks.size() && !matched; ++ki)
                    if (same_values(acted[p], times(waves[ki], kept[j]))) {
                        rs.provenance.push_back({c, j, p, ks[ki]});
                        matched = true;
                    }
        if (!matched) {
            kept.push_back(rho.character());
            rs.classes.push_back(rho);
            rs.candidate_of_class.push_back(c);
        }
    }
    return rs;
}

//---------------------------------------------------------------------------//

std::vector<DualVector> LittleGroup::translations() const
{
    std::vector<DualVector> out;
    for (const auto& e : elements)
        if (e.p == 0)
            out.push_back(e.shift);
    return out;
}

std::vector<int> LittleGroup::point_parts() const
{
    std::vector<int> out;
    for (const auto& e : elements)
        if (std::find(out.begin(), out.end(), e.p) == out.end())
            out.push_back(e.p);
    return out;
}

DualVector LittleGroup::act(const LittleElement& e, const DualVector& k) const
{
    return frac(e.dual * k + e.shift);
}

LittleGroup little_group(const RepSet& rs, int rho)
{
    const auto& spec = rs.group->spec();
    const auto& r = rs.classes.at(rho);
    const auto acted = acted_characters(*rs.group, r);
    const auto base = r.character();
    const auto ks = dual_grid(spec.d2, rs.m0);
    const auto waves = wave_characters(spec, *rs.tf, ks);

    LittleGroup lg;
    lg.rho = rho;
    for (int p = 0; p < spec.point_order(); ++p)
        for (std::size_t ki = 0; ki < ks.size(); ++ki)
            if (same_values(acted[p], times(waves[ki], base)))
                lg.elements.push_back({p, dual_action_matrix(spec.p_reps[p].p), ks[ki]});
    return lg;
}

std::vector<Check> check_little_group(const RepSet& rs, const LittleGroup& lg)
{
    std::vector<Check> out;
    const int d2 = rs.group->spec().d2;

    auto find = [&](const LatticePointOp& a, const DualVector& s) {
        return std::any_of(lg.elements.begin(), lg.elements.end(),
                           [&](const LittleElement& e) { return e.dual == a && e.shift == s; });
    };

    Check id{"little group identity", find(LatticePointOp::identity(d2), zero_vector(d2)), ""};
    if (!id.passed)
        id.detail = "(I, 0) missing for class " + std::to_string(lg.rho);
    out.push_back(id);

    Check closure{"little group closure", true, ""};
    for (const auto& a : lg.elements) {
        for (const auto& b : lg.elements) {
            auto s = frac(a.dual * b.shift + a.shift);
            if (!find(a.dual * b.dual, s)) {
                closure.passed = false;
                closure.detail = "product of point parts " + std::to_string(a.p) + " and "
                                 + std::to_string(b.p) + " with shift " + format_vector(s)
                                 + " missing";
                break;
            }
        }
        if (!closure.passed)
            break;
    }
    out.push_back(closure);

    Check sandwich{"translation sandwich", true, ""};
    for (const auto& t : lg.translations())
        if (!is_integral(Rational(rs.m0) * t)) {
            sandwich.passed = false;
            sandwich.detail = "translation " + format_vector(t) + " outside L*/m0";
        }
    if (!id.passed) {
        sandwich.passed = false;
        sandwich.detail = "L* not contained in the translations";
    }
    out.push_back(sandwich);
    return out;
}

//---------------------------------------------------------------------------//

bool null_set_member(const GroupSpec& spec, long long m0, const DualVector& k)
{
    if (static_cast<int>(k.size()) != spec.d2)
        throw DimensionMismatch("wave vector has wrong length");
    for (int p = 1; p < spec.point_order(); ++p) {
        auto a = dual_action_matrix(spec.p_reps[p].p);
        if (is_integral(Rational(m0) * (a * k - k)))
            return true;
    }
    return false;
}

bool null_set_member(const GroupSpec& spec, long long m0, const Eigen::VectorXd& k, double tol)
{
    if (k.size() != spec.d2)
        throw DimensionMismatch("wave vector has wrong length");
    for (int p = 1; p < spec.point_order(); ++p) {
        auto a = dual_action_matrix(spec.p_reps[p].p);
        bool integral = true;
        for (int i = 0; i < spec.d2 && integral; ++i) {
            double v = -k[i];
            for (int j = 0; j < spec.d2; ++j)
                v += static_cast<double>(a(i, j)) * k[j];
            v *= static_cast<double>(m0);
            integral = std::abs(v - std::round(v)) <= tol;
        }
        if (integral)
            return true;
    }
    return false;
}

//---------------------------------------------------------------------------//

bool lex_less(const DualVector& a, const DualVector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<WaveLabel> wave_orbits(const GroupSpec& spec, long long m0, const LittleGroup& lg,
                                   long long modulus)
{
    if (m0 <= 0 || modulus % m0 != 0)
        throw BadModulus("N = " + std::to_string(modulus) + " is not a multiple of m0 = "
                         + std::to_string(m0));
    const int d2 = spec.d2;
    const auto grid = dual_grid(d2, modulus);

    auto index_of = [&](const DualVector& k) {
        long long idx = 0;
        for (int i = 0; i < d2; ++i) {
            Rational v = Rational(modulus) * k[i];
            if (!is_integer(v))
                throw InternalInconsistency("little group moved " + format_vector(k)
                                            + " off the lattice L*/N");
            idx = idx * modulus + static_cast<long long>(boost::multiprecision::numerator(v));
        }
        return static_cast<std::size_t>(idx);
    };

    std::vector<char> seen(grid.size(), 0);
    std::vector<WaveLabel> out;
    for (std::size_t start = 0; start < grid.size(); ++start) {
        if (seen[start])
            continue;
        WaveLabel label;
        label.rho = lg.rho;
        std::deque<std::size_t> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop_front();
            label.orbit.push_back(grid[cur]);
            for (const auto& e : lg.elements) {
                std::size_t next = index_of(lg.act(e, grid[cur]));
                if (!seen[next]) {
                    seen[next] = 1;
                    queue.push_back(next);
                }
            }
        }
        std::sort(label.orbit.begin(), label.orbit.end(), lex_less);
        label.k = label.orbit.front();
        label.orbit_size = static_cast<int>(label.orbit.size());
        label.in_null_set = null_set_member(spec, m0, label.k);
        out.push_back(std::move(label));
    }
    return out;
}

//---------------------------------------------------------------------------//

std::vector<int> Atlas::census() const
{
    std::vector<int> out;
    for (const auto& r : irreps.irreps)
        out.push_back(r.dim());
    return out;
}

Atlas enumerate_dual(const GroupSpec& spec, long long modulus, const IrrepOptions& options)
{
    const StructureReport report = find_m0(spec);
    if (modulus <= 0 || modulus % report.m0 != 0)
        throw BadModulus("N = " + std::to_string(modulus) + " is not a multiple of m0 = "
                         + std::to_string(report.m0));

    Atlas atlas;
    atlas.group_name = spec.name;
    atlas.modulus = modulus;
    atlas.m0 = report.m0;
    atlas.reps = rep_set(spec, report, options);
    atlas.group = build_quotient(spec, modulus, report);
    atlas.irreps = irreps(atlas.group, options);
    const auto tf = tf_quotient(*atlas.group);

    std::vector<CharacterTable> irrep_chars;
    for (const auto& r : atlas.irreps.irreps)
        irrep_chars.push_back(r.character());

    Check closure{"little groups closed", true, ""};
    Check sandwich{"translation sandwich", true, ""};
    for (int c = 0; c < static_cast<int>(atlas.reps.classes.size()); ++c) {
        atlas.little_groups.push_back(little_group(atlas.reps, c));
        for (auto& chk : check_little_group(atlas.reps, atlas.little_groups.back())) {
            Check& target = chk.name == "translation sandwich" ? sandwich : closure;
            if (!chk.passed && target.passed) {
                target.passed = false;
                target.detail = chk.detail;
            }
        }
    }
    atlas.checks.push_back(closure);
    atlas.checks.push_back(sandwich);

    long long grid_size = 1;
    for (int i = 0; i < spec.d2; ++i)
        grid_size *= modulus;

    Check partition{"orbit sizes partition the grid", true, ""};
    Check k_invariance{"null flag constant on orbits", true, ""};
    Check complete{"decompositions complete", true, ""};
    for (int c = 0; c < static_cast<int>(atlas.reps.classes.size()); ++c) {
        const auto lifted = lift(atlas.reps.classes[c], tf);
        auto labels = wave_orbits(spec, report.m0, atlas.little_groups[c], modulus);
        long long covered = 0;
        for (auto& label : labels) {
            covered += label.orbit_size;
            for (const auto& k : label.orbit)
                if (null_set_member(spec, report.m0, k) != label.in_null_set && k_invariance.passed) {
                    k_invariance.passed = false;
                    k_invariance.detail = "orbit of " + format_vector(label.k) + " mixes flags";
                }

            AtlasEntry entry;
            auto twisted = tensor_with_character(chi(spec, label.k).on_quotient(*tf), lifted);
            entry.induced = induce(atlas.group, twisted);
            entry.mackey_irreducible = mackey_irreducible(*atlas.group, twisted);
            const auto ch = entry.induced.character();
            entry.character_norm = character_inner(ch, ch).real();
            entry.irreducible = std::abs(entry.character_norm - 1.0) <= structural_tol;

            long long dim_sum = 0;
            for (std::size_t i = 0; i < irrep_chars.size(); ++i) {
                Complex m = character_inner(ch, irrep_chars[i]);
                long long r = std::llround(m.real());
                if (std::abs(m - Complex(static_cast<double>(r), 0)) > structural_tol
                    && complete.passed) {
                    complete.passed = false;
                    complete.detail = "non-integral multiplicity at label " + format_vector(label.k);
                }
                entry.multiplicities.push_back(static_cast<int>(r));
                dim_sum += r * atlas.irreps.irreps[i].dim();
            }
            if (dim_sum != entry.induced.dim() && complete.passed) {
                complete.passed = false;
                complete.detail = "multiplicities at " + format_vector(label.k) + " miss dimensions";
            }
            entry.label = std::move(label);
            atlas.entries.push_back(std::move(entry));
        }
        if (covered != grid_size && partition.passed) {
            partition.passed = false;
            partition.detail = "class " + std::to_string(c) + " covers " + std::to_string(covered)
                               + " of " + std::to_string(grid_size) + " points";
        }
    }
    atlas.checks.push_back(partition);
    atlas.checks.push_back(k_invariance);
    atlas.checks.push_back(complete);

    Check distinct{"labels pairwise inequivalent", true, ""};
    for (std::size_t i = 0; i < atlas.entries.size() && distinct.passed; ++i)
        for (std::size_t j = i + 1; j < atlas.entries.size(); ++j) {
            const auto& a = atlas.entries[i];
            const auto& b = atlas.entries[j];
            if (a.multiplicities == b.multiplicities) {
                distinct.passed = false;
                distinct.detail = "labels (" + std::to_string(a.label.rho) + ", "
                                  + format_vector(a.label.k) + ") and ("
                                  + std::to_string(b.label.rho) + ", " + format_vector(b.label.k)
                                  + ") induce equivalent representations";
                break;
            }
        }
    atlas.checks.push_back(distinct);

    Check generic{"off-null-set labels irreducible", true, ""};
    Check mackey{"Mackey test agrees with character norm", true, ""};
    for (const auto& e : atlas.entries) {
        if (!e.label.in_null_set && !(e.irreducible && e.mackey_irreducible) && generic.passed) {
            generic.passed = false;
            generic.detail = "label " + format_vector(e.label.k) + " has character norm "
                             + std::to_string(e.character_norm);
        }
        if (e.irreducible != e.mackey_irreducible && mackey.passed) {
            mackey.passed = false;
            mackey.detail = "label " + format_vector(e.label.k);
        }
    }
    atlas.checks.push_back(generic);
    atlas.checks.push_back(mackey);

    long long squares = 0;
    for (const auto& r : atlas.irreps.irreps)
        squares += static_cast<long long>(r.dim()) * r.dim();
    atlas.checks.push_back({"census sum of squares", squares == atlas.group->size(),
                            std::to_string(squares) + " vs |G_N| = "
                                + std::to_string(atlas.group->size())});

    Check covered{"every irrep is a subrepresentation", true, ""};
    for (std::size_t i = 0; i < irrep_chars.size(); ++i) {
        bool found = std::any_of(atlas.entries.begin(), atlas.entries.end(),
                                 [&](const AtlasEntry& e) { return e.multiplicities[i] > 0; });
        if (!found) {
            covered.passed = false;
            covered.detail = "irrep " + std::to_string(i) + " of dimension "
                             + std::to_string(atlas.irreps.irreps[i].dim()) + " never appears";
            break;
        }
    }
    atlas.checks.push_back(covered);
    return atlas;
}

} // namespace isodual

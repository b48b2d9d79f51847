#pragma once

#include "isodual/check.hpp"
#include "isodual/representation.hpp"

#include <Eigen/Dense>

namespace isodual
{

//---------------------------------------------------------------------------//
// REPRESENTATION SET
//---------------------------------------------------------------------------//

//! Why a candidate irrep of (TF)_m0 was dropped: p . candidate = chi_k kept.
struct Provenance
{
    int candidate = 0;
    int class_index = 0;
    int p = 0;
    DualVector k;
};

/*!
 * Representatives of the irreps of TF killing T^m0, up to the relation
 * rho ~ rho' iff g . rho = chi_k rho' for some g in G and wave vector k.
 */
struct RepSet
{
    long long m0 = 0;
    QuotientPtr group;    //!< G_m0
    QuotientPtr tf;       //!< (TF)_m0
    std::vector<Representation> classes;
    //! Index of each class in the solver output.
    std::vector<int> candidate_of_class;
    std::vector<Provenance> provenance;
    std::uint64_t seed = 0;
};

//! (L*/m)/L*: the m^d2 points j/m with j in {0..m-1}^d2.
std::vector<DualVector> dual_grid(int d2, long long m);

RepSet rep_set(const GroupSpec& spec, const IrrepOptions& options = {});
RepSet rep_set(const GroupSpec& spec, const StructureReport& report, const IrrepOptions& options = {});

//---------------------------------------------------------------------------//
// LITTLE GROUPS
//---------------------------------------------------------------------------//

//! (A, s) acting by k -> A k + s, A the dual matrix of a point part.
struct LittleElement
{
    int p = 0;
    LatticePointOp dual;
    DualVector shift;
};

//! G_rho modulo L*: every pair (point part, shift in (L*/m0)/L*) with
//! p . rho = chi_shift rho.
struct LittleGroup
{
    int rho = 0;
    std::vector<LittleElement> elements;

    //! Representatives of trans(G_rho) / L*.
    std::vector<DualVector> translations() const;
    //! Distinct point parts (as p_rep indices).
    std::vector<int> point_parts() const;
    //! Image of k reduced to [0,1)^d2.
    DualVector act(const LittleElement& e, const DualVector& k) const;
};

LittleGroup little_group(const RepSet& rs, int rho);
//! Closure, identity and the sandwich L* <= trans <= L*/m0.
std::vector<Check> check_little_group(const RepSet& rs, const LittleGroup& lg);

//---------------------------------------------------------------------------//
// NULL SET
//---------------------------------------------------------------------------//

//! k in K iff m0 (A - I) k is integral for some non-identity dual point part A.
bool null_set_member(const GroupSpec& spec, long long m0, const DualVector& k);
bool null_set_member(const GroupSpec& spec, long long m0, const Eigen::VectorXd& k, double tol);

//---------------------------------------------------------------------------//
// WAVE LABELS
//---------------------------------------------------------------------------//

struct WaveLabel
{
    int rho = 0;
    //! Lexicographically least orbit member in [0,1)^d2.
    DualVector k;
    int orbit_size = 0;
    bool in_null_set = false;
    std::vector<DualVector> orbit;
};

//! Lexicographic order on exact rationals.
bool lex_less(const DualVector& a, const DualVector& b);

//! Orbits of (L*/N)/L* under G_rho; throws BadModulus unless m0 | N.
std::vector<WaveLabel> wave_orbits(const GroupSpec& spec, long long m0, const LittleGroup& lg,
                                   long long modulus);

//---------------------------------------------------------------------------//
// ATLAS
//---------------------------------------------------------------------------//

struct AtlasEntry
{
    WaveLabel label;
    Representation induced;
    double character_norm = 0.0;
    bool irreducible = false;
    bool mackey_irreducible = false;
    //! Multiplicity of each irrep of G_N in the induced representation.
    std::vector<int> multiplicities;
};

struct Atlas
{
    std::string group_name;
    long long modulus = 0;
    long long m0 = 0;
    QuotientPtr group;
    RepSet reps;
    std::vector<LittleGroup> little_groups;
    std::vector<AtlasEntry> entries;
    IrrepSet irreps;
    std::vector<Check> checks;

    bool passed() const { return all_passed(checks); }
    //! Dimensions of the irreps of G_N, in solver order.
    std::vector<int> census() const;
};

Atlas enumerate_dual(const GroupSpec& spec, long long modulus, const IrrepOptions& options = {});

} // namespace isodual

#pragma once

#include "isodual/check.hpp"
#include "isodual/quotient.hpp"

namespace isodual
{

//! tau~(P) for each point part, read from p_reps (same indexing).
std::vector<LatticeVector> section_tau(const GroupSpec& spec);

//! tau-bar(P, Q) = tau~(P) + P tau~(Q) - tau~(PQ), indexed [P][Q] by p_rep index.
using CocycleTable = std::vector<std::vector<LatticeVector>>;

//! Throws IntegralityViolation if a value leaves the lattice.
CocycleTable cocycle(const GroupSpec& spec);

//! Largest a <= 0 with a r + b n = 1 for some integer b; throws NotCoprime.
long long a_coeff(long long n, long long r);

struct ComplementSet
{
    long long n = 0;
    long long a = 0;
    //! Space-group translation parts tau~(P) - a sum_Q tau-bar(P, Q).
    std::vector<LatticeVector> translations;
    //! Lifts t(delta) p_rep in G, one per point part.
    std::vector<Isometry> elements;
    //! T_S^n P_S^(n) is closed under products.
    bool closed = false;
};

ComplementSet complement_set(const GroupSpec& spec, long long n);

/*!
 * Exhaustive certificate that G_N = (T^m)_N x| H with H = (T^n F P^(n))_N
 * and N = n m.
 */
struct SplitCertificate
{
    std::string group_name;
    long long m = 0;
    long long n = 0;
    long long modulus = 0;
    long long a = 0;
    std::vector<LatticeVector> tau;
    CocycleTable cocycle;
    ComplementSet complement;

    long long group_order = 0;
    long long normal_order = 0;
    long long complement_order = 0;
    //! Generators g_i^m of (T^m)_N.
    std::vector<NormalForm> normal_generators;
    //! Generators of H: g_i^n, F, and the lifted complement set.
    std::vector<NormalForm> complement_generators;
    //! Element indices in G_N.
    std::vector<int> normal_elements;
    std::vector<int> complement_elements;
    //! H centralizes (T^m)_N, so the product is direct.
    bool direct = false;

    std::vector<Check> checks;
    bool passed() const { return all_passed(checks); }
};

//! Throws BadModulus unless m0 | m and NotCoprime unless gcd(n, m) = gcd(n, |P|) = 1.
SplitCertificate split_quotient(const GroupSpec& spec, long long m, long long n);

//! Elements g outside TF with g^2 = id among normal forms with |n_i| <= bound.
std::vector<NormalForm> order_two_witnesses(const GroupSpec& spec, long long bound);

} // namespace isodual

#pragma once

#include "isodual/group_spec.hpp"

#include <cstdint>
#include <memory>
#include <random>

namespace isodual
{

//---------------------------------------------------------------------------//
/*!
 * The finite group G_N = G / T^N, materialized on normal forms t(n) f p with
 * n in {0..N-1}^{d2}.
 *
 * Element indices are (mixed-radix n, f, p) in lexicographic order with p
 * fastest. Index 0 is the identity whenever f_elements[0] is the identity.
 */
class QuotientGroup
{
  public:
    static constexpr int table_cap = 4096;

    QuotientGroup(GroupSpec spec, long long modulus, long long m0);

    const GroupSpec& spec() const { return spec_; }
    long long modulus() const { return modulus_; }
    long long m0() const { return m0_; }
    int size() const { return static_cast<int>(elements_.size()); }

    const NormalForm& element(int i) const { return elements_[i]; }
    const Isometry& representative(int i) const { return reps_[i]; }

    //! Index of the coset of nf; exponents are reduced mod N.
    int index_of(const NormalForm& nf) const;
    //! Index of the coset of an arbitrary member of G.
    int index_of(const Isometry& g) const;

    int identity() const { return identity_; }
    int multiply(int a, int b) const;
    //! Product computed from the isometry representatives, bypassing all tables.
    int multiply_exact(int a, int b) const;
    int inverse(int a) const { return inverse_[a]; }
    //! g^{-1} h g
    int conjugate(int h, int g) const { return multiply(inverse(g), multiply(h, g)); }

    bool is_abelian() const;

    //! Spot-check of associativity, identity and inverses on random triples.
    bool verify_axioms(int samples, std::uint64_t seed) const;

  private:
    GroupSpec spec_;
    long long modulus_;
    long long m0_;
    std::vector<NormalForm> elements_;
    std::vector<Isometry> reps_;
    std::vector<std::int32_t> table_;
    //! right_[a * columns_ + c] = a times generator c (t_lifts, F, p_reps).
    std::vector<std::int32_t> right_;
    int columns_ = 0;
    std::vector<int> inverse_;
    int identity_ = 0;

    int multiply_word(int a, int b) const;
};

using QuotientPtr = std::shared_ptr<const QuotientGroup>;

//! Throws BadModulus unless m0 divides N.
QuotientPtr build_quotient(const GroupSpec& spec, long long modulus);
QuotientPtr build_quotient(const GroupSpec& spec, long long modulus, const StructureReport& report);

//! Image of element i of q under G_N -> G_M (M divides N).
int project(const QuotientGroup& q, int i, const QuotientGroup& target);

} // namespace isodual

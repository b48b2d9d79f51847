#pragma once

#include "isodual/representation.hpp"

#include <map>
#include <random>

namespace isodual
{

//---------------------------------------------------------------------------//
/*!
 * A T^N-periodic matrix-valued function on G, stored densely on G_N in the
 * element order of the quotient.
 */
struct PeriodicFunction
{
    QuotientPtr group;
    int rows = 1;
    int cols = 1;
    std::vector<CMatrix> values;

    long long modulus() const { return group->modulus(); }
    //! Value at any normal form of G; exponents are reduced mod N.
    const CMatrix& at(const NormalForm& nf) const { return values[group->index_of(nf)]; }

    static PeriodicFunction zero(const QuotientPtr& group, int rows, int cols);
    static PeriodicFunction constant(const QuotientPtr& group, const CMatrix& value);
    //! value at one element, zero elsewhere
    static PeriodicFunction delta(const QuotientPtr& group, int element, const CMatrix& value);
    static PeriodicFunction random(const QuotientPtr& group, int rows, int cols, std::mt19937_64& rng);
};

//! Finitely supported function on G with unbounded exponents.
struct SummableFunction
{
    int rows = 1;
    int cols = 1;
    std::map<NormalForm, CMatrix> support;
};

//! Transform entries keyed by irrep index; shapes (rows d) x (cols d).
struct FourierTable
{
    QuotientPtr group;
    std::uint64_t seed = 0;
    int rows = 1;
    int cols = 1;
    std::map<int, CMatrix> entries;
};

//! Kronecker product a (x) b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

//! Pullback of u along G_{kN} -> G_N.
PeriodicFunction lift(const PeriodicFunction& u, const QuotientPtr& larger);

//! (1/|G_N|) sum <u(g), v(g)>_F, lifting both to the lcm period if needed.
Complex inner_product(const PeriodicFunction& u, const PeriodicFunction& v);
//! Frobenius inner product sum a_ij conj(b_ij).
Complex frobenius(const CMatrix& a, const CMatrix& b);

//! (1/|G_N|) sum u(g) (x) rho(g) over the given representations of G_N.
FourierTable transform(const PeriodicFunction& u, const std::vector<Representation>& reps);
FourierTable transform(const PeriodicFunction& u, const IrrepSet& irreps);

//! Blockwise finite Fourier inversion; throws IncompleteTable when an irrep is missing.
PeriodicFunction inverse_transform(const FourierTable& table, const IrrepSet& irreps);

//! sum_rho d_rho <a(rho), b(rho)>_F
Complex plancherel_sum(const FourierTable& a, const FourierTable& b, const IrrepSet& irreps);

//! (tau_g u)(h) = u(h g)
PeriodicFunction translate(const PeriodicFunction& u, const NormalForm& g);

//! (u * v)(g) = sum_h u(h) v(h^{-1} g); periodic with the period of v.
PeriodicFunction convolve(const SummableFunction& u, const PeriodicFunction& v);

//! sum_h u(h) (x) rho(h), without normalization.
FourierTable transform(const SummableFunction& u, const IrrepSet& irreps);

//! Elementwise max |a - b| over two tables with the same keys and shapes.
double max_difference(const FourierTable& a, const FourierTable& b);
double max_difference(const PeriodicFunction& u, const PeriodicFunction& v);

//! Indices of the elements of G_{kN} that form the image of T^N.
std::vector<int> power_subgroup(const QuotientGroup& larger, long long modulus);

} // namespace isodual

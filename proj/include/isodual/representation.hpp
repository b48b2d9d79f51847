#pragma once

#include "isodual/quotient.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace isodual
{

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CharacterTable = std::vector<Complex>;

inline constexpr double structural_tol = 1e-6;
inline constexpr double linalg_tol = 1e-9;

//---------------------------------------------------------------------------//
/*!
 * A unitary matrix representation of a finite quotient group, stored as the
 * full table of images indexed like the group elements.
 */
class Representation
{
  public:
    Representation() = default;
    Representation(QuotientPtr domain, std::vector<CMatrix> images, std::uint64_t seed = 0);

    const QuotientPtr& domain() const { return domain_; }
    const QuotientGroup& group() const { return *domain_; }
    int dim() const { return dim_; }
    std::uint64_t seed() const { return seed_; }

    const CMatrix& operator()(int element) const { return images_[element]; }
    const std::vector<CMatrix>& images() const { return images_; }

    CharacterTable character() const;

    //! max over sampled (a,b) of |rho(ab) - rho(a) rho(b)|
    double homomorphism_defect(int samples, std::uint64_t seed) const;
    //! max over elements of |rho(g)^H rho(g) - I|
    double unitarity_defect() const;

  private:
    QuotientPtr domain_;
    int dim_ = 0;
    std::vector<CMatrix> images_;
    std::uint64_t seed_ = 0;
};

//---------------------------------------------------------------------------//
// CHARACTERS
//---------------------------------------------------------------------------//

//! (1/|Q|) sum chi_a(g) conj(chi_b(g))
Complex character_inner(const CharacterTable& a, const CharacterTable& b);
//! <chi, chi>; equals 1 exactly for irreducible representations
double character_norm(const Representation& r);
bool is_irreducible(const Representation& r, double tol = structural_tol);
//! Multiplicity of irrep in r, rounded from the character inner product.
int multiplicity(const Representation& r, const Representation& irrep);

//! Characters agree within tol on every element.
bool equivalent(const Representation& a, const Representation& b, double tol = structural_tol);

//---------------------------------------------------------------------------//
// IRREDUCIBLE REPRESENTATIONS
//---------------------------------------------------------------------------//

struct IrrepOptions
{
    int cap = 4096;
    int max_reseeds = 8;
    std::uint64_t seed = 20240607;
};

struct IrrepSet
{
    QuotientPtr group;
    std::vector<Representation> irreps;
    std::uint64_t seed = 0;
    //! Number of reseeds needed before the decomposition succeeded.
    int reseeds = 0;
};

/*!
 * One representative per class of irreducible representations.
 *
 * The regular representation is split into eigenspaces of a random Hermitian
 * element of its commutant; subspaces that are still reducible are split
 * again with commutant elements obtained by group averaging. The output is
 * sorted by dimension with the trivial representation first.
 */
IrrepSet irreps(const QuotientPtr& group, const IrrepOptions& options = {});

//! Symmetric (Loewdin) orthogonalization of the columns of basis.
CMatrix symmetric_orthonormalize(const CMatrix& basis);

//---------------------------------------------------------------------------//
// CONSTRUCTIONS
//---------------------------------------------------------------------------//

Representation trivial_representation(const QuotientPtr& group);
Representation direct_sum(const Representation& a, const Representation& b);
//! g -> U^H rho(g) U
Representation conjugate_by(const Representation& r, const CMatrix& unitary);
//! Pullback along G_N -> G_M for M dividing N.
Representation lift(const Representation& r, const QuotientPtr& larger);
//! g -> chi(g) rho(g) for a one-dimensional chi.
Representation tensor_with_character(const CharacterTable& chi, const Representation& r);

//---------------------------------------------------------------------------//
// WAVE CHARACTERS
//---------------------------------------------------------------------------//

//! chi_k(g) = exp(2 pi i <k, trans(pi(g))>) on TF.
class WaveCharacter
{
  public:
    WaveCharacter(const GroupSpec& spec, DualVector k);

    const DualVector& k() const { return k_; }

    //! Evaluate on any element of TF; throws NotAMember outside TF.
    Complex operator()(const Isometry& g) const;
    Complex operator()(const NormalForm& nf) const;

    //! True iff chi_k is trivial on T^N, i.e. N k is integral.
    bool kills_power(long long modulus) const;

    //! Values on the elements of a TF quotient; throws BadModulus if chi_k
    //! does not factor through it.
    CharacterTable on_quotient(const QuotientGroup& tf) const;
    Representation as_representation(const QuotientPtr& tf) const;

  private:
    int d2_;
    DualVector k_;
};

WaveCharacter chi(const GroupSpec& spec, const DualVector& k);

//---------------------------------------------------------------------------//
// ACTIONS AND INDUCTION
//---------------------------------------------------------------------------//

//! (TF)_N as a quotient sharing normal-form encoding with G_N.
QuotientPtr tf_quotient(const QuotientGroup& g_n);

//! Index in G_N of an element of (TF)_N.
int embed_tf(const QuotientGroup& g_n, const QuotientGroup& tf, int i);

//! (g . rho)(h) = rho(g^{-1} h g) for rho on (TF)_N and g in G_N.
Representation dual_action(const QuotientGroup& g_n, const NormalForm& g, const Representation& r);

//! Induction from (TF)_N to G_N with coset representatives p_reps.
Representation induce(const QuotientPtr& g_n, const Representation& r);

//! Mackey: Ind r is irreducible iff p . r is not equivalent to r for every
//! non-identity coset representative p.
bool mackey_irreducible(const QuotientGroup& g_n, const Representation& r);

} // namespace isodual

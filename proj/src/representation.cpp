#include "isodual/representation.hpp"

#include "isodual/error.hpp"

#include <cmath>
#include <numbers>

namespace isodual
{

Representation::Representation(QuotientPtr domain, std::vector<CMatrix> images, std::uint64_t seed)
    : domain_(std::move(domain)), images_(std::move(images)), seed_(seed)
{
    if (!domain_ || static_cast<int>(images_.size()) != domain_->size())
        throw DimensionMismatch("representation needs one image per group element");
    dim_ = images_.empty() ? 0 : static_cast<int>(images_.front().rows());
    for (const auto& m : images_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw DimensionMismatch("representation images must be square of equal size");
}

CharacterTable Representation::character() const
{
    CharacterTable chi(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        chi[i] = images_[i].trace();
    return chi;
}

double Representation::homomorphism_defect(int samples, std::uint64_t seed) const
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, group().size() - 1);
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
        int a = pick(rng), b = pick(rng);
        CMatrix e = images_[group().multiply(a, b)] - images_[a] * images_[b];
        worst = std::max(worst, e.cwiseAbs().maxCoeff());
    }
    return worst;
}

double Representation::unitarity_defect() const
{
    double worst = 0;
    for (const auto& m : images_) {
        CMatrix e = m.adjoint() * m - CMatrix::Identity(dim_, dim_);
        worst = std::max(worst, e.cwiseAbs().maxCoeff());
    }
    return worst;
}

//---------------------------------------------------------------------------//

Complex character_inner(const CharacterTable& a, const CharacterTable& b)
{
    if (a.size() != b.size() || a.empty())
        throw DimensionMismatch("character tables of different groups");
    Complex s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * std::conj(b[i]);
    return s / static_cast<double>(a.size());
}

double character_norm(const Representation& r)
{
    auto chi = r.character();
    return character_inner(chi, chi).real();
}

bool is_irreducible(const Representation& r, double tol)
{
    return std::abs(character_norm(r) - 1.0) <= tol;
}

int multiplicity(const Representation& r, const Representation& irrep)
{
    return static_cast<int>(std::lround(character_inner(r.character(), irrep.character()).real()));
}

bool equivalent(const Representation& a, const Representation& b, double tol)
{
    if (a.group().size() != b.group().size())
        throw DimensionMismatch("equivalence test across different groups");
    if (a.dim() != b.dim())
        return false;
    for (int g = 0; g < a.group().size(); ++g)
        if (std::abs(a(g).trace() - b(g).trace()) > tol)
            return false;
    return true;
}

//---------------------------------------------------------------------------//

Representation trivial_representation(const QuotientPtr& group)
{
    return Representation(group, std::vector<CMatrix>(group->size(), CMatrix::Identity(1, 1)));
}

Representation direct_sum(const Representation& a, const Representation& b)
{
    if (a.domain() != b.domain())
        throw DimensionMismatch("direct sum over different groups");
    std::vector<CMatrix> images;
    images.reserve(a.group().size());
    for (int g = 0; g < a.group().size(); ++g) {
        CMatrix m = CMatrix::Zero(a.dim() + b.dim(), a.dim() + b.dim());
        m.topLeftCorner(a.dim(), a.dim()) = a(g);
        m.bottomRightCorner(b.dim(), b.dim()) = b(g);
        images.push_back(std::move(m));
    }
    return Representation(a.domain(), std::move(images));
}

Representation conjugate_by(const Representation& r, const CMatrix& unitary)
{
    std::vector<CMatrix> images;
    images.reserve(r.images().size());
    for (const auto& m : r.images())
        images.push_back(unitary.adjoint() * m * unitary);
    return Representation(r.domain(), std::move(images), r.seed());
}

Representation lift(const Representation& r, const QuotientPtr& larger)
{
    std::vector<CMatrix> images;
    images.reserve(larger->size());
    for (int i = 0; i < larger->size(); ++i)
        images.push_back(r(project(*larger, i, r.group())));
    return Representation(larger, std::move(images), r.seed());
}

Representation tensor_with_character(const CharacterTable& chi, const Representation& r)
{
    if (static_cast<int>(chi.size()) != r.group().size())
        throw DimensionMismatch("character and representation live on different groups");
    std::vector<CMatrix> images;
    images.reserve(chi.size());
    for (std::size_t g = 0; g < chi.size(); ++g)
        images.push_back(chi[g] * r(static_cast<int>(g)));
    return Representation(r.domain(), std::move(images), r.seed());
}

//---------------------------------------------------------------------------//

WaveCharacter::WaveCharacter(const GroupSpec& spec, DualVector k) : d2_(spec.d2), k_(std::move(k))
{
    if (static_cast<int>(k_.size()) != d2_)
        throw DimensionMismatch("wave vector has wrong length");
}

namespace
{
Complex unit_phase(const Rational& turns)
{
    // Reduce exactly before going to floating point.
    Rational r = frac({turns})[0];
    double angle = 2 * std::numbers::pi * to_double(r);
    return {std::cos(angle), std::sin(angle)};
}
} // namespace

Complex WaveCharacter::operator()(const Isometry& g) const
{
    if (!g.p.is_identity())
        throw NotAMember("wave characters are defined on TF only");
    return unit_phase(pairing(k_, g.tau));
}

Complex WaveCharacter::operator()(const NormalForm& nf) const
{
    if (nf.p != 0)
        throw NotAMember("wave characters are defined on TF only");
    return unit_phase(pairing(k_, from_integers(nf.n)));
}

bool WaveCharacter::kills_power(long long modulus) const
{
    return is_integral(Rational(modulus) * k_);
}

CharacterTable WaveCharacter::on_quotient(const QuotientGroup& tf) const
{
    if (!kills_power(tf.modulus()))
        throw BadModulus("chi_k is not trivial on T^N for N = " + std::to_string(tf.modulus()));
    CharacterTable out(tf.size());
    for (int i = 0; i < tf.size(); ++i)
        out[i] = (*this)(tf.element(i));
    return out;
}

Representation WaveCharacter::as_representation(const QuotientPtr& tf) const
{
    auto values = on_quotient(*tf);
    std::vector<CMatrix> images;
    images.reserve(values.size());
    for (auto v : values)
        images.push_back(CMatrix::Constant(1, 1, v));
    return Representation(tf, std::move(images));
}

WaveCharacter chi(const GroupSpec& spec, const DualVector& k)
{
    return WaveCharacter(spec, k);
}

//---------------------------------------------------------------------------//

QuotientPtr tf_quotient(const QuotientGroup& g_n)
{
    return std::make_shared<const QuotientGroup>(tf_slice(g_n.spec()), g_n.modulus(), g_n.m0());
}

int embed_tf(const QuotientGroup& g_n, const QuotientGroup& tf, int i)
{
    return g_n.index_of(tf.element(i));
}

Representation dual_action(const QuotientGroup& g_n, const NormalForm& g, const Representation& r)
{
    const QuotientGroup& tf = r.group();
    if (tf.modulus() != g_n.modulus() || tf.spec().point_order() != 1)
        throw DimensionMismatch("dual_action expects a representation of (TF)_N");
    const int gi = g_n.index_of(g);
    std::vector<CMatrix> images;
    images.reserve(tf.size());
    for (int h = 0; h < tf.size(); ++h) {
        int c = g_n.conjugate(embed_tf(g_n, tf, h), gi);
        images.push_back(r(tf.index_of(g_n.element(c))));
    }
    return Representation(r.domain(), std::move(images), r.seed());
}

namespace
{
std::vector<int> coset_representatives(const QuotientGroup& g_n)
{
    const auto& spec = g_n.spec();
    std::vector<int> reps;
    for (int p = 0; p < spec.point_order(); ++p)
        reps.push_back(
            g_n.index_of(NormalForm{std::vector<long long>(spec.d2, 0), spec.f_identity(), p}));
    return reps;
}
} // namespace

Representation induce(const QuotientPtr& g_n, const Representation& r)
{
    const QuotientGroup& tf = r.group();
    if (tf.modulus() != g_n->modulus() || tf.spec().point_order() != 1)
        throw DimensionMismatch("induce expects a representation of (TF)_N");
    const auto cosets = coset_representatives(*g_n);
    const int index = static_cast<int>(cosets.size());
    const int d = r.dim();
    std::vector<CMatrix> images;
    images.reserve(g_n->size());
    for (int g = 0; g < g_n->size(); ++g) {
        CMatrix m = CMatrix::Zero(index * d, index * d);
        for (int i = 0; i < index; ++i)
            for (int j = 0; j < index; ++j) {
                int x = g_n->multiply(g_n->inverse(cosets[i]), g_n->multiply(g, cosets[j]));
                const NormalForm& nf = g_n->element(x);
                if (nf.p == 0)
                    m.block(i * d, j * d, d, d) = r(tf.index_of(nf));
            }
        images.push_back(std::move(m));
    }
    return Representation(g_n, std::move(images), r.seed());
}

bool mackey_irreducible(const QuotientGroup& g_n, const Representation& r)
{
    const auto& spec = g_n.spec();
    for (int p = 1; p < spec.point_order(); ++p) {
        NormalForm g{std::vector<long long>(spec.d2, 0), spec.f_identity(), p};
        if (equivalent(dual_action(g_n, g, r), r))
            return false;
    }
    return true;
}

} // namespace isodual

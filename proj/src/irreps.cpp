#include "isodual/error.hpp"
#include "isodual/representation.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>

namespace isodual
{

CMatrix symmetric_orthonormalize(const CMatrix& basis)
{
    CMatrix gram = basis.adjoint() * basis;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
    Eigen::VectorXd inv_sqrt = es.eigenvalues().cwiseSqrt().cwiseInverse();
    CMatrix s = es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
    return basis * s;
}

namespace
{

using Rng = std::mt19937_64;

Complex gaussian(Rng& rng)
{
    std::normal_distribution<double> n(0.0, 1.0);
    double re = n(rng);
    double im = n(rng);
    return {re, im};
}

//! Column blocks of eigenvectors grouped by nearly equal eigenvalues.
std::vector<CMatrix> eigenspaces(const CMatrix& hermitian)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const Eigen::Index n = ev.size();
    double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    double gap = 1e-7 * scale;
    std::vector<CMatrix> out;
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= n; ++i) {
        if (i == n || ev[i] - ev[i - 1] > gap) {
            out.push_back(es.eigenvectors().middleCols(start, i - start));
            start = i;
        }
    }
    return out;
}

//! Restriction of the left-regular representation to span(V).
std::vector<CMatrix> regular_restriction(const QuotientGroup& q, const CMatrix& v)
{
    const int n = q.size();
    std::vector<CMatrix> images;
    images.reserve(n);
    CMatrix w(v.rows(), v.cols());
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            w.row(h) = v.row(q.multiply(g, h));
        images.push_back(w.adjoint() * v);
    }
    return images;
}

//! Character of the left-regular representation restricted to span(V).
CharacterTable regular_character(const QuotientGroup& q, const CMatrix& v)
{
    const int n = q.size();
    CharacterTable chi(n, 0.0);
    for (int g = 0; g < n; ++g) {
        Complex s = 0;
        for (int h = 0; h < n; ++h)
            s += v.row(q.multiply(g, h)).dot(v.row(h));
        chi[g] = s;
    }
    return chi;
}

CharacterTable character_of(const std::vector<CMatrix>& images)
{
    CharacterTable chi(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        chi[i] = images[i].trace();
    return chi;
}

double norm_of(const CharacterTable& chi)
{
    return character_inner(chi, chi).real();
}

bool same_character(const CharacterTable& a, const CharacterTable& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > structural_tol)
            return false;
    return true;
}

struct Found
{
    CharacterTable chi;
    std::vector<CMatrix> images;
};

class Decomposer
{
  public:
    Decomposer(const QuotientGroup& q, Rng& rng, int max_retries)
        : q_(q), rng_(rng), max_retries_(max_retries)
    {
    }

    std::vector<Found> found;

    bool known(const CharacterTable& chi) const
    {
        return std::any_of(found.begin(), found.end(),
                           [&](const Found& f) { return same_character(f.chi, chi); });
    }

    //! Split a reducible unitary representation with averaged commutant elements.
    void refine(const std::vector<CMatrix>& sigma)
    {
        const Eigen::Index d = sigma.front().rows();
        for (int attempt = 0; attempt < max_retries_; ++attempt) {
            CMatrix y(d, d);
            for (Eigen::Index i = 0; i < d; ++i)
                for (Eigen::Index j = 0; j < d; ++j)
                    y(i, j) = gaussian(rng_);
            y = (y + y.adjoint()).eval();
            CMatrix c = CMatrix::Zero(d, d);
            for (const auto& m : sigma)
                c += m * y * m.adjoint();
            c /= static_cast<double>(sigma.size());
            auto spaces = eigenspaces(c);
            if (spaces.size() < 2)
                continue;
            for (const auto& u0 : spaces) {
                CMatrix u = symmetric_orthonormalize(u0);
                std::vector<CMatrix> sub;
                sub.reserve(sigma.size());
                for (const auto& m : sigma)
                    sub.push_back(u.adjoint() * m * u);
                accept(std::move(sub));
            }
            return;
        }
        throw ConvergenceFailure("commutant averaging stayed scalar on a reducible block");
    }

    void accept(std::vector<CMatrix> images)
    {
        auto chi = character_of(images);
        if (known(chi))
            return;
        if (std::abs(norm_of(chi) - 1.0) <= structural_tol) {
            found.push_back({std::move(chi), std::move(images)});
            return;
        }
        refine(images);
    }

    void decompose_regular()
    {
        const int n = q_.size();
        std::vector<Complex> c(n);
        for (auto& x : c)
            x = gaussian(rng_);
        // X = sum_g c_g R(g) commutes with the left-regular action;
        // X_{a,b} = c_{a^{-1} b}.
        CMatrix h(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                h(a, b) = c[q_.multiply(q_.inverse(a), b)];
        h = (h + h.adjoint()).eval();
        for (const auto& v0 : eigenspaces(h)) {
            CMatrix v = symmetric_orthonormalize(v0);
            auto chi = regular_character(q_, v);
            if (known(chi))
                continue;
            if (std::abs(norm_of(chi) - 1.0) <= structural_tol)
                found.push_back({std::move(chi), regular_restriction(q_, v)});
            else
                refine(regular_restriction(q_, v));
        }
    }

  private:
    const QuotientGroup& q_;
    Rng& rng_;
    int max_retries_;
};

//! Descending lexicographic order on rounded characters puts the trivial
//! representation first within dimension 1.
bool irrep_order(const Found& a, const Found& b, int identity)
{
    long long da = std::lround(a.chi[identity].real()), db = std::lround(b.chi[identity].real());
    if (da != db)
        return da < db;
    for (std::size_t i = 0; i < a.chi.size(); ++i) {
        long long ar = std::llround(a.chi[i].real() * 1e6), br = std::llround(b.chi[i].real() * 1e6);
        if (ar != br)
            return ar > br;
        long long ai = std::llround(a.chi[i].imag() * 1e6), bi = std::llround(b.chi[i].imag() * 1e6);
        if (ai != bi)
            return ai > bi;
    }
    return false;
}

} // namespace

IrrepSet irreps(const QuotientPtr& group, const IrrepOptions& options)
{
    const QuotientGroup& q = *group;
    if (q.size() > options.cap)
        throw CapExceeded("group of order " + std::to_string(q.size()) + " exceeds the irrep cap "
                          + std::to_string(options.cap));
    for (int attempt = 0; attempt <= options.max_reseeds; ++attempt) {
        const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(attempt);
        Rng rng(seed);
        Decomposer dec(q, rng, options.max_reseeds);
        try {
            dec.decompose_regular();
        } catch (const ConvergenceFailure&) {
            continue;
        }
        long long total = 0;
        for (const auto& f : dec.found) {
            long long d = std::lround(f.chi[q.identity()].real());
            total += d * d;
        }
        if (total != q.size())
            continue;

        std::sort(dec.found.begin(), dec.found.end(), [&](const Found& a, const Found& b) {
            return irrep_order(a, b, q.identity());
        });
        IrrepSet out;
        out.group = group;
        out.seed = seed;
        out.reseeds = attempt;
        for (auto& f : dec.found)
            out.irreps.emplace_back(group, std::move(f.images), seed);
        return out;
    }
    throw ConvergenceFailure("irrep decomposition failed after "
                             + std::to_string(options.max_reseeds) + " reseeds");
}

} // namespace isodual

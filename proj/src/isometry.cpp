#include "isodual/isometry.hpp"

#include "isodual/error.hpp"

#include <cmath>
#include <limits>

namespace isodual
{

OrthoMatrix::OrthoMatrix(Eigen::MatrixXd m) : m_(std::move(m))
{
    if (m_.rows() != m_.cols())
        throw DimensionMismatch("orthogonal block must be square");
}

OrthoMatrix OrthoMatrix::identity(int dim)
{
    return OrthoMatrix(Eigen::MatrixXd::Identity(dim, dim));
}

double OrthoMatrix::orthogonality_defect() const
{
    if (m_.size() == 0)
        return 0.0;
    Eigen::MatrixXd e = m_.transpose() * m_ - Eigen::MatrixXd::Identity(dim(), dim());
    return e.cwiseAbs().maxCoeff();
}

OrthoMatrix OrthoMatrix::operator*(const OrthoMatrix& other) const
{
    if (dim() != other.dim())
        throw DimensionMismatch("O(d1) blocks of different size");
    return OrthoMatrix(m_ * other.m_);
}

double max_abs_diff(const OrthoMatrix& a, const OrthoMatrix& b)
{
    if (a.dim() != b.dim())
        return std::numeric_limits<double>::infinity();
    if (a.dim() == 0)
        return 0.0;
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

//---------------------------------------------------------------------------//

LatticePointOp::LatticePointOp(int dim, std::vector<long long> row_major)
    : dim_(dim), a_(std::move(row_major))
{
    if (dim < 0 || a_.size() != static_cast<std::size_t>(dim * dim))
        throw DimensionMismatch("lattice point operation needs dim*dim entries");
}

LatticePointOp LatticePointOp::identity(int dim)
{
    std::vector<long long> a(static_cast<std::size_t>(dim * dim), 0);
    for (int i = 0; i < dim; ++i)
        a[i * dim + i] = 1;
    return LatticePointOp(dim, std::move(a));
}

long long LatticePointOp::determinant() const
{
    // Bareiss fraction-free elimination; exact for integer input.
    if (dim_ == 0)
        return 1;
    std::vector<BigInt> m(a_.begin(), a_.end());
    auto at = [&](int i, int j) -> BigInt& { return m[i * dim_ + j]; };
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < dim_ - 1; ++k) {
        if (at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < dim_; ++i)
                if (at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0)
                return 0;
            for (int j = 0; j < dim_; ++j)
                std::swap(at(k, j), at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < dim_; ++i)
            for (int j = k + 1; j < dim_; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    BigInt d = at(dim_ - 1, dim_ - 1) * sign;
    return d.convert_to<long long>();
}

bool LatticePointOp::is_identity() const
{
    return *this == identity(dim_);
}

int LatticePointOp::order(int max_order) const
{
    LatticePointOp acc = *this;
    for (int k = 1; k <= max_order; ++k) {
        if (acc.is_identity())
            return k;
        acc = acc * *this;
    }
    return 0;
}

LatticePointOp LatticePointOp::inverse() const
{
    // Gauss-Jordan over the rationals; the result is integral when |det| = 1.
    const int n = dim_;
    std::vector<Rational> m(static_cast<std::size_t>(n * 2 * n), Rational(0));
    auto at = [&](int i, int j) -> Rational& { return m[i * 2 * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            at(i, j) = (*this)(i, j);
        at(i, n + i) = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            throw IntegralityViolation("singular lattice point operation");
        for (int j = 0; j < 2 * n; ++j)
            std::swap(at(c, j), at(piv, j));
        Rational d = at(c, c);
        for (int j = 0; j < 2 * n; ++j)
            at(c, j) /= d;
        for (int r = 0; r < n; ++r) {
            if (r == c || at(r, c) == 0)
                continue;
            Rational f = at(r, c);
            for (int j = 0; j < 2 * n; ++j)
                at(r, j) -= f * at(c, j);
        }
    }
    std::vector<long long> out(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& x = at(i, n + j);
            if (!is_integer(x))
                throw IntegralityViolation("point operation is not unimodular");
            out[i * n + j] = numerator(x).convert_to<long long>();
        }
    return LatticePointOp(n, std::move(out));
}

LatticePointOp LatticePointOp::transpose() const
{
    std::vector<long long> out(a_.size());
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            out[j * dim_ + i] = a_[i * dim_ + j];
    return LatticePointOp(dim_, std::move(out));
}

LatticePointOp LatticePointOp::operator*(const LatticePointOp& other) const
{
    if (dim_ != other.dim_)
        throw DimensionMismatch("point operations of different size");
    std::vector<long long> out(a_.size(), 0);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            long long x = a_[i * dim_ + k];
            if (x == 0)
                continue;
            for (int j = 0; j < dim_; ++j)
                out[i * dim_ + j] += x * other.a_[k * dim_ + j];
        }
    return LatticePointOp(dim_, std::move(out));
}

RationalVector LatticePointOp::operator*(const RationalVector& v) const
{
    if (static_cast<int>(v.size()) != dim_)
        throw DimensionMismatch("point operation applied to vector of wrong length");
    RationalVector out = zero_vector(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (a_[i * dim_ + j] != 0)
                out[i] += a_[i * dim_ + j] * v[j];
    return out;
}

LatticePointOp dual_action_matrix(const LatticePointOp& p)
{
    return p.inverse().transpose();
}

//---------------------------------------------------------------------------//

Isometry Isometry::identity(int d1, int d2)
{
    return {OrthoMatrix::identity(d1), LatticePointOp::identity(d2), zero_vector(d2)};
}

Isometry Isometry::translation(const OrthoMatrix& q, const LatticeVector& tau)
{
    return {q, LatticePointOp::identity(static_cast<int>(tau.size())), tau};
}

Isometry compose(const Isometry& g, const Isometry& h)
{
    if (g.d1() != h.d1() || g.d2() != h.d2())
        throw DimensionMismatch("compose: block dimensions differ");
    return {g.q * h.q, g.p * h.p, g.tau + g.p * h.tau};
}

Isometry inverse(const Isometry& g)
{
    LatticePointOp pinv = g.p.inverse();
    return {g.q.transpose(), pinv, -(pinv * g.tau)};
}

Isometry power(const Isometry& g, long long k)
{
    Isometry base = k < 0 ? inverse(g) : g;
    unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
    Isometry acc = Isometry::identity(g.d1(), g.d2());
    while (e) {
        if (e & 1ULL)
            acc = compose(acc, base);
        e >>= 1;
        if (e)
            base = compose(base, base);
    }
    return acc;
}

bool approx_equal(const Isometry& g, const Isometry& h, double tol)
{
    if (g.d1() != h.d1() || g.d2() != h.d2())
        throw DimensionMismatch("approx_equal: block dimensions differ");
    return g.p == h.p && g.tau == h.tau && max_abs_diff(g.q, h.q) <= tol;
}

} // namespace isodual

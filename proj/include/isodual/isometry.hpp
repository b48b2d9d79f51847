#pragma once

#include "isodual/rational.hpp"

#include <Eigen/Dense>

#include <compare>
#include <vector>

namespace isodual
{

inline constexpr double default_ortho_tol = 1e-9;
inline constexpr int default_max_point_order = 48;

//---------------------------------------------------------------------------//
/*!
 * The O(d1) block of an isometry. Stored in floating point; equality is
 * always up to a tolerance.
 */
class OrthoMatrix
{
  public:
    OrthoMatrix() = default;
    explicit OrthoMatrix(Eigen::MatrixXd m);

    static OrthoMatrix identity(int dim);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXd& matrix() const { return m_; }

    //! max |Q^T Q - I|
    double orthogonality_defect() const;
    bool is_orthogonal(double tol = default_ortho_tol) const
    {
        return orthogonality_defect() <= tol;
    }

    OrthoMatrix operator*(const OrthoMatrix& other) const;
    OrthoMatrix transpose() const { return OrthoMatrix(m_.transpose()); }

  private:
    Eigen::MatrixXd m_;
};

//! max |a_ij - b_ij|; +inf on shape mismatch
double max_abs_diff(const OrthoMatrix& a, const OrthoMatrix& b);

//---------------------------------------------------------------------------//
/*!
 * Integer matrix acting on lattice coordinates. Elements of the point group of
 * the space-group part.
 */
class LatticePointOp
{
  public:
    LatticePointOp() = default;
    LatticePointOp(int dim, std::vector<long long> row_major);

    static LatticePointOp identity(int dim);

    int dim() const { return dim_; }
    long long operator()(int i, int j) const { return a_[i * dim_ + j]; }
    const std::vector<long long>& entries() const { return a_; }

    long long determinant() const;
    bool is_identity() const;

    //! Smallest k >= 1 with P^k = I, or 0 if none up to max_order.
    int order(int max_order = default_max_point_order) const;

    //! Exact inverse; requires |det| = 1.
    LatticePointOp inverse() const;
    LatticePointOp transpose() const;

    LatticePointOp operator*(const LatticePointOp& other) const;
    RationalVector operator*(const RationalVector& v) const;

    friend bool operator==(const LatticePointOp&, const LatticePointOp&) = default;
    friend auto operator<=>(const LatticePointOp&, const LatticePointOp&) = default;

  private:
    int dim_ = 0;
    std::vector<long long> a_;
};

//! Action on dual-basis coordinates: k -> P^{-T} k, so that <P^{-T}k, Px> = <k, x>.
LatticePointOp dual_action_matrix(const LatticePointOp& p);

//---------------------------------------------------------------------------//
/*!
 * An element q (+) (p, tau) of O(d1) (+) E(d2), with the E(d2) part written in
 * lattice coordinates.
 */
struct Isometry
{
    OrthoMatrix q;
    LatticePointOp p;
    LatticeVector tau;

    int d1() const { return q.dim(); }
    int d2() const { return p.dim(); }

    static Isometry identity(int d1, int d2);
    static Isometry translation(const OrthoMatrix& q, const LatticeVector& tau);
};

Isometry compose(const Isometry& g, const Isometry& h);
Isometry inverse(const Isometry& g);
Isometry power(const Isometry& g, long long k);

//! Exact comparison of (p, tau) and max-norm tolerance on q.
bool approx_equal(const Isometry& g, const Isometry& h, double tol = default_ortho_tol);

} // namespace isodual

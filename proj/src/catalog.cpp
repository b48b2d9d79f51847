#include "isodual/catalog.hpp"

#include "isodual/error.hpp"

#include <cmath>
#include <numbers>

namespace isodual
{

Eigen::MatrixXd rotation2(double angle)
{
    Eigen::MatrixXd r(2, 2);
    r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return r;
}

Eigen::MatrixXd block_diag(const std::vector<Eigen::MatrixXd>& blocks)
{
    Eigen::Index n = 0;
    for (const auto& b : blocks)
        n += b.rows();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        out.block(at, at, b.rows(), b.cols()) = b;
        at += b.rows();
    }
    return out;
}

namespace
{

using std::numbers::pi;

Eigen::MatrixXd mirror2()
{
    Eigen::MatrixXd s(2, 2);
    s << 1, 0, 0, -1;
    return s;
}

Isometry lift(int d2, const Eigen::MatrixXd& q, int axis)
{
    return Isometry::translation(OrthoMatrix(q), unit_vector(d2, axis));
}

GroupSpec wallpaper(std::string name, bool mirror, const RationalVector& glide)
{
    GroupSpec s;
    s.name = std::move(name);
    s.d1 = 0;
    s.d2 = 2;
    Eigen::MatrixXd empty(0, 0);
    s.f_elements = {OrthoMatrix(empty)};
    s.t_lifts = {lift(2, empty, 0), lift(2, empty, 1)};
    s.p_reps = {Isometry::identity(0, 2)};
    if (mirror)
        s.p_reps.push_back({OrthoMatrix(empty), LatticePointOp(2, {1, 0, 0, -1}), glide});
    return s;
}

// Rotations by multiples of 2 pi / order about the helix axis, a screw
// generator R(alpha) (+) (1), and optionally the flip diag(1,-1) (+) (-1).
GroupSpec helix(std::string name, int order, double alpha, bool flip)
{
    GroupSpec s;
    s.name = std::move(name);
    s.d1 = 2;
    s.d2 = 1;
    for (int k = 0; k < order; ++k)
        s.f_elements.emplace_back(rotation2(2 * pi * k / order));
    s.t_lifts = {lift(1, rotation2(alpha), 0)};
    s.p_reps = {Isometry::identity(2, 1)};
    if (flip)
        s.p_reps.push_back({OrthoMatrix(mirror2()), LatticePointOp(1, {-1}), zero_vector(1)});
    return s;
}

// G = { R(n pi / 2) F (+) t^n : F in {I, R(pi)} }, section generator R(pi/2) (+) t.
GroupSpec quarter_screw()
{
    GroupSpec s;
    s.name = "screw4";
    s.d1 = 2;
    s.d2 = 1;
    s.f_elements = {OrthoMatrix(rotation2(0)), OrthoMatrix(rotation2(pi))};
    s.t_lifts = {lift(1, rotation2(pi / 2), 0)};
    s.p_reps = {Isometry::identity(2, 1)};
    return s;
}

// A group in O(6) (+) T_S with non-commuting section elements:
//   t1' = R(a1) (+) I2 (+) S,  t2' = I2 (+) R(a2) (+) R(pi/2),
//   F = { I6, I4 (+) R(pi/2)^2 }.
GroupSpec twist()
{
    const double a1 = 1.0;
    const double a2 = std::sqrt(2.0);
    Eigen::MatrixXd i2 = Eigen::MatrixXd::Identity(2, 2);
    GroupSpec s;
    s.name = "twistE8";
    s.d1 = 6;
    s.d2 = 2;
    s.f_elements = {OrthoMatrix(Eigen::MatrixXd::Identity(6, 6)),
                    OrthoMatrix(block_diag({i2, i2, rotation2(pi)}))};
    s.t_lifts = {lift(2, block_diag({rotation2(a1), i2, mirror2()}), 0),
                 lift(2, block_diag({i2, rotation2(a2), rotation2(pi / 2)}), 1)};
    s.p_reps = {Isometry::identity(6, 2)};
    return s;
}

std::vector<CatalogEntry> make_catalog()
{
    std::vector<CatalogEntry> c;
    c.push_back({"p1", "oblique lattice, translations only",
                 wallpaper("p1", false, zero_vector(2)), 1, 1, 1});
    c.push_back({"pm", "symmorphic mirror group", wallpaper("pm", true, zero_vector(2)), 1, 1, 2});
    c.push_back({"pg", "nonsymmorphic glide group, glide (diag(1,-1), (1/2, 0))",
                 wallpaper("pg", true, {Rational(1, 2), Rational(0)}), 1, 1, 2});
    c.push_back({"helix-C3", "helical group with C3 about the axis and a perpendicular flip",
                 helix("helix-C3", 3, 1.0, true), 1, 3, 2});
    c.push_back({"helix-C3-tf", "the TF part of helix-C3 (no flip)",
                 helix("helix-C3-tf", 3, 1.0, false), 1, 3, 1});
    c.push_back({"screw4", "quarter-turn screw over a half-turn kernel", quarter_screw(), 1, 2, 1});
    c.push_back({"twistE8", "section elements that do not commute; T is not a group", twist(), 4,
                 2, 1});
    return c;
}

} // namespace

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name)
{
    for (const auto& e : catalog())
        if (e.name == name)
            return e;
    throw FormatError("unknown catalog group '" + name + "'");
}

std::vector<std::string> catalog_names()
{
    std::vector<std::string> out;
    for (const auto& e : catalog())
        out.push_back(e.name);
    return out;
}

} // namespace isodual

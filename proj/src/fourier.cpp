#include "isodual/fourier.hpp"

#include "isodual/error.hpp"

#include <algorithm>
#include <numeric>

namespace isodual
{

CMatrix kron(const CMatrix& a, const CMatrix& b)
{
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

namespace
{

void require_shape(const PeriodicFunction& u)
{
    if (!u.group)
        throw ShapeMismatch("function has no group");
    if (static_cast<int>(u.values.size()) != u.group->size())
        throw ShapeMismatch("function has " + std::to_string(u.values.size()) + " values for a group of order "
                            + std::to_string(u.group->size()));
    for (const auto& m : u.values)
        if (m.rows() != u.rows || m.cols() != u.cols)
            throw ShapeMismatch("function value has the wrong shape");
}

} // namespace

PeriodicFunction PeriodicFunction::zero(const QuotientPtr& group, int rows, int cols)
{
    return PeriodicFunction{group, rows, cols,
                            std::vector<CMatrix>(group->size(), CMatrix::Zero(rows, cols))};
}

PeriodicFunction PeriodicFunction::constant(const QuotientPtr& group, const CMatrix& value)
{
    return PeriodicFunction{group, static_cast<int>(value.rows()), static_cast<int>(value.cols()),
                            std::vector<CMatrix>(group->size(), value)};
}

PeriodicFunction PeriodicFunction::delta(const QuotientPtr& group, int element, const CMatrix& value)
{
    auto u = zero(group, static_cast<int>(value.rows()), static_cast<int>(value.cols()));
    u.values.at(element) = value;
    return u;
}

PeriodicFunction PeriodicFunction::random(const QuotientPtr& group, int rows, int cols,
                                          std::mt19937_64& rng)
{
    std::normal_distribution<double> n(0.0, 1.0);
    auto u = zero(group, rows, cols);
    for (auto& m : u.values)
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) {
                double re = n(rng);
                double im = n(rng);
                m(i, j) = Complex(re, im);
            }
    return u;
}

PeriodicFunction lift(const PeriodicFunction& u, const QuotientPtr& larger)
{
    require_shape(u);
    auto out = PeriodicFunction::zero(larger, u.rows, u.cols);
    for (int i = 0; i < larger->size(); ++i)
        out.values[i] = u.values[project(*larger, i, *u.group)];
    return out;
}

Complex frobenius(const CMatrix& a, const CMatrix& b)
{
    // sum a_ij conj(b_ij); Eigen's dot conjugates its first argument.
    return b.reshaped().dot(a.reshaped());
}

Complex inner_product(const PeriodicFunction& u, const PeriodicFunction& v)
{
    require_shape(u);
    require_shape(v);
    if (u.rows != v.rows || u.cols != v.cols)
        throw ShapeMismatch("inner product of functions with different shapes");
    if (u.group->spec().name != v.group->spec().name)
        throw ShapeMismatch("inner product of functions on different groups");
    if (u.modulus() != v.modulus()) {
        long long common = std::lcm(u.modulus(), v.modulus());
        auto g = build_quotient(u.group->spec(), common);
        return inner_product(lift(u, g), lift(v, g));
    }
    Complex s = 0;
    for (int g = 0; g < u.group->size(); ++g)
        s += frobenius(u.values[g], v.values[g]);
    return s / static_cast<double>(u.group->size());
}

FourierTable transform(const PeriodicFunction& u, const std::vector<Representation>& reps)
{
    require_shape(u);
    FourierTable t;
    t.group = u.group;
    t.rows = u.rows;
    t.cols = u.cols;
    const double scale = 1.0 / u.group->size();
    for (int r = 0; r < static_cast<int>(reps.size()); ++r) {
        const auto& rho = reps[r];
        if (rho.group().size() != u.group->size() || rho.group().modulus() != u.modulus())
            throw ShapeMismatch("representation and function live on different quotients");
        CMatrix acc = CMatrix::Zero(u.rows * rho.dim(), u.cols * rho.dim());
        for (int g = 0; g < u.group->size(); ++g)
            acc += kron(u.values[g], rho(g));
        t.entries[r] = acc * scale;
    }
    return t;
}

FourierTable transform(const PeriodicFunction& u, const IrrepSet& irreps)
{
    auto t = transform(u, irreps.irreps);
    t.seed = irreps.seed;
    return t;
}

PeriodicFunction inverse_transform(const FourierTable& table, const IrrepSet& irreps)
{
    const auto& group = irreps.group;
    auto u = PeriodicFunction::zero(group, table.rows, table.cols);
    for (int r = 0; r < static_cast<int>(irreps.irreps.size()); ++r) {
        auto it = table.entries.find(r);
        if (it == table.entries.end())
            throw IncompleteTable("no entry for irrep " + std::to_string(r));
        const auto& rho = irreps.irreps[r];
        const int d = rho.dim();
        const CMatrix& b = it->second;
        if (b.rows() != table.rows * d || b.cols() != table.cols * d)
            throw ShapeMismatch("table entry " + std::to_string(r) + " has the wrong shape");
        for (int g = 0; g < group->size(); ++g) {
            const CMatrix& m = rho(g);
            for (int i = 0; i < table.rows; ++i)
                for (int j = 0; j < table.cols; ++j)
                    // tr(rho(g)^H B_ij) = <B_ij, rho(g)>_F
                    u.values[g](i, j) += static_cast<double>(d) * frobenius(b.block(i * d, j * d, d, d), m);
        }
    }
    return u;
}

Complex plancherel_sum(const FourierTable& a, const FourierTable& b, const IrrepSet& irreps)
{
    Complex s = 0;
    for (int r = 0; r < static_cast<int>(irreps.irreps.size()); ++r) {
        auto ia = a.entries.find(r);
        auto ib = b.entries.find(r);
        if (ia == a.entries.end() || ib == b.entries.end())
            throw IncompleteTable("no entry for irrep " + std::to_string(r));
        s += static_cast<double>(irreps.irreps[r].dim()) * frobenius(ia->second, ib->second);
    }
    return s;
}

PeriodicFunction translate(const PeriodicFunction& u, const NormalForm& g)
{
    require_shape(u);
    const auto& q = *u.group;
    const int gi = q.index_of(g);
    auto out = u;
    for (int h = 0; h < q.size(); ++h)
        out.values[h] = u.values[q.multiply(h, gi)];
    return out;
}

PeriodicFunction convolve(const SummableFunction& u, const PeriodicFunction& v)
{
    require_shape(v);
    if (u.cols != v.rows)
        throw ShapeMismatch("convolution needs inner dimensions to agree");
    const auto& q = *v.group;
    auto out = PeriodicFunction::zero(v.group, u.rows, v.cols);
    for (const auto& [nf, value] : u.support) {
        if (value.rows() != u.rows || value.cols() != u.cols)
            throw ShapeMismatch("summable function value has the wrong shape");
        const int hinv = q.inverse(q.index_of(nf));
        for (int g = 0; g < q.size(); ++g)
            out.values[g] += value * v.values[q.multiply(hinv, g)];
    }
    return out;
}

FourierTable transform(const SummableFunction& u, const IrrepSet& irreps)
{
    const auto& q = *irreps.group;
    FourierTable t;
    t.group = irreps.group;
    t.seed = irreps.seed;
    t.rows = u.rows;
    t.cols = u.cols;
    for (int r = 0; r < static_cast<int>(irreps.irreps.size()); ++r) {
        const auto& rho = irreps.irreps[r];
        CMatrix acc = CMatrix::Zero(u.rows * rho.dim(), u.cols * rho.dim());
        for (const auto& [nf, value] : u.support)
            acc += kron(value, rho(q.index_of(nf)));
        t.entries[r] = acc;
    }
    return t;
}

double max_difference(const FourierTable& a, const FourierTable& b)
{
    if (a.entries.size() != b.entries.size())
        throw ShapeMismatch("tables have different index sets");
    double worst = 0.0;
    for (const auto& [r, m] : a.entries) {
        auto it = b.entries.find(r);
        if (it == b.entries.end() || it->second.rows() != m.rows() || it->second.cols() != m.cols())
            throw ShapeMismatch("tables have different index sets");
        if (m.size())
            worst = std::max(worst, (m - it->second).cwiseAbs().maxCoeff());
    }
    return worst;
}

double max_difference(const PeriodicFunction& u, const PeriodicFunction& v)
{
    if (u.values.size() != v.values.size() || u.rows != v.rows || u.cols != v.cols)
        throw ShapeMismatch("functions have different shapes");
    double worst = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i)
        if (u.values[i].size())
            worst = std::max(worst, (u.values[i] - v.values[i]).cwiseAbs().maxCoeff());
    return worst;
}

std::vector<int> power_subgroup(const QuotientGroup& larger, long long modulus)
{
    if (modulus <= 0 || larger.modulus() % modulus != 0)
        throw BadModulus("power subgroup needs N dividing the quotient modulus");
    const auto& spec = larger.spec();
    const long long k = larger.modulus() / modulus;
    std::vector<int> out;
    std::vector<long long> n(spec.d2, 0);
    while (true) {
        out.push_back(larger.index_of(power(power_section(spec, n), modulus)));
        int i = spec.d2 - 1;
        while (i >= 0 && ++n[i] == k)
            n[i--] = 0;
        if (i < 0)
            break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace isodual

#include "isodual/quotient.hpp"

#include "isodual/error.hpp"

namespace isodual
{

QuotientGroup::QuotientGroup(GroupSpec spec, long long modulus, long long m0)
    : spec_(std::move(spec)), modulus_(modulus), m0_(m0)
{
    if (modulus_ < 1 || m0_ < 1 || modulus_ % m0_ != 0)
        throw BadModulus("N = " + std::to_string(modulus_) + " is not a multiple of m0 = "
                         + std::to_string(m0_));
    const int d = spec_.d2;
    long long count = 1;
    for (int i = 0; i < d; ++i) {
        count *= modulus_;
        if (count > 50'000'000)
            throw CapExceeded("quotient group is too large to materialize");
    }
    count *= spec_.f_order() * spec_.point_order();
    if (count > 1'000'000)
        throw CapExceeded("quotient group of order " + std::to_string(count)
                          + " is too large to materialize");

    elements_.reserve(static_cast<std::size_t>(count));
    std::vector<long long> n(d, 0);
    while (true) {
        for (int f = 0; f < spec_.f_order(); ++f)
            for (int p = 0; p < spec_.point_order(); ++p)
                elements_.push_back({n, f, p});
        int k = d - 1;
        while (k >= 0 && ++n[k] == modulus_)
            n[k--] = 0;
        if (k < 0)
            break;
    }
    reps_.reserve(elements_.size());
    for (const auto& nf : elements_)
        reps_.push_back(reconstruct(spec_, nf));

    int fid = spec_.f_identity();
    if (fid < 0)
        throw InternalInconsistency("F has no identity");
    identity_ = index_of(NormalForm{std::vector<long long>(d, 0), fid, 0});

    const int sz = size();
    std::vector<Isometry> gens(spec_.t_lifts.begin(), spec_.t_lifts.end());
    for (int f = 0; f < spec_.f_order(); ++f)
        gens.push_back(spec_.f_isometry(f));
    gens.insert(gens.end(), spec_.p_reps.begin(), spec_.p_reps.end());
    columns_ = static_cast<int>(gens.size());
    right_.resize(static_cast<std::size_t>(sz) * columns_);
    for (int a = 0; a < sz; ++a)
        for (int c = 0; c < columns_; ++c)
            right_[static_cast<std::size_t>(a) * columns_ + c] = index_of(compose(reps_[a], gens[c]));

    if (sz <= table_cap) {
        table_.resize(static_cast<std::size_t>(sz) * sz);
        for (int a = 0; a < sz; ++a)
            for (int b = 0; b < sz; ++b)
                table_[static_cast<std::size_t>(a) * sz + b] = multiply_word(a, b);
    }
    inverse_.resize(sz);
    for (int a = 0; a < sz; ++a)
        inverse_[a] = index_of(isodual::inverse(reps_[a]));
}

int QuotientGroup::index_of(const NormalForm& nf) const
{
    const int d = spec_.d2;
    if (static_cast<int>(nf.n.size()) != d)
        throw DimensionMismatch("normal form has wrong exponent length");
    long long idx = 0;
    for (int i = 0; i < d; ++i)
        idx = idx * modulus_ + mod(nf.n[i], modulus_);
    idx = (idx * spec_.f_order() + nf.f) * spec_.point_order() + nf.p;
    return static_cast<int>(idx);
}

int QuotientGroup::index_of(const Isometry& g) const
{
    return index_of(normal_form(spec_, g));
}

int QuotientGroup::multiply_exact(int a, int b) const
{
    return index_of(compose(reps_[a], reps_[b]));
}

int QuotientGroup::multiply_word(int a, int b) const
{
    // The representative of b is literally g_1^{n_1} ... g_d^{n_d} f p.
    const NormalForm& nf = elements_[b];
    const int d = spec_.d2;
    auto step = [&](int x, int c) { return right_[static_cast<std::size_t>(x) * columns_ + c]; };
    int x = a;
    for (int i = 0; i < d; ++i)
        for (long long k = 0; k < nf.n[i]; ++k)
            x = step(x, i);
    x = step(x, d + nf.f);
    return step(x, d + spec_.f_order() + nf.p);
}

int QuotientGroup::multiply(int a, int b) const
{
    if (!table_.empty())
        return table_[static_cast<std::size_t>(a) * size() + b];
    return multiply_word(a, b);
}

bool QuotientGroup::is_abelian() const
{
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (multiply(a, b) != multiply(b, a))
                return false;
    return true;
}

bool QuotientGroup::verify_axioms(int samples, std::uint64_t seed) const
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, size() - 1);
    for (int s = 0; s < samples; ++s) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
            return false;
        if (multiply(a, identity_) != a || multiply(identity_, a) != a)
            return false;
        if (multiply(a, inverse(a)) != identity_ || multiply(inverse(a), a) != identity_)
            return false;
    }
    return true;
}

QuotientPtr build_quotient(const GroupSpec& spec, long long modulus, const StructureReport& report)
{
    if (modulus < 1 || modulus % report.m0 != 0)
        throw BadModulus("m0 = " + std::to_string(report.m0) + " does not divide N = "
                         + std::to_string(modulus));
    return std::make_shared<const QuotientGroup>(spec, modulus, report.m0);
}

QuotientPtr build_quotient(const GroupSpec& spec, long long modulus)
{
    return build_quotient(spec, modulus, find_m0(spec));
}

int project(const QuotientGroup& q, int i, const QuotientGroup& target)
{
    if (q.modulus() % target.modulus() != 0)
        throw BadModulus("projection target modulus must divide the source modulus");
    return target.index_of(q.element(i));
}

} // namespace isodual

#include "isodual/rational.hpp"

#include "isodual/error.hpp"

#include <algorithm>
#include <numeric>

namespace isodual
{

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw FormatError("zero denominator in '" + s + "'");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const FormatError*>(&e))
            throw;
        throw FormatError("not a rational: '" + s + "'");
    }
}

std::string to_string(const Rational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

bool is_integer(const Rational& r)
{
    return denominator(r) == 1;
}

bool is_integral(const RationalVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_integer(r); });
}

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

RationalVector frac(const RationalVector& v)
{
    RationalVector out;
    out.reserve(v.size());
    for (const auto& r : v) {
        BigInt q = numerator(r) / denominator(r);
        Rational x = r - Rational(q);
        if (x < 0)
            x += 1;
        out.push_back(x);
    }
    return out;
}

Rational pairing(const RationalVector& k, const RationalVector& x)
{
    if (k.size() != x.size())
        throw DimensionMismatch("pairing of vectors of different length");
    Rational s = 0;
    for (std::size_t i = 0; i < k.size(); ++i)
        s += k[i] * x[i];
    return s;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vector sum");
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vector difference");
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

RationalVector operator-(const RationalVector& a)
{
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = -a[i];
    return out;
}

RationalVector scale(const Rational& s, const RationalVector& v)
{
    RationalVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = s * v[i];
    return out;
}

RationalVector zero_vector(int dim)
{
    return RationalVector(static_cast<std::size_t>(dim), Rational(0));
}

RationalVector unit_vector(int dim, int i)
{
    auto v = zero_vector(dim);
    v.at(static_cast<std::size_t>(i)) = 1;
    return v;
}

RationalVector from_integers(const std::vector<long long>& v)
{
    RationalVector out;
    out.reserve(v.size());
    for (long long x : v)
        out.emplace_back(x);
    return out;
}

std::vector<long long> to_integers(const RationalVector& v)
{
    std::vector<long long> out;
    out.reserve(v.size());
    for (const auto& r : v) {
        if (!is_integer(r))
            throw IntegralityViolation("coordinate " + to_string(r) + " is not an integer");
        out.push_back(numerator(r).convert_to<long long>());
    }
    return out;
}

long long floor_div(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

long long mod(long long a, long long b)
{
    long long r = a % b;
    return r < 0 ? r + (b < 0 ? -b : b) : r;
}

long long gcd(long long a, long long b)
{
    return std::gcd(a, b);
}

long long lcm(long long a, long long b)
{
    return std::lcm(a, b);
}

} // namespace isodual

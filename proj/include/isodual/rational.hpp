#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <string>
#include <string_view>
#include <vector>

namespace isodual
{

//! Exact rational in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

//! Coordinates with respect to the lattice basis (translations) or the dual
//! basis (wave vectors). The pairing is the plain coordinate dot product.
using RationalVector = std::vector<Rational>;
using LatticeVector = RationalVector;
using DualVector = RationalVector;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);
bool is_integral(const RationalVector& v);
double to_double(const Rational& r);

//! Reduce every coordinate into [0, 1).
RationalVector frac(const RationalVector& v);

//! Exact <k, x>.
Rational pairing(const RationalVector& k, const RationalVector& x);

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a);
RationalVector scale(const Rational& s, const RationalVector& v);
//! Constrained so that Eigen expressions never try to convert to Rational.
template<class S>
    requires std::same_as<S, Rational>
RationalVector operator*(const S& s, const RationalVector& v)
{
    return scale(s, v);
}

RationalVector zero_vector(int dim);
RationalVector unit_vector(int dim, int i);
RationalVector from_integers(const std::vector<long long>& v);

//! Throws IntegralityViolation if any coordinate is not an integer.
std::vector<long long> to_integers(const RationalVector& v);

long long floor_div(long long a, long long b);
long long mod(long long a, long long b);
long long gcd(long long a, long long b);
long long lcm(long long a, long long b);

} // namespace isodual

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace atlas {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A lattice point; the dimension is the vector length (0 is allowed).
using Point = std::vector<Integer>;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd_of(Integer a, Integer b)
{
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Integer factorial(unsigned n)
{
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, valid for negative n.
inline Integer binomial(long long n, unsigned k)
{
    Integer num = 1;
    for (unsigned i = 0; i < k; ++i) num *= Integer(n - static_cast<long long>(i));
    return num / factorial(k);
}

inline std::string to_string(const Integer& x) { return x.str(); }

inline Point make_point(std::initializer_list<long long> coords)
{
    Point p;
    p.reserve(coords.size());
    for (long long c : coords) p.emplace_back(c);
    return p;
}

} // namespace atlas

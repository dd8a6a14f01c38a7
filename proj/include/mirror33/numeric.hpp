#ifndef MIRROR33_NUMERIC_HPP
#define MIRROR33_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace mirror33 {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int numerator(const Rat& q)   { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int factorial(unsigned n)
{
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int pow(Int base, unsigned e)
{
    Int r = 1;
    while (e--) r *= base;
    return r;
}

inline Rat pow(Rat base, int e)
{
    Rat r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    for (int i = 0; i > e; --i) r /= base;
    return r;
}

/** Parse an exact rational literal of the form "p" or "p/q". */
inline Rat parse_rat(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("parse_rat: empty literal");
    Rat r(s);
    if (denominator(r) == 0)
        throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    return r;
}

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rat& v)
{
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

/** True when |v| fits a 53-bit mantissa, i.e. is exactly representable in JSON numbers. */
inline bool fits_json_number(const Int& v)
{
    static const Int bound = Int(1) << 53;
    return v > -bound && v < bound;
}

} // namespace mirror33

#endif

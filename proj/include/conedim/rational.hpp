#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "conedim/errors.hpp"

namespace conedim {

// Exact arithmetic carriers. cpp_rational keeps gcd-reduced form with a
// positive denominator, which is exactly the Rational contract; expression
// templates are switched off so results are always plain values.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline BigInt num(const Rational& q) { return numerator(q); }
inline BigInt den(const Rational& q) { return denominator(q); }

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

inline int sgn(const Rational& q) { return q.sign(); }
inline Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Serialized form is "p/q", or just "p" for integers.
inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline std::optional<Rational> try_parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt n(s);
            return Rational(n);
        }
        BigInt n(s.substr(0, slash));
        BigInt d(s.substr(slash + 1));
        if (d == 0) return std::nullopt;
        return Rational(n) / Rational(d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline Rational parse_rational(const std::string& s) {
    auto r = try_parse_rational(s);
    if (!r) throw ParseError("bad rational literal '" + s + "'");
    return *r;
}

// p-adic valuation of an integer; 0 maps to nullopt (v = +inf).
inline std::optional<long> vp_int(BigInt x, const BigInt& p) {
    if (x == 0) return std::nullopt;
    long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// v_p on rationals: x = p^v * unit. vp(0) = +inf, reported as nullopt.
inline std::optional<long> vp(const Rational& x, const BigInt& p) {
    if (x == 0) return std::nullopt;
    long v = *vp_int(num(x), p);
    v -= *vp_int(den(x), p);
    return v;
}

inline std::size_t hash_value(const Rational& q) {
    std::size_t seed = boost::hash<BigInt>()(num(q));
    boost::hash_combine(seed, boost::hash<BigInt>()(den(q)));
    return seed;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

} // namespace conedim

#ifndef BORO_RATIONAL_HPP
#define BORO_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "boro/errors.hpp"

namespace boro {

// Exact scalar domain for all coefficients. GMP keeps the canonical form
// (coprime, positive denominator) as long as inputs are canonical, which the
// factories below enforce.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

inline Rational inv(const Rational& q) {
    if (is_zero(q)) throw DivisionByZero("inverse of zero rational");
    return 1 / q;
}

// "num" or "num/den", no whitespace.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

std::size_t hash_value(const mpz_class& z);
std::size_t hash_value(const Rational& q);

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace boro

#endif

#ifndef BORO_CYCLOTOMIC_HPP
#define BORO_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "boro/rational.hpp"

namespace boro {

unsigned euler_phi(unsigned m);
std::vector<unsigned> divisors(unsigned m);

// Phi_m(x) as dense integer coefficients, low to high; monic of degree phi(m).
// Computed by dividing x^m - 1 by the product of Phi_d over proper divisors d.
std::vector<mpz_class> cyclotomic_polynomial(unsigned m);

// Q[x]/Phi_m(x): the coordinate field for the 2n-gon vertices (conductor 4n).
// Contexts are interned per conductor, so pointer identity matches conductor
// identity.
class CycField {
public:
    static std::shared_ptr<const CycField> get(unsigned conductor);

    unsigned conductor() const { return m_; }
    unsigned degree() const { return deg_; }
    const std::vector<mpz_class>& modulus() const { return phi_; }

    // x^k reduced mod Phi_m, integer coefficients, defined for 0 <= k < pow_count().
    const std::vector<mpz_class>& power_basis(unsigned k) const { return pow_[k]; }
    unsigned pow_count() const { return static_cast<unsigned>(pow_.size()); }

private:
    explicit CycField(unsigned conductor);

    unsigned m_ = 0;
    unsigned deg_ = 0;
    std::vector<mpz_class> phi_;
    std::vector<std::vector<mpz_class>> pow_;
};

using CycFieldPtr = std::shared_ptr<const CycField>;

// Element of Q(zeta_m) in the power basis 1, x, ..., x^{phi(m)-1}; always kept
// fully reduced, so equality is coefficient-list equality. Immutable after
// construction.
class CycElem {
public:
    CycElem() = default;  // detached null, only as container placeholder

    CycElem(CycFieldPtr field, std::vector<Rational> coeffs);

    static CycElem zero(const CycFieldPtr& field);
    static CycElem one(const CycFieldPtr& field);
    static CycElem from_rational(const CycFieldPtr& field, const Rational& q);
    static CycElem zeta_power(const CycFieldPtr& field, long k);

    const CycFieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool attached() const { return field_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;

    CycElem operator-() const;
    CycElem operator+(const CycElem& rhs) const;
    CycElem operator-(const CycElem& rhs) const;
    CycElem operator*(const CycElem& rhs) const;
    CycElem operator/(const CycElem& rhs) const;
    CycElem inverse() const;  // extended Euclid against Phi_m
    CycElem pow(unsigned long e) const;

    CycElem& operator+=(const CycElem& rhs) { return *this = *this + rhs; }
    CycElem& operator-=(const CycElem& rhs) { return *this = *this - rhs; }
    CycElem& operator*=(const CycElem& rhs) { return *this = *this * rhs; }

    bool operator==(const CycElem& rhs) const;
    bool operator!=(const CycElem& rhs) const { return !(*this == rhs); }

    // zeta -> zeta^a for gcd(a, m) = 1; a field automorphism.
    CycElem galois(unsigned a) const;
    CycElem conj() const;  // galois(m - 1)

    std::optional<Rational> as_rational() const;
    std::complex<double> to_complex() const;  // plotting only, never decisions

    CycElem scale(const Rational& q) const;

private:
    CycFieldPtr field_;
    std::vector<Rational> coeffs_;  // size degree(), reduced
};

bool is_zero(const CycElem& e);
bool is_one(const CycElem& e);
CycElem inv(const CycElem& e);

// Total order for canonical containers; compares conductor then coefficients.
int compare(const CycElem& a, const CycElem& b);
std::size_t hash_value(const CycElem& e);

// (cos(j*pi/n), sin(j*pi/n)) in Q(zeta_{4n}); the field's conductor must be 4n.
// Both results are fixed by complex conjugation (checked).
std::pair<CycElem, CycElem> vertex_coordinates(const CycFieldPtr& field, long j, unsigned n);

}  // namespace boro

#endif

#include "boro/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "boro/errors.hpp"

namespace boro {

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned> divisors(unsigned m) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d != m / d) out.push_back(m / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// dense integer polynomial helpers, coeffs low -> high

void ztrim(std::vector<mpz_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<mpz_class> zmul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> c(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// exact division by a monic divisor
std::vector<mpz_class> zdiv_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    ztrim(num);
    if (num.empty()) return {};
    const std::size_t dd = den.size() - 1;
    if (num.size() - 1 < dd) throw std::logic_error("zdiv_exact: degree underflow");
    std::vector<mpz_class> quot(num.size() - dd, mpz_class(0));
    for (std::size_t k = num.size(); k-- > dd;) {
        mpz_class c = num[k];
        if (c == 0) continue;
        quot[k - dd] = c;
        for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    ztrim(num);
    if (!num.empty()) throw std::logic_error("zdiv_exact: nonzero remainder");
    return quot;
}

std::map<unsigned, std::vector<mpz_class>>& phi_cache() {
    static std::map<unsigned, std::vector<mpz_class>> cache;
    return cache;
}
std::mutex phi_mutex;

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto& cache = phi_cache();
    std::vector<unsigned> todo{m};
    // resolve dependencies bottom-up
    while (!todo.empty()) {
        unsigned k = todo.back();
        if (cache.count(k)) {
            todo.pop_back();
            continue;
        }
        if (k == 1) {
            cache[1] = {mpz_class(-1), mpz_class(1)};  // x - 1
            todo.pop_back();
            continue;
        }
        bool ready = true;
        for (unsigned d : divisors(k))
            if (d < k && !cache.count(d)) {
                todo.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        std::vector<mpz_class> num(k + 1, mpz_class(0));
        num[0] = -1;
        num[k] = 1;  // x^k - 1
        std::vector<mpz_class> den{mpz_class(1)};
        for (unsigned d : divisors(k))
            if (d < k) den = zmul(den, cache[d]);
        cache[k] = zdiv_exact(std::move(num), den);
        todo.pop_back();
    }
    return cache[m];
}

CycField::CycField(unsigned conductor) : m_(conductor) {
    phi_ = cyclotomic_polynomial(conductor);
    deg_ = static_cast<unsigned>(phi_.size() - 1);
    // x^k mod Phi_m for k up to max(m, 2*deg - 1); the reduction recurrence
    // x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1}) keeps everything integral.
    const unsigned count = std::max(m_ + 1, 2 * deg_);
    pow_.reserve(count);
    for (unsigned k = 0; k < count; ++k) {
        if (k < deg_) {
            std::vector<mpz_class> row(deg_, mpz_class(0));
            row[k] = 1;
            pow_.push_back(std::move(row));
        } else {
            // x * pow_[k-1], reduced
            const auto& prev = pow_[k - 1];
            std::vector<mpz_class> row(deg_, mpz_class(0));
            for (unsigned i = 0; i + 1 < deg_; ++i) row[i + 1] = prev[i];
            const mpz_class& top = prev[deg_ - 1];
            if (top != 0)
                for (unsigned i = 0; i < deg_; ++i) row[i] -= top * phi_[i];
            pow_.push_back(std::move(row));
        }
    }
}

CycFieldPtr CycField::get(unsigned conductor) {
    static std::map<unsigned, CycFieldPtr> registry;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(conductor);
    if (it != registry.end()) return it->second;
    CycFieldPtr field(new CycField(conductor));
    registry[conductor] = field;
    return field;
}

namespace {

void require_same_field(const CycElem& a, const CycElem& b) {
    if (!a.attached() || !b.attached()) throw ContextMismatch("detached cyclotomic element");
    if (a.field()->conductor() != b.field()->conductor())
        throw ContextMismatch("cyclotomic conductor mismatch: " + std::to_string(a.field()->conductor()) +
                              " vs " + std::to_string(b.field()->conductor()));
}

}  // namespace

CycElem::CycElem(CycFieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_->degree()) throw std::invalid_argument("cyclotomic coefficient count mismatch");
}

CycElem CycElem::zero(const CycFieldPtr& field) {
    return CycElem(field, std::vector<Rational>(field->degree(), Rational(0)));
}

CycElem CycElem::one(const CycFieldPtr& field) { return from_rational(field, Rational(1)); }

CycElem CycElem::from_rational(const CycFieldPtr& field, const Rational& q) {
    std::vector<Rational> c(field->degree(), Rational(0));
    c[0] = q;
    return CycElem(field, std::move(c));
}

CycElem CycElem::zeta_power(const CycFieldPtr& field, long k) {
    const long m = static_cast<long>(field->conductor());
    long r = k % m;
    if (r < 0) r += m;
    const auto& row = field->power_basis(static_cast<unsigned>(r));
    std::vector<Rational> c(field->degree());
    for (unsigned i = 0; i < field->degree(); ++i) c[i] = Rational(row[i]);
    return CycElem(field, std::move(c));
}

bool CycElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

bool CycElem::is_one() const {
    if (sgn(coeffs_[0] - 1) != 0) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return false;
    return true;
}

CycElem CycElem::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return CycElem(field_, std::move(c));
}

CycElem CycElem::operator+(const CycElem& rhs) const {
    require_same_field(*this, rhs);
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] + rhs.coeffs_[i];
    return CycElem(field_, std::move(c));
}

CycElem CycElem::operator-(const CycElem& rhs) const {
    require_same_field(*this, rhs);
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] - rhs.coeffs_[i];
    return CycElem(field_, std::move(c));
}

CycElem CycElem::operator*(const CycElem& rhs) const {
    require_same_field(*this, rhs);
    const unsigned deg = field_->degree();
    std::vector<Rational> prod(2 * deg - 1, Rational(0));
    for (unsigned i = 0; i < deg; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (unsigned j = 0; j < deg; ++j) {
            if (sgn(rhs.coeffs_[j]) == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    std::vector<Rational> c(prod.begin(), prod.begin() + deg);
    for (unsigned k = deg; k < 2 * deg - 1; ++k) {
        if (sgn(prod[k]) == 0) continue;
        const auto& row = field_->power_basis(k);
        for (unsigned i = 0; i < deg; ++i)
            if (row[i] != 0) c[i] += prod[k] * row[i];
    }
    return CycElem(field_, std::move(c));
}

namespace {

// dense rational univariate helpers for the extended Euclid mod Phi_m

void qtrim(std::vector<Rational>& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::vector<Rational> qmul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<Rational> qsub(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

// returns (quotient, remainder)
std::pair<std::vector<Rational>, std::vector<Rational>> qdivmod(std::vector<Rational> num,
                                                                const std::vector<Rational>& den) {
    qtrim(num);
    if (den.empty()) throw DivisionByZero("univariate division by zero");
    if (num.size() < den.size()) return {{}, std::move(num)};
    std::vector<Rational> quot(num.size() - den.size() + 1, Rational(0));
    const Rational lead = den.back();
    while (num.size() >= den.size()) {
        if (sgn(num.back()) == 0) {
            num.pop_back();
            continue;
        }
        const std::size_t shift = num.size() - den.size();
        Rational c = num.back() / lead;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        num.pop_back();  // leading coefficient cancelled exactly
        quot[shift] = std::move(c);
    }
    qtrim(num);
    return {std::move(quot), std::move(num)};
}

}  // namespace

CycElem CycElem::inverse() const {
    if (!attached()) throw ContextMismatch("detached cyclotomic element");
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
    // extended Euclid: r0 = Phi_m, r1 = this; Phi_m irreducible over Q, so the
    // gcd is a nonzero constant and t1 ends up with this^{-1} mod Phi_m.
    const unsigned deg = field_->degree();
    std::vector<Rational> r0(deg + 1);
    for (unsigned i = 0; i <= deg; ++i) r0[i] = Rational(field_->modulus()[i]);
    std::vector<Rational> r1(coeffs_);
    qtrim(r1);
    std::vector<Rational> t0;                 // 0
    std::vector<Rational> t1{Rational(1)};    // 1
    while (true) {
        auto [q, r] = qdivmod(r0, r1);
        if (r.empty()) break;
        auto t2 = qsub(std::move(t0), qmul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    // r1 is the constant gcd
    if (r1.size() != 1) throw std::logic_error("cyclotomic inverse: modulus not irreducible?");
    const Rational scale = Rational(1) / r1[0];
    std::vector<Rational> c(deg, Rational(0));
    for (std::size_t i = 0; i < t1.size() && i < deg; ++i) c[i] = t1[i] * scale;
    if (t1.size() > deg) throw std::logic_error("cyclotomic inverse: unreduced result");
    return CycElem(field_, std::move(c));
}

CycElem CycElem::operator/(const CycElem& rhs) const {
    require_same_field(*this, rhs);
    return *this * rhs.inverse();
}

CycElem CycElem::pow(unsigned long e) const {
    CycElem result = one(field_);
    CycElem base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool CycElem::operator==(const CycElem& rhs) const {
    if (!attached() && !rhs.attached()) return true;
    require_same_field(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != rhs.coeffs_[i]) return false;
    return true;
}

CycElem CycElem::galois(unsigned a) const {
    const unsigned m = field_->conductor();
    if (std::gcd(a % m, m) != 1) throw std::invalid_argument("galois exponent not coprime to conductor");
    const unsigned deg = field_->degree();
    std::vector<Rational> c(deg, Rational(0));
    for (unsigned i = 0; i < deg; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        const auto& row = field_->power_basis((static_cast<unsigned long>(a) * i) % m);
        for (unsigned j = 0; j < deg; ++j)
            if (row[j] != 0) c[j] += coeffs_[i] * row[j];
    }
    return CycElem(field_, std::move(c));
}

CycElem CycElem::conj() const { return galois(field_->conductor() - 1); }

std::optional<Rational> CycElem::as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return std::nullopt;
    return coeffs_[0];
}

std::complex<double> CycElem::to_complex() const {
    const double angle = 2.0 * std::numbers::pi / static_cast<double>(field_->conductor());
    const std::complex<double> zeta(std::cos(angle), std::sin(angle));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * zeta + coeffs_[i].get_d();
    return acc;
}

CycElem CycElem::scale(const Rational& q) const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * q;
    return CycElem(field_, std::move(c));
}

bool is_zero(const CycElem& e) { return e.is_zero(); }
bool is_one(const CycElem& e) { return e.is_one(); }
CycElem inv(const CycElem& e) { return e.inverse(); }

int compare(const CycElem& a, const CycElem& b) {
    if (a.field()->conductor() != b.field()->conductor())
        return a.field()->conductor() < b.field()->conductor() ? -1 : 1;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const int c = cmp(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::size_t hash_value(const CycElem& e) {
    std::size_t h = e.field()->conductor();
    for (const auto& c : e.coeffs()) h = hash_combine(h, hash_value(c));
    return h;
}

std::pair<CycElem, CycElem> vertex_coordinates(const CycFieldPtr& field, long j, unsigned n) {
    if (field->conductor() != 4 * n) throw ContextMismatch("vertex coordinates need conductor 4n");
    const long m = static_cast<long>(field->conductor());
    const long a = ((2 * j) % m + m) % m;
    // cos(a*theta) = (zeta^a + zeta^{-a})/2, sin(a*theta) = (zeta^a - zeta^{-a})/(2 zeta^n),
    // theta = pi/(2n), zeta = zeta_{4n}
    const CycElem za = CycElem::zeta_power(field, a);
    const CycElem zna = CycElem::zeta_power(field, -a);
    const Rational half = make_rational(1, 2);
    CycElem cos_v = (za + zna).scale(half);
    CycElem sin_v = ((za - zna) * CycElem::zeta_power(field, -static_cast<long>(n))).scale(half);
    if (cos_v.conj() != cos_v || sin_v.conj() != sin_v)
        throw std::logic_error("vertex coordinates not conjugation-fixed");
    return {std::move(cos_v), std::move(sin_v)};
}

}  // namespace boro

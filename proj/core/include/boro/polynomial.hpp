#ifndef BORO_POLYNOMIAL_HPP
#define BORO_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "boro/cyclotomic.hpp"
#include "boro/rational.hpp"
#include "boro/ring.hpp"

namespace boro {

// scalar helpers shared by the two coefficient domains

inline Rational scalar_zero_like(const Rational&) { return Rational(0); }
inline Rational scalar_one_like(const Rational&) { return Rational(1); }
inline Rational scalar_from_long_like(const Rational&, long v) { return Rational(v); }
inline int scalar_compare(const Rational& a, const Rational& b) { return cmp(a, b); }

inline CycElem scalar_zero_like(const CycElem& e) { return CycElem::zero(e.field()); }
inline CycElem scalar_one_like(const CycElem& e) { return CycElem::one(e.field()); }
inline CycElem scalar_from_long_like(const CycElem& e, long v) {
    return CycElem::from_rational(e.field(), Rational(v));
}
inline int scalar_compare(const CycElem& a, const CycElem& b) { return compare(a, b); }

template <class K>
struct Term {
    Monomial mono;
    K coeff;
};

// Sparse multivariate polynomial: terms strictly descending in the ring's
// order, no zero coefficients, no duplicate monomials.
template <class K>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    Polynomial(RingPtr ring, std::vector<Term<K>> unsorted_terms) : ring_(std::move(ring)) {
        normalize(std::move(unsorted_terms));
    }

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, K c) {
        Polynomial p(std::move(ring));
        if (!boro::is_zero(c)) p.terms_.push_back({Monomial::one(), std::move(c)});
        return p;
    }

    static Polynomial variable(RingPtr ring, unsigned var, const K& one) {
        Polynomial p(std::move(ring));
        p.terms_.push_back({Monomial::var(var), one});
        return p;
    }

    static Polynomial term(RingPtr ring, Monomial m, K c) {
        Polynomial p(std::move(ring));
        if (!boro::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term<K>& lt() const { return terms_.front(); }
    const Monomial& lm() const { return terms_.front().mono; }
    const K& lc() const { return terms_.front().coeff; }

    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = terms_.front().mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return false;
        return true;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
        return r;
    }

    Polynomial operator+(const Polynomial& rhs) const { return merged(rhs, false); }
    Polynomial operator-(const Polynomial& rhs) const { return merged(rhs, true); }

    Polynomial operator*(const Polynomial& rhs) const {
        check_ring(rhs);
        if (is_zero() || rhs.is_zero()) return Polynomial(ring_);
        std::vector<Term<K>> prod;
        prod.reserve(terms_.size() * rhs.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : rhs.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
        Polynomial r(ring_);
        r.normalize(std::move(prod));
        return r;
    }

    Polynomial scale(const K& c) const {
        if (boro::is_zero(c)) return Polynomial(ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
        return r;
    }

    // this + c * m * g, the reduction workhorse
    Polynomial axpy(const K& c, const Monomial& m, const Polynomial& g) const {
        check_ring(g);
        const auto& order = ring_->order;
        std::vector<Term<K>> out;
        out.reserve(terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < g.terms_.size()) {
            const Monomial gm = g.terms_[j].mono * m;
            const int c3 = order.compare(terms_[i].mono, gm);
            if (c3 > 0) {
                out.push_back(terms_[i++]);
            } else if (c3 < 0) {
                K v = c * g.terms_[j].coeff;
                if (!boro::is_zero(v)) out.push_back({gm, std::move(v)});
                ++j;
            } else {
                K v = terms_[i].coeff + c * g.terms_[j].coeff;
                if (!boro::is_zero(v)) out.push_back({terms_[i].mono, std::move(v)});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
        for (; j < g.terms_.size(); ++j) {
            K v = c * g.terms_[j].coeff;
            if (!boro::is_zero(v)) out.push_back({g.terms_[j].mono * m, std::move(v)});
        }
        Polynomial r(ring_);
        r.terms_ = std::move(out);
        return r;
    }

    Polynomial times_monomial(const Monomial& m) const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff});
        return r;
    }

    // exact division by a monomial; every term must be divisible
    Polynomial divide_exact_monomial(const Monomial& m) const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (!m.divides(t.mono)) throw std::invalid_argument("monomial division not exact");
            r.terms_.push_back({t.mono / m, t.coeff});
        }
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        if (boro::is_one(lc())) return *this;
        return scale(inv(lc()));
    }

    K evaluate(std::span<const K> coords) const {
        if (coords.size() != ring_->nvars()) throw std::invalid_argument("coordinate count mismatch");
        K acc = coords.empty() ? K{} : scalar_zero_like(coords[0]);
        // per-variable power cache
        std::vector<std::vector<K>> powers(coords.size());
        for (std::size_t v = 0; v < coords.size(); ++v) powers[v].push_back(scalar_one_like(coords[v]));
        for (const auto& t : terms_) {
            K term_val = t.coeff;
            for (unsigned v = 0; v < coords.size(); ++v) {
                const unsigned e = t.mono.e[v];
                if (e == 0) continue;
                auto& pv = powers[v];
                while (pv.size() <= e) pv.push_back(pv.back() * coords[v]);
                term_val = term_val * pv[e];
            }
            acc = acc + term_val;
        }
        return acc;
    }

    Polynomial derivative(unsigned var) const {
        Polynomial r(ring_);
        for (const auto& t : terms_) {
            const unsigned e = t.mono.e[var];
            if (e == 0) continue;
            Monomial m = t.mono;
            m.e[var] = static_cast<std::uint16_t>(e - 1);
            r.terms_.push_back({m, t.coeff * scalar_from_long_like(t.coeff, static_cast<long>(e))});
        }
        return r;
    }

    bool operator==(const Polynomial& rhs) const {
        if (terms_.size() != rhs.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != rhs.terms_[i].mono || !(terms_[i].coeff == rhs.terms_[i].coeff))
                return false;
        return true;
    }
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    void check_ring(const Polynomial& rhs) const {
        if (!same_ring(ring_, rhs.ring_)) throw ContextMismatch("polynomial ring mismatch");
    }

private:
    Polynomial merged(const Polynomial& rhs, bool negate) const {
        check_ring(rhs);
        const auto& order = ring_->order;
        std::vector<Term<K>> out;
        out.reserve(terms_.size() + rhs.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < rhs.terms_.size()) {
            const int c = order.compare(terms_[i].mono, rhs.terms_[j].mono);
            if (c > 0) {
                out.push_back(terms_[i++]);
            } else if (c < 0) {
                out.push_back({rhs.terms_[j].mono, negate ? -rhs.terms_[j].coeff : rhs.terms_[j].coeff});
                ++j;
            } else {
                K v = terms_[i].coeff;
                if (negate)
                    v = v - rhs.terms_[j].coeff;
                else
                    v = v + rhs.terms_[j].coeff;
                if (!boro::is_zero(v)) out.push_back({terms_[i].mono, std::move(v)});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
        for (; j < rhs.terms_.size(); ++j)
            out.push_back({rhs.terms_[j].mono, negate ? -rhs.terms_[j].coeff : rhs.terms_[j].coeff});
        Polynomial r(ring_);
        r.terms_ = std::move(out);
        return r;
    }

    void normalize(std::vector<Term<K>> raw) {
        const auto& order = ring_->order;
        std::sort(raw.begin(), raw.end(),
                  [&order](const Term<K>& a, const Term<K>& b) { return order.compare(a.mono, b.mono) > 0; });
        terms_.clear();
        terms_.reserve(raw.size());
        for (auto& t : raw) {
            if (!terms_.empty() && terms_.back().mono == t.mono) {
                terms_.back().coeff = terms_.back().coeff + t.coeff;
                if (boro::is_zero(terms_.back().coeff)) terms_.pop_back();
            } else if (!boro::is_zero(t.coeff)) {
                terms_.push_back(std::move(t));
            }
        }
    }

    RingPtr ring_;
    std::vector<Term<K>> terms_;
};

// deterministic total order on polynomials of one ring (leading terms first)
template <class K>
int compare_polys(const Polynomial<K>& a, const Polynomial<K>& b) {
    const auto& order = a.ring()->order;
    const std::size_t n = std::min(a.terms().size(), b.terms().size());
    for (std::size_t i = 0; i < n; ++i) {
        const int cm = order.compare(a.terms()[i].mono, b.terms()[i].mono);
        if (cm != 0) return cm;
        const int cc = scalar_compare(a.terms()[i].coeff, b.terms()[i].coeff);
        if (cc != 0) return cc;
    }
    if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size() ? -1 : 1;
    return 0;
}

// true iff every partial derivative of total order < m vanishes at P
template <class K>
bool vanishes_to_order(const Polynomial<K>& f, std::span<const K> point, unsigned m) {
    if (m == 0) return true;
    const unsigned nv = f.ring()->nvars();
    // pair each derivative with the smallest variable allowed next;
    // differentiating in nondecreasing variable order hits each multi-index once
    std::vector<std::pair<Polynomial<K>, unsigned>> layer{{f, 0}};
    for (unsigned ord = 0; ord < m; ++ord) {
        for (const auto& [g, v0] : layer)
            if (!boro::is_zero(g.evaluate(point))) return false;
        if (ord + 1 == m) break;
        std::vector<std::pair<Polynomial<K>, unsigned>> next;
        for (const auto& [g, v0] : layer)
            for (unsigned v = v0; v < nv; ++v) {
                auto d = g.derivative(v);
                if (!d.is_zero()) next.push_back({std::move(d), v});
            }
        layer = std::move(next);
        if (layer.empty()) break;
    }
    return true;
}

template <class K>
Polynomial<K> homogenize(const Polynomial<K>& f, unsigned var) {
    if (f.is_zero()) return f;
    const int d = f.degree();
    std::vector<Term<K>> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m = t.mono;
        if (m.e[var] != 0) throw std::invalid_argument("homogenize: variable already present");
        m.e[var] = static_cast<std::uint16_t>(d - static_cast<int>(t.mono.degree()));
        out.push_back({m, t.coeff});
    }
    return Polynomial<K>(f.ring(), std::move(out));
}

template <class K>
Polynomial<K> dehomogenize(const Polynomial<K>& f, unsigned var) {
    std::vector<Term<K>> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m = t.mono;
        m.e[var] = 0;
        out.push_back({m, t.coeff});
    }
    return Polynomial<K>(f.ring(), std::move(out));
}

// remap variables by name into the target ring and re-sort under its order;
// only variables actually used by f need to exist in the target
template <class K>
Polynomial<K> convert_ring(const Polynomial<K>& f, const RingPtr& target) {
    const unsigned nv = f.ring()->nvars();
    std::vector<int> map(nv, -1);
    for (unsigned i = 0; i < nv; ++i) map[i] = target->var_index(f.ring()->vars[i]);
    std::vector<Term<K>> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m;
        for (unsigned i = 0; i < nv; ++i) {
            if (t.mono.e[i] == 0) continue;
            if (map[i] < 0) throw std::invalid_argument("convert_ring: variable missing in target ring");
            m.e[static_cast<unsigned>(map[i])] = t.mono.e[i];
        }
        out.push_back({m, t.coeff});
    }
    return Polynomial<K>(target, std::move(out));
}

template <class K2, class K, class F>
Polynomial<K2> map_coefficients(const Polynomial<K>& f, F&& fn) {
    std::vector<Term<K2>> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) out.push_back({t.mono, fn(t.coeff)});
    return Polynomial<K2>(f.ring(), std::move(out));
}

inline Polynomial<CycElem> embed_rational_poly(const Polynomial<Rational>& f, const CycFieldPtr& field) {
    return map_coefficients<CycElem>(f, [&](const Rational& q) { return CycElem::from_rational(field, q); });
}

// succeeds iff every coefficient is rational
inline std::optional<Polynomial<Rational>> descend_poly(const Polynomial<CycElem>& f) {
    std::vector<Term<Rational>> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        auto q = t.coeff.as_rational();
        if (!q) return std::nullopt;
        out.push_back({t.mono, std::move(*q)});
    }
    return Polynomial<Rational>(f.ring(), std::move(out));
}

}  // namespace boro

#endif

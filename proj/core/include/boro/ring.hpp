#ifndef BORO_RING_HPP
#define BORO_RING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "boro/errors.hpp"

namespace boro {

// Exponent vectors are fixed-width; degrees stay small at desk scale and the
// checked cap catches runaway products.
inline constexpr unsigned kMaxVars = 8;
inline constexpr unsigned kMaxExponent = 4096;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};

    static Monomial one() { return Monomial{}; }
    static Monomial var(unsigned i, std::uint16_t exp = 1) {
        Monomial m;
        m.e[i] = exp;
        return m;
    }

    unsigned degree() const {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    }

    bool is_one() const {
        for (auto x : e)
            if (x != 0) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (unsigned i = 0; i < kMaxVars; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r;
        for (unsigned i = 0; i < kMaxVars; ++i) {
            const unsigned s = e[i] + m.e[i];
            if (s > kMaxExponent) throw ExponentOverflow("monomial exponent overflow");
            r.e[i] = static_cast<std::uint16_t>(s);
        }
        return r;
    }

    // requires m.divides(*this)
    Monomial operator/(const Monomial& m) const {
        Monomial r;
        for (unsigned i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - m.e[i]);
        return r;
    }

    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (unsigned i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (unsigned i = 0; i < kMaxVars; ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

enum class OrderKind { Grevlex, Lex, Elim };

// Total, multiplicative monomial order with 1 minimal. Elim(k) compares a
// leading block of k variables grevlex first, then the tail block grevlex;
// eliminating the block reduces to discarding monomials that touch it.
class MonomialOrder {
public:
    MonomialOrder() = default;
    MonomialOrder(OrderKind kind, unsigned nvars, unsigned elim_block = 0)
        : kind_(kind), nvars_(nvars), elim_(elim_block) {}

    OrderKind kind() const { return kind_; }
    unsigned nvars() const { return nvars_; }
    unsigned elim_block() const { return elim_; }

    // -1 if a < b, 0 if equal, +1 if a > b
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case OrderKind::Grevlex:
                return grevlex_span(a, b, 0, nvars_);
            case OrderKind::Lex:
                for (unsigned i = 0; i < nvars_; ++i)
                    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
                return 0;
            case OrderKind::Elim: {
                const int head = grevlex_span(a, b, 0, elim_);
                if (head != 0) return head;
                return grevlex_span(a, b, elim_, nvars_);
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && nvars_ == o.nvars_ && elim_ == o.elim_;
    }

private:
    static int grevlex_span(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) {
        unsigned da = 0, db = 0;
        for (unsigned i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (unsigned i = hi; i-- > lo;)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }

    OrderKind kind_ = OrderKind::Grevlex;
    unsigned nvars_ = 0;
    unsigned elim_ = 0;
};

struct Ring {
    std::vector<std::string> vars;
    MonomialOrder order;

    unsigned nvars() const { return static_cast<unsigned>(vars.size()); }
    int var_index(const std::string& name) const {
        for (unsigned i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, OrderKind kind = OrderKind::Grevlex,
                         unsigned elim_block = 0) {
    if (vars.size() > kMaxVars) throw std::invalid_argument("too many ring variables");
    auto r = std::make_shared<Ring>();
    r->order = MonomialOrder(kind, static_cast<unsigned>(vars.size()), elim_block);
    r->vars = std::move(vars);
    return r;
}

// The canonical ambient ring: C[x,y,z] with x > y > z under grevlex.
RingPtr xyz_ring();

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a->vars == b->vars && a->order == b->order);
}

std::string monomial_to_text(const Ring& ring, const Monomial& m);

}  // namespace boro

#endif

#ifndef BORO_GROEBNER_HPP
#define BORO_GROEBNER_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

#include "boro/polynomial.hpp"

namespace boro {

template <class K>
struct DivisionResult {
    Polynomial<K> remainder;
    std::vector<Polynomial<K>> quotients;  // parallel to the basis
};

namespace detail {

// rest[pos..] + c * m * gtail, consuming rest
template <class K>
std::vector<Term<K>> merge_axpy(const MonomialOrder& order, std::vector<Term<K>>&& rest, std::size_t pos,
                                const K& c, const Monomial& m, const std::vector<Term<K>>& gtail,
                                std::size_t gstart) {
    std::vector<Term<K>> out;
    out.reserve(rest.size() - pos + gtail.size() - gstart);
    std::size_t i = pos, j = gstart;
    while (i < rest.size() && j < gtail.size()) {
        const Monomial gm = gtail[j].mono * m;
        const int cmp = order.compare(rest[i].mono, gm);
        if (cmp > 0) {
            out.push_back(std::move(rest[i++]));
        } else if (cmp < 0) {
            K v = c * gtail[j].coeff;
            if (!boro::is_zero(v)) out.push_back({gm, std::move(v)});
            ++j;
        } else {
            K v = rest[i].coeff + c * gtail[j].coeff;
            if (!boro::is_zero(v)) out.push_back({rest[i].mono, std::move(v)});
            ++i;
            ++j;
        }
    }
    while (i < rest.size()) out.push_back(std::move(rest[i++]));
    for (; j < gtail.size(); ++j) {
        K v = c * gtail[j].coeff;
        if (!boro::is_zero(v)) out.push_back({gtail[j].mono * m, std::move(v)});
    }
    return out;
}

}  // namespace detail

// Deterministic full division: always reduces the largest reducible term by
// the first matching divisor in basis order; the remainder has no term
// divisible by any basis leading term.
template <class K>
DivisionResult<K> divide_full(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis,
                              bool want_quotients) {
    const RingPtr& ring = f.ring();
    const MonomialOrder& order = ring->order;
    DivisionResult<K> res;
    res.quotients.assign(want_quotients ? basis.size() : 0, Polynomial<K>(ring));
    std::vector<std::vector<Term<K>>> quot_terms(want_quotients ? basis.size() : 0);

    std::vector<Term<K>> rest(f.terms());
    std::vector<Term<K>> out;
    std::size_t pos = 0;
    while (pos < rest.size()) {
        const Monomial& lm = rest[pos].mono;
        std::size_t gi = basis.size();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (!basis[k].is_zero() && basis[k].lm().divides(lm)) {
                gi = k;
                break;
            }
        }
        if (gi == basis.size()) {
            out.push_back(std::move(rest[pos]));
            ++pos;
            continue;
        }
        const Polynomial<K>& g = basis[gi];
        const Monomial m = lm / g.lm();
        K c = rest[pos].coeff * inv(g.lc());
        if (want_quotients) quot_terms[gi].push_back({m, c});
        c = -c;
        rest = detail::merge_axpy(order, std::move(rest), pos + 1, c, m, g.terms(), 1);
        pos = 0;
    }
    res.remainder = Polynomial<K>(ring, std::move(out));
    if (want_quotients)
        for (std::size_t k = 0; k < basis.size(); ++k)
            res.quotients[k] = Polynomial<K>(ring, std::move(quot_terms[k]));
    return res;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis) {
    return divide_full(f, basis, false).remainder;
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
    if (f.is_zero() || g.is_zero()) return Polynomial<K>(f.ring());
    const Monomial L = lcm(f.lm(), g.lm());
    Polynomial<K> a = f.times_monomial(L / f.lm()).scale(inv(f.lc()));
    Polynomial<K> b = g.times_monomial(L / g.lm()).scale(inv(g.lc()));
    return a - b;
}

template <class K>
struct GroebnerResult {
    std::vector<Polynomial<K>> basis;  // reduced GB, ascending leading terms
    // when tracked: basis[i] = sum_j expr[i][j] * input[j]
    std::vector<std::vector<Polynomial<K>>> expr;
};

namespace detail {

struct SPair {
    unsigned sugar;
    Monomial lcm;
    unsigned i, j;
};

template <class K>
struct PairQueue {
    const MonomialOrder* order;
    std::vector<SPair> pairs;

    bool less(const SPair& a, const SPair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        const int c = order->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }

    SPair pop_min() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (less(pairs[k], pairs[best])) best = k;
        SPair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        return p;
    }
};

}  // namespace detail

// Buchberger with sugar selection, Gebauer-Moller pair pruning and the
// product criterion; inputs need not be homogeneous (the elimination trick
// used by ideal intersection is inhomogeneous).
template <class K>
GroebnerResult<K> buchberger(const std::vector<Polynomial<K>>& inputs, bool track = false) {
    GroebnerResult<K> res;
    if (inputs.empty()) return res;
    const RingPtr ring = inputs[0].ring();
    const MonomialOrder& order = ring->order;

    std::vector<Polynomial<K>> basis;
    std::vector<std::vector<Polynomial<K>>> expr;
    std::vector<unsigned> sugar;
    detail::PairQueue<K> queue{&order, {}};

    auto add_element = [&](Polynomial<K> h, std::vector<Polynomial<K>> h_expr, unsigned h_sugar) {
        const unsigned t = static_cast<unsigned>(basis.size());
        // Gebauer-Moller update: drop old pairs subsumed by the newcomer
        std::vector<detail::SPair> kept;
        kept.reserve(queue.pairs.size());
        for (auto& p : queue.pairs) {
            const bool subsumed = h.lm().divides(p.lcm) && lcm(basis[p.i].lm(), h.lm()) != p.lcm &&
                                  lcm(basis[p.j].lm(), h.lm()) != p.lcm;
            if (!subsumed) kept.push_back(std::move(p));
        }
        queue.pairs = std::move(kept);
        // new pairs, pruned by M, F, then product criterion
        std::vector<detail::SPair> fresh;
        for (unsigned i = 0; i < t; ++i) {
            if (basis[i].is_zero()) continue;
            detail::SPair p;
            p.i = i;
            p.j = t;
            p.lcm = lcm(basis[i].lm(), h.lm());
            const unsigned di = sugar[i] + (p.lcm / basis[i].lm()).degree();
            const unsigned dj = h_sugar + (p.lcm / h.lm()).degree();
            p.sugar = std::max(di, dj);
            fresh.push_back(std::move(p));
        }
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a] || drop[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm) drop[a] = true;
            }
        // among equal lcms keep the first
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < a; ++b)
                if (!drop[a] && !drop[b] && fresh[a].lcm == fresh[b].lcm) drop[a] = true;
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a] && coprime(basis[fresh[a].i].lm(), h.lm())) drop[a] = true;
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) queue.pairs.push_back(std::move(fresh[a]));

        basis.push_back(std::move(h));
        expr.push_back(std::move(h_expr));
        sugar.push_back(h_sugar);
    };

    // seed with the nonzero inputs, monic
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        const Polynomial<K>& f = inputs[j];
        if (f.is_zero()) continue;
        if (!same_ring(f.ring(), ring)) throw ContextMismatch("mixed rings in buchberger input");
        std::vector<Polynomial<K>> e;
        if (track) {
            e.assign(inputs.size(), Polynomial<K>(ring));
            e[j] = Polynomial<K>::constant(ring, inv(f.lc()));
        }
        add_element(f.monic(), std::move(e), static_cast<unsigned>(f.degree()));
    }

    while (!queue.pairs.empty()) {
        const detail::SPair p = queue.pop_min();
        const Polynomial<K>& fi = basis[p.i];
        const Polynomial<K>& fj = basis[p.j];
        const Monomial mi = p.lcm / fi.lm();
        const Monomial mj = p.lcm / fj.lm();
        Polynomial<K> spoly = fi.times_monomial(mi) - fj.times_monomial(mj);
        auto div = divide_full(spoly, basis, track);
        if (div.remainder.is_zero()) continue;
        const K lead = div.remainder.lc();
        Polynomial<K> h = div.remainder.monic();
        std::vector<Polynomial<K>> h_expr;
        if (track) {
            h_expr.assign(inputs.size(), Polynomial<K>(ring));
            const K scale = inv(lead);
            for (std::size_t col = 0; col < inputs.size(); ++col) {
                Polynomial<K> acc = expr[p.i][col].times_monomial(mi) - expr[p.j][col].times_monomial(mj);
                for (std::size_t k = 0; k < basis.size(); ++k)
                    if (!div.quotients[k].is_zero() && !expr[k][col].is_zero())
                        acc = acc - div.quotients[k] * expr[k][col];
                h_expr[col] = acc.scale(scale);
            }
        }
        add_element(std::move(h), std::move(h_expr), p.sugar);
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return order.compare(basis[a].lm(), basis[b].lm()) < 0;
    });
    std::vector<std::size_t> kept;
    for (std::size_t k : idx) {
        bool redundant = false;
        for (std::size_t prev : kept)
            if (basis[prev].lm().divides(basis[k].lm())) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(k);
    }

    std::vector<Polynomial<K>> reduced;
    std::vector<std::vector<Polynomial<K>>> reduced_expr;
    reduced.reserve(kept.size());
    for (std::size_t k : kept) {
        reduced.push_back(basis[k]);
        if (track) reduced_expr.push_back(expr[k]);
    }
    // tail-reduce each element against the others
    for (std::size_t k = 0; k < reduced.size(); ++k) {
        std::vector<Polynomial<K>> others;
        others.reserve(reduced.size() - 1);
        for (std::size_t l = 0; l < reduced.size(); ++l)
            if (l != k) others.push_back(reduced[l]);
        auto div = divide_full(reduced[k], others, track);
        Polynomial<K> nf = div.remainder;  // keeps the leading term (minimal basis)
        if (track) {
            std::vector<Polynomial<K>> e = reduced_expr[k];
            std::size_t oi = 0;
            for (std::size_t l = 0; l < reduced.size(); ++l) {
                if (l == k) continue;
                if (!div.quotients[oi].is_zero())
                    for (std::size_t col = 0; col < e.size(); ++col)
                        e[col] = e[col] - div.quotients[oi] * reduced_expr[l][col];
                ++oi;
            }
            if (!nf.is_zero() && !boro::is_one(nf.lc())) {
                const K scale = inv(nf.lc());
                for (auto& c : e) c = c.scale(scale);
            }
            reduced_expr[k] = std::move(e);
        }
        reduced[k] = nf.monic();
    }

    res.basis = std::move(reduced);
    res.expr = std::move(reduced_expr);
    return res;
}

struct OrderKey {
    OrderKind kind;
    unsigned elim;
    bool operator<(const OrderKey& o) const {
        return std::tie(kind, elim) < std::tie(o.kind, o.elim);
    }
};

// Generator list plus cached reduced Groebner bases per monomial order.
// Copies share the cache; generators are immutable after construction.
template <class K>
class Ideal {
public:
    Ideal() = default;

    Ideal(RingPtr ring, std::vector<Polynomial<K>> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
        for (const auto& g : gens_)
            if (!same_ring(g.ring(), ring_)) throw ContextMismatch("generator ring mismatch");
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial<K>>& gens() const { return gens_; }

    bool is_zero_ideal() const {
        for (const auto& g : gens_)
            if (!g.is_zero()) return false;
        return true;
    }

    // reduced GB under the ring's own order
    const std::vector<Polynomial<K>>& groebner() const {
        return groebner_under(OrderKey{ring_->order.kind(), ring_->order.elim_block()}, ring_);
    }

    // reduced GB under another order on the same variables
    const std::vector<Polynomial<K>>& groebner(OrderKind kind, unsigned elim = 0) const {
        if (kind == ring_->order.kind() && elim == ring_->order.elim_block()) return groebner();
        RingPtr alt = make_ring(ring_->vars, kind, elim);
        return groebner_under(OrderKey{kind, elim}, alt);
    }

    bool contains(const Polynomial<K>& f) const {
        if (f.is_zero()) return true;
        return normal_form(f, groebner()).is_zero();
    }

private:
    struct Cache {
        std::mutex mutex;
        std::map<OrderKey, std::vector<Polynomial<K>>> gb;
    };

    const std::vector<Polynomial<K>>& groebner_under(const OrderKey& key, const RingPtr& host) const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->gb.find(key);
        if (it != cache_->gb.end()) return it->second;
        std::vector<Polynomial<K>> converted;
        converted.reserve(gens_.size());
        for (const auto& g : gens_)
            converted.push_back(same_ring(host, ring_) ? g : convert_ring(g, host));
        auto gb = buchberger(converted, false).basis;
        return cache_->gb.emplace(key, std::move(gb)).first->second;
    }

    RingPtr ring_;
    std::vector<Polynomial<K>> gens_;
    std::shared_ptr<Cache> cache_;
};

template <class K>
bool ideal_subset(const Ideal<K>& a, const Ideal<K>& b) {
    for (const auto& g : a.gens())
        if (!b.contains(g)) return false;
    return true;
}

template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
    // reduced GBs are unique per order
    const auto& ga = a.groebner();
    const auto& gb = b.groebner();
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (!(ga[i] == gb[i])) return false;
    return true;
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
    std::vector<Polynomial<K>> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal<K>(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
    std::vector<Polynomial<K>> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal<K>(a.ring(), std::move(gens));
}

// all degree-m products of the generators
template <class K>
Ideal<K> ideal_power(const Ideal<K>& a, unsigned m) {
    if (m == 0) throw std::invalid_argument("ideal_power: exponent must be >= 1");
    Ideal<K> acc = a;
    for (unsigned k = 1; k < m; ++k) acc = ideal_product(acc, a);
    return acc;
}

namespace detail {

inline std::string fresh_var_name(const std::vector<std::string>& taken) {
    std::string name = "t";
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) name = "_" + name;
    return name;
}

}  // namespace detail

// I cap J via the elimination ideal of t*I + (1-t)*J in a block order that
// eliminates the auxiliary variable; the result is re-minimalized.
template <class K>
Ideal<K> ideal_intersection(const Ideal<K>& a, const Ideal<K>& b);

// ascending-degree trim: a candidate is kept iff it does not reduce to zero
// against the ideal generated by the previously kept candidates
template <class K>
std::vector<Polynomial<K>> minimal_generators(const std::vector<Polynomial<K>>& raw) {
    std::vector<Polynomial<K>> cands;
    for (const auto& f : raw)
        if (!f.is_zero()) cands.push_back(f);
    std::sort(cands.begin(), cands.end(), [](const Polynomial<K>& f, const Polynomial<K>& g) {
        if (f.degree() != g.degree()) return f.degree() < g.degree();
        return compare_polys(f, g) < 0;
    });
    std::vector<Polynomial<K>> kept;
    std::vector<Polynomial<K>> gb;
    for (const auto& c : cands) {
        if (!kept.empty()) {
            if (normal_form(c, gb).is_zero()) continue;
        }
        kept.push_back(c);
        gb = buchberger(kept, false).basis;
    }
    return kept;
}

template <class K>
std::vector<Polynomial<K>> minimal_generators(const Ideal<K>& ideal) {
    return minimal_generators(ideal.gens());
}

// least degree of a nonzero form in the ideal
template <class K>
int alpha(const Ideal<K>& ideal) {
    const auto& gb = ideal.groebner();
    if (gb.empty()) throw ZeroIdeal("alpha of the zero ideal");
    int best = gb.front().degree();
    for (const auto& g : gb) best = std::min(best, g.degree());
    return best;
}

template <class K>
Ideal<K> ideal_intersection(const Ideal<K>& a, const Ideal<K>& b) {
    if (!same_ring(a.ring(), b.ring())) throw ContextMismatch("intersection of ideals in different rings");
    const RingPtr& ring = a.ring();
    if (a.is_zero_ideal()) return a;
    if (b.is_zero_ideal()) return b;
    std::vector<std::string> vars;
    vars.push_back(detail::fresh_var_name(ring->vars));
    vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
    RingPtr host = make_ring(std::move(vars), OrderKind::Elim, 1);
    K one_like{};
    for (const auto& f : a.gens())
        if (!f.is_zero()) {
            one_like = f.lc();
            break;
        }
    Polynomial<K> t = Polynomial<K>::variable(host, 0, scalar_one_like(one_like));
    Polynomial<K> one_minus_t = Polynomial<K>::constant(host, scalar_one_like(one_like)) - t;
    std::vector<Polynomial<K>> gens;
    for (const auto& f : a.gens())
        if (!f.is_zero()) gens.push_back(t * convert_ring(f, host));
    for (const auto& g : b.gens())
        if (!g.is_zero()) gens.push_back(one_minus_t * convert_ring(g, host));
    auto gb = buchberger(gens, false).basis;
    std::vector<Polynomial<K>> result;
    for (const auto& g : gb) {
        bool has_t = false;
        for (const auto& term : g.terms())
            if (term.mono.e[0] != 0) {
                has_t = true;
                break;
            }
        if (!has_t) result.push_back(convert_ring(g, ring));
    }
    return Ideal<K>(ring, minimal_generators(result));
}

// dim_K (I)_t, counted against the initial ideal of the reduced GB
template <class K>
unsigned hilbert_dim_ideal(const Ideal<K>& ideal, unsigned t);

unsigned monomial_count(unsigned nvars, unsigned degree);
void enumerate_monomials(unsigned nvars, unsigned degree, const std::function<void(const Monomial&)>& fn);

template <class K>
unsigned hilbert_dim_ideal(const Ideal<K>& ideal, unsigned t) {
    const auto& gb = ideal.groebner();
    unsigned count = 0;
    enumerate_monomials(ideal.ring()->nvars(), t, [&](const Monomial& m) {
        for (const auto& g : gb)
            if (g.lm().divides(m)) {
                ++count;
                return;
            }
    });
    return count;
}

}  // namespace boro

#endif

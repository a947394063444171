#ifndef BORO_MODULES_HPP
#define BORO_MODULES_HPP

#include "boro/groebner.hpp"

namespace boro {

template <class K>
struct ModTerm {
    Monomial mono;
    unsigned pos;
    K coeff;
};

// Element of a free module R^r, flattened to one term list sorted descending
// under term-over-position (monomial first, then smaller position wins).
template <class K>
class VecPoly {
public:
    VecPoly() = default;
    VecPoly(RingPtr ring, unsigned rank) : ring_(std::move(ring)), rank_(rank) {}

    VecPoly(RingPtr ring, unsigned rank, std::vector<ModTerm<K>> unsorted)
        : ring_(std::move(ring)), rank_(rank) {
        normalize(std::move(unsorted));
    }

    static VecPoly unit(RingPtr ring, unsigned rank, unsigned pos, const K& one) {
        VecPoly v(std::move(ring), rank);
        v.terms_.push_back({Monomial::one(), pos, one});
        return v;
    }

    static VecPoly from_components(RingPtr ring, const std::vector<Polynomial<K>>& comps) {
        VecPoly v(ring, static_cast<unsigned>(comps.size()));
        std::vector<ModTerm<K>> raw;
        for (unsigned p = 0; p < comps.size(); ++p)
            for (const auto& t : comps[p].terms()) raw.push_back({t.mono, p, t.coeff});
        v.normalize(std::move(raw));
        return v;
    }

    const RingPtr& ring() const { return ring_; }
    unsigned rank() const { return rank_; }
    const std::vector<ModTerm<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const ModTerm<K>& lead() const { return terms_.front(); }

    Polynomial<K> component(unsigned pos) const {
        std::vector<Term<K>> out;
        for (const auto& t : terms_)
            if (t.pos == pos) out.push_back({t.mono, t.coeff});
        return Polynomial<K>(ring_, std::move(out));
    }

    std::vector<Polynomial<K>> components() const {
        std::vector<Polynomial<K>> out;
        out.reserve(rank_);
        for (unsigned p = 0; p < rank_; ++p) out.push_back(component(p));
        return out;
    }

    int compare_terms(const ModTerm<K>& a, const ModTerm<K>& b) const {
        const int c = ring_->order.compare(a.mono, b.mono);
        if (c != 0) return c;
        if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;  // smaller position is larger
        return 0;
    }

    VecPoly operator-() const {
        VecPoly r(ring_, rank_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, t.pos, -t.coeff});
        return r;
    }

    VecPoly operator+(const VecPoly& rhs) const { return merged(rhs, false); }
    VecPoly operator-(const VecPoly& rhs) const { return merged(rhs, true); }

    VecPoly scale(const K& c) const {
        if (boro::is_zero(c)) return VecPoly(ring_, rank_);
        VecPoly r(ring_, rank_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, t.pos, t.coeff * c});
        return r;
    }

    VecPoly times_monomial(const Monomial& m) const {
        VecPoly r(ring_, rank_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.pos, t.coeff});
        return r;
    }

    // this + c * m * w
    VecPoly axpy(const K& c, const Monomial& m, const VecPoly& w) const {
        VecPoly r(ring_, rank_);
        r.terms_.reserve(terms_.size() + w.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < w.terms_.size()) {
            ModTerm<K> scaled{w.terms_[j].mono * m, w.terms_[j].pos, K{}};
            const int cmp = compare_shape(terms_[i], scaled);
            if (cmp > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                K v = c * w.terms_[j].coeff;
                if (!boro::is_zero(v)) r.terms_.push_back({scaled.mono, scaled.pos, std::move(v)});
                ++j;
            } else {
                K v = terms_[i].coeff + c * w.terms_[j].coeff;
                if (!boro::is_zero(v)) r.terms_.push_back({terms_[i].mono, terms_[i].pos, std::move(v)});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < w.terms_.size(); ++j) {
            K v = c * w.terms_[j].coeff;
            if (!boro::is_zero(v)) r.terms_.push_back({w.terms_[j].mono * m, w.terms_[j].pos, std::move(v)});
        }
        return r;
    }

    VecPoly monic() const {
        if (is_zero() || boro::is_one(lead().coeff)) return *this;
        return scale(inv(lead().coeff));
    }

    // graded degree w.r.t. column twists; -1 for zero
    int degree(const std::vector<int>& twists) const {
        int d = -1;
        for (const auto& t : terms_)
            d = std::max(d, static_cast<int>(t.mono.degree()) + twists[t.pos]);
        return d;
    }

    bool is_homogeneous(const std::vector<int>& twists) const {
        if (terms_.empty()) return true;
        const int d = static_cast<int>(terms_.front().mono.degree()) + twists[terms_.front().pos];
        for (const auto& t : terms_)
            if (static_cast<int>(t.mono.degree()) + twists[t.pos] != d) return false;
        return true;
    }

    bool operator==(const VecPoly& rhs) const {
        if (terms_.size() != rhs.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].pos != rhs.terms_[i].pos ||
                !(terms_[i].coeff == rhs.terms_[i].coeff))
                return false;
        return true;
    }

private:
    int compare_shape(const ModTerm<K>& a, const ModTerm<K>& b) const {
        const int c = ring_->order.compare(a.mono, b.mono);
        if (c != 0) return c;
        if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
        return 0;
    }

    VecPoly merged(const VecPoly& rhs, bool negate) const {
        VecPoly r(ring_, rank_);
        r.terms_.reserve(terms_.size() + rhs.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < rhs.terms_.size()) {
            const int c = compare_shape(terms_[i], rhs.terms_[j]);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                const auto& t = rhs.terms_[j++];
                r.terms_.push_back({t.mono, t.pos, negate ? -t.coeff : t.coeff});
            } else {
                K v = terms_[i].coeff;
                if (negate)
                    v = v - rhs.terms_[j].coeff;
                else
                    v = v + rhs.terms_[j].coeff;
                if (!boro::is_zero(v)) r.terms_.push_back({terms_[i].mono, terms_[i].pos, std::move(v)});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < rhs.terms_.size(); ++j) {
            const auto& t = rhs.terms_[j];
            r.terms_.push_back({t.mono, t.pos, negate ? -t.coeff : t.coeff});
        }
        return r;
    }

    void normalize(std::vector<ModTerm<K>> raw) {
        std::sort(raw.begin(), raw.end(),
                  [this](const ModTerm<K>& a, const ModTerm<K>& b) { return compare_shape(a, b) > 0; });
        terms_.clear();
        for (auto& t : raw) {
            if (!terms_.empty() && terms_.back().mono == t.mono && terms_.back().pos == t.pos) {
                terms_.back().coeff = terms_.back().coeff + t.coeff;
                if (boro::is_zero(terms_.back().coeff)) terms_.pop_back();
            } else if (!boro::is_zero(t.coeff)) {
                terms_.push_back(std::move(t));
            }
        }
    }

    RingPtr ring_;
    unsigned rank_ = 0;
    std::vector<ModTerm<K>> terms_;
};

template <class K>
int compare_vecpolys(const VecPoly<K>& a, const VecPoly<K>& b) {
    const auto& order = a.ring()->order;
    const std::size_t n = std::min(a.terms().size(), b.terms().size());
    for (std::size_t i = 0; i < n; ++i) {
        const int cm = order.compare(a.terms()[i].mono, b.terms()[i].mono);
        if (cm != 0) return cm;
        if (a.terms()[i].pos != b.terms()[i].pos) return a.terms()[i].pos < b.terms()[i].pos ? 1 : -1;
        const int cc = scalar_compare(a.terms()[i].coeff, b.terms()[i].coeff);
        if (cc != 0) return cc;
    }
    if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size() ? -1 : 1;
    return 0;
}

template <class K>
struct ModDivisionResult {
    VecPoly<K> remainder;
    std::vector<Polynomial<K>> quotients;
};

template <class K>
ModDivisionResult<K> divide_full_mod(const VecPoly<K>& v, const std::vector<VecPoly<K>>& basis,
                                     bool want_quotients) {
    const RingPtr& ring = v.ring();
    ModDivisionResult<K> res;
    std::vector<std::vector<Term<K>>> quot_terms(want_quotients ? basis.size() : 0);
    VecPoly<K> rest = v;
    std::vector<ModTerm<K>> done;
    while (!rest.is_zero()) {
        const ModTerm<K>& lt = rest.lead();
        std::size_t gi = basis.size();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            const auto& bl = basis[k].lead();
            if (bl.pos == lt.pos && bl.mono.divides(lt.mono)) {
                gi = k;
                break;
            }
        }
        if (gi == basis.size()) {
            done.push_back(lt);
            // drop the leading term
            VecPoly<K> next(ring, rest.rank());
            std::vector<ModTerm<K>> tail(rest.terms().begin() + 1, rest.terms().end());
            next = VecPoly<K>(ring, rest.rank(), std::move(tail));
            rest = std::move(next);
            continue;
        }
        const auto& g = basis[gi];
        const Monomial m = lt.mono / g.lead().mono;
        K c = lt.coeff * inv(g.lead().coeff);
        if (want_quotients) quot_terms[gi].push_back({m, c});
        rest = rest.axpy(-c, m, g);
    }
    res.remainder = VecPoly<K>(ring, v.rank(), std::move(done));
    if (want_quotients) {
        res.quotients.reserve(basis.size());
        for (auto& q : quot_terms) res.quotients.push_back(Polynomial<K>(ring, std::move(q)));
    }
    return res;
}

template <class K>
struct ModGroebnerResult {
    std::vector<VecPoly<K>> basis;
    std::vector<std::vector<Polynomial<K>>> expr;  // basis[i] = sum_j expr[i][j] * input[j]
};

// Module Buchberger under term-over-position: S-pairs only between elements
// with equal leading position; the product criterion is unsound for modules
// and is only applied at rank 1.
template <class K>
ModGroebnerResult<K> module_buchberger(const std::vector<VecPoly<K>>& inputs, bool track = false) {
    ModGroebnerResult<K> res;
    if (inputs.empty()) return res;
    const RingPtr ring = inputs[0].ring();
    const MonomialOrder& order = ring->order;
    const unsigned rank = inputs[0].rank();

    std::vector<VecPoly<K>> basis;
    std::vector<std::vector<Polynomial<K>>> expr;
    std::vector<unsigned> sugar;
    detail::PairQueue<K> queue{&order, {}};

    auto add_element = [&](VecPoly<K> h, std::vector<Polynomial<K>> h_expr, unsigned h_sugar) {
        const unsigned t = static_cast<unsigned>(basis.size());
        std::vector<detail::SPair> kept;
        kept.reserve(queue.pairs.size());
        for (auto& p : queue.pairs) {
            const bool same_pos = basis[p.i].lead().pos == h.lead().pos;
            const bool subsumed = same_pos && h.lead().mono.divides(p.lcm) &&
                                  lcm(basis[p.i].lead().mono, h.lead().mono) != p.lcm &&
                                  lcm(basis[p.j].lead().mono, h.lead().mono) != p.lcm;
            if (!subsumed) kept.push_back(std::move(p));
        }
        queue.pairs = std::move(kept);
        std::vector<detail::SPair> fresh;
        for (unsigned i = 0; i < t; ++i) {
            if (basis[i].is_zero() || basis[i].lead().pos != h.lead().pos) continue;
            detail::SPair p;
            p.i = i;
            p.j = t;
            p.lcm = lcm(basis[i].lead().mono, h.lead().mono);
            const unsigned di = sugar[i] + (p.lcm / basis[i].lead().mono).degree();
            const unsigned dj = h_sugar + (p.lcm / h.lead().mono).degree();
            p.sugar = std::max(di, dj);
            fresh.push_back(std::move(p));
        }
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a] || drop[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm) drop[a] = true;
            }
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < a; ++b)
                if (!drop[a] && !drop[b] && fresh[a].lcm == fresh[b].lcm) drop[a] = true;
        if (rank == 1)
            for (std::size_t a = 0; a < fresh.size(); ++a)
                if (!drop[a] && coprime(basis[fresh[a].i].lead().mono, h.lead().mono)) drop[a] = true;
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) queue.pairs.push_back(std::move(fresh[a]));

        basis.push_back(std::move(h));
        expr.push_back(std::move(h_expr));
        sugar.push_back(h_sugar);
    };

    for (std::size_t j = 0; j < inputs.size(); ++j) {
        const VecPoly<K>& f = inputs[j];
        if (f.is_zero()) continue;
        if (f.rank() != rank) throw RankMismatch("mixed ranks in module_buchberger input");
        std::vector<Polynomial<K>> e;
        if (track) {
            e.assign(inputs.size(), Polynomial<K>(ring));
            e[j] = Polynomial<K>::constant(ring, inv(f.lead().coeff));
        }
        unsigned sug = 0;
        for (const auto& t : f.terms()) sug = std::max(sug, t.mono.degree());
        add_element(f.monic(), std::move(e), sug);
    }

    while (!queue.pairs.empty()) {
        const detail::SPair p = queue.pop_min();
        const VecPoly<K>& fi = basis[p.i];
        const VecPoly<K>& fj = basis[p.j];
        const Monomial mi = p.lcm / fi.lead().mono;
        const Monomial mj = p.lcm / fj.lead().mono;
        VecPoly<K> spoly = fi.times_monomial(mi) - fj.times_monomial(mj);
        auto div = divide_full_mod(spoly, basis, track);
        if (div.remainder.is_zero()) continue;
        const K lead = div.remainder.lead().coeff;
        VecPoly<K> h = div.remainder.monic();
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

    // minimalize + tail-reduce, mirroring the ring engine
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const auto& la = basis[a].lead();
        const auto& lb = basis[b].lead();
        if (la.pos != lb.pos) return la.pos < lb.pos;
        return order.compare(la.mono, lb.mono) < 0;
    });
    std::vector<std::size_t> keep;
    for (std::size_t k : idx) {
        bool redundant = false;
        for (std::size_t prev : keep)
            if (basis[prev].lead().pos == basis[k].lead().pos &&
                basis[prev].lead().mono.divides(basis[k].lead().mono)) {
                redundant = true;
                break;
            }
        if (!redundant) keep.push_back(k);
    }
    std::vector<VecPoly<K>> reduced;
    std::vector<std::vector<Polynomial<K>>> reduced_expr;
    for (std::size_t k : keep) {
        reduced.push_back(basis[k]);
        if (track) reduced_expr.push_back(expr[k]);
    }
    for (std::size_t k = 0; k < reduced.size(); ++k) {
        std::vector<VecPoly<K>> others;
        others.reserve(reduced.size() - 1);
        for (std::size_t l = 0; l < reduced.size(); ++l)
            if (l != k) others.push_back(reduced[l]);
        auto div = divide_full_mod(reduced[k], others, track);
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
            reduced_expr[k] = std::move(e);
        }
        reduced[k] = div.remainder.monic();
    }

    res.basis = std::move(reduced);
    res.expr = std::move(reduced_expr);
    return res;
}

// Generating set of Syz(inputs): Schreyer certificates of the tracked GB
// mapped back through the change of basis, plus the identity corrections.
template <class K>
std::vector<VecPoly<K>> syzygy_generators(const std::vector<VecPoly<K>>& inputs) {
    const RingPtr ring = inputs.empty() ? nullptr : inputs[0].ring();
    std::vector<VecPoly<K>> out;
    if (inputs.empty()) return out;
    const unsigned r = static_cast<unsigned>(inputs.size());

    auto tracked = module_buchberger(inputs, true);
    const auto& G = tracked.basis;
    const auto& A = tracked.expr;  // G[i] = sum_j A[i][j] inputs[j]
    if (G.empty()) return out;     // all inputs zero; callers never do this
    const K one = scalar_one_like(G[0].lead().coeff);

    // B: inputs[j] = sum_i B[j][i] G[i]
    std::vector<std::vector<Polynomial<K>>> B(inputs.size());
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        auto div = divide_full_mod(inputs[j], G, true);
        if (!div.remainder.is_zero()) throw std::logic_error("input does not reduce to zero against own GB");
        B[j] = std::move(div.quotients);
    }

    auto push_syzygy = [&](const std::vector<Polynomial<K>>& sigma) {
        // tau[k] = sum_i sigma[i] * A[i][k]
        std::vector<ModTerm<K>> raw;
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            if (sigma[i].is_zero()) continue;
            for (unsigned k = 0; k < r; ++k) {
                if (A[i][k].is_zero()) continue;
                Polynomial<K> prod = sigma[i] * A[i][k];
                for (const auto& t : prod.terms()) raw.push_back({t.mono, k, t.coeff});
            }
        }
        VecPoly<K> tau(ring, r, std::move(raw));
        if (!tau.is_zero()) out.push_back(std::move(tau));
    };

    // Schreyer syzygies, one per same-position pair of the reduced GB
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            if (G[i].lead().pos != G[j].lead().pos) continue;
            const Monomial L = lcm(G[i].lead().mono, G[j].lead().mono);
            const Monomial mi = L / G[i].lead().mono;
            const Monomial mj = L / G[j].lead().mono;
            VecPoly<K> spoly = G[i].times_monomial(mi) - G[j].times_monomial(mj);
            auto div = divide_full_mod(spoly, G, true);
            if (!div.remainder.is_zero()) throw std::logic_error("GB S-pair does not reduce to zero");
            std::vector<Polynomial<K>> sigma(G.size(), Polynomial<K>(ring));
            for (std::size_t k = 0; k < G.size(); ++k) sigma[k] = -div.quotients[k];
            sigma[i] = sigma[i] + Polynomial<K>::term(ring, mi, one);
            sigma[j] = sigma[j] - Polynomial<K>::term(ring, mj, one);
            push_syzygy(sigma);
        }
    }

    // identity corrections: e_j - B[j] * A
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        if (inputs[j].is_zero()) {
            out.push_back(VecPoly<K>::unit(ring, r, static_cast<unsigned>(j), one));
            continue;
        }
        VecPoly<K> rho = VecPoly<K>::unit(ring, r, static_cast<unsigned>(j), one);
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (B[j][i].is_zero()) continue;
            for (unsigned k = 0; k < r; ++k) {
                if (A[i][k].is_zero()) continue;
                Polynomial<K> prod = B[j][i] * A[i][k];
                std::vector<ModTerm<K>> traw;
                for (const auto& t : prod.terms()) traw.push_back({t.mono, k, t.coeff});
                rho = rho - VecPoly<K>(ring, r, std::move(traw));
            }
        }
        if (!rho.is_zero()) out.push_back(std::move(rho));
    }
    return out;
}

// greedy ascending-degree trim; minimal for graded candidates
template <class K>
std::vector<VecPoly<K>> minimal_module_generators(const std::vector<VecPoly<K>>& raw,
                                                  const std::vector<int>& twists) {
    std::vector<VecPoly<K>> cands;
    for (const auto& v : raw)
        if (!v.is_zero()) cands.push_back(v);
    std::sort(cands.begin(), cands.end(), [&](const VecPoly<K>& a, const VecPoly<K>& b) {
        const int da = a.degree(twists), db = b.degree(twists);
        if (da != db) return da < db;
        return compare_vecpolys(a, b) < 0;
    });
    std::vector<VecPoly<K>> kept;
    std::vector<VecPoly<K>> gb;
    for (const auto& c : cands) {
        if (!kept.empty() && divide_full_mod(c, gb, false).remainder.is_zero()) continue;
        kept.push_back(c);
        gb = module_buchberger(kept, false).basis;
    }
    return kept;
}

template <class K>
struct MembershipResult {
    bool member = false;
    std::vector<Polynomial<K>> coefficients;  // v = sum coefficients[j] * columns[j] when member
};

// decide v in <columns> with an explicit certificate, replayed exactly
template <class K>
MembershipResult<K> module_membership(const VecPoly<K>& v, const std::vector<VecPoly<K>>& columns) {
    for (const auto& c : columns)
        if (c.rank() != v.rank()) throw RankMismatch("module_membership: rank mismatch");
    MembershipResult<K> res;
    if (v.is_zero()) {
        res.member = true;
        res.coefficients.assign(columns.size(), Polynomial<K>(v.ring()));
        return res;
    }
    auto tracked = module_buchberger(columns, true);
    auto div = divide_full_mod(v, tracked.basis, true);
    if (!div.remainder.is_zero()) return res;
    res.member = true;
    res.coefficients.assign(columns.size(), Polynomial<K>(v.ring()));
    for (std::size_t i = 0; i < tracked.basis.size(); ++i) {
        if (div.quotients[i].is_zero()) continue;
        for (std::size_t j = 0; j < columns.size(); ++j)
            if (!tracked.expr[i][j].is_zero())
                res.coefficients[j] = res.coefficients[j] + div.quotients[i] * tracked.expr[i][j];
    }
    // exact replay
    VecPoly<K> acc(v.ring(), v.rank());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (res.coefficients[j].is_zero()) continue;
        for (const auto& t : res.coefficients[j].terms())
            acc = acc.axpy(t.coeff, t.mono, columns[j]);
    }
    if (!(acc == v)) throw std::logic_error("membership certificate replay failed");
    return res;
}

}  // namespace boro

#endif

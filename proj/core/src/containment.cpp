#include "boro/containment.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace boro {

std::array<Polynomial<CycElem>, 2> point_ideal(const RingPtr& ring, const ProjPoint& point) {
    const auto& p = point.coords;
    const CycFieldPtr field = p[0].field();
    const CycElem zero = CycElem::zero(field);
    // 2x2 minors of [[x, y, z], [p0, p1, p2]], in fixed order
    const std::array<std::array<CycElem, 3>, 3> rows = {{
        {p[1], -p[0], zero},
        {zero, p[2], -p[1]},
        {p[2], zero, -p[0]},
    }};
    std::vector<Polynomial<CycElem>> picked;
    for (const auto& row : rows) {
        std::vector<Term<CycElem>> ts;
        for (unsigned v = 0; v < 3; ++v)
            if (!row[v].is_zero()) ts.push_back({Monomial::var(v), row[v]});
        Polynomial<CycElem> f(ring, std::move(ts));
        if (f.is_zero()) continue;
        f = f.monic();
        // proportional linear forms have identical monic form
        if (picked.size() == 1 && picked[0] == f) continue;
        picked.push_back(std::move(f));
        if (picked.size() == 2) break;
    }
    if (picked.size() != 2) throw std::logic_error("point_ideal: could not find two independent forms");
    std::array<const Polynomial<CycElem>*, 2> check{&picked[0], &picked[1]};
    for (const auto* f : check)
        if (!f->evaluate(std::span<const CycElem>(p.data(), 3)).is_zero())
            throw std::logic_error("point_ideal: form does not vanish at the point");
    return {picked[0], picked[1]};
}

PointIdealSystem make_point_system(const RingPtr& ring, const CycFieldPtr& field,
                                   std::vector<ProjPoint> points) {
    std::sort(points.begin(), points.end(), ProjPointLess{});
    points.erase(std::unique(points.begin(), points.end(),
                             [](const ProjPoint& a, const ProjPoint& b) { return compare(a, b) == 0; }),
                 points.end());
    PointIdealSystem sys;
    sys.ring = ring;
    sys.field = field;
    sys.points = std::move(points);
    sys.forms.reserve(sys.points.size());
    for (const auto& p : sys.points) sys.forms.push_back(point_ideal(ring, p));
    return sys;
}

std::vector<int> AnyIdeal::generator_degrees() const {
    std::vector<int> degrees;
    std::visit(
        [&](const auto& ideal) {
            for (const auto& g : ideal.gens()) degrees.push_back(g.degree());
        },
        value);
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

std::optional<Ideal<Rational>> descend_ideal(const Ideal<CycElem>& ideal) {
    std::vector<Polynomial<Rational>> gens;
    for (const auto& g : ideal.groebner()) {
        auto q = descend_poly(g);
        if (!q) return std::nullopt;
        gens.push_back(std::move(*q));
    }
    return Ideal<Rational>(ideal.ring(), std::move(gens));
}

Ideal<CycElem> extend_ideal(const Ideal<Rational>& ideal, const CycFieldPtr& field) {
    std::vector<Polynomial<CycElem>> gens;
    gens.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) gens.push_back(embed_rational_poly(g, field));
    return Ideal<CycElem>(ideal.ring(), std::move(gens));
}

std::vector<std::vector<ProjPoint>> galois_orbits(const std::vector<ProjPoint>& points,
                                                  const CycFieldPtr& field) {
    const unsigned m = field->conductor();
    std::map<ProjPoint, std::size_t, ProjPointLess> index;
    for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
    std::vector<bool> seen(points.size(), false);
    std::vector<std::vector<ProjPoint>> orbits;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (seen[i]) continue;
        std::vector<ProjPoint> orbit;
        for (unsigned a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            ProjPoint q = galois_point(points[i], a);
            auto it = index.find(q);
            if (it == index.end()) return {};  // not a stable set: no orbit grouping
            if (!seen[it->second]) {
                seen[it->second] = true;
                orbit.push_back(q);
            }
        }
        std::sort(orbit.begin(), orbit.end(), ProjPointLess{});
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
        return compare(a.front(), b.front()) < 0;
    });
    return orbits;
}

namespace {

Ideal<CycElem> fat_point_ideal(const PointIdealSystem& sys, std::size_t point_index, unsigned m) {
    const auto& [l1, l2] = sys.forms[point_index];
    std::vector<Polynomial<CycElem>> gens;
    gens.reserve(m + 1);
    for (unsigned a = 0; a <= m; ++a) {
        Polynomial<CycElem> g = Polynomial<CycElem>::constant(sys.ring, CycElem::one(sys.field));
        for (unsigned i = 0; i < a; ++i) g = g * l1;
        for (unsigned i = a; i < m; ++i) g = g * l2;
        gens.push_back(std::move(g));
    }
    return Ideal<CycElem>(sys.ring, std::move(gens));
}

std::size_t point_index_of(const PointIdealSystem& sys, const ProjPoint& p) {
    auto it = std::lower_bound(sys.points.begin(), sys.points.end(), p, ProjPointLess{});
    if (it == sys.points.end() || !(*it == p)) throw std::logic_error("point not in system");
    return static_cast<std::size_t>(it - sys.points.begin());
}

Ideal<CycElem> fold_group(const PointIdealSystem& sys, const std::vector<ProjPoint>& group, unsigned m) {
    Ideal<CycElem> acc;
    bool first = true;
    for (const auto& p : group) {
        Ideal<CycElem> fat = fat_point_ideal(sys, point_index_of(sys, p), m);
        if (first) {
            acc = std::move(fat);
            first = false;
        } else {
            acc = ideal_intersection(acc, fat);
        }
    }
    return acc;
}

}  // namespace

AnyIdeal symbolic_power(const PointIdealSystem& sys, unsigned m, const SymbolicOptions& opts) {
    if (sys.points.empty()) throw std::invalid_argument("symbolic_power: empty point set");
    if (m == 0) throw std::invalid_argument("symbolic_power: power must be >= 1");

    std::vector<std::vector<ProjPoint>> groups;
    if (opts.orbit_grouping) groups = galois_orbits(sys.points, sys.field);
    if (groups.empty())
        for (const auto& p : sys.points) groups.push_back({p});

    // per-group intersections, optionally on a small worker pool
    std::vector<Ideal<CycElem>> group_ideals(groups.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(groups.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < groups.size(); ++i) group_ideals[i] = fold_group(sys, groups[i], m);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(groups.size());
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= groups.size()) return;
                    try {
                        group_ideals[i] = fold_group(sys, groups[i], m);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    // descent per group, then fold; extension is flat, so intersecting the
    // descended ideals over Q agrees with the cyclotomic intersection
    bool all_rational = opts.attempt_descent;
    std::vector<Ideal<Rational>> descended(groups.size());
    if (opts.attempt_descent)
        for (std::size_t i = 0; i < groups.size() && all_rational; ++i) {
            auto q = descend_ideal(group_ideals[i]);
            if (q)
                descended[i] = std::move(*q);
            else
                all_rational = false;
        }

    AnyIdeal result;
    if (all_rational) {
        Ideal<Rational> acc = descended[0];
        for (std::size_t i = 1; i < groups.size(); ++i) acc = ideal_intersection(acc, descended[i]);
        result.value = Ideal<Rational>(sys.ring, minimal_generators(acc));
    } else {
        Ideal<CycElem> acc = group_ideals[0];
        for (std::size_t i = 1; i < groups.size(); ++i) acc = ideal_intersection(acc, group_ideals[i]);
        acc = Ideal<CycElem>(sys.ring, minimal_generators(acc));
        if (opts.attempt_descent) {
            auto q = descend_ideal(acc);
            if (q)
                result.value = Ideal<Rational>(sys.ring, minimal_generators(*q));
            else
                result.value = std::move(acc);
        } else {
            result.value = std::move(acc);
        }
    }

    if (opts.verify_multiplicity) {
        // every generator vanishes to order m at every point
        auto check = [&](const Polynomial<CycElem>& g) {
            for (const auto& p : sys.points)
                if (!vanishes_to_order(g, std::span<const CycElem>(p.coords.data(), 3), m))
                    throw PropertyViolation("symbolic power generator fails the order-" + std::to_string(m) +
                                            " jet check");
        };
        if (result.descended()) {
            for (const auto& g : result.rational().gens()) check(embed_rational_poly(g, sys.field));
        } else {
            for (const auto& g : result.cyclotomic().gens()) check(g);
        }
    }
    return result;
}

Polynomial<CycElem> product_of_lines(const LineArrangement& arr) {
    RingPtr ring = xyz_ring();
    Polynomial<CycElem> prod = Polynomial<CycElem>::constant(ring, CycElem::one(arr.field));
    for (const auto& line : arr.lines) {
        std::vector<Term<CycElem>> ts;
        for (unsigned v = 0; v < 3; ++v)
            if (!line.coeffs[v].is_zero()) ts.push_back({Monomial::var(v), line.coeffs[v]});
        prod = prod * Polynomial<CycElem>(ring, std::move(ts));
    }
    return prod;
}

}  // namespace boro

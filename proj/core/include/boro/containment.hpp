#ifndef BORO_CONTAINMENT_HPP
#define BORO_CONTAINMENT_HPP

#include <optional>
#include <variant>

#include "boro/arrangement.hpp"
#include "boro/resolution.hpp"
#include "boro/textio.hpp"

namespace boro {

// I(P_i) bookkeeping: each point paired with two independent linear forms
// vanishing at it, chosen deterministically from the 2x2 minors of the
// coordinate relation matrix.
struct PointIdealSystem {
    RingPtr ring;
    CycFieldPtr field;
    std::vector<ProjPoint> points;  // canonical order
    std::vector<std::array<Polynomial<CycElem>, 2>> forms;
};

std::array<Polynomial<CycElem>, 2> point_ideal(const RingPtr& ring, const ProjPoint& point);

PointIdealSystem make_point_system(const RingPtr& ring, const CycFieldPtr& field,
                                   std::vector<ProjPoint> points);

// An ideal that lives over the rationals when Galois descent succeeded and
// over the cyclotomic host field otherwise.
struct AnyIdeal {
    std::variant<Ideal<Rational>, Ideal<CycElem>> value;

    bool descended() const { return std::holds_alternative<Ideal<Rational>>(value); }
    const Ideal<Rational>& rational() const { return std::get<Ideal<Rational>>(value); }
    const Ideal<CycElem>& cyclotomic() const { return std::get<Ideal<CycElem>>(value); }

    std::vector<int> generator_degrees() const;
};

// descent of the reduced GB when all coefficients are rational
std::optional<Ideal<Rational>> descend_ideal(const Ideal<CycElem>& ideal);
Ideal<CycElem> extend_ideal(const Ideal<Rational>& ideal, const CycFieldPtr& field);

struct SymbolicOptions {
    bool orbit_grouping = true;   // only effective on Galois-stable point sets
    bool attempt_descent = true;
    bool verify_multiplicity = true;  // jet check on every generator/point pair
    unsigned threads = 1;             // per-orbit workers
};

// partition into sigma_a orbits; empty result when the set is not stable
std::vector<std::vector<ProjPoint>> galois_orbits(const std::vector<ProjPoint>& points,
                                                  const CycFieldPtr& field);

// I(P_1)^m cap ... cap I(P_s)^m by iterated elimination-based intersection,
// folding points in canonical sorted order (optionally grouped by Galois
// orbit first; the result is identical either way)
AnyIdeal symbolic_power(const PointIdealSystem& system, unsigned m, const SymbolicOptions& opts = {});

inline AnyIdeal radical_ideal(const PointIdealSystem& system, const SymbolicOptions& opts = {}) {
    return symbolic_power(system, 1, opts);
}

// degree-n product of all line forms; rational for Galois-stable arrangements
Polynomial<CycElem> product_of_lines(const LineArrangement& arr);

enum class Criterion { ProvesContainment, Inconclusive };

struct DirectOutcome {
    bool holds = false;
    std::string witness;  // polynomial text of a verified failure witness
};

struct BhOutcome {
    int reg = 0;    // reg(I^r)
    int alpha = 0;  // alpha(I^(m))
    Criterion result = Criterion::Inconclusive;
};

struct GhmOutcome {
    unsigned entry_generators = 0;
    Criterion result = Criterion::Inconclusive;
};

// Hilbert-Burch data of a 3-generated single-degree point ideal: the two
// minimal syzygies as rows, with the signed 2x2 minors regenerating the ideal.
template <class K>
struct HilbertBurch {
    std::array<Polynomial<K>, 3> generators;  // f, g, h in canonical order
    std::array<std::vector<Polynomial<K>>, 2> rows;  // row 0 entries of degree d0 <= d1
    int d = 0, d0 = 0, d1 = 0;
};

// throws NotThreeGenerated unless the ideal has exactly 3 minimal generators
// of one degree
template <class K>
HilbertBurch<K> hilbert_burch(const Ideal<K>& ideal);

// X and Y of the power-resolution theorem, together with the first
// differentials they pair with; see validate_power_matrices
template <class K>
struct PowerMatrices {
    std::vector<Polynomial<K>> products2;   // ff fg fh gg gh hh
    std::vector<Polynomial<K>> products3;   // fff ffg ffh fgg fgh fhh ggg ggh ghh hhh
    std::vector<VecPoly<K>> d1_square;      // 6 columns in R^6, Q-syzygy block then P-syzygy block
    std::vector<VecPoly<K>> d1_cube;        // 12 columns in R^10, same block order
    VecPoly<K> x_column;                    // in R^6
    std::vector<VecPoly<K>> y_columns;      // 3 columns in R^12
};

template <class K>
PowerMatrices<K> build_power_resolution_matrices(const HilbertBurch<K>& hb);

// exact checks: d1 columns are syzygies of the products, X and Y columns span
// the syzygies of the respective d1 columns, and the twist shapes match the
// power-resolution pattern (F2 = R(-3d) for the square, R(-4d)^3 for the
// cube); throws on violation
template <class K>
void validate_power_matrices(const HilbertBurch<K>& hb, const PowerMatrices<K>& pm);

template <class K>
DirectOutcome containment_direct(const Ideal<K>& symbolic, const Ideal<K>& ordinary,
                                 const std::optional<Polynomial<K>>& preferred_witness = std::nullopt);

// reg(I^r) <= alpha(I^(m)) => containment; one-sided
BhOutcome bocci_harbourne_from_invariants(int reg_power, int alpha_symbolic);

template <class K>
GhmOutcome ghm_check(const HilbertBurch<K>& hb);

struct SeceleanuOutcome {
    bool holds = false;
    // certificate for [f,g,h]^T = sum coeffs[j] * (row j of Y), when holds
    std::vector<std::string> certificate;
};

// equivalence: membership of [f,g,h]^T in the column span of Y^T decides the
// containment both ways
template <class K>
SeceleanuOutcome seceleanu_check(const HilbertBurch<K>& hb);

// ---- implementation of the templated pieces ----

template <class K>
HilbertBurch<K> hilbert_burch(const Ideal<K>& ideal) {
    auto gens = minimal_generators(ideal);
    if (gens.size() != 3)
        throw NotThreeGenerated("ideal has " + std::to_string(gens.size()) + " minimal generators");
    const int d = gens[0].degree();
    for (const auto& g : gens)
        if (g.degree() != d) throw NotThreeGenerated("minimal generators of mixed degrees");

    auto res = free_resolution(Ideal<K>(ideal.ring(), gens));
    if (res.differentials.size() != 1 || res.differentials[0].size() != 2)
        throw NotThreeGenerated("unexpected resolution shape for a point ideal");
    // align the resolution's generator order with ours
    HilbertBurch<K> hb;
    if (res.generators.size() != 3) throw NotThreeGenerated("resolution lost generators");
    for (int i = 0; i < 3; ++i) hb.generators[static_cast<std::size_t>(i)] = res.generators[static_cast<std::size_t>(i)];
    hb.d = d;
    auto syz = res.differentials[0];
    std::array<int, 2> row_deg{};
    for (int r = 0; r < 2; ++r)
        row_deg[static_cast<std::size_t>(r)] = res.twists[1][static_cast<std::size_t>(r)] - d;
    if (row_deg[0] > row_deg[1]) {
        std::swap(syz[0], syz[1]);
        std::swap(row_deg[0], row_deg[1]);
    }
    hb.d0 = row_deg[0];
    hb.d1 = row_deg[1];
    for (int r = 0; r < 2; ++r) {
        auto comps = syz[static_cast<std::size_t>(r)].components();
        hb.rows[static_cast<std::size_t>(r)] = comps;
        // each row is a syzygy of the generators, exactly
        Polynomial<K> acc(ideal.ring());
        for (int c = 0; c < 3; ++c) acc = acc + comps[static_cast<std::size_t>(c)] * hb.generators[static_cast<std::size_t>(c)];
        if (!acc.is_zero()) throw std::logic_error("hilbert_burch: row is not a syzygy");
    }
    // signed 2x2 minors regenerate the ideal
    std::vector<Polynomial<K>> minors;
    for (int c = 0; c < 3; ++c) {
        const int a = (c + 1) % 3, b = (c + 2) % 3;
        minors.push_back(hb.rows[0][static_cast<std::size_t>(a)] * hb.rows[1][static_cast<std::size_t>(b)] -
                         hb.rows[0][static_cast<std::size_t>(b)] * hb.rows[1][static_cast<std::size_t>(a)]);
    }
    if (!ideal_equal(Ideal<K>(ideal.ring(), minors), ideal))
        throw std::logic_error("hilbert_burch: minors do not regenerate the ideal");
    return hb;
}

template <class K>
PowerMatrices<K> build_power_resolution_matrices(const HilbertBurch<K>& hb) {
    const RingPtr& ring = hb.generators[0].ring();
    PowerMatrices<K> pm;
    const auto& f = hb.generators[0];
    const auto& g = hb.generators[1];
    const auto& h = hb.generators[2];
    pm.products2 = {f * f, f * g, f * h, g * g, g * h, h * h};
    pm.products3 = {f * f * f, f * f * g, f * f * h, f * g * g, f * g * h,
                    f * h * h, g * g * g, g * g * h, g * h * h, h * h * h};

    // position of g_i * (mu over {f,g,h}) products
    // quadratic monomial index: ff=0 fg=1 fh=2 gg=3 gh=4 hh=5
    static constexpr int quad_idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    // cubic monomial index over products3
    static constexpr int cube_idx[3][6] = {
        {0, 1, 2, 3, 4, 5},   // f * {ff fg fh gg gh hh}
        {1, 3, 4, 6, 7, 8},   // g * ...
        {2, 4, 5, 7, 8, 9},   // h * ...
    };

    const auto& P = hb.rows[0];
    const auto& Q = hb.rows[1];

    // first differential of I^2: Q-syzygy block, then P-syzygy block;
    // column (row, nu) sends e -> sum_i row[i] * (g_nu * g_i)
    auto sq_column = [&](const std::vector<Polynomial<K>>& row, int nu) {
        std::vector<Polynomial<K>> comps(6, Polynomial<K>(ring));
        for (int i = 0; i < 3; ++i)
            comps[static_cast<std::size_t>(quad_idx[nu][i])] =
                comps[static_cast<std::size_t>(quad_idx[nu][i])] + row[static_cast<std::size_t>(i)];
        return VecPoly<K>::from_components(ring, comps);
    };
    for (int nu = 0; nu < 3; ++nu) pm.d1_square.push_back(sq_column(Q, nu));
    for (int nu = 0; nu < 3; ++nu) pm.d1_square.push_back(sq_column(P, nu));

    auto cube_column = [&](const std::vector<Polynomial<K>>& row, int mu) {
        // mu indexes the quadratic monomial; column sends e -> sum_i row[i] * (g_i * mu)
        std::vector<Polynomial<K>> comps(10, Polynomial<K>(ring));
        for (int i = 0; i < 3; ++i) {
            const int pos = cube_idx[i][mu];
            comps[static_cast<std::size_t>(pos)] = comps[static_cast<std::size_t>(pos)] + row[static_cast<std::size_t>(i)];
        }
        return VecPoly<K>::from_components(ring, comps);
    };
    for (int mu = 0; mu < 6; ++mu) pm.d1_cube.push_back(cube_column(Q, mu));
    for (int mu = 0; mu < 6; ++mu) pm.d1_cube.push_back(cube_column(P, mu));

    // X = [P1 P2 P3 -Q1 -Q2 -Q3]^T against [Q-block, P-block]
    {
        std::vector<Polynomial<K>> comps(6, Polynomial<K>(ring));
        for (int i = 0; i < 3; ++i) {
            comps[static_cast<std::size_t>(i)] = P[static_cast<std::size_t>(i)];
            comps[static_cast<std::size_t>(3 + i)] = -Q[static_cast<std::size_t>(i)];
        }
        pm.x_column = VecPoly<K>::from_components(ring, comps);
    }
    // Y columns: for nu in {f,g,h}, P_i at Q-block position (nu * g_i),
    // -Q_i at the same quadratic position in the P block
    for (int nu = 0; nu < 3; ++nu) {
        std::vector<Polynomial<K>> comps(12, Polynomial<K>(ring));
        for (int i = 0; i < 3; ++i) {
            const int mu = quad_idx[nu][i];
            comps[static_cast<std::size_t>(mu)] = comps[static_cast<std::size_t>(mu)] + P[static_cast<std::size_t>(i)];
            comps[static_cast<std::size_t>(6 + mu)] = comps[static_cast<std::size_t>(6 + mu)] - Q[static_cast<std::size_t>(i)];
        }
        pm.y_columns.push_back(VecPoly<K>::from_components(ring, comps));
    }
    return pm;
}

template <class K>
void validate_power_matrices(const HilbertBurch<K>& hb, const PowerMatrices<K>& pm) {
    // twist shapes: F2 = R(-3d) resp. R(-4d)^3 against the F1 blocks
    // R(-2d-d_i)^3 resp. R(-3d-d_i)^6
    const std::vector<int> square_twists{2 * hb.d + hb.d1, 2 * hb.d + hb.d1, 2 * hb.d + hb.d1,
                                         2 * hb.d + hb.d0, 2 * hb.d + hb.d0, 2 * hb.d + hb.d0};
    std::vector<int> cube_twists(12);
    for (int i = 0; i < 6; ++i) {
        cube_twists[static_cast<std::size_t>(i)] = 3 * hb.d + hb.d1;
        cube_twists[static_cast<std::size_t>(6 + i)] = 3 * hb.d + hb.d0;
    }
    if (!pm.x_column.is_homogeneous(square_twists) || pm.x_column.degree(square_twists) != 3 * hb.d)
        throw std::logic_error("power matrices: X is not homogeneous of degree 3d");
    for (const auto& col : pm.y_columns)
        if (!col.is_homogeneous(cube_twists) || col.degree(cube_twists) != 4 * hb.d)
            throw std::logic_error("power matrices: Y column is not homogeneous of degree 4d");
    for (const auto& p : pm.products2)
        if (p.degree() != 2 * hb.d) throw std::logic_error("power matrices: bad product degree");
    for (const auto& p : pm.products3)
        if (p.degree() != 3 * hb.d) throw std::logic_error("power matrices: bad product degree");

    // d1 columns are syzygies of the products
    for (const auto& col : pm.d1_square)
        if (!apply_generators(pm.products2, col).is_zero())
            throw std::logic_error("power matrices: d1(I^2) column is not a syzygy");
    for (const auto& col : pm.d1_cube)
        if (!apply_generators(pm.products3, col).is_zero())
            throw std::logic_error("power matrices: d1(I^3) column is not a syzygy");
    // X and Y columns compose to zero with the first differentials
    if (!apply_columns(pm.d1_square, pm.x_column).is_zero())
        throw std::logic_error("power matrices: d1 o X != 0");
    for (const auto& col : pm.y_columns)
        if (!apply_columns(pm.d1_cube, col).is_zero())
            throw std::logic_error("power matrices: d1 o Y != 0");
    // the columns span the full syzygy modules of the d1 columns
    {
        auto raw = syzygy_generators(pm.d1_square);
        for (const auto& s : raw)
            if (!module_membership(s, {pm.x_column}).member)
                throw std::logic_error("power matrices: Syz(d1) not spanned by X");
        if (!module_membership(pm.x_column, raw).member)
            throw std::logic_error("power matrices: X not in Syz(d1)");
    }
    {
        auto raw = syzygy_generators(pm.d1_cube);
        for (const auto& s : raw)
            if (!module_membership(s, pm.y_columns).member)
                throw std::logic_error("power matrices: Syz(d1) not spanned by Y");
        for (const auto& col : pm.y_columns)
            if (!module_membership(col, raw).member)
                throw std::logic_error("power matrices: Y column not in Syz(d1)");
    }
}

template <class K>
DirectOutcome containment_direct(const Ideal<K>& symbolic, const Ideal<K>& ordinary,
                                 const std::optional<Polynomial<K>>& preferred_witness) {
    DirectOutcome out;
    const auto& gb = ordinary.groebner();
    std::vector<Polynomial<K>> failing;
    for (const auto& gen : symbolic.gens())
        if (!normal_form(gen, gb).is_zero()) failing.push_back(gen);
    if (failing.empty()) {
        out.holds = true;
        return out;
    }
    out.holds = false;
    std::sort(failing.begin(), failing.end(),
              [](const Polynomial<K>& a, const Polynomial<K>& b) { return compare_polys(a, b) < 0; });
    Polynomial<K> witness = failing.front();
    if (preferred_witness && !normal_form(*preferred_witness, gb).is_zero() &&
        normal_form(*preferred_witness, symbolic.groebner()).is_zero())
        witness = *preferred_witness;
    // the witness must lie in the symbolic power and outside the ordinary power
    if (!normal_form(witness, symbolic.groebner()).is_zero())
        throw std::logic_error("containment witness is not in the symbolic power");
    if (normal_form(witness, gb).is_zero()) throw std::logic_error("containment witness is in the ordinary power");
    out.witness = to_text(witness);
    return out;
}

inline BhOutcome bocci_harbourne_from_invariants(int reg_power, int alpha_symbolic) {
    BhOutcome out;
    out.reg = reg_power;
    out.alpha = alpha_symbolic;
    out.result = reg_power <= alpha_symbolic ? Criterion::ProvesContainment : Criterion::Inconclusive;
    return out;
}

template <class K>
GhmOutcome ghm_check(const HilbertBurch<K>& hb) {
    std::vector<Polynomial<K>> entries;
    for (const auto& row : hb.rows)
        for (const auto& e : row)
            if (!e.is_zero()) entries.push_back(e);
    GhmOutcome out;
    out.entry_generators = static_cast<unsigned>(minimal_generators(entries).size());
    out.result = out.entry_generators <= 5 ? Criterion::ProvesContainment : Criterion::Inconclusive;
    return out;
}

template <class K>
SeceleanuOutcome seceleanu_check(const HilbertBurch<K>& hb) {
    const RingPtr& ring = hb.generators[0].ring();
    auto pm = build_power_resolution_matrices(hb);
    // rows of Y = columns of Y^T, each a vector in R^3
    std::vector<VecPoly<K>> columns;
    for (int row = 0; row < 12; ++row) {
        std::vector<Polynomial<K>> comps;
        comps.reserve(3);
        for (int c = 0; c < 3; ++c) comps.push_back(pm.y_columns[static_cast<std::size_t>(c)].component(static_cast<unsigned>(row)));
        columns.push_back(VecPoly<K>::from_components(ring, comps));
    }
    VecPoly<K> target = VecPoly<K>::from_components(
        ring, {hb.generators[0], hb.generators[1], hb.generators[2]});
    auto membership = module_membership(target, columns);
    SeceleanuOutcome out;
    out.holds = membership.member;
    if (membership.member)
        for (const auto& c : membership.coefficients) out.certificate.push_back(to_text(c));
    return out;
}

}  // namespace boro

#endif

#include <doctest.h>

#include <iostream>

#include "boro/report.hpp"
#include "oracles.hpp"

using namespace boro;

namespace {

Polynomial<Rational> P(const char* text) { return parse_poly_rational(text, xyz_ring()); }

struct Fixture {
    LineArrangement arr;
    PointIdealSystem sys;
    AnyIdeal radical;
};

Fixture boroczky_fixture(unsigned n) {
    Fixture f{boroczky_lines(n), {}, {}};
    auto rep = incidence(f.arr);
    auto T = triple_points(f.arr, rep, nullptr);
    f.sys = make_point_system(xyz_ring(), f.arr.field, T);
    f.radical = radical_ideal(f.sys);
    return f;
}

ProjPoint cyc_point(const CycFieldPtr& field, long a, long b, long c) {
    auto mk = [&](long v) { return CycElem::from_rational(field, Rational(v)); };
    return ProjPoint::canonical({mk(a), mk(b), mk(c)});
}

}  // namespace

TEST_SUITE("ideals") {

TEST_CASE("point ideal forms") {
    auto field = CycField::get(8);
    const RingPtr ring = xyz_ring();

    auto forms1 = point_ideal(ring, cyc_point(field, 0, 0, 1));
    CHECK(to_text(*descend_poly(forms1[0])) == "y");
    CHECK(to_text(*descend_poly(forms1[1])) == "x");

    auto forms2 = point_ideal(ring, cyc_point(field, 1, 1, 1));
    CHECK(to_text(*descend_poly(forms2[0])) == "x - y");
    CHECK(to_text(*descend_poly(forms2[1])) == "y - z");

    // Hilbert function of one point: HF_{R/I}(t) = 1 for all t
    std::vector<Polynomial<Rational>> rats{*descend_poly(forms2[0]), *descend_poly(forms2[1])};
    for (unsigned t = 1; t <= 6; ++t)
        CHECK(monomial_count(3, t) - oracles::hilbert_dim_by_rank(rats, t) == 1);
}

TEST_CASE("radical ideal of a single point") {
    auto field = CycField::get(8);
    auto sys = make_point_system(xyz_ring(), field, {cyc_point(field, 0, 0, 1)});
    auto I = radical_ideal(sys);
    REQUIRE(I.descended());
    CHECK(ideal_equal(I.rational(), Ideal<Rational>(xyz_ring(), {P("x"), P("y")})));
}

TEST_CASE("radical ideals of T_10 and T_11 descend with the published degrees") {
    auto f10 = boroczky_fixture(10);
    REQUIRE(f10.radical.descended());
    CHECK(f10.radical.generator_degrees() == std::vector<int>{4, 4, 4});

    auto f11 = boroczky_fixture(11);
    REQUIRE(f11.radical.descended());
    CHECK(f11.radical.generator_degrees() == std::vector<int>{4, 5, 5, 5});
}

TEST_CASE("symbolic power m=1 equals the radical ideal") {
    auto f = boroczky_fixture(6);
    auto sym1 = symbolic_power(f.sys, 1);
    REQUIRE(sym1.descended());
    REQUIRE(f.radical.descended());
    CHECK(ideal_equal(sym1.rational(), f.radical.rational()));
}

TEST_CASE("multiplicity certification of symbolic powers") {
    auto f = boroczky_fixture(8);
    SymbolicOptions opts;
    opts.verify_multiplicity = true;  // jet check runs inside
    auto sym2 = symbolic_power(f.sys, 2, opts);
    REQUIRE(sym2.descended());
    // re-check explicitly on top of the internal verification
    for (const auto& g : sym2.rational().gens()) {
        auto gc = embed_rational_poly(g, f.arr.field);
        for (const auto& p : f.sys.points)
            CHECK(vanishes_to_order(gc, std::span<const CycElem>(p.coords.data(), 3), 2));
    }
}

TEST_CASE("alpha of the symbolic cube is at least n, n=8") {
    auto f = boroczky_fixture(8);
    auto sym3 = symbolic_power(f.sys, 3);
    REQUIRE(sym3.descended());
    const int a = alpha(sym3.rational());
    CHECK(a >= 8);
    // the product of all lines realizes degree n inside I^(3)
    auto prod = descend_poly(product_of_lines(f.arr));
    REQUIRE(prod);
    CHECK(prod->degree() == 8);
    CHECK(sym3.rational().contains(*prod));
}

TEST_CASE("containment holds trivially for n=4") {
    auto f = boroczky_fixture(4);
    REQUIRE(f.radical.descended());
    const auto& I = f.radical.rational();
    auto sym3 = symbolic_power(f.sys, 3);
    REQUIRE(sym3.descended());
    // one point: the radical is a complete intersection, I^(3) = I^3
    CHECK(ideal_equal(sym3.rational(), ideal_power(I, 3)));
    auto outcome = containment_direct(sym3.rational(), ideal_power(I, 2));
    CHECK(outcome.holds);
}

TEST_CASE("bocci-harbourne on a complete intersection point") {
    // I = <x, y>: reg(I^2) = 2 <= alpha(I^(3)) = 3
    Ideal<Rational> I(xyz_ring(), {P("x"), P("y")});
    const int reg2 = free_resolution(ideal_power(I, 2)).betti().regularity();
    const int alpha3 = alpha(ideal_power(I, 3));  // symbolic = ordinary for a CI
    auto bh = bocci_harbourne_from_invariants(reg2, alpha3);
    CHECK(bh.reg == 2);
    CHECK(bh.alpha == 3);
    CHECK(bh.result == Criterion::ProvesContainment);
}

TEST_CASE("hilbert-burch on the coordinate-points ideal") {
    Ideal<Rational> I(xyz_ring(), {P("y*z"), P("x*z"), P("x*y")});
    auto hb = hilbert_burch(I);
    CHECK(hb.d == 2);
    CHECK(hb.d0 == 1);
    CHECK(hb.d1 == 1);
    for (const auto& row : hb.rows)
        for (const auto& e : row)
            if (!e.is_zero()) CHECK(e.degree() == 1);

    // non-3-generated input is rejected
    Ideal<Rational> two(xyz_ring(), {P("x"), P("y")});
    CHECK_THROWS_AS(hilbert_burch(two), NotThreeGenerated);
}

TEST_CASE("hilbert-burch for n=10 has all-quadratic entries; n=11 is not 3-generated") {
    auto f10 = boroczky_fixture(10);
    auto hb = hilbert_burch(f10.radical.rational());
    CHECK(hb.d == 4);
    CHECK(hb.d0 == 2);
    CHECK(hb.d1 == 2);
    for (const auto& row : hb.rows)
        for (const auto& e : row)
            if (!e.is_zero()) CHECK(e.degree() == 2);

    auto f11 = boroczky_fixture(11);
    CHECK_THROWS_AS(hilbert_burch(f11.radical.rational()), NotThreeGenerated);
}

TEST_CASE("ghm entry counting") {
    auto f10 = boroczky_fixture(10);
    auto hb10 = hilbert_burch(f10.radical.rational());
    auto ghm10 = ghm_check(hb10);
    CHECK(ghm10.entry_generators == 5);
    CHECK(ghm10.result == Criterion::ProvesContainment);

    // synthetic matrix with entries {x, y, z, 0, 0, 0}
    HilbertBurch<Rational> fake;
    fake.generators = {P("y*z"), P("x*z"), P("x*y")};
    fake.rows[0] = {P("x"), P("y"), P("z")};
    fake.rows[1] = {P("0"), P("0"), P("0")};
    auto ghm_fake = ghm_check(fake);
    CHECK(ghm_fake.entry_generators == 3);
    CHECK(ghm_fake.result == Criterion::ProvesContainment);

    // coordinate-points matrix: count recorded and bounded by six
    auto hb = hilbert_burch(Ideal<Rational>(xyz_ring(), {P("y*z"), P("x*z"), P("x*y")}));
    auto ghm = ghm_check(hb);
    CHECK(ghm.entry_generators <= 6);
    CHECK((ghm.result == Criterion::ProvesContainment) == (ghm.entry_generators <= 5));
}

TEST_CASE("seceleanu agrees with the direct test on 3-generated fixtures") {
    // three coordinate points: containment holds
    auto field = CycField::get(8);
    auto sys = make_point_system(xyz_ring(), field,
                                 {cyc_point(field, 1, 0, 0), cyc_point(field, 0, 1, 0),
                                  cyc_point(field, 0, 0, 1)});
    auto rad = radical_ideal(sys);
    REQUIRE(rad.descended());
    CHECK(ideal_equal(rad.rational(), Ideal<Rational>(xyz_ring(), {P("x*y"), P("x*z"), P("y*z")})));
    auto sym3 = symbolic_power(sys, 3);
    REQUIRE(sym3.descended());
    auto direct = containment_direct(sym3.rational(), ideal_power(rad.rational(), 2));
    auto sec = seceleanu_check(hilbert_burch(rad.rational()));
    CHECK(direct.holds);
    CHECK(sec.holds == direct.holds);

    // n=10: holds with an explicit certificate
    auto f10 = boroczky_fixture(10);
    auto sec10 = seceleanu_check(hilbert_burch(f10.radical.rational()));
    CHECK(sec10.holds);
    CHECK(sec10.certificate.size() == 12);
    auto sym10 = symbolic_power(f10.sys, 3);
    REQUIRE(sym10.descended());
    auto direct10 = containment_direct(sym10.rational(), ideal_power(f10.radical.rational(), 2));
    CHECK(direct10.holds == sec10.holds);
}

TEST_CASE("seceleanu certifies failure on the dual-Hesse fixture") {
    auto arr = dual_hesse();
    auto rep = incidence(arr);
    auto T = triple_points(arr, rep, nullptr);
    auto sys = make_point_system(xyz_ring(), arr.field, T);
    auto rad = radical_ideal(sys);
    REQUIRE(rad.descended());
    auto sec = seceleanu_check(hilbert_burch(rad.rational()));
    CHECK(!sec.holds);
    auto sym3 = symbolic_power(sys, 3);
    REQUIRE(sym3.descended());
    auto direct = containment_direct(sym3.rational(), ideal_power(rad.rational(), 2));
    CHECK(!direct.holds);
    CHECK(sec.holds == direct.holds);
}

TEST_CASE("power resolution matrices for n=10") {
    auto f10 = boroczky_fixture(10);
    const auto& I = f10.radical.rational();
    auto hb = hilbert_burch(I);
    auto pm = build_power_resolution_matrices(hb);
    validate_power_matrices(hb, pm);

    // shapes of the power-resolution pattern with d=4, d0=d1=2
    auto res2 = free_resolution(ideal_power(I, 2));
    REQUIRE(res2.length() == 3);
    auto tw = [&](const FreeResolution<Rational>& r, std::size_t l) {
        auto t = r.twists[l];
        std::sort(t.begin(), t.end());
        return t;
    };
    CHECK(tw(res2, 0) == std::vector<int>(6, 8));
    CHECK(tw(res2, 1) == std::vector<int>(6, 10));
    CHECK(tw(res2, 2) == std::vector<int>{12});

    auto res3 = free_resolution(ideal_power(I, 3));
    REQUIRE(res3.length() == 3);
    CHECK(tw(res3, 0) == std::vector<int>(10, 12));
    CHECK(tw(res3, 1) == std::vector<int>(12, 14));
    CHECK(tw(res3, 2) == std::vector<int>(3, 16));

    // Y columns are graded of degree 4d and annihilated by d1
    const std::vector<int> cube_twists(12, 3 * hb.d + hb.d0);  // d0 = d1 here
    for (const auto& col : pm.y_columns) {
        CHECK(col.is_homogeneous(cube_twists));
        CHECK(col.degree(cube_twists) == 4 * hb.d);
    }
}

TEST_CASE("containment sandwich I^m in I^(m) in I") {
    for (unsigned n : {5u, 8u, 10u}) {
        auto f = boroczky_fixture(n);
        REQUIRE(f.radical.descended());
        const auto& I = f.radical.rational();
        for (unsigned m : {2u, 3u}) {
            auto sym = symbolic_power(f.sys, m);
            REQUIRE(sym.descended());
            CHECK(ideal_subset(ideal_power(I, m), sym.rational()));
            CHECK(ideal_subset(sym.rational(), I));
        }
    }
}

TEST_CASE("ein-lazarsfeld-smith: I^(4) in I^2 for n = 4..8") {
    for (unsigned n = 4; n <= 8; ++n) {
        auto f = boroczky_fixture(n);
        REQUIRE(f.radical.descended());
        auto sym4 = symbolic_power(f.sys, 4);
        REQUIRE(sym4.descended());
        CHECK(ideal_subset(sym4.rational(), ideal_power(f.radical.rational(), 2)));
    }
}

TEST_CASE("descent round-trip: re-extension equals the pre-descent ideal") {
    auto f = boroczky_fixture(6);
    SymbolicOptions keep_cyc;
    keep_cyc.attempt_descent = false;
    auto cyc = symbolic_power(f.sys, 2, keep_cyc);
    REQUIRE(!cyc.descended());
    auto sym = symbolic_power(f.sys, 2);
    REQUIRE(sym.descended());
    CHECK(ideal_equal(extend_ideal(sym.rational(), f.arr.field), cyc.cyclotomic()));
}

TEST_CASE("orbit grouping and threading do not change the result") {
    auto f = boroczky_fixture(10);
    SymbolicOptions a;
    a.orbit_grouping = false;
    SymbolicOptions b;
    b.orbit_grouping = true;
    SymbolicOptions c;
    c.orbit_grouping = true;
    c.threads = 4;
    auto ia = symbolic_power(f.sys, 2, a);
    auto ib = symbolic_power(f.sys, 2, b);
    auto ic = symbolic_power(f.sys, 2, c);
    REQUIRE(ia.descended());
    REQUIRE(ib.descended());
    REQUIRE(ic.descended());
    CHECK(ideal_equal(ia.rational(), ib.rational()));
    CHECK(ideal_equal(ib.rational(), ic.rational()));
    // GB-level equality makes the fold order invisible
    const auto& ga = ia.rational().groebner();
    const auto& gb = ib.rational().groebner();
    REQUIRE(ga.size() == gb.size());
    for (std::size_t i = 0; i < ga.size(); ++i) CHECK(ga[i] == gb[i]);
}

TEST_CASE("galois orbits partition stable sets") {
    auto f = boroczky_fixture(10);
    auto orbits = galois_orbits(f.sys.points, f.arr.field);
    REQUIRE(!orbits.empty());
    std::size_t total = 0;
    for (const auto& orbit : orbits) total += orbit.size();
    CHECK(total == f.sys.points.size());
    // a non-stable subset yields no grouping
    std::vector<ProjPoint> partial(f.sys.points.begin() + 1, f.sys.points.end());
    if (orbits.front().size() > 1) CHECK(galois_orbits(partial, f.arr.field).empty());
}

TEST_CASE("product of lines and the n=11 record") {
    auto f = boroczky_fixture(11);
    REQUIRE(f.radical.descended());
    auto prod = descend_poly(product_of_lines(f.arr));
    REQUIRE(prod);
    CHECK(prod->degree() == 11);
    const auto I2 = ideal_power(f.radical.rational(), 2);
    const bool in_square = normal_form(*prod, I2.groebner()).is_zero();
    // not asserted either way; the row below just records the outcome
    std::cout << "[info] n=11 product of lines in I^2: " << (in_square ? "yes" : "no") << "\n";
    auto sym3 = symbolic_power(f.sys, 3);
    REQUIRE(sym3.descended());
    CHECK(sym3.rational().contains(*prod));
}

TEST_CASE("cyclotomic-path pipeline agrees with the descended one") {
    // force every method to run over the cyclotomic host field; the verdicts
    // and invariants are base-change invariant
    AnalyzeOptions no_descent;
    no_descent.attempt_descent = false;
    AnalyzeOptions plain;
    for (unsigned n : {5u, 8u}) {
        auto row_cyc = analyze_boroczky(n, no_descent);
        auto row_q = analyze_boroczky(n, plain);
        CHECK(!row_cyc.radical_rational);
        CHECK(row_q.radical_rational);
        CHECK(row_cyc.holds == row_q.holds);
        CHECK(row_cyc.min_gen_degrees == row_q.min_gen_degrees);
        REQUIRE(row_cyc.methods.bh);
        REQUIRE(row_q.methods.bh);
        CHECK(row_cyc.methods.bh->reg == row_q.methods.bh->reg);
        CHECK(row_cyc.methods.bh->alpha == row_q.methods.bh->alpha);
        if (row_q.methods.ghm) {
            REQUIRE(row_cyc.methods.ghm);
            CHECK(row_cyc.methods.ghm->entry_generators == row_q.methods.ghm->entry_generators);
        }
        if (row_q.methods.seceleanu_holds) {
            REQUIRE(row_cyc.methods.seceleanu_holds);
            CHECK(*row_cyc.methods.seceleanu_holds == *row_q.methods.seceleanu_holds);
        }
    }
}

TEST_CASE("criterion soundness on the n=10 row") {
    AnalyzeOptions opts;
    auto row = analyze_boroczky(10, opts);
    CHECK(row.holds);
    REQUIRE(row.methods.direct_holds);
    CHECK(*row.methods.direct_holds);
    REQUIRE(row.methods.bh);
    CHECK(row.methods.bh->result == Criterion::ProvesContainment);
    CHECK(row.methods.bh->reg == 10);
    CHECK(row.methods.bh->alpha == 10);
    REQUIRE(row.methods.ghm);
    CHECK(row.methods.ghm->entry_generators == 5);
    REQUIRE(row.methods.seceleanu_holds);
    CHECK(*row.methods.seceleanu_holds);
    CHECK(row.min_gen_degrees == std::vector<int>{4, 4, 4});
}

}  // TEST_SUITE

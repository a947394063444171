#include <doctest.h>

#include <random>

#include "boro/containment.hpp"
#include "oracles.hpp"

using namespace boro;

namespace {

Polynomial<Rational> P(const char* text) { return parse_poly_rational(text, xyz_ring()); }

Ideal<Rational> ideal_of(std::initializer_list<const char*> gens) {
    std::vector<Polynomial<Rational>> v;
    for (const char* g : gens) v.push_back(P(g));
    return Ideal<Rational>(xyz_ring(), std::move(v));
}

Ideal<Rational> boroczky_radical(unsigned n) {
    auto arr = boroczky_lines(n);
    auto rep = incidence(arr);
    auto T = triple_points(arr, rep, nullptr);
    auto sys = make_point_system(xyz_ring(), arr.field, T);
    auto I = radical_ideal(sys);
    REQUIRE(I.descended());
    return I.rational();
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("normal form basics") {
    const auto f = P("x^2*y - z^3 + x");
    Ideal<Rational> I(xyz_ring(), {f, P("y*z - 1")});
    const auto& gb = I.groebner();
    CHECK(normal_form(f, gb).is_zero());

    Ideal<Rational> J = ideal_of({"y", "z"});
    CHECK(normal_form(P("x"), J.groebner()) == P("x"));

    // one hand-reduction step: (x+y)^2 mod {x^2 - y} -> y + 2xy + y^2
    Ideal<Rational> K = ideal_of({"x^2 - y"});
    const auto nf = normal_form(P("x + y") * P("x + y"), K.groebner());
    CHECK(nf == P("2*x*y + y^2 + y"));
}

TEST_CASE("buchberger on tiny inputs") {
    auto gb1 = buchberger<Rational>({P("x"), P("y")}).basis;
    REQUIRE(gb1.size() == 2);
    CHECK(gb1[0] == P("y"));
    CHECK(gb1[1] == P("x"));

    auto gb2 = buchberger<Rational>({P("x + y"), P("x - y")}).basis;
    REQUIRE(gb2.size() == 2);
    CHECK(gb2[0] == P("y"));
    CHECK(gb2[1] == P("x"));
}

TEST_CASE("GB of I(T_10): self-membership and Hilbert function 12") {
    Ideal<Rational> I = boroczky_radical(10);
    for (const auto& g : I.gens()) CHECK(I.contains(g));
    // HF_{R/I}(t) = 12 for t >> 0, against the rank oracle on raw generators
    for (unsigned t = 6; t <= 9; ++t) {
        const unsigned dim_It = oracles::hilbert_dim_by_rank(I.gens(), t);
        CHECK(monomial_count(3, t) - dim_It == 12);
        CHECK(hilbert_dim_ideal(I, t) == dim_It);
    }
}

TEST_CASE("GB idempotence") {
    std::mt19937 rng(7201);
    for (int round = 0; round < 8; ++round) {
        std::vector<Polynomial<Rational>> gens;
        for (int i = 0; i < 3; ++i) {
            auto raw = oracles::random_poly(rng, xyz_ring(), 4, 3, 6);
            gens.push_back(homogenize(dehomogenize(raw, 2), 2));
        }
        auto gb = buchberger(gens).basis;
        auto gb2 = buchberger(gb).basis;
        REQUIRE(gb.size() == gb2.size());
        for (std::size_t i = 0; i < gb.size(); ++i) CHECK(gb[i] == gb2[i]);
    }
}

TEST_CASE("membership consistency with certificate replay") {
    std::mt19937 rng(7202);
    Ideal<Rational> I = ideal_of({"x^2 - y*z", "x*y - z^2"});
    const auto& gb = I.groebner();
    for (int round = 0; round < 30; ++round) {
        // half the samples are random combinations (members), half arbitrary
        Polynomial<Rational> f(xyz_ring());
        const bool member = round % 2 == 0;
        if (member) {
            for (const auto& g : I.gens())
                f = f + oracles::random_poly(rng, xyz_ring(), 3, 2, 4) * g;
        } else {
            f = oracles::random_poly(rng, xyz_ring(), 5, 3, 6);
        }
        auto div = divide_full(f, gb, true);
        CHECK(div.remainder.is_zero() == I.contains(f));
        if (member) CHECK(div.remainder.is_zero());
        // replay: f == sum quotients * gb + remainder, exactly
        Polynomial<Rational> acc = div.remainder;
        for (std::size_t i = 0; i < gb.size(); ++i) acc = acc + div.quotients[i] * gb[i];
        CHECK(acc == f);
    }
}

TEST_CASE("ideal sum, product, power") {
    Ideal<Rational> I = ideal_of({"x", "y"});
    CHECK(ideal_equal(ideal_power(I, 1), I));
    CHECK(ideal_equal(ideal_power(I, 2), ideal_of({"x^2", "x*y", "y^2"})));

    Ideal<Rational> J = boroczky_radical(6);
    const auto I2 = ideal_power(J, 2);
    const auto I3 = ideal_power(J, 3);
    CHECK(ideal_equal(ideal_product(I2, J), I3));
    CHECK(ideal_subset(ideal_sum(I2, I3), I2));
}

TEST_CASE("ideal intersection") {
    Ideal<Rational> I = ideal_of({"x"});
    Ideal<Rational> J = ideal_of({"y"});
    CHECK(ideal_equal(ideal_intersection(I, I), I));
    CHECK(ideal_equal(ideal_intersection(I, J), ideal_of({"x*y"})));

    // the twelve point ideals of T_10 meet in a 3-generated quartic ideal
    Ideal<Rational> rad = boroczky_radical(10);
    const auto mins = minimal_generators(rad);
    REQUIRE(mins.size() == 3);
    for (const auto& g : mins) CHECK(g.degree() == 4);
}

TEST_CASE("minimal generators") {
    auto kept = minimal_generators(std::vector<Polynomial<Rational>>{P("x"), P("x^2"), P("x + y")});
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].degree() == 1);
    CHECK(kept[1].degree() == 1);

    auto kept11 = minimal_generators(boroczky_radical(11));
    REQUIRE(kept11.size() == 4);
    std::vector<int> degrees;
    for (const auto& g : kept11) degrees.push_back(g.degree());
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{4, 5, 5, 5});
}

TEST_CASE("alpha") {
    CHECK(alpha(ideal_of({"x^2", "y^3"})) == 2);
    CHECK_THROWS_AS(alpha(Ideal<Rational>(xyz_ring(), {})), ZeroIdeal);
    Ideal<Rational> I = boroczky_radical(8);
    CHECK(alpha(I) <= free_resolution(I).betti().regularity());
}

TEST_CASE("order independence of the ideal, grevlex vs lex") {
    for (unsigned n : {5u, 7u, 8u}) {
        Ideal<Rational> I = boroczky_radical(n);
        const auto& lex_gb = I.groebner(OrderKind::Lex);
        REQUIRE(!lex_gb.empty());
        const RingPtr lex_ring = lex_gb.front().ring();
        // mutual membership across the two presentations
        Ideal<Rational> lex_ideal(lex_ring, lex_gb);
        for (const auto& g : I.groebner()) CHECK(lex_ideal.contains(convert_ring(g, lex_ring)));
        for (const auto& g : lex_gb) CHECK(I.contains(convert_ring(g, I.ring())));
    }
}

TEST_CASE("hilbert dimensions against the rank oracle") {
    std::mt19937 rng(7203);
    for (int round = 0; round < 5; ++round) {
        std::vector<Polynomial<Rational>> gens;
        for (int i = 0; i < 2; ++i)
            gens.push_back(homogenize(dehomogenize(oracles::random_poly(rng, xyz_ring(), 4, 2, 5), 2), 2));
        Ideal<Rational> I(xyz_ring(), gens);
        if (I.is_zero_ideal()) continue;
        for (unsigned t = 0; t <= 6; ++t)
            CHECK(hilbert_dim_ideal(I, t) == oracles::hilbert_dim_by_rank(gens, t));
    }
}

}  // TEST_SUITE

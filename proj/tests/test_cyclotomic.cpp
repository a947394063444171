#include <doctest.h>

#include <random>

#include "boro/json_io.hpp"
#include "boro/textio.hpp"
#include "oracles.hpp"

using namespace boro;

namespace {

std::vector<mpz_class> as_mpz(const oracles::ZPoly& p) {
    std::vector<mpz_class> out;
    for (long long c : p) out.push_back(mpz_class(static_cast<long>(c)));
    return out;
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("cyclotomic polynomial base cases") {
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});                    // x - 1
    CHECK(cyclotomic_polynomial(5) == std::vector<mpz_class>{1, 1, 1, 1, 1});            // prime rule
    CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
}

TEST_CASE("Phi_12 against the recursive oracle") {
    // expected value frozen from the oracle: divide x^12 - 1 by Phi_1..Phi_6
    const auto expected = as_mpz(oracles::phi_oracle(12));
    CHECK(expected == std::vector<mpz_class>{1, 0, -1, 0, 1});  // x^4 - x^2 + 1
    CHECK(cyclotomic_polynomial(12) == expected);
}

TEST_CASE("Phi reconstruction for all m <= 60") {
    for (unsigned m = 1; m <= 60; ++m) {
        std::vector<mpz_class> prod{1};
        for (unsigned d : divisors(m)) {
            const auto phi = cyclotomic_polynomial(d);
            std::vector<mpz_class> next(prod.size() + phi.size() - 1, mpz_class(0));
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            prod = std::move(next);
        }
        std::vector<mpz_class> target(m + 1, mpz_class(0));
        target[0] = -1;
        target[m] = 1;
        CHECK(prod == target);
        CHECK(cyclotomic_polynomial(m).size() == euler_phi(m) + 1);
    }
}

TEST_CASE("field inverse and roots of unity") {
    auto f12 = CycField::get(12);
    const CycElem a = CycElem::zeta_power(f12, 1) + CycElem::from_rational(f12, Rational(3));
    CHECK((a * a.inverse()).is_one());
    CHECK(CycElem::zeta_power(f12, 1).pow(12).is_one());
    for (unsigned m : {5u, 8u, 20u, 44u, 48u})
        CHECK(CycElem::zeta_power(CycField::get(m), 1).pow(m).is_one());
    CHECK_THROWS_AS(CycElem::zero(f12).inverse(), DivisionByZero);
    auto f8 = CycField::get(8);
    CHECK_THROWS_AS(CycElem::one(f8) + CycElem::one(f12), ContextMismatch);
}

TEST_CASE("zeta8 + zeta8^-1 squares to 2") {
    auto f8 = CycField::get(8);
    const CycElem s = CycElem::zeta_power(f8, 1) + CycElem::zeta_power(f8, -1);
    CHECK((s * s).as_rational() == Rational(2));
}

TEST_CASE("vertex coordinates") {
    const unsigned n = 6;
    auto field = CycField::get(4 * n);
    auto [c0, s0] = vertex_coordinates(field, 0, n);
    CHECK(c0.is_one());
    CHECK(s0.is_zero());

    // j=2, n=6: cos = 1/2 and sin^2 = 3/4
    auto [c2, s2] = vertex_coordinates(field, 2, n);
    CHECK(c2.as_rational() == make_rational(1, 2));
    CHECK((s2 * s2).as_rational() == make_rational(3, 4));

    // unit circle for every vertex of several polygons
    for (unsigned nn : {4u, 7u, 12u}) {
        auto f = CycField::get(4 * nn);
        for (long j = 0; j < static_cast<long>(2 * nn); ++j) {
            auto [c, s] = vertex_coordinates(f, j, nn);
            CHECK((c * c + s * s).is_one());
        }
    }
    CHECK_THROWS_AS(vertex_coordinates(CycField::get(8), 1, 6), ContextMismatch);
}

TEST_CASE("as_rational") {
    auto f12 = CycField::get(12);
    CHECK(CycElem::from_rational(f12, make_rational(7, 3)).as_rational() == make_rational(7, 3));
    CHECK(!CycElem::zeta_power(f12, 1).as_rational());
    // sum of all primitive 8th roots of unity is mu(8) = 0
    auto f8 = CycField::get(8);
    CycElem sum = CycElem::zero(f8);
    for (long k : {1, 3, 5, 7}) sum += CycElem::zeta_power(f8, k);
    CHECK(sum.as_rational() == Rational(0));
}

TEST_CASE("to_complex") {
    auto f4 = CycField::get(4);
    CHECK(CycElem::one(f4).to_complex() == std::complex<double>(1.0, 0.0));
    const auto i = CycElem::zeta_power(f4, 1).to_complex();
    CHECK(std::abs(i - std::complex<double>(0.0, 1.0)) < 1e-12);
    // cos(pi/12): vertex j=1 of the 12-gon lives in Q(zeta_48)
    auto f48 = CycField::get(48);
    auto [c, s] = vertex_coordinates(f48, 1, 12);
    CHECK(std::abs(c.to_complex().real() - std::cos(std::numbers::pi / 12.0)) < 1e-12);
    CHECK(std::abs(c.to_complex().imag()) < 1e-12);
}

TEST_CASE("round trip through embedding, 1000 random rationals") {
    auto f20 = CycField::get(20);
    std::mt19937 rng(7002);
    for (int i = 0; i < 1000; ++i) {
        const Rational q = oracles::random_rational(rng, 1000);
        CHECK(CycElem::from_rational(f20, q).as_rational() == q);
    }
}

TEST_CASE("field laws on random triples, conductors 4n for n = 4..12") {
    std::mt19937 rng(7003);
    for (unsigned n = 4; n <= 12; ++n) {
        auto field = CycField::get(4 * n);
        for (int round = 0; round < 6; ++round) {
            const CycElem a = oracles::random_cyc(rng, field);
            const CycElem b = oracles::random_cyc(rng, field);
            const CycElem c = oracles::random_cyc(rng, field);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == CycElem::zero(field));
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("galois maps are field automorphisms") {
    std::mt19937 rng(7004);
    for (unsigned m : {12u, 40u, 44u}) {
        auto field = CycField::get(m);
        for (unsigned a = 2; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            const CycElem x = oracles::random_cyc(rng, field);
            const CycElem y = oracles::random_cyc(rng, field);
            CHECK((x * y).galois(a) == x.galois(a) * y.galois(a));
            CHECK((x + y).galois(a) == x.galois(a) + y.galois(a));
        }
        // conjugation fixes rationals
        const CycElem q = CycElem::from_rational(field, make_rational(5, 7));
        CHECK(q.conj() == q);
    }
}

TEST_CASE("json serialization round-trip") {
    auto f12 = CycField::get(12);
    std::mt19937 rng(7005);
    for (int i = 0; i < 50; ++i) {
        const CycElem e = oracles::random_cyc(rng, f12);
        CHECK(cyc_from_json(cyc_json(e)) == e);
    }
    const CycElem z = CycElem::zeta_power(f12, 1);
    CHECK(cyc_json(z) == R"({"m":12,"coeffs":["0","1","0","0"]})");
}

TEST_CASE("text literal round-trip") {
    auto f8 = CycField::get(8);
    std::mt19937 rng(7006);
    for (int i = 0; i < 50; ++i) {
        const CycElem e = oracles::random_cyc(rng, f8);
        CHECK(parse_cyc(cyc_to_text(e), f8) == e);
    }
}

TEST_CASE("hashing respects canonical equality") {
    auto f12 = CycField::get(12);
    const CycElem a = CycElem::zeta_power(f12, 1) + CycElem::zeta_power(f12, 13);  // 13 = 1 mod 12
    const CycElem b = CycElem::zeta_power(f12, 1).scale(Rational(2));
    CHECK(a == b);
    CHECK(hash_value(a) == hash_value(b));
    CHECK(hash_value(a) != hash_value(CycElem::zeta_power(f12, 2)));
}

}  // TEST_SUITE

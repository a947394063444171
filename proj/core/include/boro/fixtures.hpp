#ifndef BORO_FIXTURES_HPP
#define BORO_FIXTURES_HPP

#include "boro/groebner.hpp"
#include "boro/textio.hpp"

namespace boro {

// Published generator lists for the triple-point ideals of B_10 and B_11 (in
// their original coordinate system, which differs from ours by a projective
// change of coordinates). Useful for validating the algebra stack on inputs
// that do not come from our own arrangement construction.
inline constexpr const char* kPublishedN10Generators[] = {
    "4*x*y^3 + 2*x^2*y*z + 4*y^3*z - x*y*z^2 - 3*y*z^3",
    "4*x^3*y + 2*x^2*y*z - 3*x*y*z^2 - y*z^3",
    "x^4 - 6*x^2*y^2 + y^4 - 4*x^3*z + x^2*z^2 + y^2*z^2 + 2*x*z^3 - z^4",
};

inline constexpr const char* kPublishedN11Generators[] = {
    "4*x^3*y - 4*x*y^3 - 3*x^2*y*z - 3*y^3*z - 2*x*y*z^2 + 2*y*z^3",
    "32*y^5 + 88*x*y^3*z + 33*x^2*y*z^2 - 55*y^3*z^2 - 66*x*y*z^3 + 22*y*z^4",
    "32*x^2*y^3 + 72*x*y^3*z + 11*x^2*y*z^2 + 35*y^3*z^2 - 22*x*y*z^3 - 22*y*z^4",
    "2*x^5 - 10*x*y^4 - 8*x^4*z - 15*x^2*y^2*z - 7*y^4*z + 4*x^3*z^2 + 2*x*y^2*z^2 + 10*x^2*z^3 + 8*y^2*z^3 - 4*x*z^4 - 2*z^5",
};

// The published Hilbert-Burch matrix for the B_10 triple points, row-major.
// Note: the published generator LIST above is inconsistent with this matrix
// (its rows are not syzygies of the list, and the list cuts an 8-point
// non-saturated scheme). The matrix is the self-consistent artifact: its
// signed 2x2 minors define exactly the 12 triple points. Both are shipped
// verbatim; cross-validation targets the object each claim is true of.
inline constexpr const char* kPublishedN10HilbertBurch[2][3] = {
    {"4*x^2 - 2*x*z - z^2", "4*y^2 - 14*x*z + z^2", "-4*y^2 - 2*x*z + 3*z^2"},
    {"4*x^2 - 24*y^2 - 14*x*z + 13*z^2", "0", "-16*x*y - 16*y*z"},
};

inline Ideal<Rational> published_ideal_n10() {
    RingPtr ring = xyz_ring();
    std::vector<Polynomial<Rational>> gens;
    for (const char* text : kPublishedN10Generators) gens.push_back(parse_poly_rational(text, ring));
    return Ideal<Rational>(ring, std::move(gens));
}

inline Ideal<Rational> published_ideal_n11() {
    RingPtr ring = xyz_ring();
    std::vector<Polynomial<Rational>> gens;
    for (const char* text : kPublishedN11Generators) gens.push_back(parse_poly_rational(text, ring));
    return Ideal<Rational>(ring, std::move(gens));
}

inline std::array<std::vector<Polynomial<Rational>>, 2> published_matrix_n10() {
    RingPtr ring = xyz_ring();
    std::array<std::vector<Polynomial<Rational>>, 2> rows;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c)
            rows[static_cast<std::size_t>(r)].push_back(
                parse_poly_rational(kPublishedN10HilbertBurch[r][c], ring));
    return rows;
}

// the ideal regenerated by the signed 2x2 minors of the published matrix
inline Ideal<Rational> published_minors_ideal_n10() {
    auto rows = published_matrix_n10();
    std::vector<Polynomial<Rational>> minors;
    for (int c = 0; c < 3; ++c) {
        const int a = (c + 1) % 3, b = (c + 2) % 3;
        minors.push_back(rows[0][static_cast<std::size_t>(a)] * rows[1][static_cast<std::size_t>(b)] -
                         rows[0][static_cast<std::size_t>(b)] * rows[1][static_cast<std::size_t>(a)]);
    }
    return Ideal<Rational>(xyz_ring(), std::move(minors));
}

}  // namespace boro

#endif

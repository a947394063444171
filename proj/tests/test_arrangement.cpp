#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "boro/arrangement.hpp"
#include "boro/json_io.hpp"

using namespace boro;

namespace {

unsigned expected_triples(unsigned n) { return (n * (n - 3)) / 6 + 1; }

}  // namespace

TEST_SUITE("arrangement") {

TEST_CASE("boroczky construction produces n distinct lines") {
    for (unsigned n = 4; n <= 12; ++n) {
        auto arr = boroczky_lines(n);
        CHECK(arr.lines.size() == n);
        CHECK(arr.field->conductor() == 4 * n);
        std::set<int> ks;
        for (const auto& l : arr.lines) ks.insert(l.k);
        CHECK(ks.size() == n);
    }
    CHECK_THROWS(boroczky_lines(3));
}

TEST_CASE("secants contain their defining vertices, tangents touch the circle doubly") {
    for (unsigned n : {6u, 12u}) {
        auto arr = boroczky_lines(n);
        const unsigned m = 4 * n;
        bool saw_tangent = false;
        for (const auto& line : arr.lines) {
            const unsigned k = static_cast<unsigned>(line.k);
            const long a = static_cast<long>((4 * k) % m);
            auto [ca, sa] = vertex_coordinates(arr.field, a / 2, n);
            const ProjPoint Qa = ProjPoint::canonical({ca, sa, CycElem::one(arr.field)});
            CHECK(evaluate_line(line, Qa).is_zero());
            if (!line.tangent) {
                const long b = static_cast<long>(((2 * n + m) - (8 * k) % m) % m);
                auto [cb, sb] = vertex_coordinates(arr.field, b / 2, n);
                const ProjPoint Qb = ProjPoint::canonical({cb, sb, CycElem::one(arr.field)});
                CHECK(evaluate_line(line, Qb).is_zero());
            } else {
                saw_tangent = true;
                // restrict x^2 + y^2 - z^2 to the tangent: the discriminant of
                // the resulting binary quadric must vanish (double contact)
                const auto& A = line.coeffs[0];
                const auto& B = line.coeffs[1];
                const auto& C = line.coeffs[2];
                // on the line, pick the parametrization by eliminating the
                // variable with a nonzero coefficient
                // substitute x = -(B*y + C*z)/A when A != 0
                CycFieldPtr f = arr.field;
                CycElem a2, b2, c2;
                if (!A.is_zero()) {
                    const CycElem inva = A.inverse();
                    // ( (B y + C z)^2 / A^2 ) + y^2 - z^2
                    a2 = B * B * inva * inva + CycElem::one(f);   // y^2
                    b2 = B * C * inva * inva * CycElem::from_rational(f, Rational(2));  // yz
                    c2 = C * C * inva * inva - CycElem::one(f);   // z^2
                } else {
                    const CycElem invb = B.inverse();
                    a2 = CycElem::one(f);                          // x^2
                    b2 = CycElem::zero(f);
                    c2 = C * C * invb * invb - CycElem::one(f);
                }
                const CycElem discriminant =
                    b2 * b2 - CycElem::from_rational(f, Rational(4)) * a2 * c2;
                CHECK(discriminant.is_zero());
            }
        }
        CHECK(saw_tangent);  // 6k == n mod 2n has a solution for these n
    }
}

TEST_CASE("triple point census for n = 4..12") {
    const std::vector<unsigned> expected{1, 2, 4, 5, 7, 10, 12, 15, 19};
    for (unsigned n = 4; n <= 12; ++n) {
        auto arr = boroczky_lines(n);
        auto rep = incidence(arr);
        auto T = triple_points(arr, rep, nullptr);
        CHECK(T.size() == expected[n - 4]);
        CHECK(T.size() == expected_triples(n));
        for (const auto& p : T) {
            unsigned through = 0;
            for (const auto& l : arr.lines)
                if (evaluate_line(l, p).is_zero()) ++through;
            CHECK(through == 3);
        }
    }
}

TEST_CASE("n=12 has exactly 19 triple and 9 double points") {
    auto arr = boroczky_lines(12);
    auto rep = incidence(arr);
    CHECK(rep.count_of_multiplicity(3) == 19);
    CHECK(rep.count_of_multiplicity(2) == 9);
    CHECK(rep.count_of_multiplicity(4) == 0);
}

TEST_CASE("pair count saturation") {
    for (unsigned n : {4u, 7u, 11u, 12u}) {
        auto arr = boroczky_lines(n);
        auto rep = incidence(arr);
        unsigned long long pairs = 0;
        for (const auto& rec : rep.points)
            pairs += static_cast<unsigned long long>(rec.multiplicity) * (rec.multiplicity - 1) / 2;
        CHECK(pairs == static_cast<unsigned long long>(n) * (n - 1) / 2);
    }
}

TEST_CASE("line distribution bounds") {
    for (unsigned n = 4; n <= 12; ++n) {
        auto arr = boroczky_lines(n);
        auto rep = incidence(arr);
        auto dist = verify_line_distribution(arr, rep);
        CHECK(dist.floor_bound == (n - 3) / 2);
        CHECK(dist.min_count >= dist.floor_bound);
        CHECK(dist.max_count >= dist.floor_bound + 1);
        unsigned total = 0;
        for (unsigned c : dist.per_line) total += c;
        auto T = triple_points(arr, rep, nullptr);
        CHECK(total == 3 * T.size());
        if (n == 12) {
            CHECK(dist.min_count >= 4);
            CHECK(dist.max_count >= 5);
        }
    }
}

TEST_CASE("dual-Hesse fixture") {
    auto arr = dual_hesse();
    CHECK(arr.lines.size() == 9);
    auto rep = incidence(arr);
    CHECK(rep.count_of_multiplicity(3) == 12);
    CHECK(rep.count_of_multiplicity(2) == 0);
    CHECK(rep.points.size() == 12);
    // 3 * 12 = C(9,2): the pair count forces no double points
    CHECK(3 * 12 == 9 * 8 / 2);
}

TEST_CASE("galois stability of the line set and the triple points") {
    for (unsigned n : {5u, 8u, 12u}) {
        auto arr = boroczky_lines(n);
        CHECK(galois_stable(arr));
        auto rep = incidence(arr);
        auto T = triple_points(arr, rep, nullptr);
        std::vector<ProjPoint> sorted = T;
        std::sort(sorted.begin(), sorted.end(), ProjPointLess{});
        const unsigned m = arr.field->conductor();
        for (unsigned a = 2; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            std::vector<ProjPoint> image;
            for (const auto& p : sorted) image.push_back(galois_point(p, a));
            std::sort(image.begin(), image.end(), ProjPointLess{});
            bool equal = true;
            for (std::size_t i = 0; i < sorted.size(); ++i)
                if (!(image[i] == sorted[i])) equal = false;
            CHECK(equal);
        }
    }
    CHECK(galois_stable(dual_hesse()));
}

TEST_CASE("incidence multiplicities are re-verified against evaluation") {
    auto arr = boroczky_lines(9);
    auto rep = incidence(arr);
    for (const auto& rec : rep.points) {
        unsigned count = 0;
        for (const auto& l : arr.lines)
            if (evaluate_line(l, rec.point).is_zero()) ++count;
        CHECK(count == rec.multiplicity);
        CHECK(rec.multiplicity >= 2);
    }
}

TEST_CASE("svg output is deterministic with the expected element counts") {
    auto arr = boroczky_lines(12);
    auto rep = incidence(arr);
    const std::string svg1 = plot_svg(arr, rep);
    const std::string svg2 = plot_svg(arr, rep);
    CHECK(svg1 == svg2);

    auto count = [&](const std::string& needle) {
        std::size_t c = 0, pos = 0;
        while ((pos = svg1.find(needle, pos)) != std::string::npos) {
            ++c;
            pos += needle.size();
        }
        return c;
    };
    CHECK(count("<line ") == 12);
    CHECK(count("class=\"pt") == 28);  // 19 triple + 9 double markers

    // invert the drawing transform using the unit-circle element, then match
    // every marker to an exact point within 1e-9
    auto grab = [&](std::size_t from, const char* attr) {
        const std::string key = std::string(attr) + "=\"";
        const std::size_t at = svg1.find(key, from);
        REQUIRE(at != std::string::npos);
        return std::stod(svg1.substr(at + key.size()));
    };
    const std::size_t circle_at = svg1.find("<circle cx=");
    const double cx0 = grab(circle_at, "cx");
    const double cy0 = grab(circle_at, "cy");
    const double radius = grab(circle_at, "r");

    std::size_t matched = 0, pos = 0;
    while ((pos = svg1.find("class=\"pt", pos)) != std::string::npos) {
        const double mx = (grab(pos, "cx") - cx0) / radius;
        const double my = (cy0 - grab(pos, "cy")) / radius;
        bool found = false;
        for (const auto& rec : rep.points) {
            const double ex = rec.point.coords[0].to_complex().real();
            const double ey = rec.point.coords[1].to_complex().real();
            if (std::abs(ex - mx) < 1e-9 && std::abs(ey - my) < 1e-9) found = true;
        }
        CHECK(found);
        matched += found ? 1u : 0u;
        ++pos;
    }
    CHECK(matched == 28);
}

TEST_CASE("arrangement json round-trip") {
    for (unsigned n : {5u, 10u}) {
        auto arr = boroczky_lines(n);
        auto back = arrangement_from_json(arrangement_json(arr));
        REQUIRE(back.lines.size() == arr.lines.size());
        CHECK(back.n == arr.n);
        for (std::size_t i = 0; i < arr.lines.size(); ++i) {
            CHECK(back.lines[i] == arr.lines[i]);
            CHECK(back.lines[i].k == arr.lines[i].k);
            CHECK(back.lines[i].tangent == arr.lines[i].tangent);
        }
    }
}

}  // TEST_SUITE

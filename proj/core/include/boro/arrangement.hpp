#ifndef BORO_ARRANGEMENT_HPP
#define BORO_ARRANGEMENT_HPP

#include <array>
#include <iosfwd>
#include <vector>

#include "boro/cyclotomic.hpp"

namespace boro {

// canonical: last nonzero coordinate scaled to 1
struct ProjPoint {
    std::array<CycElem, 3> coords;

    static ProjPoint canonical(std::array<CycElem, 3> raw);
    bool operator==(const ProjPoint& p) const { return coords == p.coords; }
};

int compare(const ProjPoint& a, const ProjPoint& b);

struct ProjPointLess {
    bool operator()(const ProjPoint& a, const ProjPoint& b) const { return compare(a, b) < 0; }
};

// ax + by + cz = 0; canonical: first nonzero coefficient scaled to 1
struct ProjLine {
    std::array<CycElem, 3> coeffs;
    int k = -1;           // construction index, -1 when synthetic
    bool tangent = false;

    static ProjLine canonical(std::array<CycElem, 3> raw, int k = -1, bool tangent = false);
    bool operator==(const ProjLine& l) const { return coeffs == l.coeffs; }
};

int compare(const ProjLine& a, const ProjLine& b);

CycElem evaluate_line(const ProjLine& line, const ProjPoint& point);
ProjPoint meet(const ProjLine& a, const ProjLine& b);
ProjLine join(const ProjPoint& a, const ProjPoint& b);

struct LineArrangement {
    unsigned n = 0;
    CycFieldPtr field;
    std::vector<ProjLine> lines;
};

struct IncidencePoint {
    ProjPoint point;
    unsigned multiplicity = 0;          // number of arrangement lines through it
    std::vector<unsigned> line_indices;
};

struct IncidenceReport {
    std::vector<IncidencePoint> points;  // canonically sorted
    std::vector<unsigned> per_line_triple_count;

    unsigned count_of_multiplicity(unsigned m) const {
        unsigned c = 0;
        for (const auto& p : points)
            if (p.multiplicity == m) ++c;
        return c;
    }
};

// B_n: the line Q_alpha Q_{pi-2alpha} for alpha = 2k*pi/n, k = 0..n-1, on the
// regular 2n-gon; on vertex indices a = 4k and b = 2n-8k mod 4n (in units of
// pi/(2n)), with the tangent at Q_alpha exactly when a == b. Throws
// DegenerateConstruction if the n lines are not distinct.
LineArrangement boroczky_lines(unsigned n);

// all pairwise intersections, grouped by exact equality, multiplicities
// re-verified by evaluating every line at every point
IncidenceReport incidence(const LineArrangement& arr);

// the multiplicity-3 points; any point of multiplicity >= 4 is excluded and
// reported on `warnings`
std::vector<ProjPoint> triple_points(const LineArrangement& arr, const IncidenceReport& report,
                                     std::ostream* warnings = nullptr);

struct LineDistribution {
    std::vector<unsigned> per_line;
    unsigned floor_bound = 0;  // floor((n-3)/2)
    unsigned min_count = 0;
    unsigned max_count = 0;
};

// per-line triple counts; throws PropertyViolation unless every line carries
// >= floor((n-3)/2) triple points and some line carries one more
LineDistribution verify_line_distribution(const LineArrangement& arr, const IncidenceReport& report);

// 9 lines over Q(zeta_3) with 12 triple points and no double points
LineArrangement dual_hesse();

// coefficient-wise sigma_a on canonical forms
ProjLine galois_line(const ProjLine& line, unsigned a);
ProjPoint galois_point(const ProjPoint& point, unsigned a);

// true iff sigma_a permutes the line set for every a coprime to the conductor
bool galois_stable(const LineArrangement& arr);

std::string plot_svg(const LineArrangement& arr, const IncidenceReport& report);

}  // namespace boro

#endif

#include "boro/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "boro/errors.hpp"

namespace boro {

ProjPoint ProjPoint::canonical(std::array<CycElem, 3> raw) {
    int pivot = -1;
    for (int i = 2; i >= 0; --i)
        if (!raw[i].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot < 0) throw std::invalid_argument("projective point with all-zero coordinates");
    const CycElem scale = raw[static_cast<std::size_t>(pivot)].inverse();
    ProjPoint p;
    for (int i = 0; i < 3; ++i) p.coords[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i)] * scale;
    return p;
}

int compare(const ProjPoint& a, const ProjPoint& b) {
    for (int i = 0; i < 3; ++i) {
        const int c = compare(a.coords[static_cast<std::size_t>(i)], b.coords[static_cast<std::size_t>(i)]);
        if (c != 0) return c;
    }
    return 0;
}

ProjLine ProjLine::canonical(std::array<CycElem, 3> raw, int k, bool tangent) {
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
        if (!raw[static_cast<std::size_t>(i)].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot < 0) throw std::invalid_argument("projective line with all-zero coefficients");
    const CycElem scale = raw[static_cast<std::size_t>(pivot)].inverse();
    ProjLine l;
    l.k = k;
    l.tangent = tangent;
    for (int i = 0; i < 3; ++i) l.coeffs[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i)] * scale;
    return l;
}

int compare(const ProjLine& a, const ProjLine& b) {
    for (int i = 0; i < 3; ++i) {
        const int c = compare(a.coeffs[static_cast<std::size_t>(i)], b.coeffs[static_cast<std::size_t>(i)]);
        if (c != 0) return c;
    }
    return 0;
}

CycElem evaluate_line(const ProjLine& line, const ProjPoint& point) {
    return line.coeffs[0] * point.coords[0] + line.coeffs[1] * point.coords[1] +
           line.coeffs[2] * point.coords[2];
}

namespace {

std::array<CycElem, 3> cross(const std::array<CycElem, 3>& a, const std::array<CycElem, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

ProjPoint meet(const ProjLine& a, const ProjLine& b) { return ProjPoint::canonical(cross(a.coeffs, b.coeffs)); }

ProjLine join(const ProjPoint& a, const ProjPoint& b) { return ProjLine::canonical(cross(a.coords, b.coords)); }

LineArrangement boroczky_lines(unsigned n) {
    if (n < 4) throw std::invalid_argument("boroczky_lines: n must be at least 4");
    const unsigned m = 4 * n;
    CycFieldPtr field = CycField::get(m);
    LineArrangement arr;
    arr.n = n;
    arr.field = field;
    arr.lines.reserve(n);
    for (unsigned k = 0; k < n; ++k) {
        const long a = static_cast<long>((4 * k) % m);
        const long b = static_cast<long>(((2 * n + m) - (8 * k) % m) % m);
        // vertex index v corresponds to Q at angle v*pi/(2n); vertex_coordinates
        // takes j with angle j*pi/n, so v = 2j and all indices here are even
        if (a == b) {
            // tangent at Q_alpha: cos(alpha) x + sin(alpha) y - z = 0
            auto [c, s] = vertex_coordinates(field, a / 2, n);
            arr.lines.push_back(ProjLine::canonical(
                {c, s, -CycElem::one(field)}, static_cast<int>(k), true));
        } else {
            auto [ca, sa] = vertex_coordinates(field, a / 2, n);
            auto [cb, sb] = vertex_coordinates(field, b / 2, n);
            const CycElem one = CycElem::one(field);
            ProjPoint P = ProjPoint::canonical({ca, sa, one});
            ProjPoint Q = ProjPoint::canonical({cb, sb, one});
            ProjLine line = join(P, Q);
            line.k = static_cast<int>(k);
            line.tangent = false;
            // incidence by construction
            if (!evaluate_line(line, P).is_zero() || !evaluate_line(line, Q).is_zero())
                throw std::logic_error("boroczky_lines: secant misses its defining vertices");
            arr.lines.push_back(std::move(line));
        }
    }
    for (std::size_t i = 0; i < arr.lines.size(); ++i)
        for (std::size_t j = i + 1; j < arr.lines.size(); ++j)
            if (arr.lines[i] == arr.lines[j])
                throw DegenerateConstruction("boroczky_lines: duplicate lines for n = " + std::to_string(n) +
                                             " (k = " + std::to_string(arr.lines[i].k) + ", " +
                                             std::to_string(arr.lines[j].k) + ")");
    return arr;
}

IncidenceReport incidence(const LineArrangement& arr) {
    std::map<ProjPoint, std::set<unsigned>, ProjPointLess> groups;
    for (unsigned i = 0; i < arr.lines.size(); ++i)
        for (unsigned j = i + 1; j < arr.lines.size(); ++j) {
            ProjPoint p = meet(arr.lines[i], arr.lines[j]);
            auto& g = groups[p];
            g.insert(i);
            g.insert(j);
        }
    IncidenceReport report;
    report.per_line_triple_count.assign(arr.lines.size(), 0);
    for (const auto& [point, lines] : groups) {
        // re-verify by evaluating every line
        std::vector<unsigned> through;
        for (unsigned i = 0; i < arr.lines.size(); ++i)
            if (evaluate_line(arr.lines[i], point).is_zero()) through.push_back(i);
        if (through.size() != lines.size() || !std::equal(through.begin(), through.end(), lines.begin()))
            throw PropertyViolation("incidence: pairwise grouping disagrees with line evaluation");
        IncidencePoint rec;
        rec.point = point;
        rec.multiplicity = static_cast<unsigned>(through.size());
        rec.line_indices = std::move(through);
        if (rec.multiplicity == 3)
            for (unsigned i : rec.line_indices) ++report.per_line_triple_count[i];
        report.points.push_back(std::move(rec));
    }
    return report;
}

std::vector<ProjPoint> triple_points(const LineArrangement& arr, const IncidenceReport& report,
                                     std::ostream* warnings) {
    std::vector<ProjPoint> out;
    for (const auto& rec : report.points) {
        if (rec.multiplicity == 3) out.push_back(rec.point);
        if (rec.multiplicity >= 4 && warnings)
            (*warnings) << "WARNING: point of multiplicity " << rec.multiplicity << " in B_" << arr.n
                        << "; excluded from the triple-point set\n";
    }
    return out;
}

LineDistribution verify_line_distribution(const LineArrangement& arr, const IncidenceReport& report) {
    LineDistribution dist;
    dist.per_line = report.per_line_triple_count;
    dist.floor_bound = (arr.n - 3) / 2;
    dist.min_count = *std::min_element(dist.per_line.begin(), dist.per_line.end());
    dist.max_count = *std::max_element(dist.per_line.begin(), dist.per_line.end());
    if (dist.min_count < dist.floor_bound) {
        const auto offender = static_cast<unsigned>(
            std::min_element(dist.per_line.begin(), dist.per_line.end()) - dist.per_line.begin());
        throw PropertyViolation("line " + std::to_string(offender) + " carries " +
                                std::to_string(dist.per_line[offender]) + " triple points, below floor " +
                                std::to_string(dist.floor_bound));
    }
    if (dist.max_count < dist.floor_bound + 1)
        throw PropertyViolation("no line carries more than the floor count of triple points");
    return dist;
}

LineArrangement dual_hesse() {
    CycFieldPtr field = CycField::get(3);
    const CycElem one = CycElem::one(field);
    LineArrangement arr;
    arr.n = 9;
    arr.field = field;
    // x - w^i y, y - w^i z, z - w^i x
    for (int i = 0; i < 3; ++i) {
        const CycElem wi = CycElem::zeta_power(field, i);
        arr.lines.push_back(ProjLine::canonical({one, -wi, CycElem::zero(field)}, i, false));
        arr.lines.push_back(ProjLine::canonical({CycElem::zero(field), one, -wi}, 3 + i, false));
        arr.lines.push_back(ProjLine::canonical({-wi, CycElem::zero(field), one}, 6 + i, false));
    }
    return arr;
}

ProjLine galois_line(const ProjLine& line, unsigned a) {
    return ProjLine::canonical({line.coeffs[0].galois(a), line.coeffs[1].galois(a), line.coeffs[2].galois(a)},
                               line.k, line.tangent);
}

ProjPoint galois_point(const ProjPoint& point, unsigned a) {
    return ProjPoint::canonical(
        {point.coords[0].galois(a), point.coords[1].galois(a), point.coords[2].galois(a)});
}

bool galois_stable(const LineArrangement& arr) {
    const unsigned m = arr.field->conductor();
    std::vector<ProjLine> sorted = arr.lines;
    std::sort(sorted.begin(), sorted.end(), [](const ProjLine& x, const ProjLine& y) { return compare(x, y) < 0; });
    for (unsigned a = 2; a < m; ++a) {
        if (std::gcd(a, m) != 1) continue;
        std::vector<ProjLine> image;
        image.reserve(sorted.size());
        for (const auto& l : sorted) image.push_back(galois_line(l, a));
        std::sort(image.begin(), image.end(), [](const ProjLine& x, const ProjLine& y) { return compare(x, y) < 0; });
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (!(image[i] == sorted[i])) return false;
    }
    return true;
}

}  // namespace boro

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "boro/arrangement.hpp"

namespace boro {

namespace {

std::string fmt(double v) {
    // fixed precision keeps the output byte-identical across runs
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v + 0.0);  // normalize -0
    return buf;
}

struct Seg {
    double x1, y1, x2, y2;
    bool ok = false;
};

// clip ax + by + c = 0 (affine chart z = 1) to the box [-R, R]^2
Seg clip_line(double a, double b, double c, double R) {
    std::vector<std::pair<double, double>> hits;
    auto push = [&](double x, double y) {
        for (auto& h : hits)
            if (std::abs(h.first - x) < 1e-9 && std::abs(h.second - y) < 1e-9) return;
        hits.push_back({x, y});
    };
    if (std::abs(b) > 1e-12) {
        for (double x : {-R, R}) {
            const double y = -(a * x + c) / b;
            if (y >= -R - 1e-9 && y <= R + 1e-9) push(x, y);
        }
    }
    if (std::abs(a) > 1e-12) {
        for (double y : {-R, R}) {
            const double x = -(b * y + c) / a;
            if (x >= -R - 1e-9 && x <= R + 1e-9) push(x, y);
        }
    }
    Seg s;
    if (hits.size() >= 2) {
        s.x1 = hits[0].first;
        s.y1 = hits[0].second;
        s.x2 = hits[1].first;
        s.y2 = hits[1].second;
        s.ok = true;
    }
    return s;
}

}  // namespace

std::string plot_svg(const LineArrangement& arr, const IncidenceReport& report) {
    // extent: unit circle plus all finite marked points, with a margin
    double extent = 1.0;
    for (const auto& rec : report.points) {
        if (rec.point.coords[2].is_zero()) continue;  // points at infinity are not drawable
        const auto x = (rec.point.coords[0].to_complex()).real();
        const auto y = (rec.point.coords[1].to_complex()).real();
        extent = std::max({extent, std::abs(x), std::abs(y)});
    }
    const double R = extent * 1.15;
    const double scale = 240.0 / R;
    const double size = 520.0;
    auto sx = [&](double x) { return size / 2 + scale * x; };
    auto sy = [&](double y) { return size / 2 - scale * y; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(size) + "\" height=\"" + fmt(size) +
           "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) + "\">\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "  <circle cx=\"" + fmt(sx(0)) + "\" cy=\"" + fmt(sy(0)) + "\" r=\"" + fmt(scale) +
           "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    for (const auto& line : arr.lines) {
        const double a = line.coeffs[0].to_complex().real();
        const double b = line.coeffs[1].to_complex().real();
        const double c = line.coeffs[2].to_complex().real();
        const Seg s = clip_line(a, b, c, R);
        if (!s.ok) continue;
        out += "  <line x1=\"" + fmt(sx(s.x1)) + "\" y1=\"" + fmt(sy(s.y1)) + "\" x2=\"" + fmt(sx(s.x2)) +
               "\" y2=\"" + fmt(sy(s.y2)) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (const auto& rec : report.points) {
        if (rec.point.coords[2].is_zero()) continue;
        const double x = rec.point.coords[0].to_complex().real();
        const double y = rec.point.coords[1].to_complex().real();
        const char* cls = rec.multiplicity >= 3 ? "pt3" : "pt2";
        const char* fill = rec.multiplicity >= 3 ? "#333333" : "#cc3333";
        out += std::string("  <circle class=\"") + cls + "\" cx=\"" + fmt(sx(x)) + "\" cy=\"" + fmt(sy(y)) +
               "\" r=\"3.5\" fill=\"" + fill + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace boro

#include "boro/json_io.hpp"

#include <json.hpp>
#include <sstream>

namespace boro {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json cyc_obj(const CycElem& e) {
    ordered_json j;
    j["m"] = e.field()->conductor();
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : e.coeffs()) coeffs.push_back(to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

CycElem cyc_from_obj(const ordered_json& j) {
    const unsigned m = j.at("m").get<unsigned>();
    CycFieldPtr field = CycField::get(m);
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    if (coeffs.size() != field->degree()) throw ParseError("cyclotomic coefficient count mismatch");
    return CycElem(field, std::move(coeffs));
}

ordered_json methods_obj(const MethodsReport& m) {
    ordered_json j;
    if (m.direct_holds)
        j["direct"] = *m.direct_holds ? "holds" : "fails";
    else
        j["direct"] = nullptr;
    if (m.bh) {
        j["bh"] = {{"reg", m.bh->reg},
                   {"alpha", m.bh->alpha},
                   {"result", m.bh->result == Criterion::ProvesContainment ? "proves" : "inconclusive"}};
    } else {
        j["bh"] = nullptr;
    }
    if (m.ghm) {
        j["ghm"] = {{"entry_gens", m.ghm->entry_generators},
                    {"result", m.ghm->result == Criterion::ProvesContainment ? "proves" : "inconclusive"}};
    } else {
        j["ghm"] = "n/a";
    }
    if (m.seceleanu_holds)
        j["seceleanu"] = *m.seceleanu_holds ? "holds" : "fails";
    else
        j["seceleanu"] = "n/a";
    return j;
}

ordered_json row_obj(const ReportRow& row) {
    ordered_json j;
    j["label"] = row.label;
    j["n"] = row.n;
    j["lines"] = row.line_count;
    j["triple_points"] = row.triple_count;
    j["double_points"] = row.double_count;
    j["min_gens"] = row.min_gen_degrees;
    j["rational"] = {{"radical", row.radical_rational}, {"symbolic", row.symbolic_rational}};
    j["methods"] = methods_obj(row.methods);
    j["holds"] = row.holds;
    if (row.methods.witness.empty())
        j["witness"] = nullptr;
    else
        j["witness"] = row.methods.witness;
    return j;
}

}  // namespace

std::string cyc_json(const CycElem& e) { return cyc_obj(e).dump(); }

CycElem cyc_from_json(std::string_view text) { return cyc_from_obj(ordered_json::parse(text)); }

std::string arrangement_json(const LineArrangement& arr) {
    ordered_json j;
    j["n"] = arr.n;
    j["conductor"] = arr.field->conductor();
    ordered_json lines = ordered_json::array();
    for (const auto& line : arr.lines) {
        ordered_json l;
        l["k"] = line.k;
        l["kind"] = line.tangent ? "tangent" : "secant";
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : line.coeffs) coeffs.push_back(cyc_obj(c));
        l["coeffs"] = std::move(coeffs);
        lines.push_back(std::move(l));
    }
    j["lines"] = std::move(lines);
    return j.dump(2) + "\n";
}

LineArrangement arrangement_from_json(std::string_view text) {
    const ordered_json j = ordered_json::parse(text);
    LineArrangement arr;
    arr.n = j.at("n").get<unsigned>();
    arr.field = CycField::get(j.at("conductor").get<unsigned>());
    for (const auto& l : j.at("lines")) {
        std::array<CycElem, 3> coeffs;
        const auto& cj = l.at("coeffs");
        for (int i = 0; i < 3; ++i) coeffs[static_cast<std::size_t>(i)] = cyc_from_obj(cj.at(i));
        arr.lines.push_back(ProjLine::canonical(coeffs, l.at("k").get<int>(), l.at("kind") == "tangent"));
    }
    return arr;
}

std::string incidence_json(const IncidenceReport& report) {
    ordered_json j;
    ordered_json points = ordered_json::array();
    for (const auto& rec : report.points) {
        ordered_json p;
        ordered_json coords = ordered_json::array();
        for (const auto& c : rec.point.coords) coords.push_back(cyc_obj(c));
        p["coords"] = std::move(coords);
        p["mult"] = rec.multiplicity;
        p["lines"] = rec.line_indices;
        points.push_back(std::move(p));
    }
    j["points"] = std::move(points);
    return j.dump(2) + "\n";
}

std::string betti_json(const BettiTable& table) {
    ordered_json j;
    ordered_json entries = ordered_json::array();
    for (const auto& [key, count] : table.beta)
        if (count > 0)
            entries.push_back(ordered_json{{"i", key.first}, {"j", key.second}, {"beta", count}});
    j["betti"] = std::move(entries);
    j["reg"] = table.regularity();
    j["alpha"] = table.initial_degree();
    return j.dump(2) + "\n";
}

std::string resolution_text(const FreeResolution<Rational>& res) {
    std::ostringstream out;
    out << "generators:\n";
    for (const auto& g : res.generators) out << "  " << to_text(g) << "\n";
    for (std::size_t l = 0; l < res.differentials.size(); ++l) {
        out << "differential d" << (l + 1) << " (" << res.twists[l].size() << " x "
            << res.differentials[l].size() << ", columns):\n";
        for (const auto& col : res.differentials[l]) {
            out << "  [";
            for (unsigned p = 0; p < col.rank(); ++p) {
                if (p) out << "; ";
                out << to_text(col.component(p));
            }
            out << "]\n";
        }
    }
    return out.str();
}

std::string verdict_json(const ReportRow& row) { return row_obj(row).dump(2) + "\n"; }

std::string report_json(const std::vector<ReportRow>& rows) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) arr.push_back(row_obj(r));
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string report_markdown(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "| n | lines | triple pts | min gens | direct | BH (reg, alpha) | GHM entries | Seceleanu | verdict |\n";
    out << "|---|-------|------------|----------|--------|-----------------|-------------|-----------|---------|\n";
    for (const auto& r : rows) {
        out << "| " << r.n << " | " << r.line_count << " | " << r.triple_count << " | ";
        for (std::size_t i = 0; i < r.min_gen_degrees.size(); ++i)
            out << (i ? "," : "") << r.min_gen_degrees[i];
        out << " | ";
        out << (r.methods.direct_holds ? (*r.methods.direct_holds ? "holds" : "fails") : "-") << " | ";
        if (r.methods.bh)
            out << (r.methods.bh->result == Criterion::ProvesContainment ? "proves" : "inconclusive")
                << " (" << r.methods.bh->reg << ", " << r.methods.bh->alpha << ") | ";
        else
            out << "- | ";
        if (r.methods.ghm)
            out << r.methods.ghm->entry_generators << " ("
                << (r.methods.ghm->result == Criterion::ProvesContainment ? "proves" : "inconclusive")
                << ") | ";
        else
            out << "n/a | ";
        if (r.methods.seceleanu_holds)
            out << (*r.methods.seceleanu_holds ? "holds" : "fails") << " | ";
        else
            out << "n/a | ";
        out << (r.holds ? "holds" : "FAILS") << " |\n";
    }
    return out.str();
}

}  // namespace boro

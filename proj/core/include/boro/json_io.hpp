#ifndef BORO_JSON_IO_HPP
#define BORO_JSON_IO_HPP

#include <string>
#include <string_view>

#include "boro/arrangement.hpp"
#include "boro/report.hpp"
#include "boro/resolution.hpp"

namespace boro {

// {"m": conductor, "coeffs": ["num/den", ...]}
std::string cyc_json(const CycElem& e);
CycElem cyc_from_json(std::string_view text);

std::string arrangement_json(const LineArrangement& arr);
LineArrangement arrangement_from_json(std::string_view text);

std::string incidence_json(const IncidenceReport& report);

// {"betti": [{"i":..,"j":..,"beta":..}], "reg":.., "alpha":..}
std::string betti_json(const BettiTable& table);

// generators and differential matrices in the polynomial text grammar, for
// cross-validation in an external computer algebra system
std::string resolution_text(const FreeResolution<Rational>& res);

std::string verdict_json(const ReportRow& row);
std::string report_json(const std::vector<ReportRow>& rows);
std::string report_markdown(const std::vector<ReportRow>& rows);

}  // namespace boro

#endif

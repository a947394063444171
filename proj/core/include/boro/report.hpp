#ifndef BORO_REPORT_HPP
#define BORO_REPORT_HPP

#include "boro/containment.hpp"

namespace boro {

enum class MethodSelect { All, Direct, BocciHarbourne, Ghm, Seceleanu };

struct AnalyzeOptions {
    MethodSelect method = MethodSelect::All;
    // orbit grouping defaults to on for n >= 10, per-point folding below
    std::optional<bool> orbit_grouping;
    bool attempt_descent = true;
    bool verify_multiplicity = true;
    unsigned threads = 1;
};

struct MethodsReport {
    std::optional<bool> direct_holds;
    std::string witness;  // set when the direct test fails

    std::optional<BhOutcome> bh;
    std::optional<GhmOutcome> ghm;            // absent when not 3-generated
    std::optional<bool> seceleanu_holds;      // absent when not 3-generated
    std::string not_applicable_reason;        // for ghm/seceleanu
};

struct StageSeconds {
    double incidence = 0, radical = 0, symbolic = 0, methods = 0;
};

struct ReportRow {
    std::string label;  // "B_12", "dual-Hesse"
    unsigned n = 0;
    unsigned line_count = 0;
    unsigned triple_count = 0;
    unsigned double_count = 0;
    std::vector<int> min_gen_degrees;
    bool radical_rational = false;
    bool symbolic_rational = false;
    MethodsReport methods;
    bool holds = false;
    StageSeconds seconds;
};

// full containment pipeline on one arrangement: incidence, triple points,
// radical ideal, I^2, I^(3), then every applicable method; disagreement
// between the direct test and Seceleanu is a hard error
ReportRow analyze_arrangement(const LineArrangement& arr, std::string label,
                              const AnalyzeOptions& opts = {});

ReportRow analyze_boroczky(unsigned n, const AnalyzeOptions& opts = {});

// one row per n, ascending; rows run on a small worker pool capped by
// `row_threads` (the BOROCZKY_THREADS environment variable in the CLI)
std::vector<ReportRow> run_report(unsigned n_from, unsigned n_to, const AnalyzeOptions& opts = {},
                                  unsigned row_threads = 1);

}  // namespace boro

#endif

#include "boro/report.hpp"

#include <atomic>
#include <chrono>
#include <iostream>
#include <thread>

namespace boro {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool want(MethodSelect sel, MethodSelect m) { return sel == MethodSelect::All || sel == m; }

template <class K>
void run_methods(ReportRow& row, const AnalyzeOptions& opts, const Ideal<K>& radical,
                 const Ideal<K>& square, const Ideal<K>& symbolic3,
                 const std::optional<Polynomial<K>>& product_witness) {
    // direct membership of every symbolic generator in GB(I^2)
    std::optional<DirectOutcome> direct;
    if (want(opts.method, MethodSelect::Direct)) {
        direct = containment_direct(symbolic3, square, product_witness);
        row.methods.direct_holds = direct->holds;
        row.methods.witness = direct->witness;
    }

    if (want(opts.method, MethodSelect::BocciHarbourne)) {
        const int reg2 = free_resolution(square).betti().regularity();
        const int a3 = alpha(symbolic3);
        row.methods.bh = bocci_harbourne_from_invariants(reg2, a3);
    }

    if (want(opts.method, MethodSelect::Ghm) || want(opts.method, MethodSelect::Seceleanu)) {
        try {
            const HilbertBurch<K> hb = hilbert_burch(radical);
            if (want(opts.method, MethodSelect::Ghm)) row.methods.ghm = ghm_check(hb);
            if (want(opts.method, MethodSelect::Seceleanu))
                row.methods.seceleanu_holds = seceleanu_check(hb).holds;
        } catch (const NotThreeGenerated& e) {
            row.methods.not_applicable_reason = e.what();
        }
    }

    // soundness cross-checks
    if (direct) {
        row.holds = direct->holds;
        if (row.methods.seceleanu_holds && *row.methods.seceleanu_holds != direct->holds)
            throw PropertyViolation("Seceleanu equivalence disagrees with the direct test");
        if (row.methods.bh && row.methods.bh->result == Criterion::ProvesContainment && !direct->holds)
            throw PropertyViolation("Bocci-Harbourne claims containment but the direct test fails");
        if (row.methods.ghm && row.methods.ghm->result == Criterion::ProvesContainment && !direct->holds)
            throw PropertyViolation("GHM claims containment but the direct test fails");
    } else if (row.methods.seceleanu_holds) {
        row.holds = *row.methods.seceleanu_holds;
    } else if (row.methods.bh && row.methods.bh->result == Criterion::ProvesContainment) {
        row.holds = true;
    } else if (row.methods.ghm && row.methods.ghm->result == Criterion::ProvesContainment) {
        row.holds = true;
    }
}

}  // namespace

ReportRow analyze_arrangement(const LineArrangement& arr, std::string label, const AnalyzeOptions& opts) {
    ReportRow row;
    row.label = std::move(label);
    row.n = arr.n;
    row.line_count = static_cast<unsigned>(arr.lines.size());

    auto t0 = Clock::now();
    const IncidenceReport inc = incidence(arr);
    const std::vector<ProjPoint> triples = triple_points(arr, inc, &std::cerr);
    verify_line_distribution(arr, inc);
    row.triple_count = static_cast<unsigned>(triples.size());
    row.double_count = inc.count_of_multiplicity(2);
    row.seconds.incidence = seconds_since(t0);

    const RingPtr ring = xyz_ring();
    const PointIdealSystem sys = make_point_system(ring, arr.field, triples);

    SymbolicOptions sopts;
    sopts.orbit_grouping = opts.orbit_grouping.value_or(arr.n >= 10);
    sopts.attempt_descent = opts.attempt_descent;
    sopts.verify_multiplicity = opts.verify_multiplicity;
    sopts.threads = opts.threads;

    t0 = Clock::now();
    AnyIdeal radical = radical_ideal(sys, sopts);
    row.radical_rational = radical.descended();
    row.min_gen_degrees = radical.generator_degrees();
    row.seconds.radical = seconds_since(t0);

    t0 = Clock::now();
    AnyIdeal symbolic3 = symbolic_power(sys, 3, sopts);
    row.symbolic_rational = symbolic3.descended();
    row.seconds.symbolic = seconds_since(t0);

    const Polynomial<CycElem> lines_product = product_of_lines(arr);

    t0 = Clock::now();
    if (radical.descended() && symbolic3.descended()) {
        const Ideal<Rational>& I = radical.rational();
        Ideal<Rational> I2 = ideal_power(I, 2);
        auto witness = descend_poly(lines_product);
        if (!witness) throw std::logic_error("product of lines of a stable arrangement must be rational");
        run_methods(row, opts, I, I2, symbolic3.rational(), std::optional<Polynomial<Rational>>(*witness));
    } else {
        Ideal<CycElem> I = radical.descended() ? extend_ideal(radical.rational(), arr.field)
                                               : radical.cyclotomic();
        Ideal<CycElem> sym = symbolic3.descended() ? extend_ideal(symbolic3.rational(), arr.field)
                                                   : symbolic3.cyclotomic();
        Ideal<CycElem> I2 = ideal_power(I, 2);
        run_methods(row, opts, I, I2, sym, std::optional<Polynomial<CycElem>>(lines_product));
    }
    row.seconds.methods = seconds_since(t0);
    return row;
}

ReportRow analyze_boroczky(unsigned n, const AnalyzeOptions& opts) {
    return analyze_arrangement(boroczky_lines(n), "B_" + std::to_string(n), opts);
}

std::vector<ReportRow> run_report(unsigned n_from, unsigned n_to, const AnalyzeOptions& opts,
                                  unsigned row_threads) {
    if (n_from < 4 || n_to < n_from) throw std::invalid_argument("run_report: bad range");
    const unsigned count = n_to - n_from + 1;
    std::vector<ReportRow> rows(count);
    const unsigned workers = std::max(1u, std::min(row_threads, count));
    if (workers <= 1) {
        for (unsigned i = 0; i < count; ++i) rows[i] = analyze_boroczky(n_from + i, opts);
    } else {
        std::atomic<unsigned> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(count);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                while (true) {
                    const unsigned i = next.fetch_add(1);
                    if (i >= count) return;
                    try {
                        rows[i] = analyze_boroczky(n_from + i, opts);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    return rows;
}

}  // namespace boro

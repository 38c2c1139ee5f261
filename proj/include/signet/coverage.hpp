#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "signet/basis.hpp"

namespace signet {

/// The per-function sets S_i of adjustable signals at one similarity tolerance:
/// label n is in S_i when fitting signal n by function i gives sigma >= tau_s.
/// A signal adjustable by several functions appears in each of their sets.
struct AdjustableSets {
    double tau_s = 0.2;
    double tau_d = 0.0;  // = -ln(tau_s) / alpha
    double alpha = 10.0;
    std::uint64_t total_signals = 0;

    std::vector<std::vector<std::uint64_t>> labels;  // per function, ascending
    std::vector<std::vector<FitOutcome>> outcomes;   // aligned with labels

    /// N_a: sum of set cardinalities, counting multiply-adjustable signals once
    /// per function that fits them.
    std::uint64_t adjustable_total() const;
};

/// Scans the full signal space and gates each (signal, function) fit at tau_s.
/// Parallelizes over label ranges; partial sets are concatenated in ascending
/// label order, so the result does not depend on the thread count.
AdjustableSets compute_adjustable(const FitEngine& engine, double tau_s, unsigned threads = 1);

/// r_i = |S_i| / N_a. Throws std::domain_error when no signal is adjustable.
std::vector<double> relative_coverage(const AdjustableSets& sets);

/// q_i = |S_i| / N_T.
std::vector<double> coverage_index(const AdjustableSets& sets);

/// Labels adjustable by function i and by no other function; pairwise disjoint.
std::vector<std::vector<std::uint64_t>> unique_sets(const AdjustableSets& sets);

struct CoverageReport {
    double tau_s = 0.0;
    double tau_d = 0.0;
    std::uint64_t total_signals = 0;
    std::uint64_t adjustable_total = 0;
    bool unique_assignment = false;
    struct Row {
        std::string function;
        std::uint64_t set_size = 0;
        double relative_coverage = 0.0;  // NaN when adjustable_total == 0
        double coverage_index = 0.0;
    };
    std::vector<Row> rows;
};

/// Builds the report rows from the sets; with unique_assignment the sizes come
/// from unique_sets() and N_a is their total.
CoverageReport make_coverage_report(const AdjustableSets& sets, const FitEngine& engine,
                                    bool unique_assignment = false);

/// One report per tolerance. Fits every signal exactly once (deltas do not
/// depend on tau), caches the per-(signal, function) deltas, and thresholds the
/// cache per tolerance value.
std::vector<CoverageReport> coverage_sweep(const FitEngine& engine,
                                           std::span<const double> tau_values,
                                           unsigned threads = 1,
                                           bool unique_assignment = false);

/// CSV with header tau_s,tau_d,function,set_size,relative_coverage,coverage_index
/// and one row per function per report. The relative_coverage field is empty
/// when nothing was adjustable at that tolerance.
void write_coverage_csv(std::ostream& out, std::span<const CoverageReport> reports);

}  // namespace signet

#include "signet/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "signet/parallel.hpp"

namespace signet {

namespace {

void check_tau(double tau_s) {
    if (!(tau_s > 0.0) || tau_s > 1.0) {
        throw std::invalid_argument("tau_s must lie in (0, 1], got " + std::to_string(tau_s));
    }
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::uint64_t AdjustableSets::adjustable_total() const {
    std::uint64_t n = 0;
    for (const auto& s : labels) n += s.size();
    return n;
}

AdjustableSets compute_adjustable(const FitEngine& engine, double tau_s, unsigned threads) {
    check_tau(tau_s);
    const GridSpec& grid = engine.grid();
    const std::size_t nfun = engine.function_count();
    const std::uint64_t total = grid.total_signals();

    struct Partial {
        std::vector<std::vector<std::uint64_t>> labels;
        std::vector<std::vector<FitOutcome>> outcomes;
    };
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        Partial part;
        part.labels.resize(nfun);
        part.outcomes.resize(nfun);
        for (const DiscreteSignal& s : SignalRange(grid, lo, hi)) {
            for (std::size_t i = 0; i < nfun; ++i) {
                FitOutcome outcome = engine.fit(s.values, i);
                if (outcome.sigma >= tau_s) {
                    part.labels[i].push_back(s.label);
                    part.outcomes[i].push_back(std::move(outcome));
                }
            }
        }
        return part;
    };
    std::vector<Partial> parts = map_label_chunks<Partial>(total, threads, scan);

    AdjustableSets sets;
    sets.tau_s = tau_s;
    sets.tau_d = -std::log(tau_s) / engine.alpha();
    sets.alpha = engine.alpha();
    sets.total_signals = total;
    sets.labels.resize(nfun);
    sets.outcomes.resize(nfun);
    for (Partial& part : parts) {
        for (std::size_t i = 0; i < nfun; ++i) {
            sets.labels[i].insert(sets.labels[i].end(), part.labels[i].begin(),
                                  part.labels[i].end());
            sets.outcomes[i].insert(sets.outcomes[i].end(),
                                    std::make_move_iterator(part.outcomes[i].begin()),
                                    std::make_move_iterator(part.outcomes[i].end()));
        }
    }
    return sets;
}

std::vector<double> relative_coverage(const AdjustableSets& sets) {
    const std::uint64_t na = sets.adjustable_total();
    if (na == 0) throw std::domain_error("relative coverage undefined: no adjustable signals");
    std::vector<double> r(sets.labels.size());
    for (std::size_t i = 0; i < sets.labels.size(); ++i) {
        r[i] = static_cast<double>(sets.labels[i].size()) / static_cast<double>(na);
    }
    return r;
}

std::vector<double> coverage_index(const AdjustableSets& sets) {
    std::vector<double> q(sets.labels.size());
    for (std::size_t i = 0; i < sets.labels.size(); ++i) {
        q[i] = static_cast<double>(sets.labels[i].size()) /
               static_cast<double>(sets.total_signals);
    }
    return q;
}

std::vector<std::vector<std::uint64_t>> unique_sets(const AdjustableSets& sets) {
    const std::size_t nfun = sets.labels.size();
    std::vector<std::vector<std::uint64_t>> unique(nfun);
    for (std::size_t i = 0; i < nfun; ++i) {
        // labels in S_i that appear in no other sorted set
        std::vector<std::uint64_t> others;
        for (std::size_t k = 0; k < nfun; ++k) {
            if (k == i) continue;
            std::vector<std::uint64_t> merged;
            merged.reserve(others.size() + sets.labels[k].size());
            std::merge(others.begin(), others.end(), sets.labels[k].begin(),
                       sets.labels[k].end(), std::back_inserter(merged));
            others = std::move(merged);
        }
        others.erase(std::unique(others.begin(), others.end()), others.end());
        std::set_difference(sets.labels[i].begin(), sets.labels[i].end(), others.begin(),
                            others.end(), std::back_inserter(unique[i]));
    }
    return unique;
}

CoverageReport make_coverage_report(const AdjustableSets& sets, const FitEngine& engine,
                                    bool unique_assignment) {
    CoverageReport report;
    report.tau_s = sets.tau_s;
    report.tau_d = sets.tau_d;
    report.total_signals = sets.total_signals;
    report.unique_assignment = unique_assignment;

    std::vector<std::uint64_t> sizes(sets.labels.size());
    if (unique_assignment) {
        const auto uniq = unique_sets(sets);
        for (std::size_t i = 0; i < uniq.size(); ++i) sizes[i] = uniq[i].size();
    } else {
        for (std::size_t i = 0; i < sets.labels.size(); ++i) sizes[i] = sets.labels[i].size();
    }
    std::uint64_t na = 0;
    for (std::uint64_t s : sizes) na += s;
    report.adjustable_total = na;

    for (std::size_t i = 0; i < sizes.size(); ++i) {
        CoverageReport::Row row;
        row.function = engine.function(i).name;
        row.set_size = sizes[i];
        row.relative_coverage = na == 0 ? std::numeric_limits<double>::quiet_NaN()
                                        : static_cast<double>(sizes[i]) / static_cast<double>(na);
        row.coverage_index =
            static_cast<double>(sizes[i]) / static_cast<double>(sets.total_signals);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<CoverageReport> coverage_sweep(const FitEngine& engine,
                                           std::span<const double> tau_values, unsigned threads,
                                           bool unique_assignment) {
    for (double tau : tau_values) check_tau(tau);
    const GridSpec& grid = engine.grid();
    const std::size_t nfun = engine.function_count();
    const std::uint64_t total = grid.total_signals();

    // One fitting pass; deltas are tolerance independent.
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<double> deltas;
        deltas.reserve(static_cast<std::size_t>(hi - lo) * nfun);
        for (const DiscreteSignal& s : SignalRange(grid, lo, hi)) {
            for (std::size_t i = 0; i < nfun; ++i) {
                deltas.push_back(engine.fit_delta(s.values, i));
            }
        }
        return deltas;
    };
    std::vector<std::vector<double>> parts =
        map_label_chunks<std::vector<double>>(total, threads, scan);
    std::vector<double> deltas;  // signal-major: deltas[n * nfun + i]
    deltas.reserve(static_cast<std::size_t>(total) * nfun);
    for (auto& part : parts) deltas.insert(deltas.end(), part.begin(), part.end());

    std::vector<CoverageReport> reports;
    reports.reserve(tau_values.size());
    for (double tau_s : tau_values) {
        const double tau_d = -std::log(tau_s) / engine.alpha();
        std::vector<std::uint64_t> sizes(nfun, 0);
        for (std::uint64_t n = 0; n < total; ++n) {
            const double* row = &deltas[static_cast<std::size_t>(n) * nfun];
            std::size_t passing = 0;
            std::size_t last = 0;
            for (std::size_t i = 0; i < nfun; ++i) {
                if (similarity(row[i], engine.alpha()) >= tau_s) {
                    ++passing;
                    last = i;
                    if (!unique_assignment) ++sizes[i];
                }
            }
            if (unique_assignment && passing == 1) ++sizes[last];
        }
        CoverageReport report;
        report.tau_s = tau_s;
        report.tau_d = tau_d;
        report.total_signals = total;
        report.unique_assignment = unique_assignment;
        std::uint64_t na = 0;
        for (std::uint64_t s : sizes) na += s;
        report.adjustable_total = na;
        for (std::size_t i = 0; i < nfun; ++i) {
            CoverageReport::Row row;
            row.function = engine.function(i).name;
            row.set_size = sizes[i];
            row.relative_coverage = na == 0
                                        ? std::numeric_limits<double>::quiet_NaN()
                                        : static_cast<double>(sizes[i]) / static_cast<double>(na);
            row.coverage_index =
                static_cast<double>(sizes[i]) / static_cast<double>(total);
            report.rows.push_back(std::move(row));
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

void write_coverage_csv(std::ostream& out, std::span<const CoverageReport> reports) {
    out << "tau_s,tau_d,function,set_size,relative_coverage,coverage_index\n";
    for (const CoverageReport& report : reports) {
        for (const auto& row : report.rows) {
            out << format_double(report.tau_s) << ',' << format_double(report.tau_d) << ','
                << row.function << ',' << row.set_size << ',';
            if (!std::isnan(row.relative_coverage)) out << format_double(row.relative_coverage);
            out << ',' << format_double(row.coverage_index) << '\n';
        }
    }
}

}  // namespace signet

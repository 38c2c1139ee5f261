#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "signet/grid.hpp"

namespace signet {

enum class TermKind { Constant, Power, Sine, Cosine };

/// One column of a reference function's design matrix: 1, x^p, sin(wx) or cos(wx).
struct BasisTerm {
    TermKind kind = TermKind::Constant;
    int exponent = 0;   // Power only; must be >= 0
    double omega = 0.0; // Sine/Cosine only

    static BasisTerm constant() { return {TermKind::Constant, 0, 0.0}; }
    static BasisTerm power(int exponent) { return {TermKind::Power, exponent, 0.0}; }
    static BasisTerm sine(double omega) { return {TermKind::Sine, 0, omega}; }
    static BasisTerm cosine(double omega) { return {TermKind::Cosine, 0, omega}; }

    double evaluate(double x) const;
    std::string to_string() const;  // "1", "x^3", "sin(3x)", ...

    bool operator==(const BasisTerm&) const = default;
};

/// A named linear combination of basis terms with free coefficients.
/// Convention: when a constant term is present it is listed first, so that
/// coefficient 0 is the function's offset a_0.
struct ReferenceFunctionSpec {
    std::string name;
    std::vector<BasisTerm> terms;

    /// Rejects empty/duplicated term lists and term counts above n_x
    /// (the normal system would be underdetermined).
    void validate(const GridSpec& g) const;

    double evaluate(std::span<const double> coefficients, double x) const;
};

/// Result of fitting one signal against one reference function.
struct FitOutcome {
    std::uint32_t function_index = 0;
    std::vector<double> coefficients;  // aligned with the function's term list
    double delta = 0.0;                // range-normalized RMS error
    double sigma = 1.0;                // exp(-alpha * delta)
};

/// Deltas below this are reported as exactly 0: the signal is treated as exactly
/// representable, so sigma is exactly 1 and survives a tau_s = 1 gate. Plain QR
/// roundoff otherwise leaves residuals around 1e-16 on representable signals.
inline constexpr double kExactFitTolerance = 1e-12;

/// Root mean square difference between two sample vectors, normalized by the
/// x-extent of the region: sqrt( sum_j (f_j - h_j)^2 / (x_max - x_min) ).
/// Note the normalization is the x-range, not the sample count.
double rms_difference(std::span<const double> f, std::span<const double> h, const GridSpec& g);

/// Similarity sigma = exp(-alpha * delta); 1 at delta = 0, decreasing in delta.
double similarity(double delta, double alpha);

/// Precomputed least-squares solvers for a set of reference functions on a grid.
///
/// Each function's design matrix (term values at the abscissae) is built once
/// and factorized by a column-pivoting Householder QR; fitting a signal is then
/// a single triangular solve. Immutable after construction and safe to share
/// across threads.
class FitEngine {
public:
    /// Throws ConfigError when alpha <= 0, a spec fails validation, or a design
    /// matrix is rank deficient (the offending function is named).
    FitEngine(std::vector<ReferenceFunctionSpec> functions, const GridSpec& grid,
              double alpha = 10.0);
    ~FitEngine();

    FitEngine(FitEngine&&) noexcept;
    FitEngine& operator=(FitEngine&&) noexcept;
    FitEngine(const FitEngine&) = delete;
    FitEngine& operator=(const FitEngine&) = delete;

    std::size_t function_count() const { return functions_.size(); }
    const ReferenceFunctionSpec& function(std::size_t i) const { return functions_[i]; }
    const std::vector<ReferenceFunctionSpec>& functions() const { return functions_; }
    const GridSpec& grid() const { return grid_; }
    double alpha() const { return alpha_; }

    /// Least-squares fit of a signal (n_x samples) against function i.
    FitOutcome fit(std::span<const double> values, std::size_t function_index) const;
    FitOutcome fit(const DiscreteSignal& s, std::size_t function_index) const {
        return fit(std::span<const double>(s.values), function_index);
    }

    /// Delta only, skipping coefficient extraction; used by full-space scans.
    double fit_delta(std::span<const double> values, std::size_t function_index) const;

    std::vector<FitOutcome> fit_all(std::span<const double> values) const;
    std::vector<FitOutcome> fit_all(const DiscreteSignal& s) const {
        return fit_all(std::span<const double>(s.values));
    }

    /// Stable identifier of the function set (name + terms), for run manifests.
    std::string fingerprint() const;

private:
    struct Solver;

    GridSpec grid_;
    double alpha_ = 10.0;
    std::vector<ReferenceFunctionSpec> functions_;
    std::vector<std::unique_ptr<Solver>> solvers_;
};

}  // namespace signet

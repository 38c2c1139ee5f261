#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace signet {

/// Thrown for invalid configurations (grid sizes, function specs, config files).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rectangular region [x_min,x_max] x [y_min,y_max] sampled on an n_x x n_y lattice.
///
/// Abscissa j (0-based) sits at x_min + j*dx(); level k at y_min + k*dy().
/// A discrete signal picks one of the n_y levels at each of the n_x abscissae,
/// so there are n_y^n_x signals in total, addressed by labels 0..n_y^n_x-1.
struct GridSpec {
    double x_min = -1.0;
    double x_max = 1.0;
    double y_min = -1.0;
    double y_max = 1.0;
    std::uint32_t n_x = 5;
    std::uint32_t n_y = 5;

    double dx() const { return (x_max - x_min) / (n_x - 1); }
    double dy() const { return (y_max - y_min) / (n_y - 1); }
    double abscissa(std::uint32_t j) const { return x_min + j * dx(); }
    double level(std::uint32_t k) const { return y_min + k * dy(); }
    std::vector<double> abscissae() const;
    std::vector<double> levels() const;

    /// n_y^n_x. Throws ConfigError if the count overflows std::uint64_t.
    std::uint64_t total_signals() const;

    /// Checks bounds ordering, minimum sizes and that total_signals() is representable.
    void validate() const;

    /// True when negating every ordinate maps the lattice onto itself
    /// (y_min == -y_max and n_y odd, so 0 is a level).
    bool symmetric_levels() const;

    bool operator==(const GridSpec&) const = default;
};

/// One ordinate vector together with its canonical label.
struct DiscreteSignal {
    std::uint64_t label = 0;
    std::vector<double> values;
};

/// Absolute tolerance when matching an ordinate to a lattice level.
inline constexpr double kLevelTolerance = 1e-9;

/// Decodes a label into its signal: the label is written in radix n_y with n_x
/// digits, and digit i (least significant first) selects the level of sample i.
/// Throws std::out_of_range for labels >= total_signals().
DiscreteSignal label_to_signal(std::uint64_t label, const GridSpec& g);

/// Inverse of label_to_signal. Throws std::invalid_argument when the vector has
/// the wrong length or holds a value off the lattice (beyond kLevelTolerance).
std::uint64_t signal_to_label(std::span<const double> values, const GridSpec& g);

inline std::uint64_t signal_to_label(const DiscreteSignal& s, const GridSpec& g) {
    return signal_to_label(std::span<const double>(s.values), g);
}

/// Label of the ordinate-negated signal (digit-wise complement). Only meaningful
/// on grids with symmetric_levels(); the codec itself works for any grid.
std::uint64_t negate_label(std::uint64_t label, const GridSpec& g);

/// Iterates the signals with labels in [lo, hi), in ascending label order.
///
/// Incrementing reuses the digit vector (odometer carry) instead of re-decoding,
/// and disjoint ranges partition the signal space, which makes this the natural
/// seam for splitting enumeration across threads.
class SignalRange {
public:
    SignalRange(const GridSpec& grid, std::uint64_t lo, std::uint64_t hi);

    static SignalRange full(const GridSpec& grid);

    class iterator {
    public:
        using value_type = DiscreteSignal;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(const GridSpec& grid, std::uint64_t label);

        const DiscreteSignal& operator*() const { return signal_; }
        const DiscreteSignal* operator->() const { return &signal_; }
        iterator& operator++();

        friend bool operator==(const iterator& a, const iterator& b) {
            return a.signal_.label == b.signal_.label;
        }

    private:
        GridSpec grid_;
        std::vector<std::uint32_t> digits_;
        DiscreteSignal signal_;
    };

    iterator begin() const { return iterator(grid_, lo_); }
    iterator end() const { return iterator(grid_, hi_); }
    std::uint64_t size() const { return hi_ - lo_; }

private:
    GridSpec grid_;
    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = 0;
};

}  // namespace signet

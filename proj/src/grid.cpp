#include "signet/grid.hpp"

#include <cmath>
#include <limits>

namespace signet {

std::vector<double> GridSpec::abscissae() const {
    std::vector<double> xs(n_x);
    for (std::uint32_t j = 0; j < n_x; ++j) xs[j] = abscissa(j);
    return xs;
}

std::vector<double> GridSpec::levels() const {
    std::vector<double> ys(n_y);
    for (std::uint32_t k = 0; k < n_y; ++k) ys[k] = level(k);
    return ys;
}

std::uint64_t GridSpec::total_signals() const {
    std::uint64_t total = 1;
    const std::uint64_t base = n_y;
    for (std::uint32_t i = 0; i < n_x; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / base) {
            throw ConfigError("grid: signal count n_y^n_x overflows 64-bit range (n_x=" +
                              std::to_string(n_x) + ", n_y=" + std::to_string(n_y) + ")");
        }
        total *= base;
    }
    return total;
}

void GridSpec::validate() const {
    if (!(x_min < x_max)) throw ConfigError("grid: x_min must be < x_max");
    if (!(y_min < y_max)) throw ConfigError("grid: y_min must be < y_max");
    if (n_x < 2) throw ConfigError("grid: n_x must be >= 2");
    if (n_y < 2) throw ConfigError("grid: n_y must be >= 2");
    total_signals();  // throws when not representable
}

bool GridSpec::symmetric_levels() const {
    return n_y % 2 == 1 && std::abs(y_min + y_max) <= kLevelTolerance;
}

DiscreteSignal label_to_signal(std::uint64_t label, const GridSpec& g) {
    const std::uint64_t total = g.total_signals();
    if (label >= total) {
        throw std::out_of_range("label " + std::to_string(label) + " out of range [0, " +
                                std::to_string(total) + ")");
    }
    DiscreteSignal s;
    s.label = label;
    s.values.resize(g.n_x);
    std::uint64_t rest = label;
    for (std::uint32_t i = 0; i < g.n_x; ++i) {
        s.values[i] = g.level(static_cast<std::uint32_t>(rest % g.n_y));
        rest /= g.n_y;
    }
    return s;
}

namespace {

std::uint32_t level_index(double v, const GridSpec& g) {
    const double t = (v - g.y_min) / g.dy();
    const double rounded = std::round(t);
    if (rounded < 0 || rounded >= g.n_y ||
        std::abs(v - g.level(static_cast<std::uint32_t>(rounded))) > kLevelTolerance) {
        throw std::invalid_argument("value " + std::to_string(v) + " is not on a grid level");
    }
    return static_cast<std::uint32_t>(rounded);
}

}  // namespace

std::uint64_t signal_to_label(std::span<const double> values, const GridSpec& g) {
    if (values.size() != g.n_x) {
        throw std::invalid_argument("signal has " + std::to_string(values.size()) +
                                    " samples, expected " + std::to_string(g.n_x));
    }
    std::uint64_t label = 0;
    std::uint64_t weight = 1;
    for (std::uint32_t i = 0; i < g.n_x; ++i) {
        label += weight * level_index(values[i], g);
        weight *= g.n_y;
    }
    return label;
}

std::uint64_t negate_label(std::uint64_t label, const GridSpec& g) {
    const std::uint64_t total = g.total_signals();
    if (label >= total) {
        throw std::out_of_range("label " + std::to_string(label) + " out of range [0, " +
                                std::to_string(total) + ")");
    }
    std::uint64_t out = 0;
    std::uint64_t weight = 1;
    for (std::uint32_t i = 0; i < g.n_x; ++i) {
        const std::uint64_t digit = label % g.n_y;
        out += weight * (g.n_y - 1 - digit);
        label /= g.n_y;
        weight *= g.n_y;
    }
    return out;
}

SignalRange::SignalRange(const GridSpec& grid, std::uint64_t lo, std::uint64_t hi)
    : grid_(grid), lo_(lo), hi_(hi) {
    const std::uint64_t total = grid.total_signals();
    if (lo > hi || hi > total) {
        throw std::out_of_range("signal range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                ") not within [0, " + std::to_string(total) + ")");
    }
}

SignalRange SignalRange::full(const GridSpec& grid) {
    return SignalRange(grid, 0, grid.total_signals());
}

SignalRange::iterator::iterator(const GridSpec& grid, std::uint64_t label) : grid_(grid) {
    signal_.label = label;
    if (label < grid.total_signals()) {
        DiscreteSignal decoded = label_to_signal(label, grid);
        signal_.values = std::move(decoded.values);
        digits_.resize(grid.n_x);
        std::uint64_t rest = label;
        for (std::uint32_t i = 0; i < grid.n_x; ++i) {
            digits_[i] = static_cast<std::uint32_t>(rest % grid.n_y);
            rest /= grid.n_y;
        }
    }
}

SignalRange::iterator& SignalRange::iterator::operator++() {
    ++signal_.label;
    for (std::uint32_t i = 0; i < grid_.n_x; ++i) {
        if (digits_[i] + 1 < grid_.n_y) {
            ++digits_[i];
            signal_.values[i] = grid_.level(digits_[i]);
            return *this;
        }
        digits_[i] = 0;
        signal_.values[i] = grid_.y_min;
    }
    // past the last label; values are irrelevant for the end sentinel
    return *this;
}

}  // namespace signet

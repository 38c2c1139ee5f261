#include "signet/basis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "signet/hash.hpp"

namespace signet {

double BasisTerm::evaluate(double x) const {
    switch (kind) {
        case TermKind::Constant: return 1.0;
        case TermKind::Power: return std::pow(x, exponent);
        case TermKind::Sine: return std::sin(omega * x);
        case TermKind::Cosine: return std::cos(omega * x);
    }
    return 0.0;
}

std::string BasisTerm::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case TermKind::Constant: out << "1"; break;
        case TermKind::Power: out << (exponent == 1 ? "x" : "x^" + std::to_string(exponent)); break;
        case TermKind::Sine: out << "sin(" << omega << "x)"; break;
        case TermKind::Cosine: out << "cos(" << omega << "x)"; break;
    }
    return out.str();
}

void ReferenceFunctionSpec::validate(const GridSpec& g) const {
    const std::string where = "function '" + name + "': ";
    if (terms.empty()) throw ConfigError(where + "needs at least one basis term");
    if (terms.size() > g.n_x) {
        throw ConfigError(where + std::to_string(terms.size()) + " terms exceed the " +
                          std::to_string(g.n_x) + " abscissae (underdetermined fit)");
    }
    for (const BasisTerm& t : terms) {
        if (t.kind == TermKind::Power && t.exponent < 0) {
            throw ConfigError(where + "power exponent must be >= 0");
        }
    }
    for (std::size_t a = 0; a < terms.size(); ++a) {
        for (std::size_t b = a + 1; b < terms.size(); ++b) {
            if (terms[a] == terms[b]) {
                throw ConfigError(where + "duplicate term " + terms[a].to_string());
            }
        }
    }
}

double ReferenceFunctionSpec::evaluate(std::span<const double> coefficients, double x) const {
    double y = 0.0;
    for (std::size_t k = 0; k < terms.size(); ++k) y += coefficients[k] * terms[k].evaluate(x);
    return y;
}

double rms_difference(std::span<const double> f, std::span<const double> h, const GridSpec& g) {
    if (f.size() != h.size() || f.size() != g.n_x) {
        throw std::invalid_argument("rms_difference: expected two vectors of length " +
                                    std::to_string(g.n_x));
    }
    double ss = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double d = f[j] - h[j];
        ss += d * d;
    }
    return std::sqrt(ss / (g.x_max - g.x_min));
}

double similarity(double delta, double alpha) { return std::exp(-alpha * delta); }

struct FitEngine::Solver {
    Eigen::MatrixXd design;  // n_x rows, one column per term
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
};

FitEngine::FitEngine(std::vector<ReferenceFunctionSpec> functions, const GridSpec& grid,
                     double alpha)
    : grid_(grid), alpha_(alpha), functions_(std::move(functions)) {
    grid_.validate();
    if (!(alpha_ > 0.0)) throw ConfigError("alpha must be > 0");
    if (functions_.empty()) throw ConfigError("at least one reference function is required");

    const std::vector<double> xs = grid_.abscissae();
    solvers_.reserve(functions_.size());
    for (const ReferenceFunctionSpec& spec : functions_) {
        spec.validate(grid_);
        auto solver = std::make_unique<Solver>();
        solver->design.resize(grid_.n_x, spec.terms.size());
        for (std::uint32_t j = 0; j < grid_.n_x; ++j) {
            for (std::size_t k = 0; k < spec.terms.size(); ++k) {
                solver->design(j, k) = spec.terms[k].evaluate(xs[j]);
            }
        }
        solver->qr.compute(solver->design);
        if (solver->qr.rank() < static_cast<Eigen::Index>(spec.terms.size())) {
            throw ConfigError("function '" + spec.name +
                              "': design matrix is rank deficient on this grid");
        }
        solvers_.push_back(std::move(solver));
    }
}

FitEngine::~FitEngine() = default;
FitEngine::FitEngine(FitEngine&&) noexcept = default;
FitEngine& FitEngine::operator=(FitEngine&&) noexcept = default;

FitOutcome FitEngine::fit(std::span<const double> values, std::size_t function_index) const {
    const Solver& solver = *solvers_[function_index];
    if (values.size() != grid_.n_x) {
        throw std::invalid_argument("fit: signal has " + std::to_string(values.size()) +
                                    " samples, expected " + std::to_string(grid_.n_x));
    }
    Eigen::Map<const Eigen::VectorXd> f(values.data(), values.size());
    Eigen::VectorXd p = solver.qr.solve(f);
    Eigen::VectorXd residual = f - solver.design * p;

    FitOutcome outcome;
    outcome.function_index = static_cast<std::uint32_t>(function_index);
    outcome.coefficients.assign(p.data(), p.data() + p.size());
    outcome.delta = std::sqrt(residual.squaredNorm() / (grid_.x_max - grid_.x_min));
    if (outcome.delta < kExactFitTolerance) outcome.delta = 0.0;
    outcome.sigma = similarity(outcome.delta, alpha_);
    return outcome;
}

double FitEngine::fit_delta(std::span<const double> values, std::size_t function_index) const {
    const Solver& solver = *solvers_[function_index];
    Eigen::Map<const Eigen::VectorXd> f(values.data(), values.size());
    Eigen::VectorXd p = solver.qr.solve(f);
    const double ss = (f - solver.design * p).squaredNorm();
    double delta = std::sqrt(ss / (grid_.x_max - grid_.x_min));
    return delta < kExactFitTolerance ? 0.0 : delta;
}

std::vector<FitOutcome> FitEngine::fit_all(std::span<const double> values) const {
    std::vector<FitOutcome> outcomes;
    outcomes.reserve(functions_.size());
    for (std::size_t i = 0; i < functions_.size(); ++i) outcomes.push_back(fit(values, i));
    return outcomes;
}

std::string FitEngine::fingerprint() const {
    std::ostringstream canon;
    for (const ReferenceFunctionSpec& spec : functions_) {
        canon << spec.name << '=';
        for (const BasisTerm& t : spec.terms) {
            canon << static_cast<int>(t.kind) << ':' << t.exponent << ':' << t.omega << ',';
        }
        canon << ';';
    }
    return to_hex(fnv1a64(canon.str()));
}

}  // namespace signet

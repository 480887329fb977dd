#include "squeeze/fock_oracle.hpp"

#include "squeeze/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sqz {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kRescaleAbove = 1e150;

double scaled(double value, double log_scale)
{
    if (value == 0.0)
        return 0.0;
    return std::copysign(std::exp(std::log(std::abs(value)) + log_scale), value);
}

// Runs the recursion on psi_n(x) exp(x^2 / 2), which starts at pi^{-1/4}.
// Whenever the running values get large they are divided down and the
// exponent is remembered; the Gaussian factor is applied per term at the end.
template <class Sink>
void hermite_sweep(std::size_t n_max, double x, Sink&& sink)
{
    const double quarter_pi = std::pow(std::numbers::pi, -0.25);
    double log_scale = -0.5 * x * x;
    double prev = 0.0;
    double cur = quarter_pi;
    sink(0, scaled(cur, log_scale));
    for (std::size_t n = 0; n < n_max; ++n) {
        const double next = std::sqrt(2.0 / double(n + 1)) * x * cur - std::sqrt(double(n) / double(n + 1)) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescaleAbove) {
            prev /= kRescaleAbove;
            cur /= kRescaleAbove;
            log_scale += std::log(kRescaleAbove);
        }
        sink(n + 1, scaled(cur, log_scale));
    }
}

} // namespace

double FockExpansion::norm_squared() const noexcept
{
    double sum = 0.0;
    for (const cplx& b : coeffs)
        sum += std::norm(b);
    return sum;
}

double FockExpansion::tail_mass(std::size_t window) const noexcept
{
    const std::size_t first = coeffs.size() > window ? coeffs.size() - window : 0;
    double sum = 0.0;
    for (std::size_t n = first; n < coeffs.size(); ++n)
        sum += std::norm(coeffs[n]);
    return sum;
}

double hermite_function(std::size_t n, double x)
{
    double value = 0.0;
    hermite_sweep(n, x, [&](std::size_t k, double v) {
        if (k == n)
            value = v;
    });
    return value;
}

std::vector<double> hermite_functions(std::size_t n_max, double x)
{
    std::vector<double> out(n_max + 1);
    hermite_sweep(n_max, x, [&](std::size_t k, double v) { out[k] = v; });
    return out;
}

FockBasis::FockBasis(const Grid& grid, std::size_t n_max)
    : grid_(grid), n_max_(n_max), table_((n_max + 1) * grid.points)
{
    for (std::size_t i = 0; i < grid.points; ++i)
        hermite_sweep(n_max, grid.x(i), [&](std::size_t n, double v) { table_[n * grid.points + i] = v; });
}

FockExpansion project(const GridFunction& psi, const FockBasis& basis)
{
    const Grid& grid = basis.grid();
    if (psi.grid.points != grid.points || psi.grid.x_min != grid.x_min || psi.grid.x_max != grid.x_max)
        throw GridError("state and Fock basis are sampled on different grids");

    double peak = 0.0;
    for (const cplx& v : psi.values)
        peak = std::max(peak, std::abs(v));
    const double edge = std::max(std::abs(psi.values.front()), std::abs(psi.values.back()));
    if (!(peak > 0.0) || edge > kBoundaryDecayLimit * peak) {
        std::ostringstream msg;
        msg << "state has not decayed at the grid edges: |psi(edge)| / max|psi| = " << edge / peak;
        throw BoundaryDecayError(msg.str());
    }

    FockExpansion e;
    e.coeffs.resize(basis.n_max() + 1);
    std::vector<cplx> integrand(grid.points);
    for (std::size_t n = 0; n <= basis.n_max(); ++n) {
        const auto row = basis.row(n);
        for (std::size_t i = 0; i < grid.points; ++i)
            integrand[i] = row[i] * psi.values[i];
        e.coeffs[n] = trapezoid(grid, integrand);
    }

    const double norm = std::sqrt(e.norm_squared());
    for (cplx& b : e.coeffs)
        b /= norm;

    const double tail = e.tail_mass();
    if (!(tail < kTailMassLimit)) {
        std::ostringstream msg;
        msg << "Fock truncation at n_max = " << e.n_max() << " is inadequate: levels above "
            << (e.n_max() >= kTailWindow ? e.n_max() - kTailWindow : 0) << " hold weight " << tail
            << " (limit " << kTailMassLimit << ")";
        throw TruncationError(msg.str(), tail);
    }
    return e;
}

FockExpansion project(const GridFunction& psi, std::size_t n_max)
{
    return project(psi, FockBasis(psi.grid, n_max));
}

FockExpansion evolve_fock(const FockExpansion& e, double t)
{
    FockExpansion out = e;
    for (std::size_t n = 0; n < out.coeffs.size(); ++n)
        out.coeffs[n] *= std::polar(1.0, -(double(n) + 0.5) * t);
    return out;
}

GridFunction reconstruct(const FockExpansion& e, const FockBasis& basis)
{
    if (e.n_max() > basis.n_max())
        throw GridError("Fock basis is shorter than the expansion");
    GridFunction out(basis.grid());
    // Accumulate level by level, n ascending, at every grid point.
    for (std::size_t n = 0; n < e.coeffs.size(); ++n) {
        const cplx b = e.coeffs[n];
        const auto row = basis.row(n);
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += b * row[i];
    }
    return out;
}

GridFunction reconstruct(const FockExpansion& e, const Grid& grid)
{
    return reconstruct(e, FockBasis(grid, e.n_max()));
}

cplx vacuum_overlap(cplx squeeze, cplx displacement)
{
    if (!(squeeze.real() > 0.0)) {
        std::ostringstream msg;
        msg << "vacuum overlap needs Re(S) > 0, got S = " << squeeze;
        throw NonNormalizableError(msg.str());
    }
    // Re(1 + S) > 1, so the principal square root is the continuation of the real integral.
    const cplx one_plus = 1.0 + squeeze;
    return std::pow(std::numbers::pi, -0.25) * std::sqrt(2.0 * std::numbers::pi / one_plus) *
           std::exp(-squeeze * displacement * displacement / (2.0 * one_plus));
}

namespace {

cplx phase_factor(const OperatorCoeffs& c, const SqueezeDisplacement& initial, double t)
{
    const SqueezeDisplacement back = evolved_params(c, t);
    return std::polar(1.0, -0.5 * t) * vacuum_overlap(initial.squeeze, initial.displacement) /
           vacuum_overlap(back.squeeze, back.displacement);
}

} // namespace

double phase_delta(const OperatorCoeffs& c, double t)
{
    const SqueezeDisplacement initial = params_from_coeffs(c);
    const double step = 2.0 * std::numbers::pi / kPhaseSamplesPerPeriod;
    const auto steps = static_cast<long>(std::ceil(std::abs(t) / step));
    double delta = 0.0;
    double previous = 0.0;
    for (long k = 1; k <= steps; ++k) {
        const double tk = t * double(k) / double(steps);
        const double wrapped = std::arg(phase_factor(c, initial, tk));
        double jump = wrapped - previous;
        jump -= 2.0 * std::numbers::pi * std::nearbyint(jump / (2.0 * std::numbers::pi));
        delta += jump;
        previous = wrapped;
    }
    return delta;
}

GridFunction schrodinger_from_heisenberg(const OperatorCoeffs& c, double t, const Grid& grid)
{
    const SqueezeDisplacement initial = params_from_coeffs(c);
    const GridFunction phi0 = eigenstate_grid(c, 0.0, grid);
    GridFunction psi = eigenstate_grid(c, -t, grid);
    const cplx factor = phase_factor(c, initial, t) / std::sqrt(norm_squared(phi0));
    for (cplx& v : psi.values)
        v *= factor;
    return psi;
}

} // namespace sqz

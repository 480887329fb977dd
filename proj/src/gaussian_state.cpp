#include "squeeze/gaussian_state.hpp"

#include "squeeze/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sqz {

namespace {

constexpr cplx kI{0.0, 1.0};

} // namespace

SqueezedDisplacedState::SqueezedDisplacedState(cplx s0, cplx d0) : s0_(s0), d0_(d0)
{
    if (!(s0.real() > 0.0) || !std::isfinite(s0.imag()) || !std::isfinite(d0.real()) ||
        !std::isfinite(d0.imag())) {
        std::ostringstream msg;
        msg << "squeeze parameter S0 = " << s0 << " must have a positive real part"
            << " (and D0 = " << d0 << " must be finite)";
        throw NonNormalizableError(msg.str());
    }
}

cplx evolve_squeeze(cplx s0, double t)
{
    const double c = std::cos(t), s = std::sin(t);
    return (s0 * c + kI * s) / (c + kI * s0 * s);
}

cplx evolve_displacement(cplx s0, cplx d0, double t)
{
    const double c = std::cos(t), s = std::sin(t);
    return d0 * s0 / (s0 * c + kI * s);
}

double continuous_argument(cplx s0, double t)
{
    // arg(cos t + i s0 sin t) increases at rate Re S(t) > 0 and gains exactly
    // pi per half period. On [-pi/2, pi/2] it stays inside arg(s0) +- pi/2, so
    // the principal value is already continuous there.
    const double k = std::nearbyint(t / std::numbers::pi);
    const double r = t - k * std::numbers::pi;
    const cplx z = std::cos(r) + kI * s0 * std::sin(r);
    return k * std::numbers::pi + std::arg(z);
}

cplx normalization(cplx s0, double t)
{
    const double c = std::cos(t), s = std::sin(t);
    const double modulus = std::abs(c + kI * s0 * s);
    const double theta = continuous_argument(s0, t);
    return std::pow(s0 / std::numbers::pi, 0.25) * std::polar(1.0 / std::sqrt(modulus), -0.5 * theta);
}

double norm_correction(const SqueezedDisplacedState& state)
{
    const cplx s0 = state.s0(), d0 = state.d0();
    const double a = s0.real();
    // integral of |N(0) exp[-S0 (x - D0)^2 / 2]|^2 dx
    const double log_norm = 0.5 * std::log(std::abs(s0) / a) +
                            std::pow((s0 * d0).real(), 2) / a - (s0 * d0 * d0).real();
    return std::exp(-0.5 * log_norm);
}

EvolvedParams evolve(const SqueezedDisplacedState& state, double t)
{
    return EvolvedParams{t, evolve_squeeze(state.s0(), t), evolve_displacement(state.s0(), state.d0(), t),
                         normalization(state.s0(), t)};
}

namespace {

cplx evaluate(const EvolvedParams& p, cplx d0, double correction, double x)
{
    const cplx bracket = x * x - 2.0 * p.displacement * x + p.displacement * d0 * std::cos(p.t);
    return correction * p.normalization * std::exp(-0.5 * p.squeeze * bracket);
}

} // namespace

cplx wavefunction(const SqueezedDisplacedState& state, double t, double x)
{
    return evaluate(evolve(state, t), state.d0(), norm_correction(state), x);
}

GridFunction wavefunction(const SqueezedDisplacedState& state, double t, const Grid& grid)
{
    const EvolvedParams p = evolve(state, t);
    const double correction = norm_correction(state);
    return sample(grid, [&](double x) { return evaluate(p, state.d0(), correction, x); });
}

double global_phase(const SqueezedDisplacedState& state, double t)
{
    // Psi = N exp[-S D (D0 cos t - D) / 2] exp[-S (x - D)^2 / 2]; the prefactor's
    // argument is continuous because N's is.
    auto prefactor_phase = [&](double tau) {
        const EvolvedParams p = evolve(state, tau);
        const cplx shift = -0.5 * p.squeeze * p.displacement * (state.d0() * std::cos(tau) - p.displacement);
        return std::arg(std::pow(state.s0() / std::numbers::pi, 0.25)) -
               0.5 * continuous_argument(state.s0(), tau) + shift.imag();
    };
    return prefactor_phase(t) - prefactor_phase(0.0);
}

double density_width(double s0, double t)
{
    const double c = std::cos(t), s = std::sin(t);
    return s0 / (c * c + s0 * s0 * s * s);
}

double closed_form_density(const SqueezedDisplacedState& state, double t, double x)
{
    if (!state.has_real_parameters())
        throw std::domain_error("closed-form density needs real S0 and D0");
    const double gamma = density_width(state.s0().real(), t);
    const double dx = x - center(state.d0().real(), t);
    return std::sqrt(gamma / std::numbers::pi) * std::exp(-gamma * dx * dx);
}

double probability_density(const SqueezedDisplacedState& state, double t, double x)
{
    if (state.has_real_parameters())
        return closed_form_density(state, t, x);
    return std::norm(wavefunction(state, t, x));
}

double center(double d0, double t) { return d0 * std::cos(t); }

double density_center(const SqueezedDisplacedState& state, double t)
{
    const cplx s = evolve_squeeze(state.s0(), t);
    const cplx d = evolve_displacement(state.s0(), state.d0(), t);
    return (s * d).real() / s.real();
}

} // namespace sqz

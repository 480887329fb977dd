#pragma once

// Closed-form squeezed and displaced oscillator states, hbar = m = omega = 1.
//
// A state is fixed by its t = 0 squeeze S0 and displacement D0,
//
//     Psi(x, 0) ~ exp[-S0 (x - D0)^2 / 2],
//
// and stays Gaussian for all t with
//
//     S(t) = (S0 cos t + i sin t) / (cos t + i S0 sin t)
//     D(t) = D0 S0 / (S0 cos t + i sin t)
//     Psi(x, t) = N(t) exp[-S(t) (x^2 - 2 D(t) x + D(t) D0 cos t) / 2].

#include "squeeze/grid.hpp"

#include <complex>

namespace sqz {

class SqueezedDisplacedState {
public:
    /// Throws NonNormalizableError unless Re(s0) > 0.
    SqueezedDisplacedState(cplx s0, cplx d0);

    cplx s0() const noexcept { return s0_; }
    cplx d0() const noexcept { return d0_; }

    /// True when both S0 and D0 are real, the regime of the closed-form density.
    bool has_real_parameters() const noexcept { return s0_.imag() == 0.0 && d0_.imag() == 0.0; }

private:
    cplx s0_;
    cplx d0_;
};

struct EvolvedParams {
    double t = 0.0;
    cplx squeeze;
    cplx displacement;
    cplx normalization;
};

// The free functions below take Re(s0) > 0 as a precondition; their
// denominators cannot vanish in that half plane.

cplx evolve_squeeze(cplx s0, double t);
cplx evolve_displacement(cplx s0, cplx d0, double t);

/// Argument of cos t + i s0 sin t, continued from 0 at t = 0 without jumps.
double continuous_argument(cplx s0, double t);

/// N(t) = (S0/pi)^{1/4} (cos t + i S0 sin t)^{-1/2}, with the square root
/// following continuous_argument rather than the principal branch.
cplx normalization(cplx s0, double t);

/// Real factor that makes N(t) exp[...] unit-norm for complex S0 or D0. It is
/// independent of t and equals 1 when S0 and D0 are real.
double norm_correction(const SqueezedDisplacedState& state);

EvolvedParams evolve(const SqueezedDisplacedState& state, double t);

cplx wavefunction(const SqueezedDisplacedState& state, double t, double x);
GridFunction wavefunction(const SqueezedDisplacedState& state, double t, const Grid& grid);

/// Continuous global phase of the state relative to the backward-propagated
/// eigenstate exp[-S(t) (x - D(t))^2 / 2]; zero at t = 0.
double global_phase(const SqueezedDisplacedState& state, double t);

/// gamma(t) = S0 / (cos^2 t + S0^2 sin^2 t) for real s0 > 0.
double density_width(double s0, double t);

/// |Psi(x, t)|^2. Uses the closed form (gamma/pi)^{1/2} exp[-gamma (x - D0 cos t)^2]
/// when S0 and D0 are real, |wavefunction|^2 otherwise.
double probability_density(const SqueezedDisplacedState& state, double t, double x);

/// Closed-form density; throws std::domain_error when S0 or D0 is complex.
double closed_form_density(const SqueezedDisplacedState& state, double t, double x);

/// Wavepacket centre D0 cos t for a real displacement.
double center(double d0, double t);

/// Mean position Re(S D) / Re(S) of |Psi|^2, valid for complex parameters too.
double density_center(const SqueezedDisplacedState& state, double t);

} // namespace sqz

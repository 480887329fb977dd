#pragma once

// The Heisenberg-picture operator A(t) = i alpha(t) P + beta(t) X of the unit
// oscillator, with P = -i d/dx, and its Gaussian eigenstates.

#include "squeeze/grid.hpp"

namespace sqz {

/// A = i alpha P + beta X together with the eigenvalue lambda of interest.
struct OperatorCoeffs {
    cplx alpha;
    cplx beta;
    cplx lambda;
};

/// Operator whose eigenstate with eigenvalue lambda = s0 d0 is exp[-s0 (x - d0)^2 / 2].
OperatorCoeffs coeffs_from_params(cplx s0, cplx d0);

/// alpha(t) = alpha cos t - i beta sin t, beta(t) = beta cos t - i alpha sin t.
/// lambda is carried unchanged: eigenvalues of A(t) do not depend on t.
OperatorCoeffs coeffs_at(const OperatorCoeffs& c, double t);

struct SqueezeDisplacement {
    cplx squeeze;
    cplx displacement;
};

/// S = beta / alpha, D = lambda / beta. Throws DegenerateCoefficientsError
/// when alpha or beta is zero.
SqueezeDisplacement params_from_coeffs(const OperatorCoeffs& c);

/// Parameters of the Schroedinger state at time t, read off the eigenstate of
/// the backward-evolved operator A(-t).
SqueezeDisplacement evolved_params(const OperatorCoeffs& c, double t);

/// Unnormalized eigenstate exp[-(beta(t) / 2 alpha(t)) (x - lambda / beta(t))^2]
/// of A(t). Throws NonNormalizableError if Re(beta(t) / alpha(t)) <= 0.
GridFunction eigenstate_grid(const OperatorCoeffs& c, double t, const Grid& grid);

/// (i alpha(t) P + beta(t) X) psi, the derivative taken with fourth-order
/// central differences (one-sided five-point stencils at the two outermost
/// points on each side). Throws GridError for fewer than 5 points.
GridFunction apply_operator(const OperatorCoeffs& c, double t, const GridFunction& psi);

/// ||(A(t) - lambda) Phi(t)|| / ||Phi(t)|| on the grid, leaving out the two
/// boundary points on each side.
double eigen_residual(const OperatorCoeffs& c, double t, const Grid& grid);

/// X(t) = cos_t X + sin_t P, P(t) = cos_t P - sin_t X.
struct HeisenbergRotation {
    double t = 0.0;
    double cos_t = 1.0;
    double sin_t = 0.0;
};

HeisenbergRotation heisenberg_xp(double t);

} // namespace sqz

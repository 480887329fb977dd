#include "squeeze/heisenberg_operator.hpp"

#include "squeeze/errors.hpp"

#include <cmath>
#include <sstream>

namespace sqz {

namespace {

constexpr cplx kI{0.0, 1.0};

} // namespace

OperatorCoeffs coeffs_from_params(cplx s0, cplx d0)
{
    return OperatorCoeffs{1.0, s0, s0 * d0};
}

OperatorCoeffs coeffs_at(const OperatorCoeffs& c, double t)
{
    const double ct = std::cos(t), st = std::sin(t);
    return OperatorCoeffs{c.alpha * ct - kI * c.beta * st, c.beta * ct - kI * c.alpha * st, c.lambda};
}

SqueezeDisplacement params_from_coeffs(const OperatorCoeffs& c)
{
    if (c.alpha == 0.0 || c.beta == 0.0) {
        std::ostringstream msg;
        msg << "cannot form S = beta/alpha, D = lambda/beta with alpha = " << c.alpha << ", beta = " << c.beta;
        throw DegenerateCoefficientsError(msg.str());
    }
    return SqueezeDisplacement{c.beta / c.alpha, c.lambda / c.beta};
}

SqueezeDisplacement evolved_params(const OperatorCoeffs& c, double t)
{
    return params_from_coeffs(coeffs_at(c, -t));
}

GridFunction eigenstate_grid(const OperatorCoeffs& c, double t, const Grid& grid)
{
    const SqueezeDisplacement p = params_from_coeffs(coeffs_at(c, t));
    if (!(p.squeeze.real() > 0.0)) {
        std::ostringstream msg;
        msg << "eigenstate at t = " << t << " has beta/alpha = " << p.squeeze << " with non-positive real part";
        throw NonNormalizableError(msg.str());
    }
    return sample(grid, [&](double x) {
        const cplx dx = x - p.displacement;
        return std::exp(-0.5 * p.squeeze * dx * dx);
    });
}

GridFunction apply_operator(const OperatorCoeffs& c, double t, const GridFunction& psi)
{
    const std::size_t n = psi.values.size();
    if (n < 5 || psi.grid.points != n)
        throw GridError("apply_operator needs at least 5 grid points");

    const OperatorCoeffs ct = coeffs_at(c, t);
    const double h = psi.grid.spacing();
    const auto& f = psi.values;

    std::vector<cplx> df(n);
    for (std::size_t i = 2; i + 2 < n; ++i)
        df[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    df[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
    df[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
    df[n - 2] = -(-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] - 6.0 * f[n - 4] + f[n - 5]) / (12.0 * h);
    df[n - 1] = -(-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] + 16.0 * f[n - 4] - 3.0 * f[n - 5]) / (12.0 * h);

    // i alpha P = i alpha (-i d/dx) = alpha d/dx
    GridFunction out(psi.grid);
    for (std::size_t i = 0; i < n; ++i)
        out.values[i] = ct.alpha * df[i] + ct.beta * psi.grid.x(i) * f[i];
    return out;
}

double eigen_residual(const OperatorCoeffs& c, double t, const Grid& grid)
{
    const GridFunction phi = eigenstate_grid(c, t, grid);
    const GridFunction a_phi = apply_operator(c, t, phi);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 2; i + 2 < grid.points; ++i) {
        num += std::norm(a_phi.values[i] - c.lambda * phi.values[i]);
        den += std::norm(phi.values[i]);
    }
    return std::sqrt(num / den);
}

HeisenbergRotation heisenberg_xp(double t)
{
    return HeisenbergRotation{t, std::cos(t), std::sin(t)};
}

} // namespace sqz

#include "squeeze/grid.hpp"

#include "squeeze/errors.hpp"

#include <cmath>
#include <string>

namespace sqz {

Grid Grid::symmetric(double half_width, std::size_t points)
{
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw GridError("grid half width must be positive, got " + std::to_string(half_width));
    if (points < 2)
        throw GridError("grid needs at least 2 points, got " + std::to_string(points));
    return Grid{-half_width, half_width, points};
}

double Grid::x(std::size_t i) const noexcept
{
    // Interpolate from both ends so that symmetric grids stay exactly symmetric.
    const double n = static_cast<double>(points - 1);
    const double k = static_cast<double>(i);
    return (x_min * (n - k) + x_max * k) / n;
}

double trapezoid(const Grid& grid, std::span<const double> f)
{
    if (f.size() != grid.points)
        throw GridError("sample count does not match grid");
    double sum = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i)
        sum += f[i];
    return sum * grid.spacing();
}

cplx trapezoid(const Grid& grid, std::span<const cplx> f)
{
    if (f.size() != grid.points)
        throw GridError("sample count does not match grid");
    cplx sum = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i)
        sum += f[i];
    return sum * grid.spacing();
}

double norm_squared(const GridFunction& psi)
{
    std::vector<double> density(psi.values.size());
    for (std::size_t i = 0; i < density.size(); ++i)
        density[i] = std::norm(psi.values[i]);
    return trapezoid(psi.grid, density);
}

namespace {

void require_same_grid(const GridFunction& a, const GridFunction& b)
{
    if (a.grid.points != b.grid.points || a.grid.x_min != b.grid.x_min || a.grid.x_max != b.grid.x_max)
        throw GridError("grid functions live on different grids");
}

} // namespace

double l2_distance(const GridFunction& a, const GridFunction& b)
{
    require_same_grid(a, b);
    std::vector<double> diff(a.values.size());
    for (std::size_t i = 0; i < diff.size(); ++i)
        diff[i] = std::norm(a.values[i] - b.values[i]);
    return std::sqrt(trapezoid(a.grid, diff));
}

cplx inner_product(const GridFunction& a, const GridFunction& b)
{
    require_same_grid(a, b);
    std::vector<cplx> prod(a.values.size());
    for (std::size_t i = 0; i < prod.size(); ++i)
        prod[i] = std::conj(a.values[i]) * b.values[i];
    return trapezoid(a.grid, prod);
}

} // namespace sqz

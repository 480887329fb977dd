#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace sqz {

using cplx = std::complex<double>;

inline constexpr double kDefaultHalfWidth = 20.0;
inline constexpr std::size_t kDefaultGridPoints = 4096;

/// Uniform 1-D grid with both end points included.
struct Grid {
    double x_min = -kDefaultHalfWidth;
    double x_max = kDefaultHalfWidth;
    std::size_t points = kDefaultGridPoints;

    /// [-half_width, half_width] with `points` samples; throws GridError
    /// for fewer than two points or a non-positive half width.
    static Grid symmetric(double half_width = kDefaultHalfWidth,
                          std::size_t points = kDefaultGridPoints);

    double spacing() const noexcept { return (x_max - x_min) / static_cast<double>(points - 1); }
    double x(std::size_t i) const noexcept;
};

/// Complex samples of a wavefunction on a Grid.
struct GridFunction {
    Grid grid;
    std::vector<cplx> values;

    GridFunction() = default;
    explicit GridFunction(const Grid& g) : grid(g), values(g.points) {}
};

template <class F>
GridFunction sample(const Grid& grid, F&& f)
{
    GridFunction out(grid);
    for (std::size_t i = 0; i < grid.points; ++i)
        out.values[i] = f(grid.x(i));
    return out;
}

// Trapezoidal quadrature over the whole grid. Summation runs in index order.
double trapezoid(const Grid& grid, std::span<const double> f);
cplx trapezoid(const Grid& grid, std::span<const cplx> f);

double norm_squared(const GridFunction& psi);
/// Trapezoidal L2 distance; throws GridError when the grids differ.
double l2_distance(const GridFunction& a, const GridFunction& b);
/// <a|b> with a conjugated.
cplx inner_product(const GridFunction& a, const GridFunction& b);

} // namespace sqz

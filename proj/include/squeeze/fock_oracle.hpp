#pragma once

// Independent propagation in the oscillator eigenbasis |n>, E_n = n + 1/2.
//
// States are projected onto normalized Hermite functions by trapezoidal
// quadrature, each coefficient picks up exp(-i E_n t), and the sum is
// resampled. This path never touches the closed-form Gaussian formulas and is
// the reference they are checked against.

#include "squeeze/grid.hpp"
#include "squeeze/heisenberg_operator.hpp"

#include <cstddef>
#include <vector>

namespace sqz {

inline constexpr std::size_t kDefaultNMax = 128;
/// Levels n > n_max - kTailWindow must together hold less than kTailMassLimit.
inline constexpr std::size_t kTailWindow = 8;
inline constexpr double kTailMassLimit = 1e-12;
/// Edge samples must be below this fraction of the peak magnitude.
inline constexpr double kBoundaryDecayLimit = 1e-14;

struct FockExpansion {
    std::vector<cplx> coeffs; ///< b_0 .. b_{n_max}

    std::size_t n_max() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    double norm_squared() const noexcept;
    /// Sum of |b_n|^2 over n > n_max - window.
    double tail_mass(std::size_t window = kTailWindow) const noexcept;
};

/// Orthonormal oscillator eigenfunction psi_n(x). Uses the three-term
/// recursion on normalized functions with running rescaling, so it neither
/// overflows nor underflows prematurely for large n or |x|.
double hermite_function(std::size_t n, double x);

/// psi_0(x) .. psi_{n_max}(x) in one recursion sweep.
std::vector<double> hermite_functions(std::size_t n_max, double x);

/// psi_n tabulated on a grid, shared by projection and reconstruction.
class FockBasis {
public:
    FockBasis(const Grid& grid, std::size_t n_max);

    const Grid& grid() const noexcept { return grid_; }
    std::size_t n_max() const noexcept { return n_max_; }
    /// psi_n at every grid point.
    std::span<const double> row(std::size_t n) const noexcept
    {
        return {table_.data() + n * grid_.points, grid_.points};
    }

private:
    Grid grid_;
    std::size_t n_max_;
    std::vector<double> table_; // (n_max + 1) x points, row-major in n
};

/// b_n = integral psi_n(x) psi(x) dx, rescaled so that sum |b_n|^2 = 1.
/// Throws BoundaryDecayError if psi has not decayed at the grid edges and
/// TruncationError if the top kTailWindow levels carry too much weight.
FockExpansion project(const GridFunction& psi, const FockBasis& basis);
FockExpansion project(const GridFunction& psi, std::size_t n_max = kDefaultNMax);

/// b_n -> b_n exp(-i (n + 1/2) t).
FockExpansion evolve_fock(const FockExpansion& e, double t);

/// sum_n b_n psi_n(x) on the basis grid.
GridFunction reconstruct(const FockExpansion& e, const FockBasis& basis);
GridFunction reconstruct(const FockExpansion& e, const Grid& grid);

/// <0|Phi> for the unnormalized Phi = exp[-S (x - D)^2 / 2], in closed form:
/// pi^{-1/4} sqrt(2 pi / (1 + S)) exp[-S D^2 / (2 (1 + S))].
/// Throws NonNormalizableError for Re(S) <= 0.
cplx vacuum_overlap(cplx squeeze, cplx displacement);

/// Phase delta(t) in Psi(t) = exp(i delta(t)) Phi(-t), from
/// exp(i delta) = exp(-i t / 2) <0|Phi(0)> / <0|Phi(-t)>. Unwrapped along a
/// trajectory from 0 sampled at kPhaseSamplesPerPeriod points per 2 pi.
double phase_delta(const OperatorCoeffs& c, double t);

inline constexpr int kPhaseSamplesPerPeriod = 256;

/// Normalized Schroedinger state at time t assembled from the eigenstate of
/// the backward-evolved operator A(-t):
/// Psi(t) = exp(-i t / 2) <0|Phi(0)> / <0|Phi(-t)> Phi(-t) / ||Phi(0)||.
GridFunction schrodinger_from_heisenberg(const OperatorCoeffs& c, double t, const Grid& grid);

} // namespace sqz

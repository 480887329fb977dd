#pragma once

// Real 2x2 unit-determinant maps of (X, P),
//
//     X2 = a X1 + b P1,   P2 = c X1 + d P1,   ad - bc = 1,
//
// their one-parameter generator families and the fractional-linear action they
// induce on squeeze parameters.

#include "squeeze/grid.hpp"

#include <utility>

namespace sqz {

namespace detail {

/// Unevaluated sum hi + lo of two doubles, |lo| <= ulp(hi) / 2.
struct Wide {
    double hi = 0.0;
    double lo = 0.0;

    constexpr Wide() = default;
    constexpr Wide(double v) : hi(v) {} // NOLINT(google-explicit-constructor)
    constexpr Wide(double h, double l) : hi(h), lo(l) {}

    double value() const noexcept { return hi + lo; }
};

Wide operator+(Wide x, Wide y) noexcept;
Wide operator-(Wide x) noexcept;
Wide operator-(Wide x, Wide y) noexcept;
Wide operator*(Wide x, Wide y) noexcept;

} // namespace detail

/// Determinant slack accepted from entries supplied by callers.
inline constexpr double kDeterminantTolerance = 1e-9;

/// Entries are held in double-double precision so that long products keep
/// ad - bc at 1 to well below double rounding of the entries themselves.
class SymplecticMatrix {
public:
    /// Identity.
    SymplecticMatrix() = default;

    /// Throws InvariantViolationError if |ad - bc - 1| > kDeterminantTolerance.
    static SymplecticMatrix from_entries(double a, double b, double c, double d);

    double a() const noexcept { return a_.value(); }
    double b() const noexcept { return b_.value(); }
    double c() const noexcept { return c_.value(); }
    double d() const noexcept { return d_.value(); }

    /// ad - bc evaluated in double-double.
    double determinant() const noexcept;

    SymplecticMatrix inverse() const noexcept;

    friend SymplecticMatrix compose(const SymplecticMatrix& second, const SymplecticMatrix& first);

private:
    SymplecticMatrix(detail::Wide a, detail::Wide b, detail::Wide c, detail::Wide d)
        : a_(a), b_(b), c_(c), d_(d) {}

    detail::Wide a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
};

/// exp(-theta sigma_x) = [[cosh, sinh], [sinh, cosh]].
SymplecticMatrix generator_x(double theta);
/// exp(i nu sigma_y) = [[cos, sin], [-sin, cos]].
SymplecticMatrix generator_y(double nu);
/// exp(rho sigma_z) = diag(e^rho, e^-rho).
SymplecticMatrix generator_z(double rho);

/// Product second * first: `first` acts on the coordinates before `second`.
/// Throws InvariantViolationError if either input has drifted off unit determinant.
SymplecticMatrix compose(const SymplecticMatrix& second, const SymplecticMatrix& first);

/// (a x1 + b p1, c x1 + d p1).
std::pair<double, double> transform_coords(const SymplecticMatrix& m, double x1, double p1);

/// Coefficients of P2 and X2 after rewriting (i alpha P1 + beta X1) in the new
/// coordinates: (alpha a + i beta b, beta d - i alpha c).
std::pair<cplx, cplx> transform_operator_coeffs(const SymplecticMatrix& m, cplx alpha, cplx beta);

/// S2 = (S1 d - i c) / (a + i S1 b). Throws SingularTransformError when the
/// denominator vanishes. Re(S2) > 0 is not guaranteed for a general matrix;
/// callers that need a normalizable result must check it.
cplx mobius_squeeze(const SymplecticMatrix& m, cplx s1);

/// Phase-space rotation of the unit oscillator over time t: a = d = cos t,
/// b = -c = sin t. Same matrix as generator_y(t).
SymplecticMatrix time_evolution_matrix(double t);

} // namespace sqz

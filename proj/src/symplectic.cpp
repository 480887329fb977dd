#include "squeeze/symplectic.hpp"

#include "squeeze/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace sqz {

namespace detail {

namespace {

Wide two_sum(double a, double b) noexcept
{
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

Wide quick_two_sum(double a, double b) noexcept
{
    const double s = a + b;
    return {s, b - (s - a)};
}

} // namespace

Wide operator+(Wide x, Wide y) noexcept
{
    Wide s = two_sum(x.hi, y.hi);
    const Wide t = two_sum(x.lo, y.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

Wide operator-(Wide x) noexcept { return {-x.hi, -x.lo}; }

Wide operator-(Wide x, Wide y) noexcept { return x + (-y); }

Wide operator*(Wide x, Wide y) noexcept
{
    const double p = x.hi * y.hi;
    double e = std::fma(x.hi, y.hi, -p);
    e += x.hi * y.lo + x.lo * y.hi;
    return quick_two_sum(p, e);
}

} // namespace detail

using detail::Wide;

namespace {

void require_unit_determinant(const SymplecticMatrix& m, const char* what)
{
    const double det = m.determinant();
    if (!(std::abs(det - 1.0) <= kDeterminantTolerance)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << what << ": determinant " << det << " differs from 1 by more than " << kDeterminantTolerance;
        throw InvariantViolationError(msg.str());
    }
}

} // namespace

SymplecticMatrix SymplecticMatrix::from_entries(double a, double b, double c, double d)
{
    SymplecticMatrix m(a, b, c, d);
    require_unit_determinant(m, "matrix is not symplectic");
    return m;
}

double SymplecticMatrix::determinant() const noexcept
{
    return (a_ * d_ - b_ * c_).value();
}

SymplecticMatrix SymplecticMatrix::inverse() const noexcept
{
    return SymplecticMatrix(d_, -b_, -c_, a_);
}

SymplecticMatrix compose(const SymplecticMatrix& second, const SymplecticMatrix& first)
{
    require_unit_determinant(first, "compose: first factor");
    require_unit_determinant(second, "compose: second factor");
    const SymplecticMatrix& l = second;
    const SymplecticMatrix& r = first;
    return SymplecticMatrix(l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
                            l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_);
}

SymplecticMatrix generator_x(double theta)
{
    const double ch = std::cosh(theta), sh = std::sinh(theta);
    return SymplecticMatrix::from_entries(ch, sh, sh, ch);
}

SymplecticMatrix generator_y(double nu)
{
    const double cs = std::cos(nu), sn = std::sin(nu);
    return SymplecticMatrix::from_entries(cs, sn, -sn, cs);
}

SymplecticMatrix generator_z(double rho)
{
    return SymplecticMatrix::from_entries(std::exp(rho), 0.0, 0.0, std::exp(-rho));
}

std::pair<double, double> transform_coords(const SymplecticMatrix& m, double x1, double p1)
{
    return {m.a() * x1 + m.b() * p1, m.c() * x1 + m.d() * p1};
}

std::pair<cplx, cplx> transform_operator_coeffs(const SymplecticMatrix& m, cplx alpha, cplx beta)
{
    constexpr cplx i{0.0, 1.0};
    return {alpha * m.a() + i * beta * m.b(), beta * m.d() - i * alpha * m.c()};
}

cplx mobius_squeeze(const SymplecticMatrix& m, cplx s1)
{
    constexpr cplx i{0.0, 1.0};
    const cplx den = m.a() + i * s1 * m.b();
    const double scale = std::abs(m.a()) + std::abs(s1) * std::abs(m.b());
    if (!(std::abs(den) > 8.0 * std::numeric_limits<double>::epsilon() * scale)) {
        std::ostringstream msg;
        msg << "a + i S1 b vanishes for S1 = " << s1 << " (a = " << m.a() << ", b = " << m.b() << ")";
        throw SingularTransformError(msg.str());
    }
    return (s1 * m.d() - i * m.c()) / den;
}

SymplecticMatrix time_evolution_matrix(double t)
{
    const double cs = std::cos(t), sn = std::sin(t);
    return SymplecticMatrix::from_entries(cs, sn, -sn, cs);
}

} // namespace sqz

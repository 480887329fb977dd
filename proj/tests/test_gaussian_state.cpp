#include <doctest.h>

#include "test_support.hpp"

#include <squeeze/errors.hpp>
#include <squeeze/gaussian_state.hpp>

#include <cmath>

using namespace sqz;
using test::kPi;

namespace {

const double kQuarterPi = std::pow(kPi, -0.25); // 0.751125544464942...

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

} // namespace

TEST_CASE("state construction validates normalizability")
{
    CHECK_NOTHROW(SqueezedDisplacedState(1.0, 0.0));
    const SqueezedDisplacedState s(2.0, 1.5);
    CHECK(s.s0() == cplx(2.0));
    CHECK(s.d0() == cplx(1.5));
    CHECK(s.has_real_parameters());
    CHECK_FALSE(SqueezedDisplacedState(cplx(2.0, 0.1), 1.5).has_real_parameters());

    CHECK_THROWS_AS(SqueezedDisplacedState(-1.0, 0.0), NonNormalizableError);
    CHECK_THROWS_AS(SqueezedDisplacedState(cplx(0.0, 1.0), 0.0), NonNormalizableError);
    CHECK_THROWS_AS(SqueezedDisplacedState(1.0, cplx(NAN, 0.0)), NonNormalizableError);
}

TEST_CASE("evolve_squeeze examples")
{
    CHECK(close(evolve_squeeze(1.0, 0.7), 1.0, 1e-15));
    CHECK(close(evolve_squeeze(2.0, kPi / 2), 0.5, 1e-15));
    CHECK(close(evolve_squeeze(2.0, kPi / 4), cplx(0.8, -0.6), 1e-15));
}

TEST_CASE("evolve_displacement examples")
{
    CHECK(close(evolve_displacement(1.0, 1.0, kPi / 2), cplx(0.0, -1.0), 1e-15));
    CHECK(close(evolve_displacement(2.0, 1.0, kPi / 2), cplx(0.0, -2.0), 1e-15));
    CHECK(evolve_displacement(cplx(0.7, 0.3), 0.0, 1.234) == cplx(0.0));
}

TEST_CASE("normalization examples and branch continuity")
{
    CHECK(close(normalization(1.0, 0.0), kQuarterPi, 1e-15));
    CHECK(close(normalization(2.0, 0.0), 0.893243841738002331, 1e-15));

    // |cos t + i sin t| = 1 and the continuous branch gives the vacuum phase e^{-i t/2}.
    const cplx n_pi = normalization(1.0, kPi);
    CHECK(std::abs(n_pi) == doctest::Approx(kQuarterPi).epsilon(1e-14));
    CHECK(close(n_pi, cplx(0.0, -kQuarterPi), 1e-14));
    CHECK(close(normalization(1.0, 2 * kPi), -kQuarterPi, 1e-14));

    // No jumps: successive samples on a fine time mesh stay close.
    test::Random rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const cplx s0 = rng.complex_in(0.1, 5.0, -2.0, 2.0);
        double previous = continuous_argument(s0, -7.0);
        for (double t = -7.0 + 1e-3; t < 7.0; t += 1e-3) {
            const double theta = continuous_argument(s0, t);
            REQUIRE(theta - previous > 0.0); // strictly increasing
            REQUIRE(theta - previous < 0.05);
            previous = theta;
        }
    }
}

TEST_CASE("wavefunction examples")
{
    const SqueezedDisplacedState vacuum(1.0, 0.0);
    CHECK(close(wavefunction(vacuum, 0.0, 0.0), kQuarterPi, 1e-15));
    for (double t : {0.3, 1.7, 3.1, 4.0, 9.5})
        CHECK(close(wavefunction(vacuum, t, 0.0), kQuarterPi * std::polar(1.0, -t / 2), 1e-14));
}

TEST_CASE("wavefunction solves the Schroedinger equation")
{
    // i dPsi/dt = (-1/2 d2/dx2 + x^2/2) Psi by central differences. A branch
    // flip in N(t) would show up as an O(1/h) residual near t = pi, 2 pi, 3 pi.
    const double ht = 1e-4, hx = 1e-3;
    test::Random rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        const SqueezedDisplacedState st(rng.complex_in(0.3, 3.0, -1.0, 1.0), rng.complex_in(-2.0, 2.0, -0.5, 0.5));
        for (double t : {0.4, kPi - 2e-5, kPi + 3e-5, 2 * kPi, 3 * kPi + 1e-5, 5.0}) {
            for (double x : {-1.0, 0.2, 1.3}) {
                const cplx dt = (wavefunction(st, t + ht, x) - wavefunction(st, t - ht, x)) / (2 * ht);
                const cplx d2x =
                    (wavefunction(st, t, x + hx) - 2.0 * wavefunction(st, t, x) + wavefunction(st, t, x - hx)) /
                    (hx * hx);
                const cplx psi = wavefunction(st, t, x);
                const cplx residual = cplx(0.0, 1.0) * dt - (-0.5 * d2x + 0.5 * x * x * psi);
                REQUIRE(std::abs(residual) < 1e-5);
            }
        }
    }
}

TEST_CASE("probability density")
{
    const SqueezedDisplacedState vacuum(1.0, 0.0);
    for (double t : {0.0, 0.9, 2.2})
        CHECK(probability_density(vacuum, t, 0.0) == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-14));

    CHECK(density_width(2.0, kPi / 2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(density_width(2.0, kPi / 4) == doctest::Approx(0.8).epsilon(1e-15));

    const SqueezedDisplacedState st(2.0, 1.5);
    for (double t : {0.0, 0.4, 1.9})
        for (double x : {-1.0, 0.0, 0.8, 2.0})
            CHECK(closed_form_density(st, t, x) ==
                  doctest::Approx(std::norm(wavefunction(st, t, x))).epsilon(1e-13));

    const SqueezedDisplacedState complex_state(cplx(2.0, 0.5), 1.0);
    CHECK_THROWS_AS(closed_form_density(complex_state, 0.3, 0.0), std::domain_error);
    CHECK(probability_density(complex_state, 0.3, 0.2) == std::norm(wavefunction(complex_state, 0.3, 0.2)));
}

TEST_CASE("center oscillates between the turning points")
{
    CHECK(center(1.5, 0.0) == 1.5);
    CHECK(center(1.5, kPi) == doctest::Approx(-1.5).epsilon(1e-15));
    CHECK(std::abs(center(1.5, kPi / 2)) < 1e-15);

    test::Random rng(13);
    for (int k = 0; k < 50; ++k) {
        const double s0 = rng.uniform(0.2, 5.0), d0 = rng.uniform(-3.0, 3.0), t = rng.uniform(0.0, 7.0);
        CHECK(density_center(SqueezedDisplacedState(s0, d0), t) == doctest::Approx(center(d0, t)).epsilon(1e-12));
    }
}

TEST_CASE("norm correction")
{
    CHECK(norm_correction(SqueezedDisplacedState(2.5, -1.0)) == 1.0);
    // Complex parameters: the printed N(t) alone is off, the corrected state has unit norm.
    const SqueezedDisplacedState st(cplx(0.7, 0.9), cplx(1.0, 0.6));
    const double direct = test::simpson<double>(
        [&](double x) { return std::norm(normalization(st.s0(), 0.0) * std::exp(-0.5 * st.s0() * (x - st.d0()) * (x - st.d0()))); },
        -25.0, 25.0);
    CHECK(norm_correction(st) == doctest::Approx(1.0 / std::sqrt(direct)).epsilon(1e-10));
}

TEST_CASE("squeeze and displacement properties")
{
    test::Random rng(14);

    SUBCASE("group property")
    {
        for (int k = 0; k < 100; ++k) {
            const cplx s0 = rng.complex_in(1e-3, 5.0, -2.0, 2.0);
            const double t1 = rng.uniform(-4.0, 4.0), t2 = rng.uniform(-4.0, 4.0);
            const cplx lhs = evolve_squeeze(evolve_squeeze(s0, t1), t2);
            REQUIRE(std::abs(lhs - evolve_squeeze(s0, t1 + t2)) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        }
    }
    SUBCASE("periodicity")
    {
        for (int k = 0; k < 100; ++k) {
            const cplx s0 = rng.complex_in(0.2, 5.0, -1.0, 1.0), d0 = rng.complex_in(-3.0, 3.0, -3.0, 3.0);
            const double t = rng.uniform(0.0, 2 * kPi);
            const cplx d = evolve_displacement(s0, d0, t);
            REQUIRE(std::abs(evolve_squeeze(s0, t + kPi) - evolve_squeeze(s0, t)) <= 1e-12);
            REQUIRE(std::abs(evolve_displacement(s0, d0, t + kPi) + d) <= 1e-12);
            REQUIRE(std::abs(evolve_displacement(s0, d0, t + 2 * kPi) - d) <= 1e-12);
        }
    }
    SUBCASE("positivity, width identity, fixed point")
    {
        for (int k = 0; k < 100; ++k) {
            const cplx s0 = rng.complex_in(1e-3, 10.0, -5.0, 5.0);
            const double t = rng.uniform(-20.0, 20.0);
            REQUIRE(evolve_squeeze(s0, t).real() > 0.0);
            REQUIRE(std::abs(evolve_squeeze(1.0, t) - 1.0) <= 1e-15);
            REQUIRE(density_width(1.0, t) == doctest::Approx(1.0).epsilon(1e-15));
        }
        for (double t = 0.0; t <= 2 * kPi; t += 0.01) {
            for (double s0 : {0.2, 0.9, 2.0, 5.0})
                REQUIRE(std::abs(evolve_squeeze(s0, t).real() - density_width(s0, t)) <= 1e-12);
        }
    }
}

TEST_CASE("norm is conserved on the default grid")
{
    const Grid grid = Grid::symmetric();
    test::Random rng(15);
    for (int k = 0; k < 6; ++k) {
        const SqueezedDisplacedState st(rng.complex_in(0.3, 4.0, -1.0, 1.0), rng.complex_in(-2.0, 2.0, -1.0, 1.0));
        for (double t : {0.0, 0.5, 1.6, 3.3, 6.0})
            REQUIRE(std::abs(norm_squared(wavefunction(st, t, grid)) - 1.0) <= 1e-8);
    }
}

TEST_CASE("global phase is zero at t = 0 and continuous")
{
    const SqueezedDisplacedState st(cplx(0.5, 0.8), cplx(1.0, -0.4));
    CHECK(global_phase(st, 0.0) == 0.0);
    double previous = 0.0;
    for (double t = 0.01; t < 13.0; t += 0.01) {
        const double p = global_phase(st, t);
        REQUIRE(std::abs(p - previous) < 0.2);
        previous = p;
    }
    // Vacuum: Psi(t) = e^{-i t/2} Phi, so the phase is -t/2 without wrapping.
    CHECK(global_phase(SqueezedDisplacedState(1.0, 0.0), 11.0) == doctest::Approx(-5.5).epsilon(1e-14));
}

#include <doctest.h>

#include "test_support.hpp"

#include <squeeze/errors.hpp>
#include <squeeze/gaussian_state.hpp>
#include <squeeze/symplectic.hpp>

#include <cmath>

using namespace sqz;
using test::kPi;

namespace {

void check_entries(const SymplecticMatrix& m, double a, double b, double c, double d, double tol = 1e-15)
{
    CHECK(std::abs(m.a() - a) <= tol);
    CHECK(std::abs(m.b() - b) <= tol);
    CHECK(std::abs(m.c() - c) <= tol);
    CHECK(std::abs(m.d() - d) <= tol);
}

SymplecticMatrix random_generator(test::Random& rng)
{
    const double p = rng.uniform(-2.0, 2.0);
    switch (rng.integer(0, 2)) {
    case 0: return generator_x(p);
    case 1: return generator_y(p);
    default: return generator_z(p);
    }
}

} // namespace

TEST_CASE("generators")
{
    check_entries(generator_x(0.0), 1, 0, 0, 1);
    check_entries(generator_y(0.0), 1, 0, 0, 1);
    check_entries(generator_z(0.0), 1, 0, 0, 1);

    check_entries(generator_x(0.5), 1.12762596520638079, 0.521095305493747362, 0.521095305493747362,
                  1.12762596520638079);
    check_entries(generator_y(kPi / 2), 0, 1, -1, 0, 1e-16);
    check_entries(generator_z(std::log(2.0)), 2.0, 0.0, 0.0, 0.5);

    test::Random rng(41);
    for (int k = 0; k < 50; ++k) {
        const double p = rng.uniform(-3.0, 3.0);
        REQUIRE(std::abs(generator_x(p).determinant() - 1.0) <= 1e-13);
        REQUIRE(std::abs(generator_y(p).determinant() - 1.0) <= 1e-15);
        REQUIRE(std::abs(generator_z(p).determinant() - 1.0) <= 1e-15);
        const double q = rng.uniform(-3.0, 3.0);
        const SymplecticMatrix yy = compose(generator_y(p), generator_y(q));
        const SymplecticMatrix y = generator_y(p + q);
        check_entries(yy, y.a(), y.b(), y.c(), y.d(), 1e-14);
    }
}

TEST_CASE("from_entries validates the determinant")
{
    CHECK_NOTHROW(SymplecticMatrix::from_entries(2.0, 3.0, 1.0, 2.0));
    CHECK_THROWS_AS(SymplecticMatrix::from_entries(1.0, 1.0, 1.0, 1.0), InvariantViolationError);
    CHECK_THROWS_AS(SymplecticMatrix::from_entries(1.0, 0.0, 0.0, 1.0 + 1e-6), InvariantViolationError);
    CHECK_THROWS_AS(generator_x(800.0), InvariantViolationError); // cosh overflows
}

TEST_CASE("compose")
{
    const SymplecticMatrix m = SymplecticMatrix::from_entries(2.0, 3.0, 1.0, 2.0);
    check_entries(compose(m, m.inverse()), 1, 0, 0, 1);
    check_entries(compose(m.inverse(), m), 1, 0, 0, 1);

    const SymplecticMatrix zz = compose(generator_z(0.3), generator_z(-1.1));
    const SymplecticMatrix z = generator_z(-0.8);
    check_entries(zz, z.a(), z.b(), z.c(), z.d(), 1e-15);

    CHECK(std::abs(compose(generator_x(0.3), generator_y(0.7)).determinant() - 1.0) <= 1e-15);

    // first factor acts first: z then y on (1, 0)
    const auto [x2, p2] = transform_coords(compose(generator_y(kPi / 2), generator_z(std::log(3.0))), 1.0, 0.0);
    CHECK(std::abs(x2) < 1e-15);
    CHECK(p2 == doctest::Approx(-3.0));
}

TEST_CASE("long products keep unit determinant")
{
    test::Random rng(42);
    double worst = 0.0;
    for (int chain = 0; chain < 200; ++chain) {
        SymplecticMatrix m;
        for (int k = 0; k < 20; ++k)
            m = compose(random_generator(rng), m);
        worst = std::max(worst, std::abs(m.determinant() - 1.0));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("transform_coords")
{
    const auto [x, p] = transform_coords(SymplecticMatrix{}, 0.3, -1.2);
    CHECK(x == 0.3);
    CHECK(p == -1.2);

    const auto [x2, p2] = transform_coords(time_evolution_matrix(kPi / 2), 0.7, 1.9);
    CHECK(std::abs(x2 - 1.9) < 1e-15);
    CHECK(std::abs(p2 + 0.7) < 1e-15);

    const auto [x3, p3] = transform_coords(generator_z(0.4), 1.0, 1.0);
    CHECK(x3 == doctest::Approx(std::exp(0.4)));
    CHECK(p3 == doctest::Approx(std::exp(-0.4)));
}

TEST_CASE("operator coefficient transform and the squeeze action")
{
    const cplx alpha{0.8, -0.3}, beta{1.7, 0.9};
    const auto [a1, b1] = transform_operator_coeffs(SymplecticMatrix{}, alpha, beta);
    CHECK(a1 == alpha);
    CHECK(b1 == beta);

    const auto [a2, b2] = transform_operator_coeffs(generator_z(0.6), alpha, beta);
    CHECK(std::abs(a2 - alpha * std::exp(0.6)) < 1e-15);
    CHECK(std::abs(b2 - beta * std::exp(-0.6)) < 1e-15);

    test::Random rng(43);
    for (int k = 0; k < 100; ++k) {
        const SymplecticMatrix m = compose(random_generator(rng), random_generator(rng));
        const cplx al = rng.complex_in(-2, 2, -2, 2), be = rng.complex_in(-2, 2, -2, 2);
        const auto [pa, xb] = transform_operator_coeffs(m, al, be);
        const cplx s2 = mobius_squeeze(m, be / al);
        REQUIRE(std::abs(xb / pa - s2) <= 1e-12 * std::max(1.0, std::abs(s2)));
    }
}

TEST_CASE("mobius_squeeze")
{
    CHECK(mobius_squeeze(SymplecticMatrix{}, cplx(2.0, -0.4)) == cplx(2.0, -0.4));
    for (double rho : {-1.0, 0.2, 1.5})
        CHECK(std::abs(mobius_squeeze(generator_z(rho), cplx(0.7, 0.2)) - cplx(0.7, 0.2) * std::exp(-2 * rho)) <= 1e-14);

    // a + i S1 b = 0 for S1 = i a / b
    CHECK_THROWS_AS(mobius_squeeze(SymplecticMatrix::from_entries(1.0, 1.0, 0.0, 1.0), cplx(0.0, 1.0)),
                    SingularTransformError);

    test::Random rng(44);
    SUBCASE("homomorphism")
    {
        for (int k = 0; k < 200; ++k) {
            const SymplecticMatrix m1 = random_generator(rng), m2 = random_generator(rng);
            const cplx s = rng.complex_in(0.05, 5.0, -2.0, 2.0);
            const cplx direct = mobius_squeeze(compose(m2, m1), s);
            const cplx chained = mobius_squeeze(m2, mobius_squeeze(m1, s));
            REQUIRE(std::abs(direct - chained) <= 1e-12 * std::max(1.0, std::abs(direct)));
        }
    }
    SUBCASE("time evolution")
    {
        for (double t = 0.0; t <= 2 * kPi; t += 0.01) {
            const cplx s0 = rng.complex_in(0.05, 5.0, -1.0, 1.0);
            REQUIRE(std::abs(mobius_squeeze(time_evolution_matrix(t), s0) - evolve_squeeze(s0, t)) <= 1e-12);
        }
    }
    SUBCASE("generator families keep Re S positive")
    {
        for (int k = 0; k < 200; ++k) {
            const cplx s = rng.complex_in(0.01, 5.0, -3.0, 3.0);
            const double p = rng.uniform(-2.0, 2.0);
            REQUIRE(mobius_squeeze(generator_x(p), s).real() > 0.0);
            REQUIRE(mobius_squeeze(generator_y(p), s).real() > 0.0);
            REQUIRE(mobius_squeeze(generator_z(p), s).real() > 0.0);
        }
    }
}

TEST_CASE("time_evolution_matrix")
{
    check_entries(time_evolution_matrix(0.0), 1, 0, 0, 1);
    check_entries(time_evolution_matrix(kPi / 2), 0, 1, -1, 0, 1e-16);
    for (double t : {-1.2, 0.4, 2.9, 6.0}) {
        const SymplecticMatrix y = generator_y(t);
        check_entries(time_evolution_matrix(t), y.a(), y.b(), y.c(), y.d(), 0.0);
    }
}

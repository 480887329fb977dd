#include "cli/verification.hpp"

#include <squeeze/errors.hpp>
#include <squeeze/fock_oracle.hpp>
#include <squeeze/gaussian_state.hpp>
#include <squeeze/heisenberg_operator.hpp>
#include <squeeze/symplectic.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

namespace sqz::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Fixed thresholds of the checks that do not follow VerifyOptions::tolerance.
constexpr double kWidthTolerance = 1e-10;
constexpr double kResidualTolerance = 1e-6;
constexpr double kParameterTolerance = 1e-12;
constexpr double kRevivalTolerance = 1e-10;
constexpr double kGroupTolerance = 1e-12;
constexpr double kPoissonTolerance = 1e-8;
constexpr double kParityTolerance = 1e-12;
constexpr double kOrthonormalityTolerance = 1e-10;

class Sampler {
public:
    explicit Sampler(unsigned long seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    /// Re S0 in [0.2, 5], |Im S0| <= 1, real |D0| <= 3.
    SqueezedDisplacedState oracle_state()
    {
        const cplx s0{uniform(0.2, 5.0), uniform(-1.0, 1.0)};
        return SqueezedDisplacedState(s0, uniform(-3.0, 3.0));
    }

    SqueezedDisplacedState real_state()
    {
        return SqueezedDisplacedState(uniform(0.2, 5.0), uniform(-3.0, 3.0));
    }

    SqueezedDisplacedState complex_state()
    {
        const cplx s0{uniform(0.2, 5.0), uniform(-1.0, 1.0)};
        return SqueezedDisplacedState(s0, std::polar(uniform(0.0, 2.0), uniform(0.0, kTwoPi)));
    }

    SymplecticMatrix generator()
    {
        const int family = std::uniform_int_distribution<int>(0, 2)(rng_);
        const double p = uniform(-2.0, 2.0);
        return family == 0 ? generator_x(p) : family == 1 ? generator_y(p) : generator_z(p);
    }

private:
    std::mt19937_64 rng_;
};

std::vector<double> uniform_times(std::size_t count, double t_end)
{
    std::vector<double> t(count);
    for (std::size_t k = 0; k < count; ++k)
        t[k] = t_end * double(k) / double(count - 1);
    return t;
}

CheckResult run_check(const std::string& name, double threshold, const std::function<double(std::string&)>& body)
{
    CheckResult r;
    r.name = name;
    r.threshold = threshold;
    try {
        r.value = body(r.detail);
        r.passed = r.value <= threshold;
    } catch (const TruncationError& e) {
        r.value = std::numeric_limits<double>::infinity();
        r.detail = std::string("truncation-inadequate: ") + e.what();
    } catch (const std::exception& e) {
        r.value = std::numeric_limits<double>::infinity();
        r.detail = e.what();
    }
    return r;
}

struct Moments {
    double mass, mean, variance;
};

Moments density_moments(const GridFunction& psi)
{
    const Grid& g = psi.grid;
    std::vector<double> rho(g.points), xrho(g.points), x2rho(g.points);
    for (std::size_t i = 0; i < g.points; ++i) {
        rho[i] = std::norm(psi.values[i]);
        xrho[i] = g.x(i) * rho[i];
    }
    const double mass = trapezoid(g, rho);
    const double mean = trapezoid(g, xrho) / mass;
    for (std::size_t i = 0; i < g.points; ++i)
        x2rho[i] = (g.x(i) - mean) * (g.x(i) - mean) * rho[i];
    return {mass, mean, trapezoid(g, x2rho) / mass};
}

} // namespace

bool VerificationReport::passed() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport run_verification(const VerifyOptions& opt)
{
    VerificationReport report;
    Sampler sampler(opt.seed);
    const Grid& grid = opt.grid;
    const SqueezedDisplacedState configured(opt.s0, opt.d0);

    std::vector<SqueezedDisplacedState> oracle_states;
    for (int k = 0; k < 25; ++k)
        oracle_states.push_back(sampler.oracle_state());
    oracle_states.push_back(configured);

    // Built lazily: an unusable n_max must show up as a failed check, not a crash.
    std::unique_ptr<FockBasis> basis_holder;
    auto basis = [&]() -> const FockBasis& {
        if (!basis_holder)
            basis_holder = std::make_unique<FockBasis>(grid, opt.n_max);
        return *basis_holder;
    };

    report.checks.push_back(run_check("oracle_equivalence", opt.tolerance, [&](std::string& detail) {
        double worst = 0.0;
        for (const auto& state : oracle_states) {
            // Each route fixes its own global phase at t = 0, so each is
            // propagated from its own initial samples.
            const OperatorCoeffs c = coeffs_from_params(state.s0(), state.d0());
            const FockExpansion closed0 = project(wavefunction(state, 0.0, grid), basis());
            const FockExpansion eigen0 = project(schrodinger_from_heisenberg(c, 0.0, grid), basis());
            for (double t : uniform_times(8, kTwoPi)) {
                worst = std::max(worst, l2_distance(wavefunction(state, t, grid),
                                                    reconstruct(evolve_fock(closed0, t), basis())));
                worst = std::max(worst, l2_distance(schrodinger_from_heisenberg(c, t, grid),
                                                    reconstruct(evolve_fock(eigen0, t), basis())));
            }
        }
        detail = std::to_string(oracle_states.size()) + " states x 8 times, closed form and eigenstate route";
        return worst;
    }));
    report.max_l2_error = report.checks.back().value;

    std::vector<SqueezedDisplacedState> real_states;
    for (int k = 0; k < 10; ++k)
        real_states.push_back(sampler.real_state());

    report.checks.push_back(run_check("density_center", opt.tolerance, [&](std::string& detail) {
        double worst = 0.0;
        for (const auto& state : real_states) {
            const double d0 = state.d0().real();
            for (double t : uniform_times(16, kTwoPi))
                worst = std::max(worst, std::abs(density_moments(wavefunction(state, t, grid)).mean - center(d0, t)));
            worst = std::max(worst, std::abs(density_moments(wavefunction(state, 0.0, grid)).mean - d0));
            worst = std::max(worst, std::abs(density_moments(wavefunction(state, std::numbers::pi, grid)).mean + d0));
        }
        detail = "first moment vs D0 cos t, turning points +-D0 at t = 0, pi";
        return worst;
    }));

    report.checks.push_back(run_check("density_width", kWidthTolerance, [&](std::string& detail) {
        double worst = 0.0;
        for (const auto& state : real_states) {
            const double s0 = state.s0().real();
            for (double t : uniform_times(16, kTwoPi)) {
                const double gamma = density_width(s0, t);
                const double fitted = 0.5 / density_moments(wavefunction(state, t, grid)).variance;
                worst = std::max({worst, std::abs(gamma - evolve_squeeze(s0, t).real()), std::abs(gamma - fitted)});
            }
        }
        detail = "gamma vs Re S(t) and 1/(2 var)";
        return worst;
    }));

    report.checks.push_back(run_check("norm_conservation", opt.tolerance, [&](std::string& detail) {
        std::vector<SqueezedDisplacedState> states;
        for (int k = 0; k < 10; ++k)
            states.push_back(sampler.complex_state());
        states.push_back(configured);
        double worst = 0.0;
        for (const auto& state : states)
            for (double t : uniform_times(32, kTwoPi))
                worst = std::max(worst, std::abs(norm_squared(wavefunction(state, t, grid)) - 1.0));
        detail = std::to_string(states.size()) + " states x 32 times";
        return worst;
    }));

    report.checks.push_back(run_check("eigen_residual", kResidualTolerance, [&](std::string& detail) {
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            const cplx alpha = std::polar(sampler.uniform(0.5, 1.5), sampler.uniform(0.0, kTwoPi));
            const cplx s0{sampler.uniform(0.2, 3.0), sampler.uniform(-1.0, 1.0)};
            const cplx d0 = std::polar(sampler.uniform(0.0, 2.0), sampler.uniform(0.0, kTwoPi));
            const OperatorCoeffs c{alpha, alpha * s0, alpha * s0 * d0};
            worst = std::max(worst, eigen_residual(c, sampler.uniform(0.0, kTwoPi), grid));
        }
        detail = "20 random operators, fourth-order differences";
        return worst;
    }));

    report.checks.push_back(run_check("parameter_periodicity", kParameterTolerance, [&](std::string& detail) {
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const auto state = sampler.complex_state();
            const double t = sampler.uniform(0.0, kTwoPi);
            const cplx s0 = state.s0(), d0 = state.d0();
            const cplx d = evolve_displacement(s0, d0, t);
            worst = std::max({worst, std::abs(evolve_squeeze(s0, t + std::numbers::pi) - evolve_squeeze(s0, t)),
                              std::abs(evolve_displacement(s0, d0, t + std::numbers::pi) + d),
                              std::abs(evolve_displacement(s0, d0, t + kTwoPi) - d)});
        }
        detail = "S(t+pi) = S(t), D(t+pi) = -D(t), D(t+2pi) = D(t)";
        return worst;
    }));

    report.checks.push_back(run_check("revival", kRevivalTolerance, [&](std::string& detail) {
        double worst = 0.0;
        for (const auto& state : {configured, sampler.oracle_state(), sampler.oracle_state()}) {
            const GridFunction psi0 = wavefunction(state, 0.0, grid);
            GridFunction minus_psi0 = psi0;
            for (cplx& v : minus_psi0.values)
                v = -v;
            const GridFunction spectral = reconstruct(evolve_fock(project(psi0, basis()), kTwoPi), basis());
            worst = std::max({worst, l2_distance(spectral, minus_psi0),
                              l2_distance(wavefunction(state, kTwoPi, grid), minus_psi0)});
        }
        detail = "Psi(2 pi) = -Psi(0), spectral and closed form";
        return worst;
    }));

    report.checks.push_back(run_check("determinant_drift", kGroupTolerance, [&](std::string& detail) {
        double worst = 0.0;
        for (int chain = 0; chain < 100; ++chain) {
            SymplecticMatrix m;
            for (int k = 0; k < 20; ++k)
                m = compose(sampler.generator(), m);
            worst = std::max(worst, std::abs(m.determinant() - 1.0));
        }
        detail = "100 chains of 20 random generators, parameters in [-2, 2]";
        return worst;
    }));

    report.checks.push_back(run_check("mobius_homomorphism", kGroupTolerance, [&](std::string& detail) {
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            const SymplecticMatrix m1 = sampler.generator(), m2 = sampler.generator();
            const cplx s{sampler.uniform(0.05, 5.0), sampler.uniform(-2.0, 2.0)};
            const cplx direct = mobius_squeeze(compose(m2, m1), s);
            const cplx chained = mobius_squeeze(m2, mobius_squeeze(m1, s));
            worst = std::max(worst, std::abs(direct - chained) / std::max(1.0, std::abs(direct)));
        }
        detail = "200 random pairs, error relative to max(1, |S2|)";
        return worst;
    }));

    report.checks.push_back(run_check("time_evolution_equivalence", kGroupTolerance, [&](std::string& detail) {
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            const cplx s0{sampler.uniform(0.05, 5.0), sampler.uniform(-1.0, 1.0)};
            const double t = sampler.uniform(0.0, kTwoPi);
            worst = std::max(worst, std::abs(mobius_squeeze(time_evolution_matrix(t), s0) - evolve_squeeze(s0, t)));
        }
        detail = "rotation matrix action vs closed-form S(t)";
        return worst;
    }));

    report.checks.push_back(run_check("phase_branch", opt.tolerance, [&](std::string& detail) {
        std::vector<SqueezedDisplacedState> states;
        for (int k = 0; k < 10; ++k)
            states.push_back(sampler.complex_state());
        states.push_back(configured);
        double worst = 0.0;
        for (const auto& state : states) {
            const OperatorCoeffs c = coeffs_from_params(state.s0(), state.d0());
            for (double t : uniform_times(97, 2.0 * kTwoPi))
                worst = std::max(worst, std::abs(global_phase(state, t) - phase_delta(c, t)));
        }
        detail = "continuous N(t) phase vs overlap-ratio delta(t) over [0, 4 pi]";
        return worst;
    }));
    report.max_phase_error = report.checks.back().value;

    report.checks.push_back(run_check("poisson_weights", kPoissonTolerance, [&](std::string& detail) {
        double worst = 0.0;
        for (double d0 : {0.5, 1.5, 2.5, 3.0}) {
            const FockExpansion e = project(wavefunction(SqueezedDisplacedState(1.0, d0), 0.0, grid), basis());
            const double mean = 0.5 * d0 * d0;
            for (std::size_t n = 0; n <= e.n_max(); ++n) {
                const double poisson = std::exp(-mean + double(n) * std::log(mean) - std::lgamma(double(n) + 1.0));
                worst = std::max(worst, std::abs(std::norm(e.coeffs[n]) - poisson));
            }
        }
        detail = "coherent states, |b_n|^2 vs Poisson(D0^2 / 2)";
        return worst;
    }));

    report.checks.push_back(run_check("parity_selection", kParityTolerance, [&](std::string& detail) {
        double worst = 0.0;
        for (cplx s0 : {cplx(0.3), cplx(2.0), cplx(4.5), cplx(0.5, 0.8)}) {
            const FockExpansion e = project(wavefunction(SqueezedDisplacedState(s0, 0.0), 0.0, grid), basis());
            for (std::size_t n = 1; n <= e.n_max(); n += 2)
                worst = std::max(worst, std::abs(e.coeffs[n]));
        }
        detail = "squeezed vacua, largest odd |b_n|";
        return worst;
    }));

    report.checks.push_back(run_check("basis_orthonormality", kOrthonormalityTolerance, [&](std::string& detail) {
        const std::size_t top = std::min<std::size_t>(64, opt.n_max);
        const FockBasis small(grid, top);
        double worst = 0.0;
        std::vector<double> prod(grid.points);
        for (std::size_t m = 0; m <= top; ++m) {
            for (std::size_t n = m; n <= top; ++n) {
                for (std::size_t i = 0; i < grid.points; ++i)
                    prod[i] = small.row(m)[i] * small.row(n)[i];
                worst = std::max(worst, std::abs(trapezoid(grid, prod) - (m == n ? 1.0 : 0.0)));
            }
        }
        detail = "m, n <= " + std::to_string(top);
        return worst;
    }));

    return report;
}

} // namespace sqz::cli

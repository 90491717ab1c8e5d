#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "vatom/errors.hpp"
#include "vatom/oracle.hpp"
#include "vatom/squeezing.hpp"

using namespace vatom;
using testing::seeded_rng;

namespace {
constexpr double kTwoLn2 = 1.3862943611198906;
}

TEST_SUITE("oracle") {

TEST_CASE("grid configuration is validated") {
    CHECK_THROWS_AS(oracle::OdeConfig(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(oracle::OdeConfig(2.0, 1.0), std::invalid_argument);
    CHECK(oracle::OdeConfig(1e-3, 20.0).steps() == 20000);
}

TEST_CASE("decoupled channels stay at 1") {
    const oracle::OdeConfig grid(1e-3, 5.0);
    // theta = 1 kills the minus-channel coupling entirely.
    for (const Complex& d :
         oracle::ode_propagator(SystemParams(1.0, 10.0, 1.0, 0.0), Sign::minus, grid)) {
        CHECK(std::abs(d - Complex(1.0, 0.0)) < 1e-12);
    }
    // gamma0 = 0 decouples both.
    for (const Complex& d :
         oracle::ode_propagator(SystemParams(1.0, 0.0, 0.5, 3.0), Sign::plus, grid)) {
        CHECK(std::abs(d - Complex(1.0, 0.0)) < 1e-12);
    }
}

TEST_CASE("step guard") {
    CHECK_THROWS_AS(
        oracle::ode_propagator(SystemParams(1.0, 10.0, 1.0, 50.0), Sign::plus,
                               oracle::OdeConfig(5e-3, 1.0)),
        StepTooLarge);
}

TEST_CASE("integrated propagator tracks the closed form") {
    const SystemParams p(1.0, 10.0, 0.5, 0.0);
    const oracle::OdeConfig grid(1e-3, 20.0);
    for (Sign sign : {Sign::plus, Sign::minus}) {
        const auto numeric = oracle::ode_propagator(p, sign, grid);
        double worst = 0.0;
        for (std::size_t i = 0; i < numeric.size(); ++i) {
            const double t = static_cast<double>(i) * grid.dt;
            worst = std::max(worst, std::abs(numeric[i] - propagator_g(p, sign, t)));
        }
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("halving the step buys a factor ~16") {
    const SystemParams p(1.0, 10.0, 1.0, 5.0);
    auto max_err = [&p](double dt) {
        const oracle::OdeConfig grid(dt, 20.0);
        const auto numeric = oracle::ode_propagator(p, Sign::plus, grid);
        double worst = 0.0;
        for (std::size_t i = 0; i < numeric.size(); ++i) {
            worst = std::max(worst,
                             std::abs(numeric[i] - propagator_g(p, Sign::plus, dt * i)));
        }
        return worst;
    };
    const double coarse = max_err(2e-3);
    const double fine = max_err(1e-3);
    CHECK(coarse / fine >= 12.0);
    CHECK(coarse / fine <= 20.0);
}

TEST_CASE("literal projections at reference states") {
    const DensityMatrix3 ground = density_matrix(
        AmplitudeSet::from_amplitudes(0.0, 0.0, 0.0, Complex(1.0, 0.0)));
    const ProbabilityTriple p = oracle::projection_probabilities(ground, SpinAxis::X);
    CHECK(p.plus == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(p.zero == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.minus == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("literal projections agree with the bracket terms by hand") {
    // Inversion-axis probabilities written straight from the amplitudes:
    // p(+/-) = (1 - |dA|^2)/2 +/- Im(dB conj(dC)), p(0) = |dA|^2.
    const AmplitudeSet s2 = evolve_amplitudes(SystemParams(1.0, 10.0, 1.0, 5.0),
                                              preset_amplitudes(Preset::S2), 1.7);
    const double na = std::norm(s2.dA);
    const double shift = (Complex(0.0, 1.0) * s2.dC * std::conj(s2.dB) -
                          Complex(0.0, 1.0) * s2.dB * std::conj(s2.dC))
                             .real();
    const ProbabilityTriple p =
        oracle::projection_probabilities(density_matrix(s2), SpinAxis::Z);
    CHECK(p.plus == doctest::Approx(0.5 - 0.5 * na + 0.5 * shift).epsilon(1e-13));
    CHECK(p.zero == doctest::Approx(na).epsilon(1e-13));
    CHECK(p.minus == doctest::Approx(0.5 - 0.5 * na - 0.5 * shift).epsilon(1e-13));
}

TEST_CASE("property: literal projections equal the eigenbasis route") {
    auto rng = seeded_rng(40);
    for (int i = 0; i < 1000; ++i) {
        const DensityMatrix3 rho = density_matrix(testing::random_reachable(rng));
        for (SpinAxis axis : {SpinAxis::X, SpinAxis::Y, SpinAxis::Z}) {
            const ProbabilityTriple a = oracle::projection_probabilities(rho, axis);
            const ProbabilityTriple b = probabilities(rho, axis);
            CHECK(a.plus == doctest::Approx(b.plus).epsilon(1e-13));
            CHECK(a.zero == doctest::Approx(b.zero).epsilon(1e-13));
            CHECK(a.minus == doctest::Approx(b.minus).epsilon(1e-13));
        }
    }
}

TEST_CASE("bound search is seed-stable and respects the floor") {
    const auto first = oracle::bound_search(5000, 99);
    const auto second = oracle::bound_search(5000, 99);
    CHECK(first.min_sum == second.min_sum);  // bitwise
    CHECK(std::abs(first.argmin.dA - second.argmin.dA) == 0.0);

    CHECK(first.min_sum >= kTwoLn2 - 1e-6);
    CHECK(first.min_sum <= kTwoLn2 + 0.2);

    // The argmin is a normalized pure state whose entropy sum is the minimum.
    CHECK(first.argmin.atomic_norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy_sum(first.argmin) == first.min_sum);

    const auto other_seed = oracle::bound_search(5000, 100);
    CHECK(other_seed.min_sum >= kTwoLn2 - 1e-6);

    CHECK_THROWS_AS(oracle::bound_search(0, 1), std::invalid_argument);
}

TEST_CASE("entropy sum of the ground state saturates the bound") {
    const AmplitudeSet forced =
        AmplitudeSet::from_amplitudes(0.0, 0.0, 0.0, Complex(1.0, 0.0));
    CHECK(entropy_sum(forced) == doctest::Approx(kTwoLn2).epsilon(1e-14));
}

TEST_CASE("verification report runs clean on a reduced budget") {
    const auto report = oracle::run_verification(2e-3, 2000, 7);
    CHECK(report.checks.size() >= 5);
    for (const auto& check : report.checks) {
        INFO(check.name, ": ", check.value);
        CHECK(check.pass);
    }
    CHECK(report.all_pass());
}

}  // TEST_SUITE

#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "vatom/model.hpp"
#include "vatom/oracle.hpp"

using namespace vatom;
using testing::seeded_rng;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const SystemParams kStrong(1.0, 10.0, 0.5, 0.0);
}  // namespace

TEST_SUITE("model") {

TEST_CASE("parameter construction rejects invalid values") {
    CHECK_THROWS_AS(SystemParams(0.0, 1.0, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(-1.0, 1.0, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(1.0, -0.1, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(1.0, 1.0, 1.2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(1.0, 1.0, -1.2, 0.0), std::invalid_argument);
    CHECK_NOTHROW(SystemParams(1.0, 0.0, -1.0, -3.0));
}

TEST_CASE("weak-coupling classification") {
    CHECK(SystemParams(1.0, 0.1, 0.5, 0.0).markovian());
    CHECK(SystemParams(1.0, 0.5, 0.5, 0.0).markovian());
    CHECK_FALSE(SystemParams(1.0, 10.0, 0.5, 0.0).markovian());
}

TEST_CASE("initial amplitudes must be normalized") {
    CHECK_THROWS_AS(InitialAmplitudes(Complex(1.0, 0.0), Complex(0.1, 0.0), Complex(0.0, 0.0)),
                    std::invalid_argument);
    const auto rescaled = InitialAmplitudes::normalized(Complex(3.0, 0.0), Complex(0.0, 4.0),
                                                        Complex(0.0, 0.0));
    CHECK(rescaled.dA.real() == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(rescaled.dB.imag() == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("decay rate at the reference points") {
    // gamma0 = 10, theta = 0.5 on resonance: R+ = sqrt(1 - 30) = i sqrt(29).
    const Complex r_plus = rate_r(kStrong, Sign::plus);
    CHECK(r_plus.real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r_plus.imag() == doctest::Approx(std::sqrt(29.0)).epsilon(1e-15));

    // The gamma0 term vanishes on the minus channel at theta = 1.
    const Complex r_minus = rate_r(SystemParams(1.0, 10.0, 1.0, 0.0), Sign::minus);
    CHECK(r_minus == Complex(1.0, 0.0));

    // gamma0 = 0 reduces to kappa + i delta for either sign.
    const SystemParams free_atom(1.0, 0.0, 0.3, 5.0);
    CHECK(std::abs(rate_r(free_atom, Sign::plus) - Complex(1.0, 5.0)) < 1e-14);
    CHECK(std::abs(rate_r(free_atom, Sign::minus) - Complex(1.0, 5.0)) < 1e-14);
}

TEST_CASE("propagator is 1 at t = 0") {
    auto rng = seeded_rng(1);
    for (int i = 0; i < 50; ++i) {
        const SystemParams p = testing::random_params(rng);
        CHECK(std::abs(propagator_g(p, Sign::plus, 0.0) - Complex(1.0, 0.0)) < 1e-15);
        CHECK(std::abs(propagator_g(p, Sign::minus, 0.0) - Complex(1.0, 0.0)) < 1e-15);
    }
}

TEST_CASE("minus channel is decoherence-free at theta = 1") {
    for (double delta : {0.0, 5.0}) {
        const SystemParams p(1.0, 10.0, 1.0, delta);
        for (double t = 0.0; t <= 50.0; t += 0.25) {
            CHECK(std::abs(propagator_g(p, Sign::minus, t) - Complex(1.0, 0.0)) < 1e-12);
        }
    }
}

TEST_CASE("strong-coupling propagator against independent evaluations") {
    const Complex g1 = propagator_g(kStrong, Sign::plus, 1.0);

    // Real-arithmetic route: R is purely imaginary on resonance, so
    // G(t) = e^{-t/2} (cos(w t) + sin(w t) / (2 w)), w = sqrt(29)/2.
    const double w = 0.5 * std::sqrt(29.0);
    const double direct = std::exp(-0.5) * (std::cos(w) + std::sin(w) / std::sqrt(29.0));
    CHECK(g1.real() == doctest::Approx(direct).epsilon(1e-14));
    CHECK(std::abs(g1.imag()) < 1e-15);

    // Quoted curve value.
    CHECK(g1.real() == doctest::Approx(-0.4977).epsilon(2e-3));

    // Damped-mode integration route.
    const auto ode = oracle::ode_propagator(kStrong, Sign::plus, oracle::OdeConfig(1e-3, 1.0));
    CHECK(std::abs(ode.back() - g1) < 1e-6);
}

TEST_CASE("q factors") {
    const auto [q1_0, q2_0] = q_factors(kStrong, 0.0);
    CHECK(std::abs(q1_0 - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(q2_0) < 1e-15);

    // theta = 0 collapses both channels onto the same rate, so Q2 vanishes
    // identically (bitwise, both sides run the same arithmetic).
    const SystemParams symmetric(1.0, 10.0, 0.0, 3.0);
    for (double t = 0.0; t <= 50.0; t += 0.5) {
        const auto [q1, q2] = q_factors(symmetric, t);
        CHECK(q2 == Complex(0.0, 0.0));
        CHECK(std::abs(q1) <= 1.0 + 1e-9);
    }

    // Q1(1) against the integration oracle on both channels.
    const oracle::OdeConfig grid(1e-3, 1.0);
    const Complex g_plus = oracle::ode_propagator(kStrong, Sign::plus, grid).back();
    const Complex g_minus = oracle::ode_propagator(kStrong, Sign::minus, grid).back();
    const auto [q1, q2] = q_factors(kStrong, 1.0);
    CHECK(std::abs(q1 - 0.5 * (g_plus + g_minus)) < 1e-6);
    CHECK(std::abs(q2 - 0.5 * (g_plus - g_minus)) < 1e-6);
}

TEST_CASE("amplitude evolution basics") {
    const InitialAmplitudes s1 = preset_amplitudes(Preset::S1);
    const AmplitudeSet at0 = evolve_amplitudes(kStrong, s1, 0.0);
    CHECK(std::abs(at0.dA - s1.dA) < 1e-15);
    CHECK(std::abs(at0.dB - s1.dB) < 1e-15);
    CHECK(std::abs(at0.dC - s1.dC) < 1e-15);
    CHECK(at0.bath_weight == doctest::Approx(0.0).epsilon(1e-14));

    // Composition with the Q factors at t = 1.
    const auto [q1, q2] = q_factors(kStrong, 1.0);
    const AmplitudeSet at1 = evolve_amplitudes(kStrong, s1, 1.0);
    CHECK(std::abs(at1.dA - q1 * s1.dA) < 1e-15);
    CHECK(std::abs(at1.dB - q2 * s1.dA) < 1e-15);
    CHECK(std::abs(at1.dC - s1.dC) < 1e-15);
}

TEST_CASE("antisymmetric state is dark at theta = 1") {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const InitialAmplitudes dark(Complex(inv_sqrt2, 0.0), Complex(-inv_sqrt2, 0.0),
                                 Complex(0.0, 0.0));
    const SystemParams p(1.0, 10.0, 1.0, 0.0);
    for (double t = 0.0; t <= 50.0; t += 0.5) {
        const AmplitudeSet a = evolve_amplitudes(p, dark, t);
        CHECK(std::abs(a.dA - dark.dA) < 1e-12);
        CHECK(std::abs(a.dB - dark.dB) < 1e-12);
        CHECK(a.bath_weight < 1e-12);
    }
}

TEST_CASE("angle parametrization") {
    const auto s1 = amplitudes_from_angles(kPi / 4.0, 0.0, AngleConvention::beta_on_c);
    CHECK(s1.dA.real() == doctest::Approx(0.7071067811865476).epsilon(1e-14));
    CHECK(std::abs(s1.dB) < 1e-16);
    CHECK(s1.dC.real() == doctest::Approx(0.7071067811865476).epsilon(1e-14));

    // beta_on_b puts the large weight on |B> for these angles.
    const auto other = amplitudes_from_angles(kPi / 2.5, kPi / 10.0, AngleConvention::beta_on_b);
    CHECK(other.dA.real() == doctest::Approx(0.3090).epsilon(5e-4));
    CHECK(other.dB.real() == doctest::Approx(0.9045).epsilon(5e-4));
    CHECK(other.dC.real() == doctest::Approx(0.2939).epsilon(5e-4));
    CHECK(other.dA.real() == doctest::Approx(std::cos(kPi / 2.5)).epsilon(1e-15));
    CHECK(other.dB.real() ==
          doctest::Approx(std::sin(kPi / 2.5) * std::cos(kPi / 10.0)).epsilon(1e-15));

    const auto pure_a = amplitudes_from_angles(0.0, 1.234, AngleConvention::beta_on_c);
    CHECK(pure_a.dA.real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(pure_a.dB) < 1e-15);
    CHECK(std::abs(pure_a.dC) < 1e-15);
}

TEST_CASE("presets") {
    const auto s1 = preset_amplitudes(Preset::S1);
    CHECK(s1.dA.real() == doctest::Approx(0.7071067811865476).epsilon(1e-14));
    CHECK(std::abs(s1.dB) < 1e-16);

    // S2 carries the large amplitude on |C>; see the note in the
    // implementation for why the other assignment is unphysical here.
    const auto s2 = preset_amplitudes(Preset::S2);
    CHECK(s2.dA.real() == doctest::Approx(std::cos(kPi / 2.5)).epsilon(1e-15));
    CHECK(s2.dB.real() ==
          doctest::Approx(std::sin(kPi / 2.5) * std::sin(kPi / 10.0)).epsilon(1e-15));
    CHECK(s2.dC.real() ==
          doctest::Approx(std::sin(kPi / 2.5) * std::cos(kPi / 10.0)).epsilon(1e-15));
    CHECK(s2.dB.real() == doctest::Approx(0.2939).epsilon(5e-4));
    CHECK(s2.dC.real() == doctest::Approx(0.9045).epsilon(5e-4));
}

TEST_CASE("property: branch choice of the square root is irrelevant") {
    auto rng = seeded_rng(2);
    std::uniform_real_distribution<double> ut(0.0, 30.0);
    for (int i = 0; i < 1000; ++i) {
        const SystemParams p = testing::random_params(rng);
        const double t = ut(rng);
        const Complex kid(p.kappa, p.delta);
        const Complex r = rate_r(p, i % 2 == 0 ? Sign::plus : Sign::minus);
        const Complex a = detail::propagator_from_rate(kid, r, t);
        const Complex b = detail::propagator_from_rate(kid, -r, t);
        CHECK(std::abs(a - b) < 1e-12);
    }
}

TEST_CASE("property: propagator modulus never exceeds 1") {
    auto rng = seeded_rng(3);
    std::uniform_real_distribution<double> ut(0.0, 30.0);
    for (int i = 0; i < 1000; ++i) {
        const SystemParams p = testing::random_params(rng);
        const Sign sign = i % 2 == 0 ? Sign::plus : Sign::minus;
        CHECK(std::abs(propagator_g(p, sign, ut(rng))) <= 1.0 + 1e-9);
    }
}

TEST_CASE("property: atomic norm never exceeds 1 along trajectories") {
    auto rng = seeded_rng(4);
    std::uniform_real_distribution<double> ut(0.0, 30.0);
    for (int i = 0; i < 500; ++i) {
        const SystemParams p = testing::random_params(rng);
        const InitialAmplitudes init = testing::random_initial(rng);
        const AmplitudeSet a = evolve_amplitudes(p, init, ut(rng));
        CHECK(a.atomic_norm() <= 1.0 + 1e-9);
        CHECK(a.bath_weight >= 0.0);
        CHECK(std::abs(a.dC - init.dC) < 1e-15);
    }
}

TEST_CASE("sinhc series agrees with the direct form across the threshold") {
    // |z| = 1e-2 is the switch point; both forms must agree tightly on
    // either side, for real and rotated arguments.
    for (double scale : {0.9, 0.999, 1.001, 1.1}) {
        for (double arg : {0.0, 0.5, 1.3, kPi / 2.0, 2.8}) {
            const Complex z = std::polar(1e-2 * scale, arg);
            const Complex series = detail::sinhc(z);
            const Complex direct = std::sinh(z) / z;
            CHECK(std::abs(series - direct) < 1e-10);
        }
    }
    CHECK(detail::sinhc(Complex(0.0, 0.0)) == Complex(1.0, 0.0));
}

TEST_CASE("propagator is continuous where the rate degenerates") {
    // kappa = 1, gamma0 (1 + theta) = 0.5 makes R exactly 0.
    const SystemParams critical(1.0, 0.25, 1.0, 0.0);
    CHECK(std::abs(rate_r(critical, Sign::plus)) < 1e-12);
    for (double t : {0.1, 1.0, 7.5}) {
        const Complex g = propagator_g(critical, Sign::plus, t);
        const double expected = std::exp(-0.5 * t) * (1.0 + 0.5 * t);
        CHECK(g.real() == doctest::Approx(expected).epsilon(1e-12));
        // Nearby parameters give a nearby propagator.
        const SystemParams nudged(1.0, 0.2500001, 1.0, 0.0);
        CHECK(std::abs(propagator_g(nudged, Sign::plus, t) - g) < 1e-6);
    }
}

TEST_CASE("bath weight clamps tiny negatives and rejects real violations") {
    const double third = std::sqrt(1.0 / 3.0);
    const AmplitudeSet ok = AmplitudeSet::from_amplitudes(
        0.0, Complex(third, 0.0), Complex(third, 0.0), Complex(third, 0.0));
    CHECK(ok.bath_weight == 0.0);
    CHECK_THROWS_AS(AmplitudeSet::from_amplitudes(0.0, Complex(1.0, 0.0), Complex(0.1, 0.0),
                                                  Complex(0.0, 0.0)),
                    std::domain_error);
}

}  // TEST_SUITE

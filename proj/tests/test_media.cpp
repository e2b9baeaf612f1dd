#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "superray/media.hpp"

using namespace superray;

namespace {

// Independent derivative oracle: central finite differences.
template <typename F>
double central_difference(F&& f, double omega, double h) {
    return (f(omega + h) - f(omega - h)) / (2.0 * h);
}

} // namespace

TEST_SUITE("media") {

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(PlasmaBandMedium(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(PlasmaBandMedium(1.0, -2.0), std::domain_error);
    CHECK_THROWS_AS(WeakShockPair(1.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(WeakShockPair(-1.0, 1.0, 1e-3), std::domain_error);
    CHECK_THROWS_AS(WeakShockPair(1.0, 0.0, 1e-3), std::domain_error);
    CHECK(WeakShockPair(1.0, 1.0, 0.2).weak_regime() == false);
    CHECK(WeakShockPair(1.0, 1.0, 0.1).weak_regime() == true);
}

TEST_CASE("band model: zero crossing and simple values") {
    const PlasmaBandMedium medium(1.0, 1.0);
    CHECK(medium.epsilon(2.0) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(medium.epsilon_at_x(0.0) == 0.0);

    const PlasmaBandMedium skewed(2.7, 0.31);
    CHECK(std::abs(skewed.epsilon(skewed.omega_tilde())) <= 4e-16 * skewed.a);
    CHECK(skewed.epsilon_at_x(0.0) == 0.0);

    // high-frequency limit -> a
    CHECK(std::abs(medium.epsilon(1e6 * medium.omega0) - medium.a) <= 1e-11);

    CHECK_THROWS_AS(medium.epsilon(0.0), std::domain_error);
    CHECK_THROWS_AS(medium.epsilon(-1.0), std::domain_error);
    CHECK_THROWS_AS(medium.depsilon_domega(0.0), std::domain_error);
}

TEST_CASE("band model: epsilon negative below the crossing") {
    const PlasmaBandMedium medium(1.5, 2.0);
    CHECK(medium.epsilon(0.5 * medium.omega_tilde()) < 0.0);
    CHECK(medium.epsilon_at_x(-0.25) < 0.0);
}

TEST_CASE("linearized pair: endpoint and arithmetic examples") {
    const WeakShockPair pair(1.0, 1.0, 1e-3);
    const auto [e1_edge, e2_edge] = epsilon_pair_linearized(pair, 1.0);
    CHECK(e1_edge == doctest::Approx(2e-3).epsilon(1e-15));
    CHECK(e2_edge == 0.0);

    const auto [e1, e2] = epsilon_pair_linearized(pair, 1.001);
    CHECK(e1 == doctest::Approx(0.004).epsilon(1e-12));
    CHECK(e2 == doctest::Approx(0.002).epsilon(1e-12));

    CHECK_THROWS_AS(pair.epsilon1(0.0), std::domain_error);
}

TEST_CASE("linearized pair: eps1 - eps2 = 2 a delta at any frequency") {
    const WeakShockPair pair(1.7, 0.8, 4e-3);
    const double gap = 2.0 * pair.a * pair.delta;
    for (double x : {1e-9, 1e-4, 0.01, 0.3, 2.0}) {
        const double diff = pair.epsilon1_at_x(x) - pair.epsilon2_at_x(x);
        CHECK(std::abs(diff - gap) <= 1e-10 * gap);
    }
}

TEST_CASE("linearized vs exact: second-order agreement near the edge") {
    const WeakShockPair pair(1.0, 1.0, 1e-3);
    const PlasmaBandMedium exact = pair.exact_side2();

    // 1.5% linearization gap at 1.01 omega_tilde, under the 2% mark.
    const double lin = pair.epsilon2(1.01);
    const double full = exact.epsilon(1.01);
    CHECK(std::abs(lin - full) / full < 0.02);
    CHECK(std::abs(lin - full) / full == doctest::Approx(0.0150249).epsilon(1e-3));

    // Taylor remainder bound over the whole near-edge window.
    for (int i = 0; i <= 200; ++i) {
        const double x = 0.05 * i / 200.0;
        const double bound = 3.0 * pair.a * x * x;
        CHECK(std::abs(pair.epsilon2_at_x(x) - exact.epsilon_at_x(x)) <= bound + 1e-18);
        if (x > 1e-6) {
            const double omega = 1.0 + x;
            CHECK(std::abs(pair.epsilon2(omega) - exact.epsilon(omega)) <= bound + 1e-15);
        }
    }
}

TEST_CASE("exact sides reproduce the pair at the band edge") {
    const WeakShockPair pair(1.3, 2.0, 5e-3);
    const PlasmaBandMedium side1 = pair.exact_side1();
    const PlasmaBandMedium side2 = pair.exact_side2();
    CHECK(side2.omega_tilde() == doctest::Approx(pair.omega_tilde).epsilon(1e-15));
    CHECK(side1.epsilon(pair.omega_tilde) ==
          doctest::Approx(2.0 * pair.a * pair.delta).epsilon(1e-10));
}

TEST_CASE("analytic derivatives match finite differences") {
    const PlasmaBandMedium medium(1.0, 1.0);
    CHECK(medium.depsilon_domega(medium.omega0) == doctest::Approx(2.0).epsilon(1e-15));

    const WeakShockPair pair(1.2, 0.9, 2e-3);
    CHECK(pair.depsilon_domega() == doctest::Approx(2.0 * 1.2 / 0.9).epsilon(1e-15));

    // log-spaced grid straddling the band edge
    const PlasmaBandMedium exact(1.4, 1.1);
    for (int i = 0; i < 100; ++i) {
        const double omega = exact.omega_tilde() / 3.0 *
                             std::pow(90.0, static_cast<double>(i) / 99.0);
        const double h = 1e-6 * omega;
        const double fd =
            central_difference([&](double w) { return exact.epsilon(w); }, omega, h);
        CHECK(std::abs(fd - exact.depsilon_domega(omega)) <=
              1e-6 * std::abs(exact.depsilon_domega(omega)));

        const double fd1 =
            central_difference([&](double w) { return pair.epsilon1(w); }, omega, h);
        CHECK(std::abs(fd1 - pair.depsilon_domega()) <= 1e-6 * pair.depsilon_domega());
    }
}

} // TEST_SUITE

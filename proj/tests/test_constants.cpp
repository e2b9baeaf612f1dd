#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "superray/constants.hpp"

using namespace superray;

TEST_SUITE("constants") {

TEST_CASE("constants are positive and mutually consistent") {
    CHECK(kCgs.electron_charge_esu > 0.0);
    CHECK(kCgs.electron_mass_g > 0.0);
    CHECK(kCgs.hbar_ev_s > 0.0);
    CHECK(kCgs.hbar_erg_s > 0.0);
    CHECK(kCgs.speed_of_light_cm_s > 0.0);

    // hbar(eV s) * (1 eV in erg) must reproduce hbar(erg s).
    const double product = kCgs.hbar_ev_s * kCgs.erg_per_ev;
    CHECK(std::abs(product - kCgs.hbar_erg_s) <= 1e-12 * kCgs.hbar_erg_s);
}

TEST_CASE("plasma frequency: endpoints and frozen values") {
    CHECK(plasma_frequency(0.0) == 0.0);
    CHECK_THROWS_AS(plasma_frequency(-1.0), std::domain_error);

    // Direct evaluation of sqrt(4 pi n e^2 / m) with the tabulated constants.
    CHECK(plasma_frequency(1e20) == doctest::Approx(5.64146022964e14).epsilon(1e-9));
    CHECK(omega_to_ev(plasma_frequency(1e20)) == doctest::Approx(0.371327657782).epsilon(1e-9));
    CHECK(omega_to_ev(plasma_frequency(1e21)) == doctest::Approx(1.17424115681).epsilon(1e-9));
}

TEST_CASE("plasma frequency scales as sqrt(n)") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> exponent(14.0, 24.0);
    for (int i = 0; i < 200; ++i) {
        const double n = std::pow(10.0, exponent(rng));
        const double w1 = plasma_frequency(n);
        const double w2 = plasma_frequency(4.0 * n);
        CHECK(std::abs(w2 - 2.0 * w1) <= 1e-12 * w2);
        CHECK(plasma_frequency(1.5 * n) > w1); // monotone
    }
}

TEST_CASE("eV conversions") {
    CHECK(omega_to_ev(0.0) == 0.0);
    CHECK(ev_to_omega(1.0) == doctest::Approx(1.51926744788e15).epsilon(1e-9));
    CHECK_THROWS_AS(omega_to_ev(-1.0), std::domain_error);
    CHECK_THROWS_AS(ev_to_omega(-0.5), std::domain_error);
    CHECK_THROWS_AS(omega_to_ev(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(ev_to_omega(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("eV conversions invert each other") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> exponent(-3.0, 18.0);
    for (int i = 0; i < 500; ++i) {
        const double x = std::pow(10.0, exponent(rng));
        const double roundtrip = ev_to_omega(omega_to_ev(x));
        CHECK(std::abs(roundtrip - x) <= 1e-14 * x);
    }
}

} // TEST_SUITE

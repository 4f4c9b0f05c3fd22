#include "biaxial.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace lmg;

TEST_CASE("rotation angle branches") {
    CHECK(rotation_angle(2.0).theta == 0.0);
    CHECK(rotation_angle(1.0).theta == 0.0); // arccos 1 = 0, branches agree
    CHECK(rotation_angle(0.5).theta == doctest::Approx(1.0471976).epsilon(1e-7));
    CHECK_THROWS_AS(rotation_angle(0.0), DomainError);
    CHECK_THROWS_AS(rotation_angle(-1.0), DomainError);
}

TEST_CASE("holstein-primakoff coefficients at hand-checked points") {
    SUBCASE("gamma=0, h=2: e=-1, delta=3/2, gamma_coef=-1/4") {
        const auto coef =
            hp_coefficients(validate_biaxial(0.0, 2.0, 100), rotation_angle(2.0));
        CHECK(coef.e == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(coef.delta == doctest::Approx(1.5).epsilon(1e-15));
        CHECK(coef.gamma_coef == doctest::Approx(-0.25).epsilon(1e-15));
    }
    SUBCASE("gamma=1, h=2: isotropic, no pair terms") {
        const auto coef =
            hp_coefficients(validate_biaxial(1.0, 2.0, 100), rotation_angle(2.0));
        CHECK(coef.gamma_coef == 0.0);
    }
    SUBCASE("gamma = h^2 = cos^2 theta kills the pair terms below h = 1") {
        const auto coef =
            hp_coefficients(validate_biaxial(0.25, 0.5, 100), rotation_angle(0.5));
        CHECK(coef.gamma_coef == doctest::Approx(0.0).epsilon(1e-16));
    }
}

TEST_CASE("epsilon closed forms") {
    CHECK(epsilon_biaxial(validate_biaxial(1.0, 2.0, 100)).epsilon == 0.0);
    CHECK(epsilon_biaxial(validate_biaxial(1.0, 2.0, 100)).t_sq == 0.0);
    CHECK(epsilon_biaxial(validate_biaxial(0.0, 2.0, 100)).epsilon ==
          doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    // critical corner gamma = 1, h = 1: defined by the limit along h -> 1
    const auto corner = epsilon_biaxial(validate_biaxial(1.0, 1.0, 100));
    CHECK(corner.epsilon == -1.0);
    CHECK(corner.t_sq == 1.0);
    CHECK(corner.delta_d == 0.0);
}

TEST_CASE("branch continuity at h = 1 for every gamma < 1") {
    for (int gi = 0; gi <= 9; ++gi) {
        const double gamma = 0.1 * gi; // up to 0.9
        for (int k = 3; k <= 8; ++k) {
            const double delta_h = std::pow(10.0, -k);
            const double below =
                epsilon_biaxial(validate_biaxial(gamma, 1.0 - delta_h, 100)).epsilon;
            const double above =
                epsilon_biaxial(validate_biaxial(gamma, 1.0 + delta_h, 100)).epsilon;
            CHECK(below == doctest::Approx(-1.0).epsilon(50.0 * delta_h));
            CHECK(above == doctest::Approx(-1.0).epsilon(50.0 * delta_h));
        }
        CHECK(epsilon_biaxial(validate_biaxial(gamma, 1.0, 100)).epsilon ==
              doctest::Approx(-1.0).epsilon(1e-14));
    }
}

TEST_CASE("epsilon equals 2 Gamma / Delta wherever Delta > 1e-10") {
    double worst = 0.0;
    for (int gi = 0; gi <= 50; ++gi) {
        for (int hi = 1; hi <= 90; ++hi) {
            const double gamma = gi / 50.0;
            const double h = 0.03 + static_cast<double>(hi) * 0.033;
            const BiaxialParams params = validate_biaxial(gamma, h, 100);
            const auto coef = hp_coefficients(params, rotation_angle(h));
            if (coef.delta <= 1e-10) continue;
            const double ratio = 2.0 * coef.gamma_coef / coef.delta;
            worst = std::max(worst,
                             std::abs(ratio - epsilon_biaxial(params).epsilon));
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("sigma is never positive and delta_d is never negative") {
    for (int gi = 0; gi <= 20; ++gi) {
        for (int hi = 1; hi <= 60; ++hi) {
            const auto sol =
                epsilon_biaxial(validate_biaxial(gi / 20.0, 0.05 * hi, 100));
            CHECK(sol.sigma <= 0.0);
            CHECK(sol.delta_d >= 0.0);
            CHECK(std::abs(sol.epsilon) <= 1.0);
        }
    }
}

TEST_CASE("phase depends on t only through t_sq") {
    // negating the root of tanh 2x = eps leaves every even power unchanged
    for (double eps : {-0.7, -0.2, 0.4, 0.9}) {
        const double t_sq_pos = tanh_sq_from_epsilon(eps);
        const double t_sq_neg = tanh_sq_from_epsilon(-eps);
        CHECK(t_sq_pos == t_sq_neg);
        CHECK(geometric_phase_series(t_sq_pos, 64).phi_g ==
              geometric_phase_series(t_sq_neg, 64).phi_g);
    }
}

TEST_CASE("biaxial phase composition") {
    SUBCASE("zero squeezing gives exactly pi") {
        const PhaseResult r = biaxial_phase(validate_biaxial(1.0, 2.0, 123));
        CHECK(r.phi_g == std::numbers::pi);
        CHECK(r.truncation_m == 61);
    }
    SUBCASE("gamma=0, h=2, N=1000: n_mean from the closed-form mean") {
        // eps = -1/3 -> t_sq = (1 - sqrt(8/9))/(-1/3) squared; n_mean = t_sq/(1-t_sq)
        const PhaseResult r = biaxial_phase(validate_biaxial(0.0, 2.0, 1000));
        const double t_sq = tanh_sq_from_epsilon(-1.0 / 3.0);
        CHECK(r.n_mean == doctest::Approx(untruncated_mean(t_sq)).epsilon(1e-12));
        CHECK(r.n_mean == doctest::Approx(0.0303301).epsilon(1e-5));
    }
    SUBCASE("critical point: |phi_g| of order N") {
        const PhaseResult r = biaxial_phase(validate_biaxial(0.5, 1.0, 200));
        CHECK(r.phi_g < 0.0);
        CHECK(std::abs(r.phi_g) > 100.0);
        CHECK(std::abs(r.phi_g) < 400.0);
    }
    SUBCASE("truncation override") {
        const PhaseResult fixed = biaxial_phase(validate_biaxial(0.5, 1.0, 501), 100);
        CHECK(fixed.truncation_m == 100);
        const PhaseResult dflt = biaxial_phase(validate_biaxial(0.5, 1.0, 501));
        CHECK(dflt.truncation_m == 250);
        CHECK(std::abs(dflt.phi_g) > std::abs(fixed.phi_g)); // critical series grows with M
    }
}

#include "series.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace lmg;
namespace {

// Independent oracle: weights from explicit double-factorial ratios
// (2n-1)!!/(2n)!! accumulated term by term, no shared code with the
// implementation's recurrence-with-renormalization path.
double brute_force_mean(double t_sq, long m) {
    long double sum_w = 0.0L;
    long double sum_2n_w = 0.0L;
    for (long n = 0; n <= m; ++n) {
        long double odd = 1.0L, even = 1.0L;
        for (long k = 1; k <= n; ++k) {
            odd *= static_cast<long double>(2 * k - 1);
            even *= static_cast<long double>(2 * k);
        }
        const long double w = odd / even * powl(static_cast<long double>(t_sq), n);
        sum_w += w;
        sum_2n_w += 2.0L * n * w;
    }
    return static_cast<double>(sum_2n_w / sum_w);
}

} // namespace

TEST_CASE("tanh_sq_from_epsilon solves the quadratic with the |t| <= 1 root") {
    CHECK(tanh_sq_from_epsilon(0.0) == 0.0);
    CHECK(tanh_sq_from_epsilon(1.0) == 1.0);
    CHECK(tanh_sq_from_epsilon(-1.0) == 1.0);

    // eps = -0.6 -> t = -1/3, t_sq = 1/9; identity 2t/(1+t^2) = eps
    const double t_sq = tanh_sq_from_epsilon(-0.6);
    CHECK(t_sq == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
    const double t = -std::sqrt(t_sq);
    CHECK(2.0 * t / (1.0 + t * t) == doctest::Approx(-0.6).epsilon(1e-13));

    CHECK_THROWS_AS(tanh_sq_from_epsilon(1.0000001), DomainError);
    CHECK_THROWS_AS(tanh_sq_from_epsilon(-2.0), DomainError);
}

TEST_CASE("tanh identity holds across the whole stability interval") {
    for (int k = -1000; k <= 1000; ++k) {
        const double eps = static_cast<double>(k) / 1000.0;
        const double t_sq = tanh_sq_from_epsilon(eps);
        CHECK(t_sq >= 0.0);
        CHECK(t_sq <= 1.0);
        const double t = (eps < 0.0 ? -1.0 : 1.0) * std::sqrt(t_sq);
        CHECK(2.0 * t / (1.0 + t * t) == doctest::Approx(eps).epsilon(5e-13));
    }
}

TEST_CASE("weight table examples") {
    SUBCASE("t_sq = 0 concentrates on n = 0") {
        const WeightTable table = weight_table(0.0, 5);
        REQUIRE(table.weights.size() == 6);
        CHECK(table.weights[0] == 1.0);
        for (size_t n = 1; n < 6; ++n) CHECK(table.weights[n] == 0.0);
    }
    SUBCASE("t_sq = 1, m = 2: unnormalized (1, 1/2, 3/8)") {
        const WeightTable table = weight_table(1.0, 2);
        REQUIRE(table.weights.size() == 3);
        CHECK(table.weights[0] == doctest::Approx(8.0 / 15.0).epsilon(1e-15));
        CHECK(table.weights[1] == doctest::Approx(4.0 / 15.0).epsilon(1e-15));
        CHECK(table.weights[2] == doctest::Approx(3.0 / 15.0).epsilon(1e-15));
    }
    SUBCASE("recurrence ratio (2n-1)/(2n) * t_sq") {
        const WeightTable table = weight_table(0.25, 40);
        for (long n = 1; n <= 40; ++n) {
            const double ratio = table.weights[static_cast<size_t>(n)] /
                                 table.weights[static_cast<size_t>(n - 1)];
            CHECK(ratio == doctest::Approx(0.25 * (2.0 * n - 1.0) / (2.0 * n)).epsilon(1e-12));
        }
    }
}

TEST_CASE("weight table invariants on a t_sq grid") {
    for (double t_sq : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        const WeightTable table = weight_table(t_sq, 300);
        CHECK(table.weights[0] > 0.0);
        double sum = 0.0;
        for (double w : table.weights) {
            CHECK(w >= 0.0);
            sum += w;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        // derived mean stays inside [0, 2m]
        const PhaseResult r = geometric_phase_series(t_sq, 300);
        CHECK(r.n_mean >= 0.0);
        CHECK(r.n_mean <= 600.0);
    }
}

TEST_CASE("geometric phase series examples") {
    SUBCASE("t_sq = 0 gives phi_g = pi for any m") {
        for (long m : {0L, 1L, 7L, 1000L}) {
            const PhaseResult r = geometric_phase_series(0.0, m);
            CHECK(r.n_mean == 0.0);
            CHECK(r.phi_g == std::numbers::pi);
            CHECK(r.truncation_m == m);
        }
    }
    SUBCASE("t_sq = 1, m = 2: n_mean = 4/3, phi_g = -pi/3") {
        const PhaseResult r = geometric_phase_series(1.0, 2);
        CHECK(r.n_mean == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
        CHECK(r.phi_g == doctest::Approx(-std::numbers::pi / 3.0).epsilon(1e-15));
        CHECK(r.phi_g == doctest::Approx(-1.0471976).epsilon(1e-7));
    }
    SUBCASE("t_sq = 1/9, m = 500 converges to 1/8") {
        const PhaseResult r = geometric_phase_series(1.0 / 9.0, 500);
        CHECK(r.n_mean == doctest::Approx(0.125).epsilon(1e-12));
        CHECK(r.phi_g == doctest::Approx(0.875 * std::numbers::pi).epsilon(1e-12));
        CHECK(r.phi_g == doctest::Approx(2.7488936).epsilon(1e-7));
    }
    SUBCASE("phi_g = pi (1 - n_mean) exactly") {
        for (double t_sq : {0.3, 0.99, 1.0}) {
            const PhaseResult r = geometric_phase_series(t_sq, 137);
            CHECK(r.phi_g == std::numbers::pi * (1.0 - r.n_mean));
        }
    }
}

TEST_CASE("series matches the brute-force double-factorial oracle") {
    for (double t_sq : {0.05, 0.3, 0.7, 1.0}) {
        for (long m : {0L, 1L, 2L, 17L, 300L}) {
            const PhaseResult r = geometric_phase_series(t_sq, m);
            CHECK(r.n_mean == doctest::Approx(brute_force_mean(t_sq, m)).epsilon(1e-12));
        }
    }
}

TEST_CASE("untruncated mean closed form") {
    CHECK(untruncated_mean(0.0) == 0.0);
    CHECK(untruncated_mean(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    // t_sq from eps = -0.2
    const double t_sq = tanh_sq_from_epsilon(-0.2);
    CHECK(t_sq == doctest::Approx(0.0102051443).epsilon(1e-8));
    CHECK(untruncated_mean(t_sq) == doctest::Approx(0.0103103).epsilon(1e-5));
    CHECK_THROWS_AS(untruncated_mean(1.0), DomainError);
    CHECK_THROWS_AS(untruncated_mean(-0.1), DomainError);
}

TEST_CASE("truncated mean converges monotonically to the closed form") {
    for (double t_sq : {0.1, 0.5, 0.9}) {
        const double limit = untruncated_mean(t_sq);
        double previous_error = limit; // n_mean(0) = 0
        bool reached = false;
        for (long m = 1; m <= 2000; m *= 2) {
            const double error = limit - geometric_phase_series(t_sq, m).n_mean;
            CHECK(error >= -1e-13);        // truncation only removes tail mass
            CHECK(error <= previous_error + 1e-13);
            previous_error = error;
            if (std::abs(error) < 1e-10) {
                reached = true;
                break;
            }
        }
        CHECK(reached);
    }
}

TEST_CASE("critical series: n_mean(m) = (2/3) m exactly, including m = 10^6") {
    // At t_sq = 1 the sums obey sum 2n a_n = (2/3) m (2m+1) a_m, so the
    // truncated mean is (2/3) m with no correction at any m.
    for (long m : {1L, 2L, 10L, 1000L, 1000000L}) {
        const PhaseResult r = geometric_phase_series(1.0, m);
        CHECK(std::isfinite(r.n_mean));
        CHECK(r.n_mean == doctest::Approx(2.0 / 3.0 * static_cast<double>(m))
                              .epsilon(1e-12));
    }
}

TEST_CASE("series rejects out-of-domain inputs") {
    CHECK_THROWS_AS(geometric_phase_series(-0.1, 10), DomainError);
    CHECK_THROWS_AS(geometric_phase_series(1.1, 10), DomainError);
    CHECK_THROWS_AS(geometric_phase_series(0.5, -1), DomainError);
    CHECK_THROWS_AS(weight_table(2.0, 10), DomainError);
}

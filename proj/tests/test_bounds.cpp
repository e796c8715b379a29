#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "burgess/bounds.hpp"

using namespace burgess;

TEST_CASE("D_of") {
    CHECK(D_of(0) == 0);
    CHECK(D_of(3) == 6);
    CHECK(D_of(7) == 28);
}

TEST_CASE("burgess_classical exponents") {
    auto r1 = burgess_classical(1e4, 1e3, 1);
    CHECK(r1.h_exp == doctest::Approx(0.0)); // Polya-Vinogradov shape
    CHECK(r1.q_exp == doctest::Approx(0.5));
    CHECK(r1.log_pow == 1);

    auto r2 = burgess_classical(1e4, 1e3, 2);
    CHECK(r2.h_exp == doctest::Approx(0.5));
    CHECK(r2.q_exp == doctest::Approx(3.0 / 16.0));

    CHECK(burgess_classical(1e4, 1e3, 4000).q_exp < 1e-3); // q-exponent -> 0
}

TEST_CASE("enflo_bound") {
    double eps = 0.01;
    auto d0 = enflo_bound(1e4, 1e3, 2, 0, eps);
    auto classical = burgess_classical(1e4, 1e3, 2);
    CHECK(d0.h_exp == doctest::Approx(classical.h_exp));
    CHECK(d0.q_exp == doctest::Approx(classical.q_exp + eps));

    CHECK(enflo_bound(1e4, 1e3, 1, 2, eps).h_exp == doctest::Approx(0.75));

    auto v = enflo_bound(1e10, std::pow(1e10, 0.8), 1, 2, eps);
    CHECK(v.valid); // 0.8 < 3/4 + 1/4 = 1
}

TEST_CASE("chang_refined_bound") {
    auto d0 = chang_refined_bound(1e4, 1e3, 2, 0);
    CHECK(d0.q_exp == doctest::Approx(burgess_classical(1e4, 1e3, 2).q_exp));
    CHECK(d0.log_pow == 2);

    CHECK(chang_refined_bound(1e6, 1e3, 4, 2).q_exp == doctest::Approx(1.0 / 8.0));

    CHECK_FALSE(chang_refined_bound(1e6, 1e3, 3, 2).nontrivial); // r = D
    CHECK(chang_refined_bound(1e6, 1e3, 4, 2).nontrivial);       // r = D + 1
}

TEST_CASE("vinogradov_bound") {
    double eps = 0.01;
    CHECK(vinogradov_bound(1e6, 1e3, 2, 1, eps).q_exp == doctest::Approx(0.25 + eps));
    CHECK(vinogradov_bound(1e6, 1e3, 4, 2, eps).q_exp == doctest::Approx(0.125 + eps));
    CHECK_FALSE(vinogradov_bound(1e6, 1e3, 3, 2, eps).valid); // r <= D

    SUBCASE("unconditional flags") {
        CHECK(vinogradov_bound(1e6, 1e3, 5, 2, eps).unconditional);
        CHECK(vinogradov_bound(1e6, 1e3, 7, 3, eps).unconditional);
        CHECK(vinogradov_bound(1e8, 1e3, 12, 4, eps).unconditional);  // r >= d(d-1)
        CHECK_FALSE(vinogradov_bound(1e8, 1e3, 11, 4, eps).unconditional);
    }
}

TEST_CASE("seam with chang at r = D+1") {
    for (int d = 0; d <= 6; ++d) {
        int r = D_of(d) + 1;
        auto vin = vinogradov_bound(1e6, 1e3, r, d, 0.0);
        auto chang = chang_refined_bound(1e6, 1e3, r, d);
        CHECK(std::abs(vin.q_exp - chang.q_exp) <= 1e-12);
    }
}

TEST_CASE("dominance for r > D+1") {
    for (int d = 1; d <= 3; ++d) {
        int D = D_of(d);
        for (int r = D + 2; r <= D + 6; ++r) {
            double q = 1e8, H = std::pow(q, 0.45);
            auto vin = vinogradov_bound(q, H, r, d, 0.01);
            auto chang = chang_refined_bound(q, H, r, d);
            REQUIRE(vin.valid);
            REQUIRE(chang.valid);
            CHECK(vin.value <= chang.value);
        }
    }
}

TEST_CASE("intermediate_bound") {
    double eps = 0.0;
    auto base = vinogradov_bound(1e8, 1e4, 11, 4, eps);
    auto zero = intermediate_bound(1e8, 1e4, 11, 4, eps, 0.0);
    CHECK(zero.q_exp == doctest::Approx(base.q_exp)); // delta = 0 collapses

    CHECK(intermediate_bound(1e8, 1e4, 11, 4, eps, 4.0).q_exp == doctest::Approx(1.0 / 22.0));

    CHECK_FALSE(intermediate_bound(1e8, 1e4, 12, 4, eps, 1.0).valid); // r = d(d-1)
    CHECK_FALSE(intermediate_bound(1e8, 1e4, 10, 4, eps, 1.0).valid); // r = D
    CHECK_FALSE(intermediate_bound(1e8, 1e4, 5, 3, eps, 1.0).valid);  // d < 4
}

TEST_CASE("delta formulas") {
    CHECK(delta_chang_refined(0.1, 2) == doctest::Approx(0.0025));
    CHECK(delta_chang(0.1, 2) == doctest::Approx(0.01 / 52.8)); // ~1.894e-4, ~8x smaller
    double kappa = 1e-4;
    for (int d = 0; d <= 6; ++d) {
        double ratio = delta_vin(kappa, d) / (kappa * kappa);
        CHECK(ratio >= 0.98);
        CHECK(ratio <= 1.0);
    }
    CHECK_THROWS_AS(delta_vin(0.0, 2), std::invalid_argument);
}

TEST_CASE("optimal r") {
    CHECK(optimal_r_chang(0.05, 2) == 40); // (D+1)/(2 kappa) exactly
    CHECK(optimal_r_vin(0.05, 2) == 14);   // 3 + (1+sqrt(1.6))/0.2 = 14.32...
    // kappa -> 0: r grows without bound and delta at that r tends to kappa^2
    CHECK(optimal_r_vin(1e-6, 3) > optimal_r_vin(1e-3, 3));
    CHECK(delta_vin(1e-6, 3) / 1e-12 == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("report reproduces its own value from the exponent triple") {
    double q = 1e7, H = 1e3;
    for (const auto& rep :
         {burgess_classical(q, H, 3), chang_refined_bound(q, H, 5, 2),
          vinogradov_bound(q, H, 5, 2, 0.01), enflo_bound(q, H, 2, 1, 0.01)}) {
        double recomputed =
            std::pow(H, rep.h_exp) * std::pow(q, rep.q_exp) * std::pow(std::log(q), rep.log_pow);
        CHECK(recomputed == doctest::Approx(rep.value).epsilon(1e-12));
    }
}

TEST_CASE("best_bound") {
    SUBCASE("d=0 selects the classical family") {
        auto rep = best_bound(1e15, std::pow(1e15, 0.6), 0, 0.01);
        CHECK(rep.theorem == "burgess_classical");
        CHECK(rep.value < std::pow(1e15, 0.6));
    }
    SUBCASE("H >= q falls back to the trivial bound") {
        auto rep = best_bound(1e4, 2e4, 1, 0.01);
        CHECK(rep.theorem == "trivial");
        CHECK(rep.value == doctest::Approx(2e4));
    }
    SUBCASE("d=1, short H: winning q-exponent at most 1/4 + eps") {
        auto rep = best_bound(1e9, std::pow(1e9, 0.4), 1, 0.01);
        CHECK(rep.valid);
        CHECK(rep.q_exp <= 0.25 + 0.01 + 1e-12);
        CHECK(rep.value < std::pow(1e9, 0.4)); // beats trivial
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(burgess_classical(1e4, -1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(burgess_classical(1e4, 1e3, 0), std::invalid_argument);
    CHECK_THROWS_AS(D_of(-1), std::invalid_argument);
}

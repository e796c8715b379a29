#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "burgess/errors.hpp"
#include "burgess/modular.hpp"
#include "burgess/sums.hpp"

using namespace burgess;

namespace {

// Independent oracle: evaluate chi(F_x(m)) via the product of character
// values, bypassing the exponent-bucket route used by complete_sum.
std::complex<double> complete_sum_oracle(const DirichletCharacter& chi,
                                         const std::vector<std::int64_t>& x) {
    std::complex<double> acc;
    std::uint32_t delta = chi.order();
    for (std::int64_t m = 1; m <= chi.q(); ++m) {
        std::complex<double> term(1, 0);
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::uint32_t mult = (i % 2 == 0) ? delta - 1 : 1;
            for (std::uint32_t k = 0; k < mult; ++k) term *= chi(m + x[i]);
        }
        acc += term;
    }
    return acc;
}

} // namespace

TEST_CASE("mixed_sum basics, q=7") {
    auto chi = make_character(7, 3);

    SUBCASE("full-period orthogonality") {
        CHECK(mixed_sum(chi, PhasePolynomial::zero(0), 0, 7).magnitude < 1e-9);
    }
    SUBCASE("gauss sum magnitude") {
        auto f = PhasePolynomial::rational({0, 1}, 7);
        auto s = mixed_sum(chi, f, 0, 7);
        CHECK(std::abs(s.magnitude - std::sqrt(7.0)) < 1e-6 * std::sqrt(7.0));
    }
    SUBCASE("empty range") {
        auto s = mixed_sum(chi, PhasePolynomial::rational({1, 2, 3}, 5), 10, 0);
        CHECK(s.magnitude == 0.0);
        CHECK(s.terms == 0);
    }
    SUBCASE("principal character rejected") {
        CHECK_THROWS_AS(mixed_sum(make_character(7, 0), PhasePolynomial::zero(0), 0, 7),
                        std::invalid_argument);
    }
}

TEST_CASE("plain_sum q=7 j=3, N=0 H=3") {
    auto chi = make_character(7, 3);
    auto s = plain_sum(chi, 0, 3);
    CHECK(std::abs(s.value - std::complex<double>(1, 0)) < 1e-9); // 1 + 1 - 1
}

TEST_CASE("polya-vinogradov sanity scan") {
    for (std::uint32_t q : {101u, 499u}) {
        auto chi = make_character(q, 1);
        // prefix sums make the full (N, H) scan cheap
        std::vector<std::complex<double>> pre(2 * q + 1);
        for (std::uint32_t n = 1; n <= 2 * q; ++n) pre[n] = pre[n - 1] + chi(n);
        double limit = std::sqrt(static_cast<double>(q)) * std::log(static_cast<double>(q));
        double worst = 0;
        for (std::uint32_t N = 0; N < q; ++N)
            for (std::uint32_t H = 1; H <= q; ++H)
                worst = std::max(worst, std::abs(pre[N + H] - pre[N]));
        CHECK(worst <= limit);
        // spot check the prefix oracle against plain_sum
        CHECK(std::abs(plain_sum(chi, 5, 40).value - (pre[45] - pre[5])) < 1e-9);
    }
}

TEST_CASE("build_burgess_poly") {
    std::vector<std::int64_t> a{5, 5}, b{1, 2}, c{1, 2, 2, 1};

    auto F = build_burgess_poly(a, 2, 7);
    CHECK(F.degree == 2);
    REQUIRE(F.roots.size() == 1);
    CHECK(F.roots[0] == std::pair<std::uint32_t, std::uint32_t>{5, 2});

    auto G = build_burgess_poly(b, 2, 7);
    CHECK(G.degree == 2);
    CHECK(G.roots.size() == 2);

    auto Hp = build_burgess_poly(c, 3, 7);
    CHECK(Hp.degree == 6);
    REQUIRE(Hp.roots.size() == 2);
    CHECK(Hp.roots[0].second == 3); // positions 1,3 give 2, positions 2,4 give 1
    CHECK(Hp.roots[1].second == 3);

    CHECK_THROWS_AS(build_burgess_poly(a, 1, 7), std::invalid_argument);
}

TEST_CASE("is_perfect_power") {
    std::vector<std::int64_t> a{5, 5}, b{1, 2}, c{1, 2, 2, 1};
    CHECK(is_perfect_power(build_burgess_poly(a, 2, 7)));
    CHECK_FALSE(is_perfect_power(build_burgess_poly(b, 2, 7)));
    CHECK(is_perfect_power(build_burgess_poly(c, 3, 7)));
}

TEST_CASE("complete_sum against the direct oracle, q=7") {
    auto chi = make_character(7, 3); // order 2

    std::vector<std::int64_t> x12{1, 2};
    auto s = complete_sum(chi, x12);
    CHECK(std::abs(s.value - std::complex<double>(-1, 0)) < 1e-9);
    CHECK(std::abs(s.value - complete_sum_oracle(chi, x12)) < 1e-9);

    // chi((m+3)^2) = 1 except the single m in [1,7] with 7 | m+3
    std::vector<std::int64_t> x33{3, 3};
    auto t = complete_sum(chi, x33);
    CHECK(std::abs(t.value - std::complex<double>(6, 0)) < 1e-9);
    CHECK(std::abs(t.value - complete_sum_oracle(chi, x33)) < 1e-9);
}

TEST_CASE("complete_sum matches oracle on random tuples, q=13") {
    auto chi = make_character(13, 4); // order 3
    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; ++k) {
        std::vector<std::int64_t> x(4);
        for (auto& v : x) v = 1 + static_cast<std::int64_t>(rng() % 13);
        CHECK(std::abs(complete_sum(chi, x).value - complete_sum_oracle(chi, x)) < 1e-9);
    }
}

TEST_CASE("weil_report examples") {
    auto chi7 = make_character(7, 3);
    std::vector<std::int64_t> bad{5, 5}, good{1, 2};

    auto rb = weil_report(chi7, bad);
    CHECK_FALSE(rb.applicable);
    CHECK(rb.bound == 7.0);

    auto rg = weil_report(chi7, good);
    CHECK(rg.applicable);
    CHECK(rg.bound == doctest::Approx(std::sqrt(7.0)));
    CHECK(rg.magnitude == doctest::Approx(1.0));

    // r=3, order 2, q=101: degree r*Delta = 6, bound 5*sqrt(101)
    auto chi101 = make_character(101, 50);
    std::vector<std::int64_t> x6{1, 2, 3, 4, 5, 6};
    auto r6 = weil_report(chi101, x6);
    CHECK(r6.applicable);
    CHECK(r6.bound == doctest::Approx(5.0 * std::sqrt(101.0)));
}

TEST_CASE("weil inequality exhaustive, q=13, x in [1,6]^4") {
    auto chi = make_character(13, 6); // order 2
    std::vector<std::int64_t> x(4, 1);
    int checked = 0;
    while (true) {
        auto rep = weil_report(chi, x); // throws internally on violation
        CHECK(rep.magnitude <= rep.bound + 1e-6);
        ++checked;
        std::size_t i = 0;
        for (; i < 4; ++i) {
            if (x[i] < 6) { ++x[i]; break; }
            x[i] = 1;
        }
        if (i == 4) break;
    }
    CHECK(checked == 6 * 6 * 6 * 6);
}

TEST_CASE("weil bound on random good tuples, r=2 tau=10 q=53") {
    auto chi = make_character(53, 26); // order 2
    std::mt19937_64 rng(53);
    int good_seen = 0;
    while (good_seen < 200) {
        std::vector<std::int64_t> x(4);
        for (auto& v : x) v = 1 + static_cast<std::int64_t>(rng() % 10);
        auto F = build_burgess_poly(x, chi.order(), 53);
        if (is_perfect_power(F)) continue;
        ++good_seen;
        auto s = complete_sum(chi, x);
        CHECK(s.magnitude <= (F.degree - 1) * std::sqrt(53.0) + 1e-6);
    }
}

TEST_CASE("q-periodicity of exact rational sums") {
    const std::uint32_t q = 53;
    auto chi = make_character(q, 5);
    std::mt19937_64 rng(17);
    for (int k = 0; k < 20; ++k) {
        auto f = PhasePolynomial::rational(
            {static_cast<std::int64_t>(rng() % q), static_cast<std::int64_t>(rng() % q),
             static_cast<std::int64_t>(rng() % q)},
            q);
        std::int64_t N = static_cast<std::int64_t>(rng() % 1000);
        double H = 1.0 + static_cast<double>(rng() % 200);
        auto s1 = mixed_sum(chi, f, N, H);
        auto s2 = mixed_sum(chi, f, N + q, H);
        CHECK(std::abs(s1.value - s2.value) < 1e-9);
    }
}

TEST_CASE("float mode agrees with exact mode") {
    const std::uint32_t q = 101;
    auto chi = make_character(q, 7);
    std::mt19937_64 rng(23);
    const double H = 500;
    for (int k = 0; k < 25; ++k) {
        std::int64_t den = 2 + static_cast<std::int64_t>(rng() % 999999);
        std::vector<std::int64_t> num(4);
        for (auto& p : num) p = static_cast<std::int64_t>(rng() % den);
        auto exact = PhasePolynomial::rational(num, den);
        std::vector<double> coeff;
        for (auto p : num) coeff.push_back(static_cast<double>(p) / static_cast<double>(den));
        auto approx = PhasePolynomial::real(coeff);
        auto s1 = mixed_sum(chi, exact, 0, H);
        auto s2 = mixed_sum(chi, approx, 0, H);
        CHECK(std::abs(s1.value - s2.value) < 1e-6 * H);
    }
}

TEST_CASE("sum value invariants") {
    auto chi = make_character(101, 3);
    auto s = plain_sum(chi, 11, 90);
    CHECK(s.magnitude == doctest::Approx(std::abs(s.value)).epsilon(1e-12));
    CHECK(s.magnitude <= static_cast<double>(s.terms) + 1e-12);
}

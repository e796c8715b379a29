#include "burgess/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

#include "burgess/bounds.hpp"
#include "burgess/modular.hpp"
#include "burgess/pipeline.hpp"
#include "burgess/sums.hpp"
#include "burgess/vinogradov.hpp"

namespace burgess {

namespace {

bool next_tuple(std::vector<std::int64_t>& t, std::int64_t hi) {
    for (auto& v : t) {
        if (v < hi) { ++v; return true; }
        v = 1;
    }
    return false;
}

struct Runner {
    std::vector<CriterionResult> results;

    template <typename Fn>
    void run(int id, const std::string& name, Fn&& fn) {
        CriterionResult res;
        res.id = id;
        res.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            std::ostringstream detail;
            res.passed = fn(detail);
            res.detail = detail.str();
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(res));
    }
};

} // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    Runner runner;

    runner.run(1, "orthogonality", [](std::ostringstream& out) {
        double worst = 0.0;
        for (std::uint32_t q : {7u, 101u, 499u}) {
            auto mod = std::make_shared<PrimeModulus>(q);
            for (std::uint32_t j = 1; j < q - 1; ++j) {
                DirichletCharacter chi(mod, j);
                worst = std::max(worst, plain_sum(chi, 0, q).magnitude);
            }
        }
        out << "max |sum| over full periods = " << worst;
        return worst < 1e-9;
    });

    runner.run(2, "gauss_sum_sharpness", [seed](std::ostringstream& out) {
        std::mt19937_64 rng(seed);
        double worst_rel = 0.0;
        for (std::uint32_t q : {101u, 499u, 997u}) {
            auto mod = std::make_shared<PrimeModulus>(q);
            auto f = PhasePolynomial::rational({0, 1}, q); // f(n) = n/q
            for (int k = 0; k < 3; ++k) {
                std::uint32_t j = 1 + static_cast<std::uint32_t>(rng() % (q - 2));
                DirichletCharacter chi(mod, j);
                double mag = mixed_sum(chi, f, 0, q).magnitude;
                worst_rel = std::max(worst_rel, std::abs(mag - std::sqrt(q)) / std::sqrt(q));
            }
        }
        out << "max relative deviation from sqrt(q) = " << worst_rel;
        return worst_rel < 1e-6;
    });

    runner.run(3, "weil_inequality", [](std::ostringstream& out) {
        std::uint64_t applicable = 0, trivial_side = 0, violations = 0;
        for (std::uint32_t q : {13u, 17u}) {
            DirichletCharacter chi = make_character(q, (q - 1) / 2); // order 2
            std::vector<std::int64_t> x(4, 1);
            do {
                auto rep = weil_report(chi, x);
                if (rep.applicable) {
                    ++applicable;
                    if (rep.magnitude > rep.bound + 1e-6) ++violations;
                } else {
                    ++trivial_side;
                    if (rep.magnitude > static_cast<double>(q) + 1e-6) ++violations;
                }
            } while (next_tuple(x, 6));
        }
        out << applicable << " applicable, " << trivial_side << " trivial-bound, "
            << violations << " violations";
        return violations == 0;
    });

    runner.run(4, "vinogradov_oracle", [](std::ostringstream& out) {
        for (int r = 1; r <= 3; ++r)
            for (int d = 1; d <= 3; ++d)
                for (std::int64_t X = 1; X <= 12; ++X)
                    if (count_J_mitm(r, d, X) != count_J_bruteforce(r, d, X)) {
                        out << "mitm/bruteforce mismatch at r=" << r << " d=" << d << " X=" << X;
                        return false;
                    }
        for (std::int64_t X = 1; X <= 50; ++X) {
            if (count_J_mitm(2, 1, X) != static_cast<std::uint64_t>((2 * X * X * X + X) / 3)) {
                out << "J_{2,1} closed form fails at X=" << X;
                return false;
            }
            if (count_J_mitm(2, 2, X) != static_cast<std::uint64_t>(2 * X * X - X)) {
                out << "J_{2,2} closed form fails at X=" << X;
                return false;
            }
        }
        out << "mitm=bruteforce on full grid; closed forms hold for X<=50";
        return true;
    });

    runner.run(5, "bad_tuple_lemma", [](std::ostringstream& out) {
        for (int r = 1; r <= 2; ++r) {
            for (std::int64_t tau = 1; tau <= 8; ++tau) {
                std::uint64_t bad = count_bad(r, tau);
                double limit = std::pow(static_cast<double>(r), 2 * r + 1) *
                               std::pow(static_cast<double>(tau), r);
                if (static_cast<double>(bad) > limit) {
                    out << "lemma bound fails at r=" << r << " tau=" << tau;
                    return false;
                }
            }
        }
        std::uint64_t b22 = count_bad(2, 2);
        out << "count_bad(2,2) = " << b22;
        return b22 == 8;
    });

    runner.run(6, "grid_identity", [](std::ostringstream& out) {
        std::uint64_t total = 0;
        const int cases[4][3] = {{1, 1, 2}, {1, 2, 2}, {2, 1, 3}, {2, 2, 3}};
        for (auto [r, d, Q] : cases) {
            std::vector<std::int64_t> x(2 * r, 1);
            do {
                ++total;
                if (!xi_identity_check(x, Q, d)) {
                    out << "identity fails at r=" << r << " d=" << d << " Q=" << Q;
                    return false;
                }
            } while (next_tuple(x, Q));
        }
        out << "PASS " << total << "/" << total;
        return true;
    });

    runner.run(7, "counting_lemma_A", [](std::ostringstream& out) {
        const int r = 2, d = 1; // r - D = 1 in the P-choice rule
        const int D = D_of(d);
        double worst_ratio = 0.0;
        for (std::int64_t q : {1009, 10007}) {
            for (double s : {0.5, 0.55, 0.6}) {
                auto H = static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(q), s)));
                double p_rule = static_cast<double>(H) *
                                std::pow(static_cast<double>(q), -1.0 / (2.0 * (r - D)));
                auto P = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::floor(p_rule)));
                for (std::int64_t N : {std::int64_t{0}, q / 3}) {
                    auto prof = count_profile(N, H, P, q);
                    for (const auto& [m, c] : prof.counts) {
                        if (std::llabs(m) > 2 * q) {
                            out << "support escapes [-2q,2q] at q=" << q;
                            return false;
                        }
                    }
                    if (prof.s1 > prof.s2) {
                        out << "S1 > S2 at q=" << q;
                        return false;
                    }
                    double ratio = static_cast<double>(prof.s2) /
                                   (static_cast<double>(H) * static_cast<double>(P));
                    worst_ratio = std::max(worst_ratio, ratio);
                }
            }
        }
        out << "max S2/(HP) = " << worst_ratio;
        return worst_ratio <= 64.0;
    });

    runner.run(8, "bound_consistency", [](std::ostringstream& out) {
        // Exponent seam at r = D+1, with eps = 0 for exact comparison.
        for (int d = 0; d <= 6; ++d) {
            int r = D_of(d) + 1;
            auto vin = vinogradov_bound(1e6, 1e3, r, d, 0.0);
            auto chang = chang_refined_bound(1e6, 1e3, r, d);
            if (std::abs(vin.q_exp - chang.q_exp) > 1e-12) {
                out << "seam mismatch at d=" << d;
                return false;
            }
        }
        // Dominance grid, 1000 points, both theorems in their validity range.
        int points = 0, failures = 0;
        for (int d = 1; d <= 4; ++d) {
            int D = D_of(d);
            for (int r = D + 2; r <= D + 11; ++r) {
                for (double lq : {3.0, 5.0, 7.0, 9.0, 11.0}) {
                    for (double hx : {0.30, 0.35, 0.40, 0.45, 0.50}) {
                        double q = std::pow(10.0, lq);
                        double H = std::pow(q, hx);
                        auto vin = vinogradov_bound(q, H, r, d, 0.01);
                        auto chang = chang_refined_bound(q, H, r, d);
                        if (!vin.valid || !chang.valid) continue;
                        ++points;
                        if (vin.value > chang.value) ++failures;
                    }
                }
            }
        }
        out << points << " grid points, " << failures << " dominance failures";
        return points >= 1000 && failures == 0;
    });

    runner.run(9, "delta_asymptotics", [](std::ostringstream& out) {
        const double kappa = 1e-4;
        for (int d = 0; d <= 6; ++d) {
            double ratio = delta_vin(kappa, d) / (kappa * kappa);
            if (ratio < 0.98 || ratio > 1.0) {
                out << "delta_vin/kappa^2 = " << ratio << " at d=" << d;
                return false;
            }
        }
        int rc = optimal_r_chang(0.05, 2);
        int rv = optimal_r_vin(0.05, 2);
        out << "optimal_r_chang(0.05,2)=" << rc << ", optimal_r_vin(0.05,2)=" << rv;
        return rc == 40 && rv == 14;
    });

    runner.run(10, "nontriviality_smoke", [seed](std::ostringstream& out) {
        const std::int64_t q = 10007;
        std::mt19937_64 rng(seed ^ 0x10);
        DirichletCharacter chi = make_character(q, 5);
        auto H = static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(q), 0.4)));

        std::vector<std::int64_t> sample_N(100);
        for (auto& N : sample_N) N = static_cast<std::int64_t>(rng() % q);

        double max_ratio_H = 0.0, max_ratio_bound = 0.0;
        auto vin = vinogradov_bound(static_cast<double>(q), static_cast<double>(H), 2, 1, 0.01);
        for (int k = 0; k < 20; ++k) {
            std::int64_t den = 2 + static_cast<std::int64_t>(rng() % 999999);
            auto f = PhasePolynomial::rational(
                {static_cast<std::int64_t>(rng() % den), static_cast<std::int64_t>(rng() % den)},
                den);
            double mx = empirical_max_sum(chi, f, static_cast<double>(H), sample_N);
            max_ratio_H = std::max(max_ratio_H, mx / static_cast<double>(H));
            max_ratio_bound = std::max(max_ratio_bound, mx / vin.value);
        }
        out << "max |S|/H = " << max_ratio_H
            << ", max |S|/vinogradov_bound = " << max_ratio_bound;
        return max_ratio_H < 0.9 && std::isfinite(max_ratio_bound);
    });

    return runner.results;
}

} // namespace burgess

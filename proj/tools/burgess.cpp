// Batch experiment harness over the burgess_core library. One experiment
// per invocation, CSV on stdout or --out, rejected parameter rows go to a
// side log instead of the CSV.
//
// Exit codes: 0 success, 2 invalid parameters, 3 resource guard, 4
// verification failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burgess/bounds.hpp"
#include "burgess/errors.hpp"
#include "burgess/modular.hpp"
#include "burgess/pipeline.hpp"
#include "burgess/sums.hpp"
#include "burgess/verify.hpp"
#include "burgess/vinogradov.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitGuard = 3;
constexpr int kExitVerifyFail = 4;

struct Output {
    std::ofstream file;
    std::string rejects_path;
    std::ofstream rejects;
    bool to_file = false;

    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
            to_file = true;
            rejects_path = path + ".rejects";
        }
    }

    std::ostream& stream() { return to_file ? file : std::cout; }

    void reject(const std::string& line) {
        if (to_file) {
            if (!rejects.is_open()) rejects.open(rejects_path);
            rejects << line << "\n";
        } else {
            std::cerr << "reject: " << line << "\n";
        }
    }
};

// RFC-4180-style quoting; our columns are numeric but reasons may not be.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

bool next_tuple(std::vector<std::int64_t>& t, std::int64_t hi) {
    for (auto& v : t) {
        if (v < hi) { ++v; return true; }
        v = 1;
    }
    return false;
}

burgess::PhasePolynomial random_rational_poly(int degree, std::mt19937_64& rng) {
    std::int64_t den = 2 + static_cast<std::int64_t>(rng() % 999999);
    std::vector<std::int64_t> num(degree + 1);
    for (auto& p : num) p = static_cast<std::int64_t>(rng() % den);
    return burgess::PhasePolynomial::rational(std::move(num), den);
}

int cmd_charsum(std::int64_t q, std::uint32_t j, int d, int r, std::vector<double> h_exps,
                double eps, std::uint64_t seed, int samples, const std::string& out_path) {
    Output out(out_path);
    burgess::DirichletCharacter chi =
        burgess::make_character(static_cast<std::uint32_t>(q), j);
    std::mt19937_64 rng(seed);
    auto f = (d == 0) ? burgess::PhasePolynomial::zero(0) : random_rational_poly(d, rng);

    out.stream() << "N,H,magnitude,bound_chang,bound_vin,ratio_vin\n";
    for (double s : h_exps) {
        auto H = static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(q), s)));
        auto chang = burgess::chang_refined_bound(static_cast<double>(q),
                                                 static_cast<double>(H), r, d);
        auto vin = burgess::vinogradov_bound(static_cast<double>(q),
                                             static_cast<double>(H), r, d, eps);
        for (int k = 0; k <= samples; ++k) {
            std::int64_t N = (k == 0) ? 0 : static_cast<std::int64_t>(rng() % q);
            if (!vin.valid || !chang.valid) {
                std::ostringstream why;
                why << "N=" << N << " H=" << H << " invalid: "
                    << (!vin.valid ? vin.reason : chang.reason);
                out.reject(why.str());
                continue;
            }
            double mag = burgess::mixed_sum(chi, f, N, static_cast<double>(H)).magnitude;
            out.stream() << N << "," << H << "," << mag << "," << chang.value << ","
                         << vin.value << "," << mag / vin.value << "\n";
        }
    }
    return kExitOk;
}

int cmd_jcount(int r, int d, std::int64_t x_max, const std::string& out_path) {
    Output out(out_path);
    out.stream() << "X,J_bruteforce,J_mitm,conjecture_ratio\n";
    const int D = burgess::D_of(d);
    for (std::int64_t X = 1; X <= x_max; ++X) {
        std::optional<std::uint64_t> brute, mitm;
        try {
            brute = burgess::count_J_bruteforce(r, d, X);
        } catch (const burgess::resource_guard_error&) {}
        try {
            mitm = burgess::count_J_mitm(r, d, X);
        } catch (const burgess::resource_guard_error&) {}
        if (!brute && !mitm)
            throw burgess::resource_guard_error("jcount: X out of reach for both counters");
        if (brute && mitm && *brute != *mitm)
            throw std::logic_error("jcount: mitm/bruteforce disagree");
        std::uint64_t J = mitm ? *mitm : *brute;
        double denom = std::pow(static_cast<double>(X), r) +
                       std::pow(static_cast<double>(X), 2 * r - D);
        out.stream() << X << "," << (brute ? std::to_string(*brute) : "") << ","
                     << (mitm ? std::to_string(*mitm) : "") << ","
                     << static_cast<double>(J) / denom << "\n";
    }
    return kExitOk;
}

int cmd_bounds(double q, std::vector<double> h_exps, int d, int r_max, double eps,
               double delta_wooley, std::vector<double> kappas, const std::string& out_path) {
    Output out(out_path);
    if (!kappas.empty()) {
        out.stream() << "kappa,d,delta_chang,delta_chang_refined,delta_vin,"
                        "optimal_r_chang,optimal_r_vin\n";
        for (double kappa : kappas) {
            out.stream() << kappa << "," << d << "," << burgess::delta_chang(kappa, d) << ","
                         << burgess::delta_chang_refined(kappa, d) << ","
                         << burgess::delta_vin(kappa, d) << ","
                         << burgess::optimal_r_chang(kappa, d) << ","
                         << burgess::optimal_r_vin(kappa, d) << "\n";
        }
        return kExitOk;
    }

    out.stream() << "h_exp,H,r,theorem,valid,unconditional,h_exponent,q_exponent,log_power,value\n";
    auto emit = [&](double s, double H, const burgess::BoundReport& rep) {
        out.stream() << s << "," << H << "," << rep.r << "," << csv_field(rep.theorem) << ","
                     << (rep.valid ? 1 : 0) << "," << (rep.unconditional ? 1 : 0) << ","
                     << rep.h_exp << "," << rep.q_exp << "," << rep.log_pow << ","
                     << rep.value << "\n";
    };
    for (double s : h_exps) {
        double H = std::pow(q, s);
        for (int r = 1; r <= r_max; ++r) {
            emit(s, H, burgess::burgess_classical(q, H, r));
            if (d >= 0) {
                emit(s, H, burgess::enflo_bound(q, H, r, d, eps));
                emit(s, H, burgess::chang_refined_bound(q, H, r, d));
                emit(s, H, burgess::vinogradov_bound(q, H, r, d, eps));
                if (d >= 4)
                    emit(s, H, burgess::intermediate_bound(q, H, r, d, eps, delta_wooley));
            }
        }
        emit(s, H, burgess::best_bound(q, H, d, eps));
    }
    return kExitOk;
}

int cmd_grid(int r, int d, std::int64_t Q) {
    std::uint64_t total = 0, good = 0;
    std::vector<std::int64_t> x(2 * r, 1);
    do {
        ++total;
        if (burgess::xi_identity_check(x, Q, d)) ++good;
    } while (next_tuple(x, Q));
    std::cout << (good == total ? "PASS " : "FAIL ") << good << "/" << total
              << " (r=" << r << ", d=" << d << ", Q=" << Q << ")\n";
    return good == total ? kExitOk : kExitVerifyFail;
}

int cmd_pipeline(std::int64_t q, std::vector<double> h_exps, int r, int d,
                 const std::string& out_path) {
    Output out(out_path);
    const int D = burgess::D_of(d);
    if (r <= D) throw std::invalid_argument("pipeline: need r > D for the P-choice rule");
    out.stream() << "q,N,H,P,S1,S2,moment_ratio,hp_in_range,support_ok\n";
    for (double s : h_exps) {
        auto H = static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(q), s)));
        double p_rule = static_cast<double>(H) *
                        std::pow(static_cast<double>(q), -1.0 / (2.0 * (r - D)));
        auto P = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::floor(p_rule)));
        for (std::int64_t N : {std::int64_t{0}, q / 3}) {
            auto prof = burgess::count_profile(N, H, P, q);
            bool support_ok = true;
            for (const auto& [m, c] : prof.counts)
                if (std::llabs(m) > 2 * q) support_ok = false;
            out.stream() << q << "," << N << "," << H << "," << P << "," << prof.s1 << ","
                         << prof.s2 << ","
                         << static_cast<double>(prof.s2) /
                                (static_cast<double>(H) * static_cast<double>(P))
                         << "," << (prof.hp_in_range ? 1 : 0) << "," << (support_ok ? 1 : 0)
                         << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(std::uint64_t seed) {
    bool all_ok = true;
    for (const auto& res : burgess::run_acceptance(seed)) {
        std::cout << (res.passed ? "PASS" : "FAIL") << " [" << res.id << "] " << res.name
                  << " (" << res.detail << ") " << res.seconds << "s\n";
        all_ok = all_ok && res.passed;
    }
    return all_ok ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Desk-scale laboratory for short mixed character sums"};
    app.require_subcommand(1);

    std::int64_t q = 101;
    std::uint32_t j = 1;
    int d = 1, r = 2, r_max = 16, x_max = 12, samples = 32, threads = 1;
    double eps = 0.01, delta_wooley = -1.0;
    std::vector<double> h_exps{0.4};
    std::vector<double> kappas;
    std::uint64_t seed = 12345;
    std::string out_path;

    app.add_option("--threads", threads, "thread cap for internal parallelism")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for all randomized sampling");
    app.add_option("--eps", eps, "epsilon entering q^eps factors")->capture_default_str();
    app.add_option("--out", out_path, "CSV output path (default stdout)");

    auto* charsum = app.add_subcommand("charsum", "short mixed character sums vs bounds");
    charsum->add_option("--q", q, "prime modulus")->required();
    charsum->add_option("--j", j, "character index against the primitive root");
    charsum->add_option("--d", d, "phase polynomial degree");
    charsum->add_option("--r", r, "Hoelder parameter for the bound columns");
    charsum->add_option("--h-exp", h_exps, "grid of H exponents, H = ceil(q^s)");
    charsum->add_option("--samples", samples, "random N samples per H");

    auto* jcount = app.add_subcommand("jcount", "Vinogradov system counts J_{r,d}(X)");
    jcount->add_option("--r", r, "half tuple length");
    jcount->add_option("--d", d, "largest power-sum exponent");
    jcount->add_option("--x-max", x_max, "scan X = 1..x-max");

    auto* bounds = app.add_subcommand("bounds", "bound formulas, exponents and deltas");
    bounds->add_option("--q", q, "modulus (as a real scale)");
    bounds->add_option("--d", d, "phase polynomial degree");
    bounds->add_option("--r-max", r_max, "evaluate r = 1..r-max");
    bounds->add_option("--h-exp", h_exps, "grid of H exponents");
    bounds->add_option("--kappa", kappas, "kappa grid; emits the delta table instead");
    bounds->add_option("--delta-wooley", delta_wooley,
                       "Delta for the intermediate-range bound (default d)");

    auto* grid = app.add_subcommand("grid", "exhaustive grid-identity check");
    grid->add_option("--r", r, "half tuple length");
    grid->add_option("--d", d, "degree");
    grid->add_option("--q", q, "grid resolution Q")->required();

    auto* pipeline = app.add_subcommand("pipeline", "counting function A(m) moments");
    pipeline->add_option("--q", q, "prime modulus")->required();
    pipeline->add_option("--d", d, "degree (sets D in the P-choice rule)");
    pipeline->add_option("--r", r, "r in the P-choice rule");
    pipeline->add_option("--h-exp", h_exps, "grid of H exponents");

    auto* verify = app.add_subcommand("verify", "run the acceptance battery");
    (void)verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (charsum->parsed())
            return cmd_charsum(q, j, d, r, h_exps, eps, seed, samples, out_path);
        if (jcount->parsed()) return cmd_jcount(r, d, x_max, out_path);
        if (bounds->parsed())
            return cmd_bounds(static_cast<double>(q), h_exps, d, r_max, eps,
                              delta_wooley < 0 ? d : delta_wooley, kappas, out_path);
        if (grid->parsed()) return cmd_grid(r, d, q);
        if (pipeline->parsed()) return cmd_pipeline(q, h_exps, r, d, out_path);
        if (verify->parsed()) return cmd_verify(seed);
    } catch (const burgess::resource_guard_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

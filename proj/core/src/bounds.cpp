#include "burgess/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace burgess {

namespace {

void check_qH(double q, double H) {
    if (!(q > 2.0)) throw std::invalid_argument("bounds: q must exceed 2");
    if (!(H > 0.0)) throw std::invalid_argument("bounds: H must be positive");
}

double evaluate(double q, double H, double h_exp, double q_exp, int log_pow) {
    return std::pow(H, h_exp) * std::pow(q, q_exp) * std::pow(std::log(q), log_pow);
}

BoundReport make_report(std::string tag, double q, double H,
                        double h_exp, double q_exp, int log_pow, int r) {
    BoundReport rep;
    rep.theorem = std::move(tag);
    rep.h_exp = h_exp;
    rep.q_exp = q_exp;
    rep.log_pow = log_pow;
    rep.r = r;
    rep.value = evaluate(q, H, h_exp, q_exp, log_pow);
    return rep;
}

// Nearest integer with tie going to the integer above: r - x in (-1/2, 1/2].
int round_half_up(double x) {
    return static_cast<int>(std::floor(x + 0.5));
}

} // namespace

int D_of(int d) {
    if (d < 0) throw std::invalid_argument("D_of: d must be >= 0");
    return d * (d + 1) / 2;
}

BoundReport burgess_classical(double q, double H, int r) {
    check_qH(q, H);
    if (r < 1) throw std::invalid_argument("burgess_classical: r must be >= 1");
    double rr = r;
    auto rep = make_report("burgess_classical", q, H,
                           1.0 - 1.0 / rr, (rr + 1.0) / (4.0 * rr * rr), 1, r);
    rep.valid = true;
    rep.reason = "prime modulus";
    return rep;
}

BoundReport enflo_bound(double q, double H, int r, int d, double eps) {
    check_qH(q, H);
    if (r < 1 || d < 0) throw std::invalid_argument("enflo_bound: need r >= 1, d >= 0");
    double rr = r, p2 = std::ldexp(1.0, d); // 2^d
    auto rep = make_report("enflo", q, H,
                           1.0 - 1.0 / (p2 * rr),
                           (rr + 1.0) / (4.0 * p2 * rr * rr) + eps, 0, r);
    double h_limit = 0.75 + 1.0 / (4.0 * rr);
    rep.valid = H < std::pow(q, h_limit);
    rep.reason = rep.valid ? "H < q^(3/4+1/(4r))" : "requires H < q^(3/4+1/(4r))";
    return rep;
}

BoundReport chang_refined_bound(double q, double H, int r, int d) {
    check_qH(q, H);
    if (r < 1 || d < 0) throw std::invalid_argument("chang_refined_bound: need r >= 1, d >= 0");
    double rr = r;
    int D = D_of(d);
    auto rep = make_report("chang_refined", q, H,
                           1.0 - 1.0 / rr, (rr + 1.0 + D) / (4.0 * rr * rr), 2, r);
    rep.valid = H < std::pow(q, 0.5 + 1.0 / (4.0 * rr));
    rep.reason = rep.valid ? "H < q^(1/2+1/(4r))" : "requires H < q^(1/2+1/(4r))";
    rep.nontrivial = r >= 1 + D;
    return rep;
}

BoundReport vinogradov_bound(double q, double H, int r, int d, double eps) {
    check_qH(q, H);
    if (r < 1 || d < 0) throw std::invalid_argument("vinogradov_bound: need r >= 1, d >= 0");
    double rr = r;
    int D = D_of(d);
    if (r <= D) {
        auto rep = make_report("vinogradov", q, H, 0.0, 0.0, 0, r);
        rep.value = 0.0;
        rep.valid = false;
        rep.reason = "r <= D: no better than trivial";
        return rep;
    }
    auto rep = make_report("vinogradov", q, H,
                           1.0 - 1.0 / rr,
                           (rr + 1.0 - D) / (4.0 * rr * (rr - D)) + eps, 0, r);
    rep.valid = H < std::pow(q, 0.5 + 1.0 / (4.0 * (rr - D)));
    rep.reason = rep.valid ? "r > D and H < q^(1/2+1/(4(r-D)))"
                           : "requires H < q^(1/2+1/(4(r-D)))";
    rep.unconditional = (d <= 2) || (d == 3 && r >= 7) || (d >= 4 && r >= d * (d - 1));
    return rep;
}

BoundReport intermediate_bound(double q, double H, int r, int d, double eps, double delta) {
    check_qH(q, H);
    if (delta < 0) throw std::invalid_argument("intermediate_bound: delta must be >= 0");
    int D = (d >= 0) ? D_of(d) : 0;
    auto in_window = (d >= 4) && (r > D) && (r < d * (d - 1));
    double rr = r;
    if (!in_window) {
        BoundReport rep;
        rep.theorem = "intermediate";
        rep.r = r;
        rep.valid = false;
        rep.reason = "requires d >= 4 and D < r < d(d-1)";
        return rep;
    }
    auto rep = make_report("intermediate", q, H,
                           1.0 - 1.0 / rr,
                           (rr + 1.0 - D + 2.0 * delta) / (4.0 * rr * (rr - D + delta)) + eps,
                           0, r);
    rep.valid = H < std::pow(q, 0.5 + 1.0 / (4.0 * (rr - D + delta)));
    rep.reason = rep.valid ? "D < r < d(d-1) and H < q^(1/2+1/(4(r-D+delta)))"
                           : "requires H < q^(1/2+1/(4(r-D+delta)))";
    return rep;
}

double delta_chang(double kappa, int d) {
    if (!(kappa > 0)) throw std::invalid_argument("delta_chang: kappa must be positive");
    double dp1 = d + 1.0;
    return kappa * kappa / (4.0 * (dp1 * dp1 + 2.0) * (1.0 + 2.0 * kappa));
}

double delta_chang_refined(double kappa, int d) {
    if (!(kappa > 0)) throw std::invalid_argument("delta_chang_refined: kappa must be positive");
    return kappa * kappa / (D_of(d) + 1.0);
}

double delta_vin(double kappa, int d) {
    if (!(kappa > 0)) throw std::invalid_argument("delta_vin: kappa must be positive");
    double t = 2.0 * kappa / (1.0 + std::sqrt(1.0 + 4.0 * D_of(d) * kappa));
    return t * t;
}

int optimal_r_chang(double kappa, int d) {
    if (!(kappa > 0)) throw std::invalid_argument("optimal_r_chang: kappa must be positive");
    return round_half_up(0.5 * (D_of(d) + 1.0) / kappa);
}

int optimal_r_vin(double kappa, int d) {
    if (!(kappa > 0)) throw std::invalid_argument("optimal_r_vin: kappa must be positive");
    int D = D_of(d);
    return round_half_up(D + (1.0 + std::sqrt(4.0 * D * kappa + 1.0)) / (4.0 * kappa));
}

BoundReport best_bound(double q, double H, int d, double eps) {
    check_qH(q, H);
    if (d < 0) throw std::invalid_argument("best_bound: d must be >= 0");

    BoundReport best;
    best.theorem = "trivial";
    best.value = H;
    best.valid = true;
    best.reason = "term-count bound";
    best.h_exp = 1.0;

    if (H >= q) return best; // every theorem family out of range

    const int D = D_of(d);
    const int r_max = 4 * D + 64;
    auto consider = [&](const BoundReport& rep) {
        if (rep.valid && rep.value < best.value) best = rep;
    };
    for (int r = 1; r <= r_max; ++r) {
        if (d == 0) {
            consider(burgess_classical(q, H, r));
            continue;
        }
        consider(enflo_bound(q, H, r, d, eps));
        consider(chang_refined_bound(q, H, r, d));
        consider(vinogradov_bound(q, H, r, d, eps));
        if (d >= 4 && r > D && r < d * (d - 1))
            consider(intermediate_bound(q, H, r, d, eps, d)); // delta defaults to d
    }
    return best;
}

} // namespace burgess

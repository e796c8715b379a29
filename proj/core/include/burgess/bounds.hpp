#pragma once

#include <string>

namespace burgess {

/// Evaluation of one bound formula at concrete parameters, with the
/// implied constant set to 1. value = H^h_exp * q^q_exp * (log q)^log_pow.
struct BoundReport {
    std::string theorem;
    double value = 0.0;
    bool valid = false;
    std::string reason;      // why invalid, or validity condition satisfied
    double h_exp = 0.0;
    double q_exp = 0.0;
    int log_pow = 0;
    bool nontrivial = true;    // formula-level nontriviality flag where stated
    bool unconditional = true; // false when conditional on the main conjecture
    int r = 0;                 // r the report was evaluated at (0 = n/a)
};

/// D = d(d+1)/2.
int D_of(int d);

/// Classical bound: H^{1-1/r} q^{(r+1)/(4r^2)} log q.
BoundReport burgess_classical(double q, double H, int r);

/// Weyl-differencing bound: H^{1-1/(2^d r)} q^{(r+1)/(2^{d+2} r^2)+eps},
/// valid for H < q^{3/4+1/(4r)}.
BoundReport enflo_bound(double q, double H, int r, int d, double eps);

/// Coefficient-approximation bound: H^{1-1/r} q^{(r+1+D)/(4r^2)} (log q)^2,
/// valid for H < q^{1/2+1/(4r)}; nontrivial only when r >= 1+D.
BoundReport chang_refined_bound(double q, double H, int r, int d);

/// Mean-value bound: H^{1-1/r} q^{(r+1-D)/(4r(r-D))+eps}, valid for r > D
/// and H < q^{1/2+1/(4(r-D))}. Unconditional for d <= 2, for d = 3 with
/// r >= 7, and for d >= 4 with r >= d(d-1); otherwise conditional.
BoundReport vinogradov_bound(double q, double H, int r, int d, double eps);

/// Intermediate-range bound for d >= 4, D < r < d(d-1):
/// H^{1-1/r} q^{(r+1-D+2*delta)/(4r(r-D+delta))+eps}.
BoundReport intermediate_bound(double q, double H, int r, int d, double eps, double delta);

double delta_chang(double kappa, int d);         // kappa^2 / (4((d+1)^2+2)(1+2kappa))
double delta_chang_refined(double kappa, int d); // kappa^2 / (D+1)
double delta_vin(double kappa, int d);           // (2kappa / (1+sqrt(1+4*D*kappa)))^2

/// Nearest integer to the optimal real r, ties attaching upward
/// (r_int - r_real in (-1/2, 1/2]).
int optimal_r_chang(double kappa, int d); // (D+1)/(2 kappa)
int optimal_r_vin(double kappa, int d);   // D + (1+sqrt(4*D*kappa+1))/(4 kappa)

/// Minimize the bound value over r in [1, 4D+64] across applicable
/// theorem families (delta for the intermediate range defaults to d).
/// Falls back to the trivial bound H when nothing is valid.
BoundReport best_bound(double q, double H, int d, double eps);

} // namespace burgess

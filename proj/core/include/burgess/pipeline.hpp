#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "burgess/modular.hpp"
#include "burgess/sums.hpp"

namespace burgess {

/// n = a*q + p*m with 0 <= a < p.
struct Decomposition {
    std::int64_t n = 0, p = 0, q = 0;
    std::int64_t a = 0, m = 0;
};

Decomposition decompose(std::int64_t n, std::int64_t p, std::int64_t q);

/// All primes in (P, 2P], ascending.
std::vector<std::int64_t> prime_window(std::int64_t P);

/// The counting function A(m) = #{(a,p) : (N-aq)/p - H/P < m <= (N-aq)/p}
/// over p in (P,2P], 0 <= a < p, with its first two moments.
struct CountProfile {
    std::map<std::int64_t, std::int64_t> counts;
    std::int64_t s1 = 0; // sum A(m)
    std::int64_t s2 = 0; // sum A(m)^2
    bool hp_in_range = true; // HP < q (moment-lemma hypothesis)
};

/// Exact counts by direct enumeration over (a,p), interval membership by
/// integer cross-multiplication. N is reduced mod q first.
CountProfile count_profile(std::int64_t N, std::int64_t H, std::int64_t P, std::int64_t q);

/// S2 / (H*P).
double moment_ratio(std::int64_t N, std::int64_t H, std::int64_t P, std::int64_t q);

/// Vertex theta = (c_0, c_1/Q, ..., c_d/Q^d) of the box partition of
/// [0,1]^{d+1}, c_j in [0, Q^j). c_0 is always 0.
struct GridVertex {
    std::int64_t Q = 2;
    int d = 0;
    std::vector<std::int64_t> c; // size d+1

    double theta(int j) const;
};

/// All Q^D vertices, lexicographic in (c_1, ..., c_d).
std::vector<GridVertex> grid_vertices(std::int64_t Q, int d);

/// Componentwise floor approximation: c_j = floor(f_j * Q^j); the error
/// in coordinate j is at most Q^{-j}.
GridVertex nearest_vertex(const PhasePolynomial& f, std::int64_t Q);

/// T(alpha; m, t) = |sum_{0 < n <= t} e(theta_alpha(n)) chi(n+m)|,
/// phases exact with denominator Q^d.
double T_alpha(const DirichletCharacter& chi, const GridVertex& alpha,
               std::int64_t m, std::int64_t t);

/// Checks sum_alpha e(sum_i (-1)^i theta_alpha(x_i)) = Q^D * [congruences
/// sum_i (-1)^i x_i^s = 0 mod Q^s for all s <= d], by direct vertex
/// enumeration, within 1e-6 * Q^D.
bool xi_identity_check(std::span<const std::int64_t> x, std::int64_t Q, int d);

struct S4Result {
    double s4 = 0.0;          // sum_alpha sum_{m=1}^q T(alpha;m,tau)^{2r}
    double chang_shape = 0.0; // Q^D (tau^r q + tau^{2r} sqrt(q))
    double vin_shape = 0.0;   // Q^D (tau^r q + J_{r,d}(tau) sqrt(q))
};

S4Result S4_empirical(const DirichletCharacter& chi, int r, int d,
                      std::int64_t Q, std::int64_t tau);

/// max over sampled N of |mixed_sum(chi, f, N, H)|.
double empirical_max_sum(const DirichletCharacter& chi, const PhasePolynomial& f,
                         double H, std::span<const std::int64_t> sample_N);

} // namespace burgess

#include "burgess/pipeline.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "burgess/errors.hpp"
#include "burgess/kahan.hpp"
#include "burgess/vinogradov.hpp"

namespace burgess {

namespace {

using i128 = __int128;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t floor_div(i128 num, i128 den) {
    // den > 0
    i128 qt = num / den;
    if (num % den != 0 && num < 0) --qt;
    return static_cast<std::int64_t>(qt);
}

std::int64_t ipow64(std::int64_t b, int e) {
    std::int64_t v = 1;
    for (int i = 0; i < e; ++i) v *= b;
    return v;
}

void check_grid(std::int64_t Q, int d) {
    if (Q < 2) throw std::invalid_argument("grid: Q must be >= 2");
    if (d < 0) throw std::invalid_argument("grid: d must be >= 0");
    int D = d * (d + 1) / 2;
    if (D * std::log2(static_cast<double>(Q)) > 24.0)
        throw resource_guard_error("grid: Q^D exceeds enumeration guard");
}

} // namespace

Decomposition decompose(std::int64_t n, std::int64_t p, std::int64_t q) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("decompose: p must be prime");
    if (q % p == 0) throw std::invalid_argument("decompose: p divides q");

    // a is the unique solution of a*q = n (mod p) in [0, p).
    std::int64_t q_inv = static_cast<std::int64_t>(
        pow_mod(static_cast<std::uint64_t>(((q % p) + p) % p), static_cast<std::uint64_t>(p - 2),
                static_cast<std::uint64_t>(p)));
    std::int64_t n_mod = ((n % p) + p) % p;
    std::int64_t a = static_cast<std::int64_t>(
        (static_cast<i128>(n_mod) * q_inv) % p);

    Decomposition dec;
    dec.n = n;
    dec.p = p;
    dec.q = q;
    dec.a = a;
    dec.m = (n - a * q) / p;
    return dec;
}

std::vector<std::int64_t> prime_window(std::int64_t P) {
    if (P < 1) throw std::invalid_argument("prime_window: P must be >= 1");
    std::vector<std::int64_t> primes;
    for (std::int64_t p = P + 1; p <= 2 * P; ++p) {
        if (is_prime(static_cast<std::uint64_t>(p))) primes.push_back(p);
    }
    return primes;
}

CountProfile count_profile(std::int64_t N, std::int64_t H, std::int64_t P, std::int64_t q) {
    if (H < 1 || P < 1) throw std::invalid_argument("count_profile: H and P must be >= 1");
    if (q < 3 || !is_prime(static_cast<std::uint64_t>(q)))
        throw std::invalid_argument("count_profile: q must be prime");
    N = ((N % q) + q) % q;

    CountProfile prof;
    prof.hp_in_range = (H * P < q);

    for (std::int64_t p : prime_window(P)) {
        if (p == q) continue; // P < q/H in the lemma regime; explicit at desk scale
        for (std::int64_t a = 0; a < p; ++a) {
            // Interval ((N-aq)/p - H/P, (N-aq)/p]; membership decided by
            // cross-multiplication so everything stays integral.
            i128 top = static_cast<i128>(N) - static_cast<i128>(a) * q;
            std::int64_t m_hi = floor_div(top, p);
            // smallest m with m*p*P > top*P - H*p
            std::int64_t m_lo = floor_div(top * P - static_cast<i128>(H) * p,
                                          static_cast<i128>(p) * P) + 1;
            for (std::int64_t m = m_lo; m <= m_hi; ++m) ++prof.counts[m];
        }
    }
    for (const auto& [m, c] : prof.counts) {
        prof.s1 += c;
        prof.s2 += c * c;
    }
    return prof;
}

double moment_ratio(std::int64_t N, std::int64_t H, std::int64_t P, std::int64_t q) {
    auto prof = count_profile(N, H, P, q);
    return static_cast<double>(prof.s2) / (static_cast<double>(H) * static_cast<double>(P));
}

double GridVertex::theta(int j) const {
    return static_cast<double>(c[j]) / static_cast<double>(ipow64(Q, j));
}

std::vector<GridVertex> grid_vertices(std::int64_t Q, int d) {
    check_grid(Q, d);
    std::vector<GridVertex> out;
    GridVertex v;
    v.Q = Q;
    v.d = d;
    v.c.assign(d + 1, 0);
    // odometer over (c_1, ..., c_d), c_j < Q^j; c_0 stays 0
    while (true) {
        out.push_back(v);
        int j = d;
        while (j >= 1) {
            if (++v.c[j] < ipow64(Q, j)) break;
            v.c[j] = 0;
            --j;
        }
        if (j < 1) break;
    }
    return out;
}

GridVertex nearest_vertex(const PhasePolynomial& f, std::int64_t Q) {
    check_grid(Q, f.degree());
    GridVertex v;
    v.Q = Q;
    v.d = f.degree();
    v.c.assign(v.d + 1, 0);
    for (int j = 1; j <= v.d; ++j) {
        std::int64_t qj = ipow64(Q, j);
        auto c = static_cast<std::int64_t>(std::floor(f.coeff_mod1(j) * static_cast<double>(qj)));
        v.c[j] = std::min(c, qj - 1);
    }
    return v;
}

double T_alpha(const DirichletCharacter& chi, const GridVertex& alpha,
               std::int64_t m, std::int64_t t) {
    if (t < 0) throw std::invalid_argument("T_alpha: t must be >= 0");
    const std::int64_t Qd = ipow64(alpha.Q, alpha.d);
    // theta(n) has exact denominator Q^d: numerator sum_j c_j n^j Q^(d-j).
    std::vector<std::int64_t> scaled(alpha.d + 1);
    for (int j = 0; j <= alpha.d; ++j) scaled[j] = alpha.c[j] * ipow64(alpha.Q, alpha.d - j);

    const double phi = chi.q() - 1;
    KahanComplex acc;
    for (std::int64_t n = 1; n <= t; ++n) {
        auto e = chi.exponent(n + m);
        if (!e) continue;
        i128 num = 0;
        i128 npow = 1;
        for (int j = 0; j <= alpha.d; ++j) {
            num = (num + npow * scaled[j]) % Qd;
            npow = (npow * (n % Qd)) % Qd;
        }
        double angle = kTwoPi * (static_cast<double>(static_cast<std::int64_t>(num)) / Qd +
                                 static_cast<double>(*e) / phi);
        acc.add({std::cos(angle), std::sin(angle)});
    }
    return std::abs(acc.value());
}

bool xi_identity_check(std::span<const std::int64_t> x, std::int64_t Q, int d) {
    check_grid(Q, d);
    const int D = d * (d + 1) / 2;
    const double QD = std::pow(static_cast<double>(Q), D);

    // Alternating power sums A_s, signs (-1)^i with 1-based i.
    std::vector<i128> A(d + 1, 0);
    for (int s = 1; s <= d; ++s) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            i128 p = 1;
            for (int k = 0; k < s; ++k) p *= x[i];
            A[s] += (i % 2 == 0) ? -p : p;
        }
    }

    bool congruent = true;
    for (int s = 1; s <= d; ++s) {
        if (A[s] % ipow64(Q, s) != 0) { congruent = false; break; }
    }

    // Left side by direct enumeration over all vertices.
    const std::int64_t Qd = ipow64(Q, d);
    KahanComplex acc;
    for (const auto& v : grid_vertices(Q, d)) {
        i128 num = 0;
        for (int s = 1; s <= d; ++s) {
            num = (num + static_cast<i128>(v.c[s]) * ipow64(Q, d - s) % Qd * (A[s] % Qd)) % Qd;
        }
        std::int64_t nm = static_cast<std::int64_t>(num % Qd);
        if (nm < 0) nm += Qd;
        double angle = kTwoPi * static_cast<double>(nm) / static_cast<double>(Qd);
        acc.add({std::cos(angle), std::sin(angle)});
    }
    double expected = congruent ? QD : 0.0;
    return std::abs(acc.value() - expected) <= 1e-6 * QD;
}

S4Result S4_empirical(const DirichletCharacter& chi, int r, int d,
                      std::int64_t Q, std::int64_t tau) {
    if (r < 1 || d < 0 || tau < 0) throw std::invalid_argument("S4_empirical: bad parameters");
    check_grid(Q, d);
    const int D = d * (d + 1) / 2;
    const double q = chi.q();
    const double QD = std::pow(static_cast<double>(Q), D);
    if (QD * q * static_cast<double>(std::max<std::int64_t>(tau, 1)) > 5e7)
        throw resource_guard_error("S4_empirical: work exceeds desk-scale guard");

    Kahan s4;
    for (const auto& alpha : grid_vertices(Q, d)) {
        for (std::int64_t m = 1; m <= chi.q(); ++m) {
            double T = T_alpha(chi, alpha, m, tau);
            s4.add(std::pow(T, 2 * r));
        }
    }

    S4Result res;
    res.s4 = s4.sum;
    double tau_r = std::pow(static_cast<double>(tau), r);
    double tau_2r = std::pow(static_cast<double>(tau), 2 * r);
    double J = static_cast<double>(count_J_mitm(r, d, std::max<std::int64_t>(tau, 1)));
    res.chang_shape = QD * (tau_r * q + tau_2r * std::sqrt(q));
    res.vin_shape = QD * (tau_r * q + J * std::sqrt(q));
    return res;
}

double empirical_max_sum(const DirichletCharacter& chi, const PhasePolynomial& f,
                         double H, std::span<const std::int64_t> sample_N) {
    double best = 0.0;
    for (std::int64_t N : sample_N) {
        best = std::max(best, mixed_sum(chi, f, N, H).magnitude);
    }
    return best;
}

} // namespace burgess

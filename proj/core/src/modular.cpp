#include "burgess/modular.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "burgess/errors.hpp"

namespace burgess {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// Largest q for which we allow the O(q) dlog table (~64 MB of uint32).
constexpr std::uint32_t kMaxTableModulus = 1u << 24;

} // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    std::uint64_t out = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) out = mul_mod(out, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return out;
}

// Deterministic Miller-Rabin; this witness set is exact for n < 3.3e24.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::uint32_t find_primitive_root(std::uint32_t q) {
    if (!is_prime(q)) throw std::invalid_argument("find_primitive_root: q must be prime");
    if (q == 2) return 1;

    // Prime factors of q-1 by trial division.
    std::vector<std::uint64_t> factors;
    std::uint64_t n = q - 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            factors.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) factors.push_back(n);

    for (std::uint32_t g = 2; g < q; ++g) {
        bool primitive = true;
        for (std::uint64_t p : factors) {
            if (pow_mod(g, (q - 1) / p, q) == 1) { primitive = false; break; }
        }
        if (primitive) return g;
    }
    throw std::logic_error("find_primitive_root: no generator found"); // unreachable for prime q
}

PrimeModulus::PrimeModulus(std::uint32_t q) : q_(q) {
    if (q < 3) throw std::invalid_argument("PrimeModulus: q must be >= 3");
    if (!is_prime(q)) throw std::invalid_argument("PrimeModulus: q must be prime");
    if (q > kMaxTableModulus)
        throw resource_guard_error("PrimeModulus: dlog table exceeds desk-scale limit");

    g_ = find_primitive_root(q);
    dlog_.assign(q, 0);
    std::uint64_t pw = 1;
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
        dlog_[static_cast<std::uint32_t>(pw)] = k;
        pw = (pw * g_) % q;
    }
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const PrimeModulus> modulus,
                                       std::uint32_t index)
    : mod_(std::move(modulus)), index_(index) {
    if (!mod_) throw std::invalid_argument("DirichletCharacter: null modulus");
    if (index_ >= mod_->q() - 1)
        throw std::invalid_argument("DirichletCharacter: index out of [0, q-2]");
}

std::uint32_t DirichletCharacter::order() const {
    std::uint32_t phi = mod_->q() - 1;
    return phi / std::gcd(index_, phi);
}

std::optional<std::uint32_t> DirichletCharacter::exponent(std::int64_t n) const {
    const std::int64_t q = mod_->q();
    std::int64_t u = n % q;
    if (u < 0) u += q;
    if (u == 0) return std::nullopt;
    std::uint64_t e = static_cast<std::uint64_t>(mod_->dlog(static_cast<std::uint32_t>(u))) * index_;
    return static_cast<std::uint32_t>(e % (q - 1));
}

std::complex<double> DirichletCharacter::operator()(std::int64_t n) const {
    auto e = exponent(n);
    if (!e) return {0.0, 0.0};
    double angle = 2.0 * std::numbers::pi * static_cast<double>(*e) / (mod_->q() - 1);
    return {std::cos(angle), std::sin(angle)};
}

DirichletCharacter make_character(std::uint32_t q, std::uint32_t index) {
    return DirichletCharacter(std::make_shared<PrimeModulus>(q), index);
}

} // namespace burgess

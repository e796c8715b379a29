#include "burgess/sums.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "burgess/errors.hpp"
#include "burgess/kahan.hpp"

namespace burgess {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kMaxTerms = 2'000'000'000ULL;

double frac01(double x) {
    double f = x - std::floor(x);
    return (f >= 1.0) ? 0.0 : f; // floor rounding can leave exactly 1.0
}

std::int64_t mod_pos(__int128 v, std::int64_t m) {
    __int128 r = v % m;
    if (r < 0) r += m;
    return static_cast<std::int64_t>(r);
}

} // namespace

PhasePolynomial PhasePolynomial::zero(int degree) {
    if (degree < 0) throw std::invalid_argument("PhasePolynomial: degree must be >= 0");
    PhasePolynomial f;
    f.degree_ = degree;
    f.exact_ = true;
    f.den_ = 1;
    f.num_.assign(degree + 1, 0);
    return f;
}

PhasePolynomial PhasePolynomial::rational(std::vector<std::int64_t> numerators, std::int64_t den) {
    if (den < 1) throw std::invalid_argument("PhasePolynomial: denominator must be >= 1");
    if (numerators.empty()) throw std::invalid_argument("PhasePolynomial: no coefficients");
    PhasePolynomial f;
    f.degree_ = static_cast<int>(numerators.size()) - 1;
    f.exact_ = true;
    f.den_ = den;
    for (auto& p : numerators) p = mod_pos(p, den);
    f.num_ = std::move(numerators);
    return f;
}

PhasePolynomial PhasePolynomial::real(std::vector<double> coefficients) {
    if (coefficients.empty()) throw std::invalid_argument("PhasePolynomial: no coefficients");
    PhasePolynomial f;
    f.degree_ = static_cast<int>(coefficients.size()) - 1;
    f.exact_ = false;
    for (auto& c : coefficients) c = frac01(c);
    f.coeff_ = std::move(coefficients);
    return f;
}

double PhasePolynomial::eval_mod1(std::int64_t n) const {
    if (exact_) {
        // Horner mod den: exact integers throughout.
        std::int64_t nm = mod_pos(n, den_);
        __int128 v = 0;
        for (int j = degree_; j >= 0; --j) {
            v = (v * nm + num_[j]) % den_;
        }
        return static_cast<double>(v) / static_cast<double>(den_);
    }
    // Horner with argument reduction mod 1 at each step; valid because n is
    // an integer, so dropping whole parts shifts the phase by integers.
    double nd = static_cast<double>(n);
    double y = 0.0;
    for (int j = degree_; j >= 0; --j) {
        y = frac01(y * nd + coeff_[j]);
    }
    return y;
}

double PhasePolynomial::coeff_mod1(int j) const {
    if (j < 0 || j > degree_) throw std::out_of_range("PhasePolynomial: coefficient index");
    if (exact_) return static_cast<double>(num_[j]) / static_cast<double>(den_);
    return coeff_[j];
}

SumValue mixed_sum(const DirichletCharacter& chi, const PhasePolynomial& f,
                   std::int64_t N, double H) {
    if (chi.principal()) throw std::invalid_argument("mixed_sum: character must be non-principal");
    if (H < 0) throw std::invalid_argument("mixed_sum: H must be >= 0");

    double count_f = std::floor(H);
    if (count_f > static_cast<double>(kMaxTerms))
        throw resource_guard_error("mixed_sum: term count exceeds integer range guard");
    auto count = static_cast<std::int64_t>(count_f);

    const double phi = chi.q() - 1;
    KahanComplex acc;
    std::uint64_t terms = 0;
    for (std::int64_t n = N + 1; n <= N + count; ++n) {
        auto e = chi.exponent(n);
        if (!e) continue;
        double angle = kTwoPi * (f.eval_mod1(n) + static_cast<double>(*e) / phi);
        acc.add({std::cos(angle), std::sin(angle)});
        ++terms;
    }
    SumValue s;
    s.value = acc.value();
    s.magnitude = std::abs(s.value);
    s.terms = terms;
    return s;
}

SumValue plain_sum(const DirichletCharacter& chi, std::int64_t N, double H) {
    return mixed_sum(chi, PhasePolynomial::zero(0), N, H);
}

BurgessPolynomial build_burgess_poly(std::span<const std::int64_t> x,
                                     std::uint32_t delta, std::uint32_t q) {
    if (delta < 2) throw std::invalid_argument("build_burgess_poly: delta must be >= 2");
    std::map<std::uint32_t, std::uint32_t> mult;
    std::uint32_t deg = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 1 || x[i] > static_cast<std::int64_t>(q))
            throw std::invalid_argument("build_burgess_poly: entries must lie in [1, q]");
        // 1-based position: odd positions carry delta-1, even carry 1.
        std::uint32_t m = (i % 2 == 0) ? delta - 1 : 1;
        mult[static_cast<std::uint32_t>(x[i] % q)] += m;
        deg += m;
    }
    BurgessPolynomial F;
    F.roots.assign(mult.begin(), mult.end());
    F.degree = deg;
    F.delta = delta;
    return F;
}

bool is_perfect_power(const BurgessPolynomial& F) {
    return std::all_of(F.roots.begin(), F.roots.end(),
                       [&](const auto& rm) { return rm.second % F.delta == 0; });
}

SumValue complete_sum(const DirichletCharacter& chi, std::span<const std::int64_t> x) {
    if (chi.principal()) throw std::invalid_argument("complete_sum: character must be non-principal");
    const std::uint32_t q = chi.q();
    const std::uint32_t phi = q - 1;
    auto F = build_burgess_poly(x, chi.order(), q);

    // Bucket the exponent j*dlog(F(m)) mod (q-1) for each m; all integer.
    std::vector<std::uint32_t> bucket(phi, 0);
    std::uint64_t zeros = 0;
    const auto& mod = chi.modulus();
    for (std::uint32_t m = 1; m <= q; ++m) {
        std::uint64_t e = 0;
        bool zero = false;
        for (const auto& [root, mult] : F.roots) {
            std::uint32_t u = (m + root) % q;
            if (u == 0) { zero = true; break; }
            e += static_cast<std::uint64_t>(mod.dlog(u)) * mult;
        }
        if (zero) { ++zeros; continue; }
        ++bucket[(e % phi) * chi.index() % phi];
    }

    KahanComplex acc;
    for (std::uint32_t e = 0; e < phi; ++e) {
        if (bucket[e] == 0) continue;
        double angle = kTwoPi * e / phi;
        acc.add({bucket[e] * std::cos(angle), bucket[e] * std::sin(angle)});
    }
    SumValue s;
    s.value = acc.value();
    s.magnitude = std::abs(s.value);
    s.terms = q - zeros;
    return s;
}

WeilReport weil_report(const DirichletCharacter& chi, std::span<const std::int64_t> x) {
    const std::uint32_t q = chi.q();
    auto F = build_burgess_poly(x, chi.order(), q);
    WeilReport rep;
    rep.applicable = !is_perfect_power(F);
    rep.bound = rep.applicable ? (F.degree - 1) * std::sqrt(static_cast<double>(q))
                               : static_cast<double>(q);
    rep.magnitude = complete_sum(chi, x).magnitude;
    if (rep.magnitude > rep.bound + 1e-6)
        throw std::logic_error("weil_report: bound violated");
    return rep;
}

} // namespace burgess

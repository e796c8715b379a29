#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "burgess/modular.hpp"

namespace burgess {

/// Phase polynomial f with a declared degree. Two coefficient modes:
///   - exact rational: coefficients p_j / den, phases computed as integers
///     mod den (no rounding);
///   - float: coefficients reduced mod 1, Horner with mod-1 reduction.
/// The declared degree stands even if the leading coefficient reduces to 0.
class PhasePolynomial {
public:
    static PhasePolynomial zero(int degree);
    static PhasePolynomial rational(std::vector<std::int64_t> numerators, std::int64_t den);
    static PhasePolynomial real(std::vector<double> coefficients);

    int degree() const { return degree_; }
    bool exact() const { return exact_; }
    std::int64_t denominator() const { return den_; }

    /// f(n) mod 1, in [0, 1).
    double eval_mod1(std::int64_t n) const;

    /// Coefficient j reduced mod 1.
    double coeff_mod1(int j) const;

private:
    PhasePolynomial() = default;

    int degree_ = 0;
    bool exact_ = false;
    std::vector<std::int64_t> num_; // exact mode, reduced into [0, den)
    std::int64_t den_ = 1;
    std::vector<double> coeff_;     // float mode, reduced into [0, 1)
};

struct SumValue {
    std::complex<double> value{};
    double magnitude = 0.0;
    std::uint64_t terms = 0;
};

/// S(f; N, H) = sum_{N < n <= N+H} e(f(n)) chi(n), compensated accumulation.
SumValue mixed_sum(const DirichletCharacter& chi, const PhasePolynomial& f,
                   std::int64_t N, double H);

/// S(N, H) = mixed_sum with f = 0.
SumValue plain_sum(const DirichletCharacter& chi, std::int64_t N, double H);

/// Product over tuple positions of (X + x_i)^{mult}, kept as a root
/// multiset over residues mod q. Odd (1-based) positions contribute
/// delta-1 to their residue, even positions contribute 1.
struct BurgessPolynomial {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> roots; // (residue, multiplicity)
    std::uint32_t degree = 0;
    std::uint32_t delta = 0;
};

BurgessPolynomial build_burgess_poly(std::span<const std::int64_t> x,
                                     std::uint32_t delta, std::uint32_t q);

/// True iff every root multiplicity is divisible by delta, i.e. the
/// polynomial is a perfect delta-th power mod q.
bool is_perfect_power(const BurgessPolynomial& F);

/// sum_{m=1}^{q} chi(F_x(m)), exact via dlog exponent accumulation,
/// converted to complex only at the end.
SumValue complete_sum(const DirichletCharacter& chi, std::span<const std::int64_t> x);

struct WeilReport {
    bool applicable = false; // Weil bound applies (not a perfect power)
    double magnitude = 0.0;
    double bound = 0.0;      // (deg-1)*sqrt(q) when applicable, else q
};

WeilReport weil_report(const DirichletCharacter& chi, std::span<const std::int64_t> x);

} // namespace burgess

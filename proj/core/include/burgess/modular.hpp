#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace burgess {

bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Smallest primitive root of the prime q (1 for q = 2).
std::uint32_t find_primitive_root(std::uint32_t q);

/// A prime q together with its smallest primitive root g and the full
/// discrete-log table dlog[u] = k with g^k = u (mod q). Construction is
/// O(q) time and space, which caps q at desk scale.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint32_t q);

    std::uint32_t q() const { return q_; }
    std::uint32_t g() const { return g_; }

    // u must be a unit residue in [1, q).
    std::uint32_t dlog(std::uint32_t u) const { return dlog_[u]; }

private:
    std::uint32_t q_;
    std::uint32_t g_;
    std::vector<std::uint32_t> dlog_;
};

/// Multiplicative character mod a prime q, indexed against the primitive
/// root: chi(g^k) = e(2*pi*i * j*k / (q-1)). Index 0 is the principal
/// character; every nonzero index gives a primitive character.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const PrimeModulus> modulus, std::uint32_t index);

    const PrimeModulus& modulus() const { return *mod_; }
    std::uint32_t q() const { return mod_->q(); }
    std::uint32_t index() const { return index_; }
    bool principal() const { return index_ == 0; }

    /// Order of the character: (q-1)/gcd(j, q-1).
    std::uint32_t order() const;

    /// The exponent e with chi(n) = e(2*pi*i * e/(q-1)), or nullopt when q | n.
    /// All character algebra stays in this exact integer form.
    std::optional<std::uint32_t> exponent(std::int64_t n) const;

    std::complex<double> operator()(std::int64_t n) const;

private:
    std::shared_ptr<const PrimeModulus> mod_;
    std::uint32_t index_;
};

/// Convenience: build the modulus once and attach a character to it.
DirichletCharacter make_character(std::uint32_t q, std::uint32_t index);

} // namespace burgess

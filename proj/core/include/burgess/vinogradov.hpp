#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace burgess {

/// J_{r,d}(X): number of 2r-tuples in [1,X] whose first and last r entries
/// have equal power sums for every exponent 1..d. Full X^{2r} enumeration.
std::uint64_t count_J_bruteforce(int r, int d, std::int64_t X);

/// Same count via meet-in-the-middle: build the multiset of power-sum
/// vectors over the X^r r-tuples and return sum of squared multiplicities.
std::uint64_t count_J_mitm(int r, int d, std::int64_t X);

/// A tuple is bad when every one of its entry values occurs at least twice.
bool is_bad(std::span<const std::int64_t> x);

/// Exact number of bad tuples in [1,tau]^{2r}.
std::uint64_t count_bad(int r, std::int64_t tau);

/// Membership in V_{r,d}(tau): alternating power sums
/// sum_i (-1)^i x_i^s vanish exactly for every s = 1..d (i is 1-based).
bool in_V(std::span<const std::int64_t> x, int d);

struct ConjectureRow {
    std::int64_t X = 0;
    std::uint64_t J = 0;
    double ratio = 0.0; // J / (X^r + X^{2r-D})
};

/// Scan X = 1..X_max and report the main-conjecture ratio. Observational
/// only; the X^eps constant is unquantified so nothing is asserted.
std::vector<ConjectureRow> conjecture_ratio_table(int r, int d, std::int64_t X_max);

} // namespace burgess

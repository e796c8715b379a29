#include "burgess/vinogradov.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "burgess/errors.hpp"

namespace burgess {

namespace {

using i128 = __int128;

void check_args(int r, int d, std::int64_t X) {
    if (r < 1) throw std::invalid_argument("vinogradov: r must be >= 1");
    if (d < 0) throw std::invalid_argument("vinogradov: d must be >= 0");
    if (X < 1) throw std::invalid_argument("vinogradov: X must be >= 1");
    // power sums must fit exactly in 128 bits
    if (d > 0 && static_cast<double>(r) * std::pow(static_cast<double>(X), d) >= std::ldexp(1.0, 126))
        throw resource_guard_error("vinogradov: power sums exceed 128-bit range");
}

// ipow for desk-scale arguments; caller guarantees no overflow.
i128 ipow(std::int64_t b, int e) {
    i128 v = 1;
    for (int i = 0; i < e; ++i) v *= b;
    return v;
}

// Odometer over [1,X]^k.
bool next_tuple(std::vector<std::int64_t>& t, std::int64_t X) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < X) { ++t[i]; return true; }
        t[i] = 1;
    }
    return false;
}

std::vector<i128> power_sums(std::span<const std::int64_t> t, int d) {
    std::vector<i128> ps(d, 0);
    for (std::int64_t v : t) {
        i128 p = 1;
        for (int m = 0; m < d; ++m) {
            p *= v;
            ps[m] += p;
        }
    }
    return ps;
}

} // namespace

std::uint64_t count_J_bruteforce(int r, int d, std::int64_t X) {
    check_args(r, d, X);
    if (std::pow(static_cast<double>(X), 2 * r) > 1e9)
        throw resource_guard_error("count_J_bruteforce: X^(2r) exceeds enumeration guard");

    std::vector<std::int64_t> t(2 * r, 1);
    std::uint64_t count = 0;
    do {
        auto lhs = power_sums(std::span(t.data(), r), d);
        auto rhs = power_sums(std::span(t.data() + r, r), d);
        if (lhs == rhs) ++count;
    } while (next_tuple(t, X));
    return count;
}

std::uint64_t count_J_mitm(int r, int d, std::int64_t X) {
    check_args(r, d, X);
    if (std::pow(static_cast<double>(X), r) > 1e8)
        throw resource_guard_error("count_J_mitm: X^r exceeds memory guard");

    // Multiset of full d-component power-sum vectors; the answer is the
    // sum of squared multiplicities.
    std::map<std::vector<i128>, std::uint64_t> mult;
    std::vector<std::int64_t> t(r, 1);
    do {
        ++mult[power_sums(t, d)];
    } while (next_tuple(t, X));

    std::uint64_t count = 0;
    for (const auto& [key, m] : mult) count += m * m;
    return count;
}

bool is_bad(std::span<const std::int64_t> x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        bool repeated = false;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (j != i && x[j] == x[i]) { repeated = true; break; }
        }
        if (!repeated) return false;
    }
    return true;
}

std::uint64_t count_bad(int r, std::int64_t tau) {
    check_args(r, 0, tau);
    if (std::pow(static_cast<double>(tau), 2 * r) > 1e9)
        throw resource_guard_error("count_bad: tau^(2r) exceeds enumeration guard");

    std::vector<std::int64_t> t(2 * r, 1);
    std::uint64_t count = 0;
    do {
        if (is_bad(t)) ++count;
    } while (next_tuple(t, tau));
    return count;
}

bool in_V(std::span<const std::int64_t> x, int d) {
    for (int s = 1; s <= d; ++s) {
        i128 acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            i128 p = ipow(x[i], s);
            // 1-based position sign (-1)^i: odd positions subtract.
            acc += (i % 2 == 0) ? -p : p;
        }
        if (acc != 0) return false;
    }
    return true;
}

std::vector<ConjectureRow> conjecture_ratio_table(int r, int d, std::int64_t X_max) {
    check_args(r, d, std::max<std::int64_t>(X_max, 1));
    const int D = d * (d + 1) / 2;
    std::vector<ConjectureRow> rows;
    rows.reserve(X_max);
    for (std::int64_t X = 1; X <= X_max; ++X) {
        ConjectureRow row;
        row.X = X;
        row.J = (std::pow(static_cast<double>(X), r) <= 1e8) ? count_J_mitm(r, d, X)
                                                             : count_J_bruteforce(r, d, X);
        double denom = std::pow(static_cast<double>(X), r) +
                       std::pow(static_cast<double>(X), 2 * r - D);
        row.ratio = static_cast<double>(row.J) / denom;
        rows.push_back(row);
    }
    return rows;
}

} // namespace burgess

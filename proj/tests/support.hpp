#ifndef SEVENCORE_TESTS_SUPPORT_HPP
#define SEVENCORE_TESTS_SUPPORT_HPP

// Random generators and slow independent oracles shared by the suites.

#include <cstdint>
#include <random>
#include <vector>

#include <sevencore/sevencore.hpp>

namespace oracle
{

using sevencore::integer;

// Deterministic generator; every property test seeds its own.
class gen
{
public:
    explicit gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t range(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }

    std::uint64_t urange(std::uint64_t lo, std::uint64_t hi)
    {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }

    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    // Coefficients in [-mag, mag], each nonzero with probability density.
    sevencore::qseries series(std::size_t order, double density = 0.6, std::int64_t mag = 50)
    {
        std::vector<integer> c(order + 1);
        for (auto& x : c) {
            if (chance(density)) {
                x = range(-mag, mag);
            }
        }
        return sevencore::qseries(std::move(c));
    }

    // A series with constant term +1 or -1.
    sevencore::qseries unit_series(std::size_t order, double density = 0.6, std::int64_t mag = 50)
    {
        const auto s = series(order, density, mag);
        std::vector<integer> c(s.coefficients().begin(), s.coefficients().end());
        c[0] = chance(0.5) ? 1 : -1;
        return sevencore::qseries(std::move(c));
    }

    integer big(unsigned bits)
    {
        integer x = 0;
        for (unsigned i = 0; i < bits; i += 32) {
            x = (x << 32) + integer(urange(0, 0xffffffffULL));
        }
        return chance(0.5) ? integer(-x) : x;
    }

private:
    std::mt19937_64 rng_;
};

// prod_{k >= 1} (1 - q^k) through q^order by multiplying one factor at a time.
inline std::vector<integer> euler_product(std::size_t order)
{
    std::vector<integer> c(order + 1, 0);
    c[0] = 1;
    for (std::size_t k = 1; k <= order; ++k) {
        for (std::size_t i = order; i >= k; --i) {
            c[i] -= c[i - k];
        }
    }
    return c;
}

// Number of (x, y, z) in Z^3 with x^2 + y^2 + z^2 = n, for every n <= order.
inline std::vector<integer> three_squares(std::size_t order)
{
    std::vector<integer> c(order + 1, 0);
    const auto r = std::int64_t(sevencore::detail::isqrt(order));
    for (std::int64_t x = -r; x <= r; ++x) {
        for (std::int64_t y = -r; y <= r; ++y) {
            for (std::int64_t z = -r; z <= r; ++z) {
                const auto s = std::uint64_t(x * x + y * y + z * z);
                if (s <= order) {
                    c[s] += 1;
                }
            }
        }
    }
    return c;
}

// p(n) for n <= order from the divisor-sum recurrence n p(n) = sum sigma(k) p(n - k).
inline std::vector<integer> partition_numbers(std::size_t order)
{
    std::vector<integer> sigma(order + 1, 0), p(order + 1, 0);
    for (std::size_t d = 1; d <= order; ++d) {
        for (std::size_t m = d; m <= order; m += d) {
            sigma[m] += d;
        }
    }
    p[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        integer s = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            s += sigma[k] * p[n - k];
        }
        p[n] = s / n;
    }
    return p;
}

// sum_{d | n} d^2 chi(d) (cofactor = false) or sum_{d | n} d^2 chi(n/d) (cofactor = true).
inline integer divisor_sum(std::uint64_t n, bool cofactor)
{
    integer s = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        for (auto e : {d, n / d}) {
            s += integer(sevencore::legendre7(cofactor ? n / e : e)) * e * e;
            if (d * d == n) {
                break;
            }
        }
    }
    return s;
}

// All hook lengths of a partition, read off the Young diagram.
inline std::vector<unsigned> hook_lengths(const std::vector<unsigned>& parts)
{
    std::vector<unsigned> hooks;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (unsigned j = 0; j < parts[i]; ++j) {
            unsigned leg = 0;
            for (std::size_t k = i + 1; k < parts.size() && parts[k] > j; ++k) {
                ++leg;
            }
            hooks.push_back(parts[i] - j - 1 + leg + 1);
        }
    }
    return hooks;
}

// F(p, r) from F(-1) = 0, F(0) = 1, F(r) = s F(r-1) - p^2 F(r-2), where s is
// the trace of beta^2 (so beta^2 and its conjugate are the roots of X^2 - sX + p^2).
inline integer F_recurrence(std::uint64_t p, int r)
{
    integer s;
    if (p == 2) {
        s = -3; // beta = (1 + sqrt(-7))/2, beta^2 = (-3 + sqrt(-7))/2
    } else {
        const auto d = sevencore::decompose_x2_7y2(p);
        s = 2 * (integer(d.x) * d.x - 7 * integer(d.y) * d.y);
    }
    integer prev = 0, cur = 1;
    for (int k = 1; k <= r; ++k) {
        integer next = s * cur - integer(p) * p * prev;
        prev = cur;
        cur = next;
    }
    return r == -1 ? integer(0) : cur;
}

} // namespace oracle

#endif

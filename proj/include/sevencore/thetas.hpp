#ifndef SEVENCORE_THETAS_HPP
#define SEVENCORE_THETAS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arithmetic.hpp"
#include "series.hpp"

namespace sevencore
{

// E(q^k) = prod_{n >= 1} (1 - q^(kn)), expanded with the pentagonal number
// theorem: sum_j (-1)^j q^(k j(3j-1)/2) over all integers j.
inline qseries euler_E(std::size_t order, std::size_t k = 1)
{
    if (k == 0) {
        throw out_of_range("euler_E: k must be positive");
    }
    std::vector<integer> c(order + 1);
    c[0] = 1;
    for (std::size_t j = 1;; ++j) {
        const std::size_t lo = k * (j * (3 * j - 1) / 2);
        const std::size_t hi = k * (j * (3 * j + 1) / 2);
        if (lo > order) {
            break;
        }
        const int sign = (j % 2 == 0) ? 1 : -1;
        c[lo] += sign;
        if (hi <= order) {
            c[hi] += sign;
        }
    }
    return qseries(std::move(c));
}

// phi(q^k) = sum_{n in Z} q^(k n^2)
inline qseries phi(std::size_t order, std::size_t k = 1)
{
    if (k == 0) {
        throw out_of_range("phi: k must be positive");
    }
    std::vector<integer> c(order + 1);
    c[0] = 1;
    for (std::size_t n = 1; k * n * n <= order; ++n) {
        c[k * n * n] += 2;
    }
    return qseries(std::move(c));
}

// psi(q^k) = sum_{n >= 0} q^(k n(n+1)/2)
inline qseries psi(std::size_t order, std::size_t k = 1)
{
    if (k == 0) {
        throw out_of_range("psi: k must be positive");
    }
    std::vector<integer> c(order + 1);
    for (std::size_t n = 0; k * (n * (n + 1) / 2) <= order; ++n) {
        c[k * (n * (n + 1) / 2)] += 1;
    }
    return qseries(std::move(c));
}

namespace detail
{

inline constexpr std::size_t lambert_order_limit = 10'000'000;

inline void check_lambert_order(std::size_t order)
{
    if (order > lambert_order_limit) {
        throw out_of_range("Lambert series order " + std::to_string(order) + " above "
                           + std::to_string(lambert_order_limit));
    }
}

inline qseries from_int64(const std::vector<std::int64_t>& c)
{
    std::vector<integer> out(c.begin(), c.end());
    return qseries(std::move(out));
}

} // namespace detail

// L(q) = sum_n (n|7) n^2 q^n / (1 - q^n) = sum_n (sum_{d | n} d^2 (d|7)) q^n.
inline qseries lambert_L(std::size_t order)
{
    detail::check_lambert_order(order);
    std::vector<std::int64_t> c(order + 1, 0);
    for (std::size_t d = 1; d <= order; ++d) {
        const int leg = legendre7(d);
        if (leg == 0) {
            continue;
        }
        const auto w = leg * static_cast<std::int64_t>(d * d);
        for (std::size_t m = d; m <= order; m += d) {
            c[m] += w;
        }
    }
    return detail::from_int64(c);
}

// K(q) = sum_n (n|7) q^n (1 + q^n) / (1 - q^n)^3, using
// q^n (1 + q^n) / (1 - q^n)^3 = sum_{m >= 1} m^2 q^(mn).
inline qseries lambert_K(std::size_t order)
{
    detail::check_lambert_order(order);
    std::vector<std::int64_t> c(order + 1, 0);
    for (std::size_t n = 1; n <= order; ++n) {
        const int leg = legendre7(n);
        if (leg == 0) {
            continue;
        }
        for (std::size_t m = 1; m * n <= order; ++m) {
            c[m * n] += leg * static_cast<std::int64_t>(m * m);
        }
    }
    return detail::from_int64(c);
}

// M(q) = q E^3(q) E^3(q^7)
inline qseries big_M(std::size_t order)
{
    const auto e1 = euler_E(order, 1);
    const auto e7 = euler_E(order, 7);
    return shift(pow(e1, 3) * pow(e7, 3), 1);
}

// E^t(q^t) / E(q), the generating function of t-core partitions.
inline qseries t_core_gf(std::size_t order, unsigned t)
{
    if (t < 2) {
        throw out_of_range("t_core_gf: t must be at least 2");
    }
    // E^t(q^t) through q^order only needs E^t(q) through q^(order / t).
    const auto numerator = substitute_power(pow(euler_E(order / t, 1), t), t, order);
    return divide(numerator, euler_E(order, 1));
}

// E^7(q) / E(q^7)
inline qseries e7_over_e_of_q7(std::size_t order) { return divide(pow(euler_E(order, 1), 7), euler_E(order, 7)); }

// 8(1 - E^7(q)/E(q^7)) - 49 M(q), which equals 7 L(q): the eta-quotient side
// of the L identity with the 8/7 cleared.
inline qseries seven_L_from_eta(std::size_t order)
{
    return integer(8) * (qseries::one(order) - e7_over_e_of_q7(order)) - integer(49) * big_M(order);
}

// 8 q^2 E^7(q^7)/E(q) + M(q), the eta-quotient side of the K identity.
inline qseries K_from_eta(std::size_t order)
{
    return integer(8) * shift(t_core_gf(order, 7), 2) + big_M(order);
}

enum class series_tag
{
    E,
    PHI,
    PSI,
    L,
    K,
    M,
    SEVEN_CORE_GF,
    T_CORE_GF,
};

// A named series, optionally with q -> q^k. `t` is only read for T_CORE_GF.
struct series_name
{
    series_tag tag = series_tag::E;
    std::size_t k = 1;
    unsigned t = 7;
};

inline qseries make_series(const series_name& name, std::size_t order)
{
    if (name.k == 0) {
        throw out_of_range("series argument power must be positive");
    }
    const std::size_t base_order = order / name.k;
    qseries base = [&] {
        switch (name.tag) {
        case series_tag::E:
            return euler_E(base_order);
        case series_tag::PHI:
            return phi(base_order);
        case series_tag::PSI:
            return psi(base_order);
        case series_tag::L:
            return lambert_L(base_order);
        case series_tag::K:
            return lambert_K(base_order);
        case series_tag::M:
            return big_M(base_order);
        case series_tag::SEVEN_CORE_GF:
            return t_core_gf(base_order, 7);
        case series_tag::T_CORE_GF:
            return t_core_gf(base_order, name.t);
        }
        throw out_of_range("unknown series tag");
    }();
    return substitute_power(base, name.k, order);
}

} // namespace sevencore

#endif

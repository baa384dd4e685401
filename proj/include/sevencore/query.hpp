#ifndef SEVENCORE_QUERY_HPP
#define SEVENCORE_QUERY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arithmetic.hpp"
#include "cores.hpp"
#include "errors.hpp"
#include "forms.hpp"
#include "series.hpp"
#include "thetas.hpp"

namespace sevencore
{

// How a coefficient is obtained: a multiplicative closed form, a truncated
// product/quotient expansion, or direct enumeration.
enum class route
{
    CLOSED,
    SERIES,
    ORACLE,
};

inline const char* to_string(route r)
{
    switch (r) {
    case route::CLOSED:
        return "closed";
    case route::SERIES:
        return "series";
    case route::ORACLE:
        return "oracle";
    }
    return "?";
}

inline std::optional<route> parse_route(std::string_view s)
{
    for (auto r : {route::CLOSED, route::SERIES, route::ORACLE}) {
        if (s == to_string(r)) {
            return r;
        }
    }
    return std::nullopt;
}

enum class coeff_series
{
    L,
    K,
    M,
    PHI3PHI7_3, // phi^3(q) phi^3(q^7)
    PSI3PSI7_3, // psi^3(q) psi^3(q^7), without the q^3 shift
    A_T,
};

inline const char* to_string(coeff_series s)
{
    switch (s) {
    case coeff_series::L:
        return "L";
    case coeff_series::K:
        return "K";
    case coeff_series::M:
        return "M";
    case coeff_series::PHI3PHI7_3:
        return "phi3phi7_3";
    case coeff_series::PSI3PSI7_3:
        return "psi3psi7_3";
    case coeff_series::A_T:
        return "a_t";
    }
    return "?";
}

inline std::optional<coeff_series> parse_coeff_series(std::string_view s)
{
    for (auto c : {coeff_series::L, coeff_series::K, coeff_series::M, coeff_series::PHI3PHI7_3,
                   coeff_series::PSI3PSI7_3, coeff_series::A_T}) {
        if (s == to_string(c)) {
            return c;
        }
    }
    return std::nullopt;
}

// Routes available for a series, fastest first.
inline std::vector<route> permitted_routes(coeff_series s)
{
    if (s == coeff_series::A_T) {
        return {route::SERIES, route::ORACLE};
    }
    return {route::CLOSED, route::SERIES, route::ORACLE};
}

inline bool is_permitted(coeff_series s, route r)
{
    const auto rs = permitted_routes(s);
    return std::find(rs.begin(), rs.end(), r) != rs.end();
}

namespace detail
{

// sum_{d | n} d^2 chi(d) or, with on_cofactor, sum_{d | n} d^2 chi(n/d).
inline integer divisor_sum_oracle(std::uint64_t n, bool on_cofactor)
{
    integer s = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            s += integer(legendre7(on_cofactor ? n / d : d)) * d * d;
        }
    }
    return s;
}

// q prod (1 - q^k)^3 (1 - q^7k)^3 by multiplying out one binomial factor at a time.
inline std::vector<integer> naive_M(std::size_t order)
{
    std::vector<integer> c(order + 1, 0);
    if (order == 0) {
        return c;
    }
    std::vector<integer> p(order, 0); // coefficients of the product through q^(order - 1)
    p[0] = 1;
    auto times_one_minus = [&](std::size_t k) {
        for (std::size_t i = p.size(); i-- > k;) {
            p[i] -= p[i - k];
        }
    };
    for (std::size_t k = 1; k < order; ++k) {
        for (int rep = 0; rep < 3; ++rep) {
            times_one_minus(k);
            if (7 * k < order) {
                times_one_minus(7 * k);
            }
        }
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        c[i + 1] = p[i];
    }
    return c;
}

} // namespace detail

// Coefficients [q^first] .. [q^last] of the named series along one route.
// `t` is only read for a_t.
inline std::vector<integer> coefficients(coeff_series s, std::uint64_t first, std::uint64_t last, unsigned t, route r)
{
    if (first > last) {
        throw out_of_range("empty coefficient range");
    }
    if (!is_permitted(s, r)) {
        throw out_of_range(std::string("route '") + to_string(r) + "' is not available for " + to_string(s));
    }
    if (s == coeff_series::A_T && t < 2) {
        throw out_of_range("a_t needs t >= 2");
    }
    std::vector<integer> out;
    out.reserve(last - first + 1);

    if (r == route::SERIES) {
        const auto order = std::size_t(last);
        qseries series = [&] {
            switch (s) {
            case coeff_series::L: {
                const auto seven_l = seven_L_from_eta(order);
                std::vector<integer> c(order + 1);
                for (std::size_t i = 0; i <= order; ++i) {
                    c[i] = detail::exact_div(seven_l[i], 7, "7L");
                }
                return qseries(std::move(c));
            }
            case coeff_series::K:
                return K_from_eta(order);
            case coeff_series::M:
                return big_M(order);
            case coeff_series::PHI3PHI7_3:
                return sextenary_series(order);
            case coeff_series::PSI3PSI7_3:
                return pow(psi(order, 1) * psi(order, 7), 3);
            case coeff_series::A_T:
                return t_core_gf(order, t);
            }
            throw out_of_range("unknown series");
        }();
        for (auto n = first; n <= last; ++n) {
            out.push_back(series[n]);
        }
        return out;
    }

    if (r == route::ORACLE && s == coeff_series::M) {
        const auto c = detail::naive_M(std::size_t(last));
        return {c.begin() + std::ptrdiff_t(first), c.end()};
    }

    for (auto n = first; n <= last; ++n) {
        switch (s) {
        case coeff_series::L:
        case coeff_series::K:
            if (n == 0) {
                out.emplace_back(0);
            } else if (r == route::CLOSED) {
                out.push_back(s == coeff_series::L ? coef_L(n) : coef_K(n));
            } else {
                out.push_back(detail::divisor_sum_oracle(n, s == coeff_series::K));
            }
            break;
        case coeff_series::M:
            out.push_back(n == 0 ? integer(0) : coef_M(n));
            break;
        case coeff_series::PHI3PHI7_3:
            if (r == route::CLOSED) {
                out.push_back(n == 0 ? integer(1) : closed_phi(n));
            } else {
                out.push_back(count_sextenary(n).count);
            }
            break;
        case coeff_series::PSI3PSI7_3:
            if (r == route::CLOSED) {
                out.push_back(closed_psi(n + 3));
            } else {
                out.push_back(count_odd_sextenary(n + 3).count / 64);
            }
            break;
        case coeff_series::A_T:
            if (n > oracle_limit) {
                throw too_large("a_t oracle route: n = " + std::to_string(n) + " exceeds "
                                + std::to_string(oracle_limit));
            }
            out.emplace_back(a_t_oracle(unsigned(n), t));
            break;
        }
    }
    return out;
}

} // namespace sevencore

#endif

#ifndef SEVENCORE_FORMS_HPP
#define SEVENCORE_FORMS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arithmetic.hpp"
#include "series.hpp"
#include "thetas.hpp"

namespace sevencore
{

enum class count_method
{
    LATTICE,
    SERIES,
    CLOSED_FORM,
};

inline const char* to_string(count_method m)
{
    switch (m) {
    case count_method::LATTICE:
        return "lattice";
    case count_method::SERIES:
        return "series";
    case count_method::CLOSED_FORM:
        return "closed";
    }
    return "?";
}

struct rep_count
{
    std::uint64_t n = 0;
    integer count = 0;
    count_method method = count_method::LATTICE;
};

namespace detail
{

// Sign multiplicity of a tuple of non-negative coordinates.
inline std::uint64_t sign_weight(std::initializer_list<std::uint64_t> coords)
{
    std::uint64_t w = 1;
    for (auto c : coords) {
        if (c != 0) {
            w *= 2;
        }
    }
    return w;
}

} // namespace detail

// Number of (x, y, z, s, t, u) in Z^6 with x^2 + y^2 + z^2 + 7(s^2 + t^2 + u^2) = n.
// Enumerates non-negative tuples (z solved for) and weights each by 2^(#nonzero).
inline rep_count count_sextenary(std::uint64_t n)
{
    std::uint64_t total = 0;
    for (std::uint64_t s = 0; 7 * s * s <= n; ++s) {
        for (std::uint64_t t = 0; 7 * (s * s + t * t) <= n; ++t) {
            for (std::uint64_t u = 0; 7 * (s * s + t * t + u * u) <= n; ++u) {
                const auto r7 = n - 7 * (s * s + t * t + u * u);
                for (std::uint64_t x = 0; x * x <= r7; ++x) {
                    for (std::uint64_t y = 0; x * x + y * y <= r7; ++y) {
                        const auto rest = r7 - x * x - y * y;
                        const auto z = detail::isqrt(rest);
                        if (z * z == rest) {
                            total += detail::sign_weight({x, y, z, s, t, u});
                        }
                    }
                }
            }
        }
    }
    return {n, total, count_method::LATTICE};
}

// Number of all-odd (x, y, z, s, t, u) in Z^6 with x^2 + y^2 + z^2 + 7(s^2 + t^2 + u^2) = 8m.
// All signs are counted, so this is 64 times the positive count.
inline rep_count count_odd_sextenary(std::uint64_t m)
{
    const std::uint64_t target = 8 * m;
    std::uint64_t positive = 0;
    for (std::uint64_t s = 1; 7 * s * s <= target; s += 2) {
        for (std::uint64_t t = 1; 7 * (s * s + t * t) <= target; t += 2) {
            for (std::uint64_t u = 1; 7 * (s * s + t * t + u * u) <= target; u += 2) {
                const auto r7 = target - 7 * (s * s + t * t + u * u);
                for (std::uint64_t x = 1; x * x <= r7; x += 2) {
                    for (std::uint64_t y = 1; x * x + y * y <= r7; y += 2) {
                        const auto rest = r7 - x * x - y * y;
                        const auto z = detail::isqrt(rest);
                        if (z * z == rest && z % 2 == 1) {
                            ++positive;
                        }
                    }
                }
            }
        }
    }
    return {m, integer(positive) * 64, count_method::LATTICE};
}

// count_sextenary(n) for every n <= max_n in one pass over the lattice points
// of the ellipsoid.
inline std::vector<integer> sextenary_count_table(std::uint64_t max_n)
{
    std::vector<std::uint64_t> hist(max_n + 1, 0);
    for (std::uint64_t s = 0; 7 * s * s <= max_n; ++s) {
        for (std::uint64_t t = 0; 7 * (s * s + t * t) <= max_n; ++t) {
            for (std::uint64_t u = 0; 7 * (s * s + t * t + u * u) <= max_n; ++u) {
                const auto base7 = 7 * (s * s + t * t + u * u);
                for (std::uint64_t x = 0; base7 + x * x <= max_n; ++x) {
                    for (std::uint64_t y = 0; base7 + x * x + y * y <= max_n; ++y) {
                        for (std::uint64_t z = 0; base7 + x * x + y * y + z * z <= max_n; ++z) {
                            hist[base7 + x * x + y * y + z * z] += detail::sign_weight({x, y, z, s, t, u});
                        }
                    }
                }
            }
        }
    }
    return {hist.begin(), hist.end()};
}

// count_odd_sextenary(m) for every m <= max_m.
inline std::vector<integer> odd_sextenary_count_table(std::uint64_t max_m)
{
    const std::uint64_t top = 8 * max_m;
    std::vector<std::uint64_t> hist(max_m + 1, 0);
    for (std::uint64_t s = 1; 7 * s * s <= top; s += 2) {
        for (std::uint64_t t = 1; 7 * (s * s + t * t) <= top; t += 2) {
            for (std::uint64_t u = 1; 7 * (s * s + t * t + u * u) <= top; u += 2) {
                const auto base7 = 7 * (s * s + t * t + u * u);
                for (std::uint64_t x = 1; base7 + x * x <= top; x += 2) {
                    for (std::uint64_t y = 1; base7 + x * x + y * y <= top; y += 2) {
                        for (std::uint64_t z = 1; base7 + x * x + y * y + z * z <= top; z += 2) {
                            // A sum of six odd squares weighted 1,1,1,7,7,7 is always 0 mod 8.
                            hist[(base7 + x * x + y * y + z * z) / 8] += 64;
                        }
                    }
                }
            }
        }
    }
    return {hist.begin(), hist.end()};
}

// phi^3(q) phi^3(q^7)
inline qseries sextenary_series(std::size_t order) { return pow(phi(order, 1) * phi(order, 7), 3); }

// q^3 psi^3(q) psi^3(q^7)
inline qseries odd_sextenary_series(std::size_t order)
{
    return shift(pow(psi(order, 1) * psi(order, 7), 3), 3);
}

namespace detail
{

// The two products shared by both corollaries, over the odd split primes and
// the inert primes of n:
//   split_inert = prod (1 - p^(2v+2))/(1 - p^2) * prod ((-1)^w + q^(2w+2))/(1 + q^2)
//   f_product   = prod F(p, v) * prod q^w (1 + (-1)^w)/2
struct corollary_terms
{
    integer split_inert = 1;
    integer f_product = 1;
    integer seven_factor = 0; // 7^(2c+1) - (-1)^b
    integer minus7_c = 1;     // (-7)^c
};

inline corollary_terms corollary_terms_for(const factorization7& f)
{
    corollary_terms t;
    for (const auto& [p, v] : f.p_list) {
        t.split_inert *= split_factor(p, v);
        t.f_product *= F(p, int(v));
    }
    for (const auto& [q, w] : f.q_list) {
        t.split_inert *= inert_factor(q, w);
        t.f_product *= (w % 2 == 0) ? ipow(q, w) : integer(0);
    }
    t.seven_factor = ipow(7, 2 * f.c + 1) - (f.b % 2 == 0 ? 1 : -1);
    t.minus7_c = (f.c % 2 == 0 ? 1 : -1) * ipow(7, f.c);
    return t;
}

inline integer require_integer(const rational& r, const char* what, std::uint64_t n)
{
    if (denominator(r) != 1) {
        throw non_integer_result(std::string(what) + "(" + std::to_string(n) + ") = " + r.str()
                                 + " is not an integer");
    }
    return numerator(r);
}

} // namespace detail

// [q^n] phi^3(q) phi^3(q^7) from the factorization of n (n >= 1).
inline integer closed_phi(const factorization7& f)
{
    const auto t = detail::corollary_terms_for(f);
    rational r;
    if (f.d == 0) {
        r = rational(t.seven_factor * t.split_inert, 8) + rational(21 * t.minus7_c * t.f_product, 4);
    } else {
        const integer four_d1 = detail::ipow(4, f.d + 1) - 7;
        const integer two_part = 7 * F(2, int(f.d)) + 8 * F(2, int(f.d) - 1);
        r = rational(t.seven_factor * four_d1 * t.split_inert, 24)
            - rational(3 * t.minus7_c * two_part * t.f_product, 4);
    }
    return detail::require_integer(r, "closed_phi", f.n);
}

// [q^n] q^3 psi^3(q) psi^3(q^7) from the factorization of n (n >= 1; the
// value is 0 for n = 1, 2).
inline integer closed_psi(const factorization7& f)
{
    const auto t = detail::corollary_terms_for(f);
    rational r;
    if (f.d == 0) {
        r = rational(t.seven_factor * t.split_inert, 64) - rational(3 * t.minus7_c * t.f_product, 32);
    } else {
        const integer two_part = F(2, int(f.d)) + 7 * F(2, int(f.d) - 1);
        r = rational(detail::ipow(4, f.d) * t.seven_factor * t.split_inert, 64)
            - rational(3 * t.minus7_c * two_part * t.f_product, 32);
    }
    return detail::require_integer(r, "closed_psi", f.n);
}

inline integer closed_phi(std::uint64_t n)
{
    if (n == 0) {
        throw out_of_range("closed_phi needs n >= 1");
    }
    return closed_phi(factorize7(n));
}

inline integer closed_psi(std::uint64_t n)
{
    if (n == 0) {
        throw out_of_range("closed_psi needs n >= 1");
    }
    return closed_psi(factorize7(n));
}

} // namespace sevencore

#endif

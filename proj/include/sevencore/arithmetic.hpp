#ifndef SEVENCORE_ARITHMETIC_HPP
#define SEVENCORE_ARITHMETIC_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"
#include "series.hpp"

namespace sevencore
{

// Legendre symbol (n|7): +1 on the squares 1, 2, 4; -1 on 3, 5, 6; 0 on multiples of 7.
inline int legendre7(std::uint64_t n) noexcept
{
    constexpr std::array<int, 7> table{0, 1, 1, -1, 1, -1, -1};
    return table[n % 7];
}

// Residue class 1, 2, 4 (mod 7): the primes that split in Z[(1+sqrt(-7))/2].
inline bool is_split_class(std::uint64_t p) noexcept { return legendre7(p) == 1; }

// Residue class 3, 5, 6 (mod 7).
inline bool is_inert_class(std::uint64_t p) noexcept { return legendre7(p) == -1; }

struct prime_power
{
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const prime_power&, const prime_power&) = default;
};

namespace detail
{

inline constexpr std::uint32_t sieve_limit = 1'000'000;

// Smallest-prime-factor table up to sieve_limit, plus the prime list.
class prime_sieve
{
public:
    prime_sieve() : spf_(sieve_limit + 1, 0)
    {
        for (std::uint32_t i = 2; i <= sieve_limit; ++i) {
            if (spf_[i] == 0) {
                spf_[i] = i;
                primes_.push_back(i);
            }
            for (auto p : primes_) {
                const std::uint64_t m = std::uint64_t(p) * i;
                if (p > spf_[i] || m > sieve_limit) {
                    break;
                }
                spf_[m] = p;
            }
        }
    }

    std::uint32_t smallest_factor(std::uint32_t n) const { return spf_[n]; }
    const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

private:
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

// Built on first use, read-only afterwards.
inline const prime_sieve& sieve()
{
    static const prime_sieve s;
    return s;
}

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1U) {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1U;
    }
    return r;
}

inline std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r) {
        --r;
    }
    while ((r + 1) <= n / (r + 1)) {
        ++r;
    }
    return r;
}

} // namespace detail

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    if (n <= detail::sieve_limit) {
        return detail::sieve().smallest_factor(static_cast<std::uint32_t>(n)) == n;
    }
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) {
            return false;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

// Prime factorization, ascending primes. Sieve lookup below 10^6, trial
// division by the sieve primes above that, then by 6k+-1 candidates for
// whatever cofactor is left (a primality test stops the loop early).
inline std::vector<prime_power> factorize(std::uint64_t n)
{
    if (n == 0) {
        throw out_of_range("factorize: n must be positive");
    }
    std::vector<prime_power> out;
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            out.push_back({p, e});
        }
    };
    const auto& sv = detail::sieve();
    if (n > detail::sieve_limit) {
        for (auto p : sv.primes()) {
            if (std::uint64_t(p) * p > n) {
                break;
            }
            take(p);
            if (n <= detail::sieve_limit) {
                break;
            }
        }
    }
    if (n <= detail::sieve_limit) {
        while (n > 1) {
            take(sv.smallest_factor(static_cast<std::uint32_t>(n)));
        }
        return out;
    }
    // Cofactor above the sieve with no prime factor below 10^6.
    static_assert(detail::sieve_limit % 6 == 4);
    std::uint64_t f = detail::sieve_limit + 1; // = 5 (mod 6); f + 2 = 1 (mod 6)
    while (n > 1 && !is_prime(n)) {
        while (n % f != 0 && n % (f + 2) != 0) {
            f += 6;
        }
        take(f);
        take(f + 2);
    }
    if (n > 1) {
        out.push_back({n, 1});
    }
    return out;
}

// Prime factorization of n split by class mod 7:
//   n = 7^c * 2^d * prod p_i^v_i * prod q_j^w_j,
// with p_i odd and = 1, 2, 4 (mod 7), q_j = 3, 5, 6 (mod 7), b = sum w_j.
struct factorization7
{
    std::uint64_t n = 1;
    unsigned c = 0;
    unsigned d = 0;
    std::vector<prime_power> p_list;
    std::vector<prime_power> q_list;
    unsigned b = 0;

    bool all_inert_exponents_even() const
    {
        for (const auto& [q, w] : q_list) {
            if (w % 2 != 0) {
                return false;
            }
        }
        return true;
    }
};

inline factorization7 factorize7(std::uint64_t n)
{
    factorization7 f;
    f.n = n;
    for (const auto& pp : factorize(n)) {
        if (pp.prime == 7) {
            f.c = pp.exponent;
        } else if (pp.prime == 2) {
            f.d = pp.exponent;
        } else if (is_split_class(pp.prime)) {
            f.p_list.push_back(pp);
        } else {
            f.q_list.push_back(pp);
            f.b += pp.exponent;
        }
    }
    return f;
}

// Accepts arbitrary-precision input and rejects anything outside [1, 2^64).
inline factorization7 factorize7(const integer& n)
{
    if (n < 1 || n > std::numeric_limits<std::uint64_t>::max()) {
        throw out_of_range("factorize7: n = " + n.str() + " outside [1, 2^64)");
    }
    return factorize7(static_cast<std::uint64_t>(n));
}

// Element (u + v*sqrt(-7))/2 of the ring of integers of Q(sqrt(-7)); u = v (mod 2).
class half_quad_int
{
public:
    half_quad_int() = default;

    half_quad_int(integer u, integer v) : u_(std::move(u)), v_(std::move(v))
    {
        if ((u_ - v_) % 2 != 0) {
            throw error("half_quad_int: (" + u_.str() + " + " + v_.str()
                        + " sqrt(-7))/2 is not an algebraic integer");
        }
    }

    // a + b*sqrt(-7) with ordinary integers a, b.
    static half_quad_int from_whole(const integer& a, const integer& b) { return {2 * a, 2 * b}; }

    const integer& u() const noexcept { return u_; }
    const integer& v() const noexcept { return v_; }

    half_quad_int conj() const { return {u_, -v_}; }

    // (u^2 + 7v^2)/4
    integer norm() const { return (u_ * u_ + 7 * v_ * v_) / 4; }

    // Twice the real part, i.e. the trace x + conj(x).
    const integer& trace() const noexcept { return u_; }

    friend bool operator==(const half_quad_int&, const half_quad_int&) = default;

    friend half_quad_int operator+(const half_quad_int& a, const half_quad_int& b)
    {
        return {a.u_ + b.u_, a.v_ + b.v_};
    }

    friend half_quad_int operator-(const half_quad_int& a, const half_quad_int& b)
    {
        return {a.u_ - b.u_, a.v_ - b.v_};
    }

    friend half_quad_int operator*(const half_quad_int& a, const half_quad_int& b)
    {
        return {(a.u_ * b.u_ - 7 * a.v_ * b.v_) / 2, (a.u_ * b.v_ + a.v_ * b.u_) / 2};
    }

    friend half_quad_int pow(half_quad_int base, unsigned e)
    {
        half_quad_int r{2, 0};
        while (e > 0) {
            if (e & 1U) {
                r = r * base;
            }
            e >>= 1U;
            if (e > 0) {
                base = base * base;
            }
        }
        return r;
    }

private:
    integer u_ = 0;
    integer v_ = 0;
};

struct decomposition7
{
    std::uint64_t p;
    std::uint64_t x;
    std::uint64_t y;
};

// The unique positive (x, y) with p = x^2 + 7y^2, for an odd prime p = 1, 2, 4 (mod 7).
// Brute force over y; fine for the p that occur in factorizations below 2^64
// only when p is moderate, which is all the scans ever need.
inline decomposition7 decompose_x2_7y2(std::uint64_t p)
{
    if (p == 2 || !is_split_class(p)) {
        throw not_representable(std::to_string(p) + " is not of the form x^2 + 7y^2 with x, y > 0");
    }
    if (!is_prime(p)) {
        throw out_of_range("decompose_x2_7y2: " + std::to_string(p) + " is not prime");
    }
    for (std::uint64_t y = 1; 7 * y * y < p; ++y) {
        const auto rest = p - 7 * y * y;
        const auto x = detail::isqrt(rest);
        if (x * x == rest) {
            return {p, x, y};
        }
    }
    throw not_representable(std::to_string(p) + " has no decomposition x^2 + 7y^2");
}

// beta with beta * conj(beta) = p: x + y*sqrt(-7) for odd p, (1 + sqrt(-7))/2 for p = 2.
inline half_quad_int split_generator(std::uint64_t p)
{
    if (p == 2) {
        return {1, 1};
    }
    if (!is_split_class(p) || !is_prime(p)) {
        throw wrong_class("F(p, r) needs p = 2 or a prime = 1, 2, 4 (mod 7); got "
                          + std::to_string(p));
    }
    const auto dec = decompose_x2_7y2(p);
    return half_quad_int::from_whole(dec.x, dec.y);
}

// F(p, r) = (beta^(2r+2) - conj(beta)^(2r+2)) / (beta^2 - conj(beta)^2).
// r = -1 gives 0, which is what the even-n corollary formulas rely on.
inline integer F(std::uint64_t p, int r)
{
    const auto beta = split_generator(p);
    if (r == -1) {
        return 0;
    }
    if (r < -1) {
        throw out_of_range("F(p, r): r must be >= -1");
    }
    const auto beta2 = beta * beta;
    const auto top = pow(beta2, unsigned(r + 1));
    // Both differences are pure imaginary: (0 + 2v sqrt(-7))/2.
    const integer& num = top.v();
    const integer& den = beta2.v();
    if (num % den != 0) {
        throw non_integer_result("F(" + std::to_string(p) + ", " + std::to_string(r)
                                 + ") is not an integer");
    }
    return num / den;
}

namespace detail
{

inline integer ipow(std::uint64_t base, unsigned e) { return boost::multiprecision::pow(integer(base), e); }

inline integer exact_div(const integer& a, const integer& b, const char* what)
{
    if (a % b != 0) {
        throw non_integer_result(std::string(what) + ": " + a.str() + " / " + b.str());
    }
    return a / b;
}

// (1 - p^(2v+2)) / (1 - p^2), the local factor of sum_{d | p^v} d^2.
inline integer split_factor(std::uint64_t p, unsigned v)
{
    return exact_div(ipow(p, 2 * v + 2) - 1, ipow(p, 2) - 1, "split factor");
}

// ((-1)^w + q^(2w+2)) / (1 + q^2), the twisted local factor at an inert prime.
inline integer inert_factor(std::uint64_t q, unsigned w)
{
    const integer sign = (w % 2 == 0) ? 1 : -1;
    return exact_div(sign + ipow(q, 2 * w + 2), 1 + ipow(q, 2), "inert factor");
}

// Product shared by [q^n]L and [q^n]K: split primes (2 included) and inert primes.
inline integer lk_core(const factorization7& f)
{
    integer r = 1;
    if (f.d > 0) {
        r *= split_factor(2, f.d);
    }
    for (const auto& [p, v] : f.p_list) {
        r *= split_factor(p, v);
    }
    for (const auto& [q, w] : f.q_list) {
        r *= inert_factor(q, w);
    }
    return r;
}

} // namespace detail

// [q^n]L(q) = sum_{d | n} d^2 (d|7), evaluated multiplicatively.
inline integer coef_L(const factorization7& f)
{
    auto r = detail::lk_core(f);
    return f.b % 2 == 0 ? r : integer(-r);
}

// [q^n]K(q) = sum_{d | n} d^2 ((n/d)|7), evaluated multiplicatively.
inline integer coef_K(const factorization7& f) { return detail::ipow(49, f.c) * detail::lk_core(f); }

// [q^n] q E^3(q) E^3(q^7). Zero unless every inert exponent is even.
inline integer coef_M(const factorization7& f)
{
    if (!f.all_inert_exponents_even()) {
        return 0;
    }
    integer r = (f.c % 2 == 0 ? 1 : -1) * detail::ipow(7, f.c);
    if (f.d > 0) {
        r *= F(2, int(f.d));
    }
    for (const auto& [p, v] : f.p_list) {
        r *= F(p, int(v));
    }
    for (const auto& [q, w] : f.q_list) {
        r *= detail::ipow(q, w);
    }
    return r;
}

inline integer coef_L(std::uint64_t n) { return coef_L(factorize7(n)); }
inline integer coef_K(std::uint64_t n) { return coef_K(factorize7(n)); }
inline integer coef_M(std::uint64_t n) { return coef_M(factorize7(n)); }

// |F(p, r)| <= (r + 1) p^r: F is a sum of r + 1 terms of absolute value p^r.
inline bool check_bound_fgn(std::uint64_t p, unsigned r)
{
    return abs(F(p, int(r))) <= (r + 1) * detail::ipow(p, r);
}

// Outcome of one of the local ratio bounds used to control the M(q) term.
struct ratio_bound
{
    rational ratio;
    rational threshold;
    bool holds = false;
    bool attained = false; // ratio == threshold
};

namespace detail
{

inline ratio_bound compare_ratio(const integer& num, const integer& den, const rational& threshold)
{
    ratio_bound rb;
    rb.ratio = rational(num, den);
    rb.threshold = threshold;
    // num/den >= a/b  <=>  num*b >= a*den   (den, b > 0)
    const integer lhs = num * denominator(threshold);
    const integer rhs = numerator(threshold) * den;
    rb.holds = lhs >= rhs;
    rb.attained = lhs == rhs;
    return rb;
}

} // namespace detail

// (1 - p^(2v+2)) / ((1 - p^2)|F(p, v)|) against 11, or 5/3 at (2, 1), or 21/5 at (2, 2).
inline ratio_bound check_split_ratio_bound(std::uint64_t p, unsigned v)
{
    if (v == 0) {
        throw out_of_range("split ratio bound needs v >= 1");
    }
    rational threshold = 11;
    if (p == 2 && v == 1) {
        threshold = rational(5, 3);
    } else if (p == 2 && v == 2) {
        threshold = rational(21, 5);
    }
    const integer f = abs(F(p, int(v)));
    return detail::compare_ratio(detail::ipow(p, 2 * v + 2) - 1, (detail::ipow(p, 2) - 1) * f, threshold);
}

// (q^(2w+2) + 1) / (q^w (1 + q^2)) against 11, or 8 at (3, 2). w must be even.
inline ratio_bound check_inert_ratio_bound(std::uint64_t q, unsigned w)
{
    if (!is_inert_class(q) || !is_prime(q)) {
        throw wrong_class("inert ratio bound needs a prime = 3, 5, 6 (mod 7); got " + std::to_string(q));
    }
    if (w == 0 || w % 2 != 0) {
        throw out_of_range("inert ratio bound needs a positive even exponent");
    }
    const rational threshold = (q == 3 && w == 2) ? rational(8) : rational(11);
    return detail::compare_ratio(detail::ipow(q, 2 * w + 2) + 1, detail::ipow(q, w) * (1 + detail::ipow(q, 2)),
                                 threshold);
}

} // namespace sevencore

#endif

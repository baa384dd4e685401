#ifndef SEVENCORE_VERIFY_HPP
#define SEVENCORE_VERIFY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "arithmetic.hpp"
#include "cores.hpp"
#include "forms.hpp"
#include "parallel.hpp"
#include "series.hpp"
#include "thetas.hpp"

namespace sevencore
{

enum class scan_status
{
    VERIFIED,
    FAILED,
};

inline const char* to_string(scan_status s) { return s == scan_status::VERIFIED ? "VERIFIED" : "FAILED"; }

struct scan_failure
{
    std::uint64_t n = 0;
    integer lhs = 0;
    integer rhs = 0;

    friend bool operator==(const scan_failure&, const scan_failure&) = default;
};

// Outcome of one identity or inequality scan.
//
// `exceptions_found` holds the indices the check treats as exceptional (the
// equality positions of an inequality, or the indices where a claim fails);
// the scan is VERIFIED iff there is no failure, every cross-route sample
// agreed, and `exceptions_found` equals `expected_exceptions`.
struct scan_report
{
    std::string name;
    std::uint64_t range = 0;
    scan_status status = scan_status::FAILED;
    std::vector<std::uint64_t> expected_exceptions;
    std::vector<std::uint64_t> exceptions_found;
    std::vector<std::uint64_t> equalities;
    std::optional<scan_failure> first_failure;
    std::size_t route_samples = 0;
    bool routes_agree = true;
    std::vector<std::string> notes;

    bool verified() const noexcept { return status == scan_status::VERIFIED; }

    friend bool operator==(const scan_report&, const scan_report&) = default;
};

struct scan_options
{
    unsigned threads = 1;
    std::uint64_t seed = 0x7c0e5eedULL;
};

namespace detail
{

inline void finalize(scan_report& r)
{
    std::sort(r.exceptions_found.begin(), r.exceptions_found.end());
    std::sort(r.equalities.begin(), r.equalities.end());
    std::sort(r.expected_exceptions.begin(), r.expected_exceptions.end());
    r.status = (!r.first_failure && r.routes_agree && r.exceptions_found == r.expected_exceptions)
                   ? scan_status::VERIFIED
                   : scan_status::FAILED;
}

inline std::vector<std::uint64_t> expected_within(std::initializer_list<std::uint64_t> all, std::uint64_t max_n)
{
    std::vector<std::uint64_t> out;
    for (auto n : all) {
        if (n <= max_n) {
            out.push_back(n);
        }
    }
    return out;
}

inline bool contains(const std::vector<std::uint64_t>& v, std::uint64_t n)
{
    return std::find(v.begin(), v.end(), n) != v.end();
}

// FNV-1a, so sample positions are the same on every platform.
inline std::uint64_t stable_hash(std::string_view s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// About 1% of [lo, hi], at least one index, drawn from a generator seeded by
// the check name.
inline std::vector<std::uint64_t> sample_indices(std::uint64_t lo, std::uint64_t hi, std::string_view name,
                                                 std::uint64_t seed)
{
    if (hi < lo) {
        return {};
    }
    const std::uint64_t count = std::max<std::uint64_t>(1, (hi - lo + 1) / 100);
    std::mt19937_64 rng(seed ^ stable_hash(name));
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
    std::set<std::uint64_t> picked;
    for (std::uint64_t i = 0; i < count; ++i) {
        picked.insert(dist(rng));
    }
    return {picked.begin(), picked.end()};
}

// Compares a per-n table against a series at the sampled indices.
inline void compare_routes(scan_report& r, const std::vector<std::uint64_t>& idx, const std::string& what,
                           const std::function<integer(std::uint64_t)>& closed,
                           const std::function<integer(std::uint64_t)>& series)
{
    for (auto n : idx) {
        ++r.route_samples;
        const auto a = closed(n);
        const auto b = series(n);
        if (a != b) {
            r.routes_agree = false;
            r.notes.push_back(what + ": closed form " + a.str() + " != series " + b.str() + " at n = "
                              + std::to_string(n));
        }
    }
}

// f(q^2) through q^order, from f through q^(order / 2).
template <typename Make>
qseries at_q2(Make make, std::size_t order)
{
    return substitute_power(make(order / 2), 2, order);
}

inline std::string join(const std::vector<std::uint64_t>& v, std::size_t limit = 40)
{
    std::string s;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    if (v.size() > limit) {
        s += ",...";
    }
    return s;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Identities between truncated series

struct identity_sides
{
    qseries lhs;
    qseries rhs;
};

// Coefficient-by-coefficient comparison through the common order.
inline scan_report check_identity(std::string name, const qseries& lhs, const qseries& rhs)
{
    scan_report r;
    r.name = std::move(name);
    r.range = std::min(lhs.order(), rhs.order());
    for (std::uint64_t n = 0; n <= r.range; ++n) {
        if (lhs[n] != rhs[n]) {
            r.first_failure = scan_failure{n, lhs[n], rhs[n]};
            break;
        }
    }
    detail::finalize(r);
    return r;
}

// 7 phi^3(-q) phi^3(-q^7) against its eta-quotient expansion.
inline identity_sides ntp1_sides(std::size_t order)
{
    const auto lhs = integer(7) * negate_argument(sextenary_series(order));
    const auto a7 = t_core_gf(order, 7);
    const auto m = big_M(order);
    const auto x = e7_over_e_of_q7(order);
    const auto a7_2 = detail::at_q2([](std::size_t o) { return t_core_gf(o, 7); }, order);
    const auto m_2 = detail::at_q2(big_M, order);
    const auto x_2 = detail::at_q2(e7_over_e_of_q7, order);
    const auto rhs = integer(-49) * (shift(a7, 2) + m) + integer(56) * (integer(7) * shift(a7_2, 4) + m_2) - x
                     + integer(8) * x_2;
    return {lhs, rhs};
}

// 56 q^3 psi^3(q) psi^3(q^7) against its eta-quotient expansion.
inline identity_sides ntp2_sides(std::size_t order)
{
    const auto lhs = integer(56) * odd_sextenary_series(order);
    const auto a7 = t_core_gf(order, 7);
    const auto m = big_M(order);
    const auto x = e7_over_e_of_q7(order);
    const auto a7_2 = detail::at_q2([](std::size_t o) { return t_core_gf(o, 7); }, order);
    const auto m_2 = detail::at_q2(big_M, order);
    const auto x_2 = detail::at_q2(e7_over_e_of_q7, order);
    const auto rhs = integer(49) * shift(a7, 2) + integer(7) * m - integer(49) * (shift(a7_2, 4) + m_2) + x - x_2;
    return {lhs, rhs};
}

// 8 phi^3(q) phi^3(q^7) = 8 + L(-q) - 7K(-q) - 8L(q^2) + 56K(q^2) - 42M(-q) - 48M(q^2)
inline identity_sides btyi_sides(std::size_t order)
{
    const auto lhs = integer(8) * sextenary_series(order);
    const auto l = lambert_L(order);
    const auto k = lambert_K(order);
    const auto m = big_M(order);
    const auto rhs = integer(8) * qseries::one(order) + negate_argument(l) - integer(7) * negate_argument(k)
                     - integer(8) * detail::at_q2(lambert_L, order) + integer(56) * detail::at_q2(lambert_K, order)
                     - integer(42) * negate_argument(m) - integer(48) * detail::at_q2(big_M, order);
    return {lhs, rhs};
}

// 32 q^2 (2q psi^3(q) psi^3(q^7) - E^7(q^7)/E(q)) = 3K - 7K(q^2) - L - 2M + L(q^2) - 42M(q^2)
inline identity_sides epl_sides(std::size_t order)
{
    const auto psi_part = shift(pow(psi(order, 1) * psi(order, 7), 3), 1);
    const auto lhs = integer(32) * shift(integer(2) * psi_part - t_core_gf(order, 7), 2);
    const auto rhs = integer(3) * lambert_K(order) - integer(7) * detail::at_q2(lambert_K, order)
                     - lambert_L(order) - integer(2) * big_M(order) + detail::at_q2(lambert_L, order)
                     - integer(42) * detail::at_q2(big_M, order);
    return {lhs, rhs};
}

// 8 phi^3(q) phi^3(q^7) split by parity of the exponent: odd coefficients
// come from 7K - L + 42M, even ones from
// 8 + L - 8L(q^2) - 7K + 56K(q^2) - 42M - 48M(q^2).
inline identity_sides dissection_sides(std::size_t order)
{
    const auto lhs = integer(8) * sextenary_series(order);
    const auto l = lambert_L(order);
    const auto k = lambert_K(order);
    const auto m = big_M(order);
    const auto odd = integer(7) * k - l + integer(42) * m;
    const auto even = integer(8) * qseries::one(order) + l - integer(8) * detail::at_q2(lambert_L, order)
                      - integer(7) * k + integer(56) * detail::at_q2(lambert_K, order) - integer(42) * m
                      - integer(48) * detail::at_q2(big_M, order);
    std::vector<integer> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        c[n] = (n % 2 == 1) ? odd[n] : even[n];
    }
    return {lhs, qseries(std::move(c))};
}

inline scan_report check_ntp1(std::size_t order)
{
    const auto s = ntp1_sides(order);
    return check_identity("ntp1", s.lhs, s.rhs);
}

inline scan_report check_ntp2(std::size_t order)
{
    const auto s = ntp2_sides(order);
    return check_identity("ntp2", s.lhs, s.rhs);
}

inline scan_report check_btyi(std::size_t order)
{
    const auto s = btyi_sides(order);
    return check_identity("btyi", s.lhs, s.rhs);
}

inline scan_report check_epl(std::size_t order)
{
    const auto s = epl_sides(order);
    return check_identity("epl", s.lhs, s.rhs);
}

inline scan_report check_dissection(std::size_t order)
{
    const auto s = dissection_sides(order);
    return check_identity("dissection", s.lhs, s.rhs);
}

// ---------------------------------------------------------------------------
// Three-route coefficient checks

namespace detail
{

// Walks n = first..max_n and records the first index where any route differs
// from the reference route.
inline void compare_all(scan_report& r, std::uint64_t first, std::uint64_t max_n,
                        const std::function<integer(std::uint64_t)>& reference,
                        const std::vector<std::function<integer(std::uint64_t)>>& others)
{
    for (std::uint64_t n = first; n <= max_n && !r.first_failure; ++n) {
        const auto ref = reference(n);
        for (const auto& other : others) {
            ++r.route_samples;
            const auto v = other(n);
            if (v != ref) {
                r.first_failure = scan_failure{n, ref, v};
                r.routes_agree = false;
                break;
            }
        }
    }
}

} // namespace detail

// Divisor-sum expansion of L, its eta-quotient form (as 7L), and the
// multiplicative closed form, compared at every 1 <= n <= max_n.
inline scan_report check_lambert_L(std::uint64_t max_n, const scan_options& opt = {})
{
    scan_report r;
    r.name = "lambert-L";
    r.range = max_n;
    const auto divisor_sum = lambert_L(max_n);
    const auto eta = seven_L_from_eta(max_n);
    const auto closed = parallel_table<integer>(1, max_n, opt.threads, [](std::uint64_t n) { return coef_L(n); });
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        ++r.route_samples;
        if (eta[n] != 7 * divisor_sum[n]) {
            r.first_failure = scan_failure{n, eta[n], 7 * divisor_sum[n]};
            r.notes.push_back("eta-quotient side != 7 * divisor sum");
            break;
        }
        if (n > 0 && closed[n - 1] != divisor_sum[n]) {
            r.first_failure = scan_failure{n, closed[n - 1], divisor_sum[n]};
            r.notes.push_back("multiplicative form != divisor sum");
            break;
        }
    }
    r.routes_agree = !r.first_failure;
    detail::finalize(r);
    return r;
}

inline scan_report check_lambert_K(std::uint64_t max_n, const scan_options& opt = {})
{
    scan_report r;
    r.name = "lambert-K";
    r.range = max_n;
    const auto divisor_sum = lambert_K(max_n);
    const auto eta = K_from_eta(max_n);
    const auto closed = parallel_table<integer>(1, max_n, opt.threads, [](std::uint64_t n) { return coef_K(n); });
    detail::compare_all(r, 1, max_n, [&](std::uint64_t n) { return divisor_sum[n]; },
                        {[&](std::uint64_t n) { return eta[n]; }, [&](std::uint64_t n) { return closed[n - 1]; }});
    detail::finalize(r);
    return r;
}

// coef_M(n) against [q^n] q E^3(q) E^3(q^7).
inline scan_report check_coef_M(std::uint64_t max_n, const scan_options& opt = {})
{
    scan_report r;
    r.name = "coef-M";
    r.range = max_n;
    const auto series = big_M(max_n);
    const auto closed = parallel_table<integer>(1, max_n, opt.threads, [](std::uint64_t n) { return coef_M(n); });
    detail::compare_all(r, 1, max_n, [&](std::uint64_t n) { return series[n]; },
                        {[&](std::uint64_t n) { return closed[n - 1]; }});
    detail::finalize(r);
    return r;
}

// Lattice count, phi^3(q) phi^3(q^7) and the closed form, 1 <= n <= max_n
// (n = 0 compares lattice and series only).
inline scan_report check_closed_phi(std::uint64_t max_n, const scan_options& opt = {})
{
    scan_report r;
    r.name = "closed-phi";
    r.range = max_n;
    const auto lattice = sextenary_count_table(max_n);
    const auto series = sextenary_series(max_n);
    const auto closed = parallel_table<integer>(1, max_n, opt.threads, [](std::uint64_t n) { return closed_phi(n); });
    detail::compare_all(r, 0, 0, [&](std::uint64_t n) { return lattice[n]; },
                        {[&](std::uint64_t n) { return series[n]; }});
    detail::compare_all(r, 1, max_n, [&](std::uint64_t n) { return lattice[n]; },
                        {[&](std::uint64_t n) { return series[n]; }, [&](std::uint64_t n) { return closed[n - 1]; }});
    detail::finalize(r);
    return r;
}

// All-odd lattice count / 64, q^3 psi^3(q) psi^3(q^7) and the closed form, 1 <= m <= max_m.
inline scan_report check_closed_psi(std::uint64_t max_m, const scan_options& opt = {})
{
    scan_report r;
    r.name = "closed-psi";
    r.range = max_m;
    const auto lattice = odd_sextenary_count_table(max_m);
    const auto series = odd_sextenary_series(max_m);
    const auto closed = parallel_table<integer>(1, max_m, opt.threads, [](std::uint64_t n) { return closed_psi(n); });
    for (std::uint64_t m = 0; m <= max_m; ++m) {
        if (lattice[m] % 64 != 0) {
            r.first_failure = scan_failure{m, lattice[m], 64};
            r.notes.push_back("all-odd lattice count not divisible by 64");
            break;
        }
    }
    detail::compare_all(r, 1, max_m, [&](std::uint64_t m) { return integer(lattice[m] / 64); },
                        {[&](std::uint64_t m) { return series[m]; }, [&](std::uint64_t m) { return closed[m - 1]; }});
    detail::finalize(r);
    return r;
}

// t-core generating function against partition enumeration, n <= max_n, for each t.
inline scan_report check_core_oracle(std::uint64_t max_n, const std::vector<unsigned>& ts = {2, 3, 5, 7, 11})
{
    scan_report r;
    r.name = "core-oracle";
    r.range = max_n;
    for (auto t : ts) {
        const auto series = a_t_series(t, max_n);
        for (std::uint64_t n = 0; n <= max_n && !r.first_failure; ++n) {
            ++r.route_samples;
            const integer oracle = a_t_oracle(unsigned(n), t);
            if (oracle != series[n]) {
                r.first_failure = scan_failure{n, series[n], oracle};
                r.routes_agree = false;
                r.notes.push_back("mismatch for t = " + std::to_string(t));
            }
        }
    }
    detail::finalize(r);
    return r;
}

// ---------------------------------------------------------------------------
// Inequality scans

namespace detail
{

// b(n) = [q^n] q psi^3(q) psi^3(q^7) = closed_psi(n + 2), n = 0..max_n.
inline std::vector<integer> b_closed(std::uint64_t max_n, unsigned threads)
{
    return parallel_table<integer>(0, max_n + 1, threads, [](std::uint64_t n) { return closed_psi(n + 2); });
}

inline qseries b_series(std::size_t order) { return shift(pow(psi(order, 1) * psi(order, 7), 3), 1); }

} // namespace detail

// 1 + 5q^6 + q^16 + 2q psi^3(q) psi^3(q^7) >= E^7(q^7)/E(q) coefficientwise,
// with equality exactly at n = 0, 6, 16.
inline scan_report check_theorem1(std::uint64_t max_n, const scan_options& opt = {})
{
    scan_report r;
    r.name = "theorem1";
    r.range = max_n;
    r.expected_exceptions = detail::expected_within({0, 6, 16}, max_n);
    const auto a7 = t_core_gf(max_n, 7);
    const auto b = detail::b_closed(max_n, opt.threads);
    const auto bs = detail::b_series(max_n);
    detail::compare_routes(r, detail::sample_indices(0, max_n, r.name, opt.seed), "b(n)",
                           [&](std::uint64_t n) { return b[n]; }, [&](std::uint64_t n) { return bs[n]; });
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        integer lhs = 2 * b[n];
        lhs += (n == 0) + 5 * (n == 6) + (n == 16);
        if (lhs < a7[n]) {
            if (!r.first_failure) {
                r.first_failure = scan_failure{n, lhs, a7[n]};
            }
        } else if (lhs == a7[n]) {
            r.equalities.push_back(n);
        }
    }
    r.exceptions_found = r.equalities;
    detail::finalize(r);
    return r;
}

// E^7(q^7)/E(q) + q^2 >= q psi^3(q) psi^3(q^7) coefficientwise, strict at
// every even n != 2. `exceptions_found` lists the even equality positions;
// `equalities` lists all of them.
inline scan_report check_theorem2(std::uint64_t max_n, const scan_options& opt = {})
{
    scan_report r;
    r.name = "theorem2";
    r.range = max_n;
    r.expected_exceptions = detail::expected_within({2}, max_n);
    const auto a7 = t_core_gf(max_n, 7);
    const auto b = detail::b_closed(max_n, opt.threads);
    const auto bs = detail::b_series(max_n);
    detail::compare_routes(r, detail::sample_indices(0, max_n, r.name, opt.seed), "b(n)",
                           [&](std::uint64_t n) { return b[n]; }, [&](std::uint64_t n) { return bs[n]; });
    std::uint64_t odd_equal = 0;
    std::uint64_t odd_strict = 0;
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        integer lhs = a7[n];
        lhs += (n == 2);
        if (lhs < b[n]) {
            if (!r.first_failure) {
                r.first_failure = scan_failure{n, lhs, b[n]};
            }
            continue;
        }
        const bool equal = lhs == b[n];
        if (equal) {
            r.equalities.push_back(n);
            if (n % 2 == 0) {
                r.exceptions_found.push_back(n);
            }
        }
        if (n % 2 == 1) {
            (equal ? odd_equal : odd_strict) += 1;
        }
    }
    r.notes.push_back("odd n: equality at " + std::to_string(odd_equal) + ", strict at " + std::to_string(odd_strict));
    detail::finalize(r);
    return r;
}

// 2b(n) >= a_7(n) >= b(n) outside n = 0, 2, 6, 16; `exceptions_found` lists
// every n where either side fails.
inline scan_report check_abstract_bounds(std::uint64_t max_n, const scan_options& opt = {})
{
    scan_report r;
    r.name = "abstract";
    r.range = max_n;
    r.expected_exceptions = detail::expected_within({0, 2, 6, 16}, max_n);
    const auto a7 = t_core_gf(max_n, 7);
    const auto b = detail::b_closed(max_n, opt.threads);
    const auto bs = detail::b_series(max_n);
    detail::compare_routes(r, detail::sample_indices(0, max_n, r.name, opt.seed), "b(n)",
                           [&](std::uint64_t n) { return b[n]; }, [&](std::uint64_t n) { return bs[n]; });
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        const bool upper = 2 * b[n] >= a7[n];
        const bool lower = a7[n] >= b[n];
        if (upper && lower) {
            continue;
        }
        r.exceptions_found.push_back(n);
        r.notes.push_back("n = " + std::to_string(n) + ": a7 = " + a7[n].str() + ", b = " + b[n].str() + " ("
                          + (upper ? "a7 >= b" : "2b >= a7") + " fails)");
        if (!detail::contains(r.expected_exceptions, n) && !r.first_failure) {
            r.first_failure = upper ? scan_failure{n, a7[n], b[n]} : scan_failure{n, 2 * b[n], a7[n]};
        }
    }
    detail::finalize(r);
    return r;
}

// phi^3(q)phi^3(q^7) > 5 q^3 psi^3(q)psi^3(q^7) > q^2 E^7(q^7)/E(q)
// coefficientwise, registered exceptions 2, 4, 7, 14, 22, 29, 58.
inline scan_report check_concluding(std::uint64_t max_n, const scan_options& opt = {})
{
    scan_report r;
    r.name = "concluding";
    r.range = max_n;
    r.expected_exceptions = detail::expected_within({2, 4, 7, 14, 22, 29, 58}, max_n);
    const auto a7 = t_core_gf(max_n, 7);
    const auto ph = parallel_table<integer>(0, max_n + 1, opt.threads,
                                            [](std::uint64_t n) { return n == 0 ? integer(1) : closed_phi(n); });
    const auto ps = parallel_table<integer>(0, max_n + 1, opt.threads,
                                            [](std::uint64_t n) { return n == 0 ? integer(0) : closed_psi(n); });
    const auto ph_series = sextenary_series(max_n);
    const auto ps_series = odd_sextenary_series(max_n);
    const auto idx = detail::sample_indices(0, max_n, r.name, opt.seed);
    detail::compare_routes(r, idx, "phi^3 phi^3", [&](std::uint64_t n) { return ph[n]; },
                           [&](std::uint64_t n) { return ph_series[n]; });
    detail::compare_routes(r, idx, "q^3 psi^3 psi^3", [&](std::uint64_t n) { return ps[n]; },
                           [&](std::uint64_t n) { return ps_series[n]; });
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        const integer mid = 5 * ps[n];
        const integer right = n >= 2 ? a7[n - 2] : integer(0);
        const bool first = ph[n] > mid;
        const bool second = mid > right;
        if (first && second) {
            continue;
        }
        r.exceptions_found.push_back(n);
        r.notes.push_back("n = " + std::to_string(n) + ": " + ph[n].str() + " / " + mid.str() + " / " + right.str());
        if (!detail::contains(r.expected_exceptions, n) && !r.first_failure) {
            r.first_failure = first ? scan_failure{n, mid, right} : scan_failure{n, ph[n], mid};
        }
    }
    detail::finalize(r);
    return r;
}

// (psi(q) psi(q^t))^((t-1)/2) >= E^t(q^t)/E(q) coefficientwise, odd t >= 11.
// Any counterexample is reported; none is assumed.
inline scan_report check_conjecture(unsigned t, std::uint64_t max_n)
{
    if (t < 11 || t % 2 == 0) {
        throw out_of_range("conjecture scan needs odd t >= 11; got " + std::to_string(t));
    }
    scan_report r;
    r.name = "conjecture-t" + std::to_string(t);
    r.range = max_n;
    const auto lhs = pow(psi(max_n, 1) * psi(max_n, t), (t - 1) / 2);
    const auto rhs = t_core_gf(max_n, t);
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        if (lhs[n] < rhs[n]) {
            r.exceptions_found.push_back(n);
            if (!r.first_failure) {
                r.first_failure = scan_failure{n, lhs[n], rhs[n]};
            }
        } else if (lhs[n] == rhs[n]) {
            r.equalities.push_back(n);
        }
    }
    detail::finalize(r);
    return r;
}

namespace detail
{

struct lkm_tables
{
    std::vector<integer> L, K, M; // index n, entry 0 unused
};

inline lkm_tables lkm_closed(std::uint64_t max_n, unsigned threads)
{
    struct triple
    {
        integer l, k, m;
    };
    const auto rows = parallel_table<triple>(0, max_n + 1, threads, [](std::uint64_t n) {
        if (n == 0) {
            return triple{0, 0, 0};
        }
        const auto f = factorize7(n);
        return triple{coef_L(f), coef_K(f), coef_M(f)};
    });
    lkm_tables t;
    t.L.reserve(rows.size());
    t.K.reserve(rows.size());
    t.M.reserve(rows.size());
    for (const auto& row : rows) {
        t.L.push_back(row.l);
        t.K.push_back(row.k);
        t.M.push_back(row.m);
    }
    return t;
}

inline void compare_lkm_routes(scan_report& r, const lkm_tables& t, std::uint64_t max_n, std::uint64_t seed)
{
    const auto l = lambert_L(max_n);
    const auto k = lambert_K(max_n);
    const auto m = big_M(max_n);
    const auto idx = sample_indices(1, max_n, r.name, seed);
    compare_routes(r, idx, "L", [&](std::uint64_t n) { return t.L[n]; }, [&](std::uint64_t n) { return l[n]; });
    compare_routes(r, idx, "K", [&](std::uint64_t n) { return t.K[n]; }, [&](std::uint64_t n) { return k[n]; });
    compare_routes(r, idx, "M", [&](std::uint64_t n) { return t.M[n]; }, [&](std::uint64_t n) { return m[n]; });
}

} // namespace detail

// [q^n](K + 7M) > 0 for n != 2 and [q^n](L - L(q^2) + K - K(q^2) - 2M) >= 0,
// 1 <= n <= max_n, from the closed forms. `exceptions_found` lists where the
// first one fails; any failure of the second is a hard failure.
inline scan_report check_xc_positivity(std::uint64_t max_n, const scan_options& opt = {})
{
    scan_report r;
    r.name = "xc";
    r.range = max_n;
    r.expected_exceptions = detail::expected_within({2}, max_n);
    const auto t = detail::lkm_closed(max_n, opt.threads);
    detail::compare_lkm_routes(r, t, max_n, opt.seed);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const integer first = t.K[n] + 7 * t.M[n];
        if (first <= 0) {
            r.exceptions_found.push_back(n);
            r.notes.push_back("n = " + std::to_string(n) + ": K + 7M = " + first.str());
            if (!detail::contains(r.expected_exceptions, n) && !r.first_failure) {
                r.first_failure = scan_failure{n, first, 0};
            }
        }
        const integer l2 = n % 2 == 0 ? t.L[n / 2] : integer(0);
        const integer k2 = n % 2 == 0 ? t.K[n / 2] : integer(0);
        const integer second = t.L[n] - l2 + t.K[n] - k2 - 2 * t.M[n];
        if (second < 0 && !r.first_failure) {
            r.first_failure = scan_failure{n, second, 0};
            r.notes.push_back("n = " + std::to_string(n) + ": L - L(q^2) + K - K(q^2) - 2M < 0");
        }
    }
    detail::finalize(r);
    return r;
}

// r(n) = [q^n](3K - L - 2M) > 0 for 1 < n <= max_n.
inline scan_report check_nib(std::uint64_t max_n, const scan_options& opt = {})
{
    scan_report r;
    r.name = "nib";
    r.range = max_n;
    const auto t = detail::lkm_closed(max_n, opt.threads);
    detail::compare_lkm_routes(r, t, max_n, opt.seed);
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        const integer value = 3 * t.K[n] - t.L[n] - 2 * t.M[n];
        if (value <= 0) {
            r.exceptions_found.push_back(n);
            if (!r.first_failure) {
                r.first_failure = scan_failure{n, value, 0};
            }
        }
    }
    detail::finalize(r);
    return r;
}

// a_t(n) > 0 for 0 <= n <= max_n.
inline scan_report check_core_positivity(unsigned t, std::uint64_t max_n)
{
    scan_report r;
    r.name = "core-positivity-t" + std::to_string(t);
    r.range = max_n;
    const auto a = a_t_series(t, max_n);
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        if (a[n] <= 0) {
            r.exceptions_found.push_back(n);
            if (!r.first_failure) {
                r.first_failure = scan_failure{n, a[n], 0};
            }
        }
    }
    detail::finalize(r);
    return r;
}

// ---------------------------------------------------------------------------
// Catalog used by the command line

enum class range_kind
{
    ORDER, // series order, --order
    MAX,   // largest n scanned, --max
};

struct check_entry
{
    std::string name;
    range_kind kind;
    bool uses_t;
    unsigned default_t;
    std::uint64_t default_range;
    std::string summary;
};

inline const std::vector<check_entry>& check_catalog()
{
    static const std::vector<check_entry> catalog{
        {"ntp1", range_kind::ORDER, false, 0, 500, "7 phi^3(-q) phi^3(-q^7) eta-quotient identity"},
        {"ntp2", range_kind::ORDER, false, 0, 500, "56 q^3 psi^3(q) psi^3(q^7) eta-quotient identity"},
        {"btyi", range_kind::ORDER, false, 0, 500, "8 phi^3(q) phi^3(q^7) in terms of L, K, M"},
        {"epl", range_kind::ORDER, false, 0, 500, "32 q^2 (2q psi^3 psi^3 - a_7 series) in terms of L, K, M"},
        {"dissection", range_kind::ORDER, false, 0, 500, "odd/even parts of 8 phi^3(q) phi^3(q^7)"},
        {"lambert-L", range_kind::MAX, false, 0, 5000, "L: divisor sum = eta quotient = multiplicative form"},
        {"lambert-K", range_kind::MAX, false, 0, 5000, "K: divisor sum = eta quotient = multiplicative form"},
        {"coef-M", range_kind::MAX, false, 0, 5000, "M: closed form = q E^3(q) E^3(q^7)"},
        {"closed-phi", range_kind::MAX, false, 0, 400, "sextenary count: lattice = series = closed form"},
        {"closed-psi", range_kind::MAX, false, 0, 400, "all-odd count / 64: lattice = series = closed form"},
        {"core-oracle", range_kind::MAX, false, 0, 40, "t-core series = partition enumeration, t in {2,3,5,7,11}"},
        {"theorem1", range_kind::MAX, false, 0, 5000, "upper bound for a_7(n), equality only at 0, 6, 16"},
        {"theorem2", range_kind::MAX, false, 0, 5000, "lower bound for a_7(n), strict at even n != 2"},
        {"abstract", range_kind::MAX, false, 0, 5000, "2b(n) >= a_7(n) >= b(n) for n != 0, 2, 6, 16"},
        {"concluding", range_kind::MAX, false, 0, 5000, "phi^3phi^3 > 5 q^3psi^3psi^3 > q^2 a_7 series"},
        {"conjecture", range_kind::MAX, true, 11, 5000, "(psi(q)psi(q^t))^((t-1)/2) >= a_t series, odd t >= 11"},
        {"xc", range_kind::MAX, false, 0, 5000, "K + 7M > 0 (n != 2) and L - L(q^2) + K - K(q^2) - 2M >= 0"},
        {"nib", range_kind::MAX, false, 0, 5000, "3K - L - 2M > 0 for n > 1"},
        {"core-positivity", range_kind::MAX, true, 7, 5000, "a_t(n) > 0"},
    };
    return catalog;
}

inline const check_entry* find_check(std::string_view name)
{
    for (const auto& e : check_catalog()) {
        if (e.name == name) {
            return &e;
        }
    }
    return nullptr;
}

inline scan_report run_check(std::string_view name, std::uint64_t range, unsigned t, const scan_options& opt = {})
{
    if (name == "ntp1") {
        return check_ntp1(range);
    }
    if (name == "ntp2") {
        return check_ntp2(range);
    }
    if (name == "btyi") {
        return check_btyi(range);
    }
    if (name == "epl") {
        return check_epl(range);
    }
    if (name == "dissection") {
        return check_dissection(range);
    }
    if (name == "lambert-L") {
        return check_lambert_L(range, opt);
    }
    if (name == "lambert-K") {
        return check_lambert_K(range, opt);
    }
    if (name == "coef-M") {
        return check_coef_M(range, opt);
    }
    if (name == "closed-phi") {
        return check_closed_phi(range, opt);
    }
    if (name == "closed-psi") {
        return check_closed_psi(range, opt);
    }
    if (name == "core-oracle") {
        return check_core_oracle(std::min<std::uint64_t>(range, oracle_limit));
    }
    if (name == "theorem1") {
        return check_theorem1(range, opt);
    }
    if (name == "theorem2") {
        return check_theorem2(range, opt);
    }
    if (name == "abstract") {
        return check_abstract_bounds(range, opt);
    }
    if (name == "concluding") {
        return check_concluding(range, opt);
    }
    if (name == "conjecture") {
        return check_conjecture(t, range);
    }
    if (name == "xc") {
        return check_xc_positivity(range, opt);
    }
    if (name == "nib") {
        return check_nib(range, opt);
    }
    if (name == "core-positivity") {
        return check_core_positivity(t, range);
    }
    throw out_of_range("unknown check '" + std::string(name) + "'");
}

} // namespace sevencore

#endif

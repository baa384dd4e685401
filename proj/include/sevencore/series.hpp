#ifndef SEVENCORE_SERIES_HPP
#define SEVENCORE_SERIES_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace sevencore
{

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// Truncated power series in q with exact integer coefficients, known
// through q^order inclusive. Values are immutable once built; every
// operation returns a fresh series.
//
// Binary operations never extend precision: the result is known through
// the smaller of the two operand orders.
class qseries
{
public:
    // The zero series through q^order.
    explicit qseries(std::size_t order) : coeffs_(order + 1) {}

    // Takes coefficients c[0..N]; the order is N.
    explicit qseries(std::vector<integer> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw out_of_range("qseries needs at least the constant coefficient");
        }
    }

    static qseries one(std::size_t order) { return monomial(order, 0, 1); }

    // c * q^exponent through q^order (zero when exponent > order).
    static qseries monomial(std::size_t order, std::size_t exponent, integer c = 1)
    {
        qseries s(order);
        if (exponent <= order) {
            s.coeffs_[exponent] = std::move(c);
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const integer& operator[](std::size_t n) const { return coeffs_[n]; }

    const integer& at(std::size_t n) const
    {
        if (n > order()) {
            throw out_of_range("coefficient q^" + std::to_string(n) + " beyond series order "
                               + std::to_string(order()));
        }
        return coeffs_[n];
    }

    std::span<const integer> coefficients() const noexcept { return coeffs_; }

    // Same series known only through q^new_order (new_order <= order()).
    qseries truncated(std::size_t new_order) const
    {
        if (new_order > order()) {
            throw out_of_range("cannot truncate a series to a higher order");
        }
        return qseries(std::vector<integer>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    // Exponents carrying a nonzero coefficient, ascending, up to `limit`.
    std::vector<std::size_t> support(std::size_t limit) const
    {
        std::vector<std::size_t> idx;
        const auto top = std::min(limit, order());
        for (std::size_t n = 0; n <= top; ++n) {
            if (!coeffs_[n].is_zero()) {
                idx.push_back(n);
            }
        }
        return idx;
    }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const integer& c) { return c.is_zero(); });
    }

    friend bool operator==(const qseries&, const qseries&) = default;

    friend qseries operator+(const qseries& a, const qseries& b)
    {
        const auto n = std::min(a.order(), b.order());
        std::vector<integer> out(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            out[i] = a.coeffs_[i] + b.coeffs_[i];
        }
        return qseries(std::move(out));
    }

    friend qseries operator-(const qseries& a)
    {
        std::vector<integer> out(a.coeffs_.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = -a.coeffs_[i];
        }
        return qseries(std::move(out));
    }

    friend qseries operator-(const qseries& a, const qseries& b)
    {
        const auto n = std::min(a.order(), b.order());
        std::vector<integer> out(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            out[i] = a.coeffs_[i] - b.coeffs_[i];
        }
        return qseries(std::move(out));
    }

    friend qseries operator*(const integer& k, const qseries& a)
    {
        std::vector<integer> out(a.coeffs_.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = k * a.coeffs_[i];
        }
        return qseries(std::move(out));
    }

    friend qseries operator*(long k, const qseries& a) { return integer(k) * a; }

    // Cauchy product truncated to the smaller order. The loop runs over the
    // nonzero coefficients of both operands, so theta functions and Euler
    // products (which are very sparse) multiply in far less than N^2 steps.
    friend qseries operator*(const qseries& a, const qseries& b)
    {
        const auto n = std::min(a.order(), b.order());
        const auto sa = a.support(n);
        const auto sb = b.support(n);
        std::vector<integer> out(n + 1);
        for (auto i : sa) {
            const integer& ai = a.coeffs_[i];
            for (auto j : sb) {
                if (i + j > n) {
                    break;
                }
                out[i + j] += ai * b.coeffs_[j];
            }
        }
        return qseries(std::move(out));
    }

private:
    std::vector<integer> coeffs_;
};

inline std::string to_string(const qseries& s, std::size_t max_terms = 12)
{
    std::ostringstream os;
    bool first = true;
    std::size_t shown = 0;
    for (std::size_t n = 0; n <= s.order() && shown < max_terms; ++n) {
        if (s[n].is_zero()) {
            continue;
        }
        if (!first) {
            os << (s[n] < 0 ? " - " : " + ");
        } else if (s[n] < 0) {
            os << "-";
        }
        const integer mag = abs(s[n]);
        if (n == 0 || mag != 1) {
            os << mag;
        }
        if (n == 1) {
            os << "q";
        } else if (n > 1) {
            os << "q^" << n;
        }
        first = false;
        ++shown;
    }
    if (first) {
        os << "0";
    }
    os << " + O(q^" << s.order() + 1 << ")";
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const qseries& s) { return os << to_string(s); }

// Multiplicative inverse; the constant term must be a unit of Z.
inline qseries invert(const qseries& a)
{
    const integer& a0 = a[0];
    if (a0 != 1 && a0 != -1) {
        throw non_unit_constant_term("invert: constant term is " + a0.str() + ", expected +1 or -1");
    }
    const auto n = a.order();
    const auto sa = a.support(n);
    std::vector<integer> b(n + 1);
    b[0] = a0;
    for (std::size_t k = 1; k <= n; ++k) {
        integer acc = 0;
        for (auto i : sa) {
            if (i == 0) {
                continue;
            }
            if (i > k) {
                break;
            }
            acc += a[i] * b[k - i];
        }
        b[k] = a0 == 1 ? integer(-acc) : acc;
    }
    return qseries(std::move(b));
}

// num / den, with den[0] = +1 or -1. Equivalent to num * invert(den) but
// solved by forward substitution, which keeps intermediate coefficients as
// small as the quotient's own (the inverse of E(q) alone grows like p(n)).
inline qseries divide(const qseries& num, const qseries& den)
{
    const integer& d0 = den[0];
    if (d0 != 1 && d0 != -1) {
        throw non_unit_constant_term("divide: constant term of divisor is " + d0.str());
    }
    const auto n = std::min(num.order(), den.order());
    const auto sd = den.support(n);
    std::vector<integer> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        integer acc = num[k];
        for (auto i : sd) {
            if (i == 0) {
                continue;
            }
            if (i > k) {
                break;
            }
            acc -= den[i] * out[k - i];
        }
        out[k] = d0 == 1 ? acc : integer(-acc);
    }
    return qseries(std::move(out));
}

// q -> q^k. Coefficients pushed beyond the order are dropped.
inline qseries substitute_power(const qseries& a, std::size_t k)
{
    if (k == 0) {
        throw out_of_range("substitute_power: k must be positive");
    }
    std::vector<integer> out(a.order() + 1);
    for (std::size_t m = 0; m * k <= a.order(); ++m) {
        out[m * k] = a[m];
    }
    return qseries(std::move(out));
}

// q -> q^k with the result known through q^order; `a` must be known
// through q^(order / k).
inline qseries substitute_power(const qseries& a, std::size_t k, std::size_t order)
{
    if (k == 0) {
        throw out_of_range("substitute_power: k must be positive");
    }
    if (a.order() < order / k) {
        throw out_of_range("substitute_power: operand order too low for the requested order");
    }
    std::vector<integer> out(order + 1);
    for (std::size_t m = 0; m * k <= order; ++m) {
        out[m * k] = a[m];
    }
    return qseries(std::move(out));
}

// q -> -q.
inline qseries negate_argument(const qseries& a)
{
    std::vector<integer> out(a.coefficients().begin(), a.coefficients().end());
    for (std::size_t n = 1; n < out.size(); n += 2) {
        out[n] = -out[n];
    }
    return qseries(std::move(out));
}

// Multiplication by q^k, keeping the order.
inline qseries shift(const qseries& a, std::size_t k)
{
    std::vector<integer> out(a.order() + 1);
    for (std::size_t n = 0; n + k <= a.order(); ++n) {
        out[n + k] = a[n];
    }
    return qseries(std::move(out));
}

// a^m by repeated squaring, except when `a` is sparse enough that m - 1
// multiplications by `a` itself are cheaper than squaring dense powers.
inline qseries pow(const qseries& a, unsigned m)
{
    if (m == 0) {
        throw out_of_range("pow: exponent must be positive");
    }
    const auto nnz = a.support(a.order()).size();
    const auto steps = std::bit_width(m);
    if (std::uint64_t(m - 1) * nnz * 2 <= std::uint64_t(steps) * (a.order() + 1)) {
        qseries result = a;
        for (unsigned i = 1; i < m; ++i) {
            result = result * a;
        }
        return result;
    }
    qseries result = a;
    qseries base = a;
    --m;
    while (m > 0) {
        if (m & 1U) {
            result = result * base;
        }
        m >>= 1U;
        if (m > 0) {
            base = base * base;
        }
    }
    return result;
}

} // namespace sevencore

#endif

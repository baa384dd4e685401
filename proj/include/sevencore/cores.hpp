#ifndef SEVENCORE_CORES_HPP
#define SEVENCORE_CORES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "series.hpp"
#include "thetas.hpp"

namespace sevencore
{

// Integer partition, parts weakly decreasing and positive.
class partition
{
public:
    partition() = default;

    explicit partition(std::vector<unsigned> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
                throw out_of_range("partition parts must be positive and non-increasing");
            }
        }
    }

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    unsigned size() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

    // First-column hook lengths lambda_i + (l - i), i = 1..l: the beta-set of the partition.
    std::vector<unsigned> beta_set() const
    {
        std::vector<unsigned> beta(parts_.size());
        const auto l = parts_.size();
        for (std::size_t i = 0; i < l; ++i) {
            beta[i] = parts_[i] + unsigned(l - 1 - i);
        }
        return beta;
    }

    friend bool operator==(const partition&, const partition&) = default;

private:
    std::vector<unsigned> parts_;
};

// A rim hook of length t can be removed iff some beta-number b >= t has
// b - t outside the beta-set. So the partition is a t-core iff the beta-set
// is closed under b -> b - t for every b >= t.
inline bool is_t_core(const partition& p, unsigned t)
{
    if (t == 0) {
        throw out_of_range("is_t_core: t must be positive");
    }
    const auto beta = p.beta_set();
    if (beta.empty()) {
        return true;
    }
    std::vector<bool> present(beta.front() + 1, false);
    for (auto b : beta) {
        present[b] = true;
    }
    return std::all_of(beta.begin(), beta.end(), [&](unsigned b) { return b < t || present[b - t]; });
}

// Calls fn(parts) for every partition of n, parts in non-increasing order.
// Partitions are produced one at a time; nothing is stored.
inline void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& fn)
{
    std::vector<unsigned> parts;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned max_part) {
        if (rest == 0) {
            fn(parts);
            return;
        }
        for (unsigned k = std::min(rest, max_part); k >= 1; --k) {
            parts.push_back(k);
            rec(rest - k, k);
            parts.pop_back();
        }
    };
    rec(n, n);
}

inline constexpr unsigned oracle_limit = 60;

// a_t(n) by listing the partitions of n and testing each one.
inline std::uint64_t a_t_oracle(unsigned n, unsigned t)
{
    if (n > oracle_limit) {
        throw too_large("a_t_oracle: n = " + std::to_string(n) + " exceeds the enumeration guard "
                        + std::to_string(oracle_limit));
    }
    if (t < 2) {
        throw out_of_range("a_t_oracle: t must be at least 2");
    }
    std::uint64_t count = 0;
    for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        if (is_t_core(partition(parts), t)) {
            ++count;
        }
    });
    return count;
}

// sum_n a_t(n) q^n through q^order.
inline qseries a_t_series(unsigned t, std::size_t order) { return t_core_gf(order, t); }

} // namespace sevencore

#endif

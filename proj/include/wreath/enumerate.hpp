#pragma once

#include "bigint.hpp"
#include "colored_permutation.hpp"
#include "statistics.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iterator>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace wreath {

inline constexpr std::uint64_t default_enumeration_budget = 100'000'000;

/// WREATH_EULER_BUDGET if set, otherwise the default of 10^8 elements.
inline std::uint64_t enumeration_budget() {
    const char* env = std::getenv("WREATH_EULER_BUDGET");
    if (env == nullptr || *env == '\0') return default_enumeration_budget;
    try {
        std::size_t used = 0;
        const std::string text(env);
        const unsigned long long value = std::stoull(text, &used);
        if (used == text.size()) return value;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::invalid_parameter, std::string("WREATH_EULER_BUDGET is not an unsigned integer: ") + env);
}

/// ell^n n!, or a too_large error when it exceeds the budget.
inline std::uint64_t checked_group_order(int ell, int n, std::uint64_t budget) {
    detail::require(ell >= 1 && n >= 0, ErrorKind::invalid_parameter, "need ell >= 1 and n >= 0");
    const BigInt order = group_order(ell, n);
    detail::require(order <= BigInt(budget), ErrorKind::too_large,
                    "G(" + std::to_string(ell) + "," + std::to_string(n) + ") has " + to_decimal(order) +
                        " elements, budget is " + std::to_string(budget));
    return static_cast<std::uint64_t>(order);
}

namespace detail {

class Odometer {
public:
    /// Successor in enumeration order: the color vector (by value, last value
    /// least significant) counts in base ell, and carries into next_permutation.
    /// Returns false when p wraps around to the first element.
    static bool advance(ColoredPermutation& p) {
        auto& color = p.color_;
        for (std::size_t i = color.size(); i-- > 0;) {
            if (++color[i] < p.ell_) return true;
            color[i] = 0;
        }
        return std::next_permutation(p.sigma_.begin(), p.sigma_.end());
    }
};

inline std::uint64_t int_power(std::uint64_t base, int exponent) {
    std::uint64_t r = 1;
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

}  // namespace detail

/// The element of G(ell, n) at 0-based position `rank` in enumeration order.
inline ColoredPermutation unrank(int ell, int n, std::uint64_t rank) {
    const std::uint64_t order = checked_group_order(ell, n, UINT64_MAX);
    detail::require(rank < order, ErrorKind::invalid_parameter, "rank out of range");
    const std::uint64_t colorings = detail::int_power(static_cast<std::uint64_t>(ell), n);
    std::uint64_t sigma_rank = rank / colorings;
    std::uint64_t color_rank = rank % colorings;

    std::vector<int> color(static_cast<std::size_t>(n));
    for (std::size_t i = color.size(); i-- > 0;) {
        color[i] = static_cast<int>(color_rank % static_cast<std::uint64_t>(ell));
        color_rank /= static_cast<std::uint64_t>(ell);
    }
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::uint64_t block = 1;
    for (int i = 2; i < n; ++i) block *= static_cast<std::uint64_t>(i);  // (n-1)!
    std::vector<int> sigma;
    sigma.reserve(static_cast<std::size_t>(n));
    for (int remaining = n; remaining > 0; --remaining) {
        const std::uint64_t digit = sigma_rank / block;
        sigma_rank %= block;
        sigma.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
        if (remaining > 1) block /= static_cast<std::uint64_t>(remaining - 1);
    }
    return ColoredPermutation(ell, std::move(sigma), std::move(color));
}

/// Calls f(p) for the elements with ranks in [first, last), in order.
template <class F>
void for_each_in_range(int ell, int n, std::uint64_t first, std::uint64_t last, F&& f) {
    if (first >= last) return;
    ColoredPermutation p = unrank(ell, n, first);
    for (std::uint64_t r = first; r < last; ++r) {
        f(static_cast<const ColoredPermutation&>(p));
        detail::Odometer::advance(p);
    }
}

/// Lazily enumerated G(ell, n): lexicographic on (one-line word, color vector).
class GroupRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = ColoredPermutation;
        using difference_type = std::ptrdiff_t;
        using reference = const ColoredPermutation&;
        using pointer = const ColoredPermutation*;

        iterator() = default;
        iterator(ColoredPermutation first, std::uint64_t remaining) : current_(std::move(first)), remaining_(remaining) {}

        reference operator*() const noexcept { return current_; }
        pointer operator->() const noexcept { return &current_; }
        iterator& operator++() {
            --remaining_;
            detail::Odometer::advance(current_);
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.remaining_ == b.remaining_; }

    private:
        ColoredPermutation current_;
        std::uint64_t remaining_ = 0;
    };

    GroupRange(int ell, int n, std::uint64_t first, std::uint64_t last) : ell_(ell), n_(n), first_(first), last_(last) {}

    iterator begin() const { return first_ < last_ ? iterator(unrank(ell_, n_, first_), last_ - first_) : end(); }
    iterator end() const { return iterator(); }
    std::uint64_t size() const noexcept { return last_ - first_; }
    std::uint64_t first_rank() const noexcept { return first_; }

private:
    int ell_;
    int n_;
    std::uint64_t first_;
    std::uint64_t last_;
};

inline GroupRange enumerate_group(int ell, int n, std::uint64_t budget = enumeration_budget()) {
    return GroupRange(ell, n, 0, checked_group_order(ell, n, budget));
}

/// Sub-stream `part` of `parts` contiguous, disjoint sub-streams covering G(ell, n).
inline GroupRange enumerate_partition(int ell, int n, int part, int parts, std::uint64_t budget = enumeration_budget()) {
    detail::require(parts >= 1 && part >= 0 && part < parts, ErrorKind::invalid_parameter, "need 0 <= part < parts");
    const std::uint64_t order = checked_group_order(ell, n, budget);
    const auto bound = [&](int j) {
        return static_cast<std::uint64_t>(BigInt(order) * j / parts);
    };
    return GroupRange(ell, n, bound(part), bound(part + 1));
}

inline int default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Folds every element of G(ell, n) into an accumulator.  The group is split
/// into `jobs` contiguous parts, each folded into its own copy of `init`, and
/// the partial results are merged in part order.
template <class Acc, class Step, class Merge>
Acc parallel_reduce(int ell, int n, int jobs, const Acc& init, Step step, Merge merge,
                    std::uint64_t budget = enumeration_budget()) {
    detail::require(jobs >= 1, ErrorKind::invalid_parameter, "jobs must be >= 1");
    checked_group_order(ell, n, budget);
    std::vector<Acc> partial(static_cast<std::size_t>(jobs), init);
    const auto run = [&](int part) {
        Acc& acc = partial[static_cast<std::size_t>(part)];
        const GroupRange range = enumerate_partition(ell, n, part, jobs, budget);
        std::uint64_t rank = range.first_rank();
        for (const auto& p : range) step(acc, p, rank++);
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> workers;
        std::exception_ptr failure;
        std::mutex failure_lock;
        for (int part = 0; part < jobs; ++part)
            workers.emplace_back([&, part] {
                try {
                    run(part);
                } catch (...) {
                    std::lock_guard<std::mutex> guard(failure_lock);
                    if (!failure) failure = std::current_exception();
                }
            });
        for (auto& w : workers) w.join();
        if (failure) std::rethrow_exception(failure);
    }
    Acc result = std::move(partial.front());
    for (std::size_t i = 1; i < partial.size(); ++i) merge(result, std::move(partial[i]));
    return result;
}

/// counts[m] = number of elements whose statistic equals m.
struct CountDistribution {
    int ell = 1;
    int n = 0;
    int k = 0;
    SuccessionKind kind = SuccessionKind::circular;
    std::vector<BigInt> counts;  // size n + 1

    BigInt total() const {
        BigInt t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }

    friend bool operator==(const CountDistribution&, const CountDistribution&) = default;
};

inline CountDistribution distribution(int ell, int n, int k, SuccessionKind kind, int jobs = 1,
                                      std::uint64_t budget = enumeration_budget()) {
    if (kind == SuccessionKind::circular)
        detail::require(k >= 0, ErrorKind::invalid_k, "circular successions need k >= 0");
    else
        detail::require(k >= 1, ErrorKind::invalid_k, "linear successions need k >= 1, got " + std::to_string(k));
    using Counts = std::vector<std::uint64_t>;
    const Counts raw = parallel_reduce(
        ell, n, jobs, Counts(static_cast<std::size_t>(n) + 1, 0),
        [k, kind](Counts& acc, const ColoredPermutation& p, std::uint64_t) {
            ++acc[static_cast<std::size_t>(succession_count(p, k, kind))];
        },
        [](Counts& acc, Counts&& other) {
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += other[i];
        },
        budget);
    CountDistribution out{ell, n, k, kind, {}};
    out.counts.reserve(raw.size());
    for (auto c : raw) out.counts.emplace_back(c);
    return out;
}

}  // namespace wreath

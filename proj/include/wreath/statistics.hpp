#pragma once

#include "colored_permutation.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace wreath {

enum class SuccessionKind { circular, linear, skew_linear };

constexpr std::string_view to_string(SuccessionKind kind) noexcept {
    switch (kind) {
        case SuccessionKind::circular: return "circular";
        case SuccessionKind::linear: return "linear";
        case SuccessionKind::skew_linear: return "skew";
    }
    return "unknown";
}

/// Values (not positions) at which a succession of the given kind occurs.
struct SuccessionSet {
    SuccessionKind kind = SuccessionKind::circular;
    int k = 0;
    std::vector<int> values;  // sorted, distinct

    std::size_t size() const noexcept { return values.size(); }
    bool contains(int v) const { return std::binary_search(values.begin(), values.end(), v); }
    int max() const noexcept { return values.empty() ? 0 : values.back(); }

    friend bool operator==(const SuccessionSet&, const SuccessionSet&) = default;
};

namespace detail {

inline void require_linear_k(int k) {
    require(k >= 1, ErrorKind::invalid_k, "linear successions need k >= 1, got " + std::to_string(k));
}

/// The unique k for which position i could be a circular succession, or -1.
/// Positions whose letter is colored or below i never qualify.
inline int circular_gap(const ColoredPermutation& p, int i) {
    const ColoredSymbol s = p.at(i);
    return (s.color == 0 && s.value >= i) ? s.value - i : -1;
}

/// The unique k >= 1 for which position i >= 2 could be a linear succession, or -1.
inline int linear_gap(const ColoredPermutation& p, int i) {
    const ColoredSymbol a = p.at(i - 1);
    const ColoredSymbol b = p.at(i);
    return (a.color == b.color && b.value > a.value) ? b.value - a.value : -1;
}

}  // namespace detail

/// C^k(pi): values pi(i) = i + k with pi(i) uncolored and no wraparound.  k = 0 gives FIX(pi).
inline SuccessionSet circular_successions(const ColoredPermutation& p, int k) {
    detail::require(k >= 0, ErrorKind::invalid_k, "circular successions need k >= 0");
    SuccessionSet out{SuccessionKind::circular, k, {}};
    for (int i = 1; i <= p.size(); ++i)
        if (detail::circular_gap(p, i) == k) out.values.push_back(i + k);
    return out;  // increasing by construction
}

/// L^k(pi): values |pi(i)|, 2 <= i <= n, with pi(i) = pi(i-1) + k; the two letters
/// must share a color since the shift keeps the color of pi(i-1).
inline SuccessionSet linear_successions(const ColoredPermutation& p, int k) {
    detail::require_linear_k(k);
    SuccessionSet out{SuccessionKind::linear, k, {}};
    for (int i = 2; i <= p.size(); ++i)
        if (detail::linear_gap(p, i) == k) out.values.push_back(p.value_at(i));
    std::sort(out.values.begin(), out.values.end());
    return out;
}

/// L^{*k}(pi): linear successions plus k itself when pi(1) = k uncolored.
inline SuccessionSet skew_linear_successions(const ColoredPermutation& p, int k) {
    SuccessionSet out = linear_successions(p, k);
    out.kind = SuccessionKind::skew_linear;
    if (p.size() >= 1 && p.at(1) == ColoredSymbol{k, 0}) {
        out.values.push_back(k);
        std::sort(out.values.begin(), out.values.end());
    }
    return out;
}

inline SuccessionSet successions(const ColoredPermutation& p, int k, SuccessionKind kind) {
    switch (kind) {
        case SuccessionKind::circular: return circular_successions(p, k);
        case SuccessionKind::linear: return linear_successions(p, k);
        case SuccessionKind::skew_linear: return skew_linear_successions(p, k);
    }
    return {};
}

/// Cardinality of the succession set without materializing it.
inline int succession_count(const ColoredPermutation& p, int k, SuccessionKind kind) {
    int count = 0;
    if (kind == SuccessionKind::circular) {
        for (int i = 1; i <= p.size(); ++i) count += detail::circular_gap(p, i) == k;
        return count;
    }
    detail::require_linear_k(k);
    for (int i = 2; i <= p.size(); ++i) count += detail::linear_gap(p, i) == k;
    if (kind == SuccessionKind::skew_linear && p.size() >= 1 && p.at(1) == ColoredSymbol{k, 0}) ++count;
    return count;
}

/// Membership in G^m_{ell,n}(k): every k-circular succession lies in [m].
inline bool circular_successions_within(const ColoredPermutation& p, int m, int k) {
    detail::require(k >= 0 && k <= m && m <= p.size(), ErrorKind::invalid_parameter,
                    "need 0 <= k <= m <= n, got k=" + std::to_string(k) + " m=" + std::to_string(m));
    for (int i = 1; i <= p.size(); ++i)
        if (detail::circular_gap(p, i) == k && i + k > m) return false;
    return true;
}

/// FIX(pi) is contained in [m].
inline bool fixed_points_within(const ColoredPermutation& p, int m) {
    for (int i = m + 1; i <= p.size(); ++i)
        if (p.is_fixed_point(i)) return false;
    return true;
}

inline bool is_derangement(const ColoredPermutation& p) { return fixed_points_within(p, 0); }

/// m-increasing-fixed: the first m letters are uncolored and increasing, and
/// every fixed point lies in [m].
inline bool is_increasing_fixed(const ColoredPermutation& p, int m) {
    detail::require(m >= 0 && m <= p.size(), ErrorKind::invalid_parameter, "need 0 <= m <= n");
    for (int i = 1; i <= m; ++i) {
        if (p.at(i).color != 0) return false;
        if (i > 1 && !(p.at(i - 1) < p.at(i))) return false;
    }
    return fixed_points_within(p, m);
}

/// m-isolated-fixed: values 1..m are uncolored, every fixed point lies in [m],
/// and each cycle of |pi| meets [m] at most once.
inline bool is_isolated_fixed(const ColoredPermutation& p, int m) {
    detail::require(m >= 0 && m <= p.size(), ErrorKind::invalid_parameter, "need 0 <= m <= n");
    for (int i = 1; i <= m; ++i)
        if (p.color_of(i) != 0) return false;
    if (!fixed_points_within(p, m)) return false;
    for (int i = 1; i <= m; ++i)
        for (int v = p.value_at(i); v != i; v = p.value_at(v))
            if (v <= m) return false;
    return true;
}

}  // namespace wreath

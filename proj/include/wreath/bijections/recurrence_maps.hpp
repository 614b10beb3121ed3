#pragma once

#include "../colored_permutation.hpp"
#include "../cycles.hpp"
#include "../statistics.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace wreath {

/// An element of C_ell x [range] x (set of permutations): a color exponent, a
/// distinguished integer and a permutation.
struct MarkedPermutation {
    int color = 0;
    int mark = 0;
    ColoredPermutation perm;

    friend bool operator==(const MarkedPermutation&, const MarkedPermutation&) = default;
};

namespace detail {

inline void require_color(int color, int ell) {
    require(color >= 0 && color < ell, ErrorKind::domain_error,
            "color exponent " + std::to_string(color) + " outside [0.." + std::to_string(ell - 1) + "]");
}

inline void require_isolated(const ColoredPermutation& p, int m, const char* role) {
    require(m >= 0 && m <= p.size() && is_isolated_fixed(p, m), ErrorKind::domain_error,
            std::string(role) + " is not in D(" + std::to_string(p.colors()) + "," + std::to_string(p.size()) + "," +
                std::to_string(m) + ")");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// D(ell,n-1,m-1) u D(ell,n,m-1)  <->  C_ell x [m] x D(ell,n,m),
// so d[n][m-1] + d[n-1][m-1] = ell m d[n][m].

/// p has size n-1 (lifted: values >= m move up, (m) is added) or size n
/// (the arc of m's cycle from m up to its smallest letter is split off).
inline MarkedPermutation raise_isolated(const ColoredPermutation& p, int n, int m) {
    detail::require(1 <= m && m <= n, ErrorKind::domain_error, "need 1 <= m <= n");
    detail::require(p.size() == n - 1 || p.size() == n, ErrorKind::domain_error, "input must have size n-1 or n");
    detail::require_isolated(p, m - 1, "input");
    if (p.size() == n - 1) {
        auto lifted = detail::CycleEditor(p).relabeled(n, [m](int v) { return v >= m ? v + 1 : v; });
        lifted.add_cycle({ColoredSymbol{m, 0}});
        return {0, m, lifted.finish(n)};
    }
    detail::CycleEditor e(p);
    const int color = e.color(m);
    const auto cycle = e.cycle_of(m);
    const int alpha = *std::min_element(cycle.begin(), cycle.end());
    if (alpha == m) {
        e.set_color(m, 0);
        return {color, m, e.finish(n)};
    }
    std::vector<ColoredSymbol> arc;
    for (int v : cycle) {
        if (v == alpha) break;
        arc.push_back(e.symbol(v));
    }
    arc.front().color = 0;
    for (const auto& s : arc) e.remove(s.value);
    e.add_cycle(arc);
    return {color, alpha, e.finish(n)};
}

/// Inverse of raise_isolated; q must be in D(ell, n, m), n = q.size().
inline ColoredPermutation lower_isolated(const MarkedPermutation& x, int m) {
    const ColoredPermutation& q = x.perm;
    const int n = q.size();
    detail::require(1 <= m && m <= n, ErrorKind::domain_error, "need 1 <= m <= n");
    detail::require_color(x.color, q.colors());
    detail::require(1 <= x.mark && x.mark <= m, ErrorKind::domain_error, "mark outside [1..m]");
    detail::require_isolated(q, m, "input");
    detail::CycleEditor e(q);
    if (x.mark == m) {
        if (x.color != 0) {
            e.set_color(m, x.color);
            return e.finish(n);
        }
        if (!q.is_fixed_point(m)) return q;
        e.remove_cycle(m);
        return e.relabeled(n - 1, [m](int v) { return v > m ? v - 1 : v; }).finish(n - 1);
    }
    const auto arc = e.cycle_of(m);
    std::vector<ColoredSymbol> letters;
    for (int v : arc) letters.push_back(e.symbol(v));
    letters.front().color = x.color;
    e.remove_cycle(m);
    for (const auto& s : letters) e.insert_before(x.mark, s);
    return e.finish(n);
}

// ---------------------------------------------------------------------------
// (C_ell x [n] x D_{ell,n-1}) \ F_n  <->  D_{ell,n} \ E_n on derangements,
// so ell n d[n-1][0] = d[n][0] -+ 1 according to the parity of n.
//
// E_n = {(1 2)(3 4)...(n-1 n)} for even n, F_n = {(1, n, E_{n-1})} for odd n.

namespace detail {

/// Smallest p >= 0 such that the uncolored transposition (2p+1 2p+2) is not a
/// cycle; returns 2p+1, or nullopt if every pair up to `size` is such a cycle.
inline std::optional<int> first_broken_pair(const CycleEditor& e, int size) {
    for (int a = 1; a <= size; a += 2) {
        const int b = a + 1;
        const bool transposition = b <= size && e.next(a) == b && e.next(b) == a && e.color(a) == 0 && e.color(b) == 0;
        if (!transposition) return a;
    }
    return std::nullopt;
}

}  // namespace detail

inline bool is_excluded_derangement_seed(const MarkedPermutation& x) {
    const ColoredPermutation& p = x.perm;
    const int n = p.size() + 1;
    if (n % 2 == 0 || x.color != 0 || x.mark != n) return false;
    return !detail::first_broken_pair(detail::CycleEditor(p), p.size()).has_value();
}

inline bool is_excluded_derangement(const ColoredPermutation& q) {
    return q.size() % 2 == 0 && !detail::first_broken_pair(detail::CycleEditor(q), q.size()).has_value();
}

inline ColoredPermutation extend_derangement(const MarkedPermutation& x) {
    const ColoredPermutation& p = x.perm;
    const int n = p.size() + 1;
    detail::require_color(x.color, p.colors());
    detail::require(1 <= x.mark && x.mark <= n, ErrorKind::domain_error, "k outside [1..n]");
    detail::require(is_derangement(p), ErrorKind::domain_error, "input is not a derangement");
    detail::require(!is_excluded_derangement_seed(x), ErrorKind::excluded_input,
                    "(1, n, (1 2)(3 4)...) has no image");
    detail::CycleEditor e(p, n);
    if (x.mark < n) {
        e.insert_after(x.mark, {n, x.color});
        return e.finish(n);
    }
    if (x.color != 0) {
        e.add_cycle({ColoredSymbol{n, x.color}});
        return e.finish(n);
    }
    const int a0 = *detail::first_broken_pair(e, p.size());
    if (e.color(a0) == 0 && e.next(a0) == a0 + 1) {
        // a0 is followed by a0+1 in |pi|: move a0 next to n
        e.remove(a0);
        e.add_cycle({ColoredSymbol{n, 0}, ColoredSymbol{a0, 0}});
    } else if (e.color(a0) == 0 && e.cycle_length(a0) == 2) {
        const ColoredSymbol partner = e.symbol(e.next(a0));
        e.remove_cycle(a0);
        e.insert_before(a0 + 1, {a0, 0});
        e.add_cycle({ColoredSymbol{n, partner.color}, ColoredSymbol{partner.value, 0}});
    } else {
        // the predecessor of a0 (a0 itself when it is a colored singleton)
        // leaves its cycle and pairs with n, handing its color to n
        const ColoredSymbol pred = e.symbol(e.prev(a0));
        e.remove(pred.value);
        e.add_cycle({ColoredSymbol{n, pred.color}, ColoredSymbol{pred.value, 0}});
    }
    return e.finish(n);
}

inline MarkedPermutation reduce_derangement(const ColoredPermutation& q) {
    const int n = q.size();
    detail::require(n >= 1, ErrorKind::domain_error, "need n >= 1");
    detail::require(is_derangement(q), ErrorKind::domain_error, "input is not a derangement");
    detail::require(!is_excluded_derangement(q), ErrorKind::excluded_input, "(1 2)(3 4)...(n-1 n) has no preimage");
    detail::CycleEditor e(q);
    const int length = e.cycle_length(n);
    const int rho = e.color(n);
    const ColoredSymbol partner = e.symbol(e.next(n));
    if (length != 2 || partner.color != 0) {
        const int k = e.prev(n);
        e.remove(n);
        return {rho, k, e.finish(n - 1)};
    }
    e.remove_cycle(n);
    const int a0 = *detail::first_broken_pair(detail::CycleEditor(q), n);
    if (partner.value == a0) {
        if (rho == 0) e.insert_before(a0 + 1, {a0, 0});
        else e.add_cycle({ColoredSymbol{a0, rho}});
    } else if (e.color(a0) == 0 && e.next(a0) == a0 + 1) {
        e.remove(a0);
        e.add_cycle({ColoredSymbol{partner.value, rho}, ColoredSymbol{a0, 0}});
    } else {
        // also reached when a0 is colored and followed by a0+1
        e.insert_before(a0, {partner.value, rho});
    }
    return {0, n, e.finish(n - 1)};
}

// ---------------------------------------------------------------------------
// C_ell x [n] x D(ell,n-1,m)  <->  D(ell,n,m) u D(ell,n-2,m-1),
// so d[n][m] + d[n-2][m-1] = ell n d[n-1][m].

/// x.perm in D(ell, n-1, m); the image has size n or n-2.
inline ColoredPermutation grow_isolated(const MarkedPermutation& x, int m) {
    const ColoredPermutation& p = x.perm;
    const int n = p.size() + 1;
    detail::require(m >= 1 && n >= 2, ErrorKind::domain_error, "need m >= 1 and n >= 2");
    detail::require_color(x.color, p.colors());
    detail::require(1 <= x.mark && x.mark <= n, ErrorKind::domain_error, "mark outside [1..n]");
    detail::require_isolated(p, m, "input");
    detail::CycleEditor e(p, n);
    if (x.mark < n) {
        e.insert_before(x.mark, {n, x.color});
        return e.finish(n);
    }
    if (x.color != 0) {
        e.add_cycle({ColoredSymbol{n, x.color}});
        return e.finish(n);
    }
    if (p.is_fixed_point(1)) {
        e.remove_cycle(1);
        return e.relabeled(n - 2, [](int v) { return v - 1; }).finish(n - 2);
    }
    const ColoredSymbol b = e.symbol(e.next(1));
    e.remove(b.value);
    e.add_cycle({ColoredSymbol{n, b.color}, ColoredSymbol{b.value, 0}});
    return e.finish(n);
}

/// Inverse of grow_isolated; q lies in D(ell, n, m) (size n) or D(ell, n-2, m-1) (size n-2).
inline MarkedPermutation shrink_isolated(const ColoredPermutation& q, int n, int m) {
    detail::require(m >= 1 && n >= 2, ErrorKind::domain_error, "need m >= 1 and n >= 2");
    if (q.size() == n - 2) {
        detail::require_isolated(q, m - 1, "input");
        auto e = detail::CycleEditor(q).relabeled(n - 1, [](int v) { return v + 1; });
        e.add_cycle({ColoredSymbol{1, 0}});
        return {0, n, e.finish(n - 1)};
    }
    detail::require(q.size() == n, ErrorKind::domain_error, "input must have size n or n-2");
    detail::require(m < n, ErrorKind::domain_error, "need m < n");
    detail::require_isolated(q, m, "input");
    detail::CycleEditor e(q);
    const int length = e.cycle_length(n);
    const int rho = e.color(n);
    if (length == 1) {
        e.remove(n);
        return {rho, n, e.finish(n - 1)};
    }
    if (length == 2 && q.at(n) > ColoredSymbol{m, 0}) {
        const int b = e.next(n);
        e.remove_cycle(n);
        e.insert_after(1, {b, rho});
        return {0, n, e.finish(n - 1)};
    }
    const int alpha = e.next(n);
    e.remove(n);
    return {rho, alpha, e.finish(n - 1)};
}

}  // namespace wreath

#pragma once

#include <wreath/wreath.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace wreath::testing {

inline ColoredPermutation P(const std::string& text, int ell) { return parse_permutation(text, ell); }

/// Every element of G(ell, n), built by nested loops independently of the
/// library's odometer.  Order: one-line words lexicographically, then color
/// vectors lexicographically.
inline std::vector<ColoredPermutation> all_elements(int ell, int n) {
    std::vector<ColoredPermutation> out;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == colors.size()) {
            out.emplace_back(ell, sigma, colors);
            return;
        }
        for (int c = 0; c < ell; ++c) {
            colors[i] = c;
            fill(i + 1);
        }
    };
    do {
        fill(0);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

/// C^k straight from the definition: pi(i) = i + k as an uncolored symbol.
inline std::vector<int> naive_circular(const ColoredPermutation& p, int k) {
    std::vector<int> v;
    for (int i = 1; i <= p.size(); ++i)
        if (i + k <= p.size() && p.at(i) == ColoredSymbol{i + k, 0}) v.push_back(i + k);
    std::sort(v.begin(), v.end());
    return v;
}

/// L^k from the definition: pi(i) = pi(i-1) + k with the color of pi(i-1) carried.
inline std::vector<int> naive_linear(const ColoredPermutation& p, int k) {
    std::vector<int> v;
    for (int i = 2; i <= p.size(); ++i) {
        const ColoredSymbol a = p.at(i - 1);
        if (a.value + k <= p.size() && p.at(i) == ColoredSymbol{a.value + k, a.color}) v.push_back(a.value + k);
    }
    std::sort(v.begin(), v.end());
    return v;
}

/// Fixed points of pi, i.e. pi(i) = i uncolored.
inline std::vector<int> naive_fixed(const ColoredPermutation& p) { return naive_circular(p, 0); }

/// Cycles of |pi| as sets of values.
inline std::vector<std::vector<int>> plain_cycles(const ColoredPermutation& p) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<std::size_t>(p.size()) + 1, 0);
    for (int s = 1; s <= p.size(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> c;
        for (int v = s; !seen[static_cast<std::size_t>(v)]; v = p.value_at(v)) {
            seen[static_cast<std::size_t>(v)] = 1;
            c.push_back(v);
        }
        out.push_back(c);
    }
    return out;
}

/// m-isolated-fixed from the definition.
inline bool naive_isolated(const ColoredPermutation& p, int m) {
    for (int i = 1; i <= m; ++i)
        if (p.color_of(i) != 0) return false;
    for (int f : naive_fixed(p))
        if (f > m) return false;
    for (const auto& c : plain_cycles(p))
        if (std::count_if(c.begin(), c.end(), [m](int v) { return v <= m; }) > 1) return false;
    return true;
}

/// m-increasing-fixed from the definition.
inline bool naive_increasing(const ColoredPermutation& p, int m) {
    for (int i = 1; i <= m; ++i)
        if (p.color_of(p.value_at(i)) != 0) return false;
    for (int f : naive_fixed(p))
        if (f > m) return false;
    for (int i = 2; i <= m; ++i)
        if (!(p.at(i - 1) < p.at(i))) return false;
    return true;
}

}  // namespace wreath::testing

#pragma once

#include "../colored_permutation.hpp"
#include "../cycles.hpp"
#include "../statistics.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

namespace wreath {

// ---------------------------------------------------------------------------
// Foata-style cycles-to-word transform on S_n.
//
// Cycles are listed by decreasing maxima, each ending at its maximum; erasing
// the parentheses gives the word.  The inverse cuts the word after every
// right-to-left maximum.  For k >= 1 this exchanges k-circular and k-linear
// successions.

namespace detail {

inline void require_permutation(std::span<const int> sigma) {
    std::vector<char> seen(sigma.size() + 1, 0);
    for (int v : sigma) {
        require(v >= 1 && v <= static_cast<int>(sigma.size()) && !seen[static_cast<std::size_t>(v)],
                ErrorKind::invalid_parameter, "not a permutation of [1..n]");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

/// [begin, end) index ranges of the blocks ending at right-to-left maxima.
inline std::vector<std::pair<std::size_t, std::size_t>> right_to_left_blocks(std::span<const int> word) {
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::size_t end = word.size();
    int running_max = 0;
    for (std::size_t i = word.size(); i-- > 0;) {
        if (word[i] > running_max) {
            running_max = word[i];
            if (i + 1 != end) blocks.emplace_back(i + 1, end);
            end = i + 1;
        }
    }
    if (end != 0) blocks.emplace_back(0, end);
    std::reverse(blocks.begin(), blocks.end());
    return blocks;
}

/// Cycle maxima in decreasing order, each with its cycle listed as
/// sigma(g), sigma^2(g), ..., g.
inline std::vector<std::vector<int>> cycles_ending_at_maxima(std::span<const int> sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> out;
    for (int g = n; g >= 1; --g) {
        if (seen[static_cast<std::size_t>(g)]) continue;
        // g is the largest unseen value, so it is the maximum of its cycle
        std::vector<int> cycle;
        int v = g;
        do {
            v = sigma[static_cast<std::size_t>(v - 1)];
            seen[static_cast<std::size_t>(v)] = 1;
            cycle.push_back(v);
        } while (v != g);
        out.push_back(std::move(cycle));
    }
    return out;
}

}  // namespace detail

inline std::vector<int> foata(std::span<const int> sigma) {
    detail::require_permutation(sigma);
    std::vector<int> word;
    word.reserve(sigma.size());
    for (const auto& c : detail::cycles_ending_at_maxima(sigma)) word.insert(word.end(), c.begin(), c.end());
    return word;
}

inline std::vector<int> foata_inverse(std::span<const int> word) {
    detail::require_permutation(word);
    std::vector<int> sigma(word.size());
    for (auto [b, e] : detail::right_to_left_blocks(word))
        for (std::size_t i = b; i < e; ++i)
            sigma[static_cast<std::size_t>(word[i] - 1)] = word[i + 1 == e ? b : i + 1];
    return sigma;
}

// ---------------------------------------------------------------------------
// Colored extension: C^{k+1}(pi) = L^{k+1}(image) for every k >= 0 at once.
//
// |image| = foata(|pi|).  Walking each cycle from sigma(g) to its maximum g,
// the image color of a letter is the running product of the original colors.

inline ColoredPermutation circular_to_linear(const ColoredPermutation& p) {
    const int ell = p.colors();
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(p.size()));
    std::vector<int> color(static_cast<std::size_t>(p.size()), 0);
    for (const auto& cycle : detail::cycles_ending_at_maxima(p.one_line())) {
        int running = 0;
        for (int v : cycle) {
            running = (running + p.color_of(v)) % ell;
            color[static_cast<std::size_t>(v - 1)] = running;
            word.push_back(v);
        }
    }
    return ColoredPermutation(ell, std::move(word), std::move(color));
}

inline ColoredPermutation linear_to_circular(const ColoredPermutation& q) {
    const int ell = q.colors();
    const auto word = q.one_line();
    std::vector<int> color(static_cast<std::size_t>(q.size()), 0);
    for (auto [b, e] : detail::right_to_left_blocks(word)) {
        int previous = 0;
        for (std::size_t i = b; i < e; ++i) {
            const int c = q.color_of(word[i]);
            color[static_cast<std::size_t>(word[i] - 1)] = (c - previous + ell) % ell;
            previous = c;
        }
    }
    return ColoredPermutation(ell, foata_inverse(word), std::move(color));
}

// ---------------------------------------------------------------------------
// Deleting / inserting a single succession letter.

namespace detail {

/// Remove the letter at `position` (value v) and lower every |letter| > v by one.
inline ColoredPermutation erase_letter(const ColoredPermutation& p, int position) {
    const int v = p.value_at(position);
    std::vector<ColoredSymbol> word;
    word.reserve(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) {
        if (i == position) continue;
        ColoredSymbol s = p.at(i);
        if (s.value > v) --s.value;
        word.push_back(s);
    }
    return ColoredPermutation::from_word(p.colors(), word);
}

/// Raise every |letter| >= v by one and put an uncolored v at `position`.
inline ColoredPermutation insert_letter(const ColoredPermutation& p, int position, int v) {
    std::vector<ColoredSymbol> word;
    word.reserve(static_cast<std::size_t>(p.size()) + 1);
    for (int i = 1; i <= p.size() + 1; ++i) {
        if (i == position) word.push_back({v, 0});
        if (i <= p.size()) {
            ColoredSymbol s = p.at(i);
            if (s.value >= v) ++s.value;
            word.push_back(s);
        }
    }
    return ColoredPermutation::from_word(p.colors(), word);
}

}  // namespace detail

/// From {pi : max C^k(pi) = m+1} in G(ell, n) onto G^m_{ell,n-1}(k): delete the
/// succession m+1 (at position m+1-k) and close the gap in the values.
inline ColoredPermutation drop_top_succession(const ColoredPermutation& p, int m, int k) {
    detail::require(0 <= k && k <= m && m + 1 <= p.size(), ErrorKind::domain_error,
                    "need 0 <= k <= m < n, got k=" + std::to_string(k) + " m=" + std::to_string(m));
    detail::require(circular_successions(p, k).max() == m + 1, ErrorKind::domain_error,
                    "largest " + std::to_string(k) + "-circular succession is not " + std::to_string(m + 1));
    return detail::erase_letter(p, m + 1 - k);
}

/// Inverse of drop_top_succession: p ranges over G^m_{ell,n-1}(k).
inline ColoredPermutation restore_top_succession(const ColoredPermutation& p, int m, int k) {
    detail::require(0 <= k && k <= m && m <= p.size(), ErrorKind::domain_error,
                    "need 0 <= k <= m <= n-1, got k=" + std::to_string(k) + " m=" + std::to_string(m));
    detail::require(circular_successions_within(p, m, k), ErrorKind::domain_error,
                    "a " + std::to_string(k) + "-circular succession exceeds " + std::to_string(m));
    return detail::insert_letter(p, m + 1 - k, m + 1);
}

/// A permutation with m k-circular successions, split into the positions of
/// those successions and the succession-free remainder in G(ell, n-m).
struct DecompositionPair {
    std::vector<int> positions;  // increasing, subset of [1..n-k]
    ColoredPermutation reduced;

    friend bool operator==(const DecompositionPair&, const DecompositionPair&) = default;
};

/// Strips the k-circular successions, highest position first.
inline DecompositionPair strip_successions(const ColoredPermutation& p, int k) {
    detail::require(0 <= k && k <= p.size(), ErrorKind::domain_error, "need 0 <= k <= n");
    DecompositionPair out;
    for (int v : circular_successions(p, k).values) out.positions.push_back(v - k);
    ColoredPermutation current = p;
    for (auto it = out.positions.rbegin(); it != out.positions.rend(); ++it) current = detail::erase_letter(current, *it);
    out.reduced = std::move(current);
    return out;
}

/// Inverse of strip_successions; n is the size of the rebuilt permutation.
inline ColoredPermutation restore_successions(const DecompositionPair& pair, int n, int k) {
    const int m = static_cast<int>(pair.positions.size());
    detail::require(k >= 0 && n >= 0 && pair.reduced.size() == n - m, ErrorKind::domain_error,
                    "reduced permutation must have size n - |positions|");
    for (std::size_t j = 0; j < pair.positions.size(); ++j) {
        const int i = pair.positions[j];
        detail::require(i >= 1 && i <= n - k, ErrorKind::domain_error,
                        "position " + std::to_string(i) + " outside [1.." + std::to_string(n - k) + "]");
        detail::require(j == 0 || pair.positions[j - 1] < i, ErrorKind::domain_error, "positions must increase");
    }
    detail::require(succession_count(pair.reduced, k, SuccessionKind::circular) == 0, ErrorKind::domain_error,
                    "reduced permutation still has a " + std::to_string(k) + "-circular succession");
    ColoredPermutation current = pair.reduced;
    for (int i : pair.positions) current = detail::insert_letter(current, i, i + k);
    return current;
}

}  // namespace wreath

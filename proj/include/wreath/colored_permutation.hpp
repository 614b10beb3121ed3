#pragma once

#include "error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wreath {

/// A colored letter zeta^color * value, with zeta a primitive ell-th root of unity.
struct ColoredSymbol {
    int value = 1;
    int color = 0;

    friend bool operator==(const ColoredSymbol&, const ColoredSymbol&) = default;

    /// Higher color exponents sort lower; equal colors compare by value.
    friend std::strong_ordering operator<=>(const ColoredSymbol& a, const ColoredSymbol& b) {
        if (a.color != b.color) return b.color <=> a.color;
        return a.value <=> b.value;
    }

    bool uncolored() const noexcept { return color == 0; }
};

/// zeta^j * i +- k = zeta^j * (i +- k); the result must stay within [0, n].
inline ColoredSymbol shift(ColoredSymbol s, int k, int n) {
    const int v = s.value + k;
    detail::require(v >= 0 && v <= n, ErrorKind::shift_out_of_range,
                    "shifting " + std::to_string(s.value) + " by " + std::to_string(k) +
                        " leaves [0, " + std::to_string(n) + "]");
    return {v, s.color};
}

namespace detail {
class Odometer;
}

/// An element (epsilon, sigma) of C_ell wr S_n.
///
/// sigma is held in one-line form and colors are indexed by VALUE: the letter
/// at position i is zeta^{color_of(sigma(i))} sigma(i).  All accessors are
/// 1-based to match the usual notation.
class ColoredPermutation {
public:
    ColoredPermutation() = default;

    /// Validates that sigma is a bijection of [1..n] and every color is in [0, ell).
    ColoredPermutation(int ell, std::vector<int> sigma, std::vector<int> color_by_value)
        : ell_(ell), sigma_(std::move(sigma)), color_(std::move(color_by_value)) {
        validate();
    }

    static ColoredPermutation identity(int ell, int n) {
        detail::require(ell >= 1, ErrorKind::invalid_parameter, "number of colors must be >= 1");
        detail::require(n >= 0, ErrorKind::invalid_parameter, "size must be >= 0");
        ColoredPermutation p;
        p.ell_ = ell;
        p.sigma_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p.sigma_[static_cast<std::size_t>(i)] = i + 1;
        p.color_.assign(static_cast<std::size_t>(n), 0);
        return p;
    }

    /// Builds from a word of colored letters, e.g. the one-line form.
    static ColoredPermutation from_word(int ell, std::span<const ColoredSymbol> word) {
        std::vector<int> sigma(word.size());
        std::vector<int> color(word.size(), -1);
        for (std::size_t i = 0; i < word.size(); ++i) {
            const auto [v, c] = word[i];
            detail::require(v >= 1 && v <= static_cast<int>(word.size()), ErrorKind::invalid_parameter,
                            "letter " + std::to_string(v) + " out of range");
            sigma[i] = v;
            color[static_cast<std::size_t>(v - 1)] = c;
        }
        return ColoredPermutation(ell, std::move(sigma), std::move(color));
    }

    int colors() const noexcept { return ell_; }
    int size() const noexcept { return static_cast<int>(sigma_.size()); }

    /// |pi|(i)
    int value_at(int position) const { return sigma_[static_cast<std::size_t>(position - 1)]; }
    /// Exponent j with sgn_pi(v) = zeta^j.
    int color_of(int value) const { return color_[static_cast<std::size_t>(value - 1)]; }
    /// pi(i) as a colored letter.
    ColoredSymbol at(int position) const {
        const int v = value_at(position);
        return {v, color_of(v)};
    }

    std::span<const int> one_line() const noexcept { return sigma_; }
    std::span<const int> color_by_value() const noexcept { return color_; }

    std::vector<ColoredSymbol> word() const {
        std::vector<ColoredSymbol> w;
        w.reserve(sigma_.size());
        for (int i = 1; i <= size(); ++i) w.push_back(at(i));
        return w;
    }

    /// |pi|^{-1} as a one-line array (1-based values, index 0 unused).
    std::vector<int> positions() const {
        std::vector<int> pos(sigma_.size() + 1, 0);
        for (std::size_t i = 0; i < sigma_.size(); ++i) pos[static_cast<std::size_t>(sigma_[i])] = static_cast<int>(i) + 1;
        return pos;
    }

    /// pi(i) = i uncolored.
    bool is_fixed_point(int i) const { return value_at(i) == i && color_of(i) == 0; }

    friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

    /// Order used for deterministic enumeration: sigma lexicographic, then colors.
    friend std::strong_ordering operator<=>(const ColoredPermutation& a, const ColoredPermutation& b) {
        if (auto c = a.ell_ <=> b.ell_; c != 0) return c;
        if (auto c = a.sigma_ <=> b.sigma_; c != 0) return c;
        return a.color_ <=> b.color_;
    }

private:
    friend class detail::Odometer;

    void validate() const {
        detail::require(ell_ >= 1, ErrorKind::invalid_parameter, "number of colors must be >= 1");
        detail::require(sigma_.size() == color_.size(), ErrorKind::invalid_parameter,
                        "sigma and colors differ in length");
        std::vector<char> seen(sigma_.size() + 1, 0);
        const int n = size();
        for (int v : sigma_) {
            detail::require(v >= 1 && v <= n, ErrorKind::invalid_parameter,
                            "value " + std::to_string(v) + " outside [1.." + std::to_string(n) + "]");
            detail::require(!seen[static_cast<std::size_t>(v)], ErrorKind::invalid_parameter,
                            "value " + std::to_string(v) + " repeated");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        for (int c : color_)
            detail::require(c >= 0 && c < ell_, ErrorKind::invalid_parameter,
                            "color exponent " + std::to_string(c) + " outside [0.." + std::to_string(ell_ - 1) + "]");
    }

    int ell_ = 1;
    std::vector<int> sigma_;
    std::vector<int> color_;
};

inline ColoredPermutation identity(int ell, int n) { return ColoredPermutation::identity(ell, n); }

/// Colored letter image: pi(zeta^j i) = zeta^j pi(i).
inline ColoredSymbol apply(const ColoredPermutation& p, ColoredSymbol s) {
    detail::require(s.value >= 1 && s.value <= p.size(), ErrorKind::invalid_symbol,
                    "value " + std::to_string(s.value) + " outside [1.." + std::to_string(p.size()) + "]");
    detail::require(s.color >= 0 && s.color < p.colors(), ErrorKind::invalid_symbol,
                    "color exponent " + std::to_string(s.color) + " out of range");
    const ColoredSymbol img = p.at(s.value);
    return {img.value, (img.color + s.color) % p.colors()};
}

/// (eps, sigma) . (eps', sigma') = ((eps_i * eps'_{sigma^{-1}(i)})_i, sigma o sigma').
inline ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b) {
    detail::require(a.colors() == b.colors() && a.size() == b.size(), ErrorKind::incompatible_elements,
                    "composing elements of different groups");
    const int n = a.size();
    const int ell = a.colors();
    const auto a_pos = a.positions();
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) sigma[static_cast<std::size_t>(i - 1)] = a.value_at(b.value_at(i));
    for (int v = 1; v <= n; ++v)
        color[static_cast<std::size_t>(v - 1)] = (a.color_of(v) + b.color_of(a_pos[static_cast<std::size_t>(v)])) % ell;
    return ColoredPermutation(ell, std::move(sigma), std::move(color));
}

inline ColoredPermutation inverse(const ColoredPermutation& p) {
    const int n = p.size();
    const int ell = p.colors();
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::vector<int> color(static_cast<std::size_t>(n));
    // pi(i) = zeta^c v  =>  pi^{-1}(v) = zeta^{-c} i
    for (int i = 1; i <= n; ++i) {
        const ColoredSymbol img = p.at(i);
        sigma[static_cast<std::size_t>(img.value - 1)] = i;
        color[static_cast<std::size_t>(i - 1)] = (ell - img.color) % ell;
    }
    return ColoredPermutation(ell, std::move(sigma), std::move(color));
}

/// pi_1 ... pi_n  ->  pi_n pi_1 ... pi_{n-1}
inline ColoredPermutation rotate_right(const ColoredPermutation& p) {
    detail::require(p.size() >= 1, ErrorKind::empty_permutation, "rotation of the empty word");
    std::vector<int> sigma(p.one_line().begin(), p.one_line().end());
    std::rotate(sigma.rbegin(), sigma.rbegin() + 1, sigma.rend());
    return ColoredPermutation(p.colors(), std::move(sigma),
                              std::vector<int>(p.color_by_value().begin(), p.color_by_value().end()));
}

/// pi_1 ... pi_n  ->  pi_2 ... pi_n pi_1
inline ColoredPermutation rotate_left(const ColoredPermutation& p) {
    detail::require(p.size() >= 1, ErrorKind::empty_permutation, "rotation of the empty word");
    std::vector<int> sigma(p.one_line().begin(), p.one_line().end());
    std::rotate(sigma.begin(), sigma.begin() + 1, sigma.end());
    return ColoredPermutation(p.colors(), std::move(sigma),
                              std::vector<int>(p.color_by_value().begin(), p.color_by_value().end()));
}

inline ColoredPermutation delta(const ColoredPermutation& p) { return rotate_right(p); }
inline ColoredPermutation delta_inverse(const ColoredPermutation& p) { return rotate_left(p); }

}  // namespace wreath

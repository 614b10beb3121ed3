#pragma once

#include "colored_permutation.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

namespace wreath {

/// Disjoint cycles of a colored permutation.  Each letter carries the sign of
/// its own value; inside (..., a, b, ...) the image of |a| is b with b's color.
struct CycleFactorization {
    using Cycle = std::vector<ColoredSymbol>;
    std::vector<Cycle> cycles;

    friend bool operator==(const CycleFactorization&, const CycleFactorization&) = default;
};

namespace detail {

inline int cycle_max(const CycleFactorization::Cycle& c) {
    int m = 0;
    for (const auto& s : c) m = std::max(m, s.value);
    return m;
}

/// Rotate every cycle so its largest value is last and order cycles by
/// decreasing maxima.
inline void canonicalize(CycleFactorization& cf) {
    for (auto& c : cf.cycles) {
        auto it = std::max_element(c.begin(), c.end(),
                                   [](const ColoredSymbol& a, const ColoredSymbol& b) { return a.value < b.value; });
        std::rotate(c.begin(), it + 1, c.end());
    }
    std::sort(cf.cycles.begin(), cf.cycles.end(),
              [](const auto& a, const auto& b) { return cycle_max(a) > cycle_max(b); });
}

/// Mutable successor-map view of a partial colored permutation.  Values may be
/// absent while a bijection rearranges cycles; finish() demands a full [1..n].
class CycleEditor {
public:
    CycleEditor(int ell, int capacity)
        : ell_(ell),
          next_(static_cast<std::size_t>(capacity) + 1, 0),
          prev_(static_cast<std::size_t>(capacity) + 1, 0),
          color_(static_cast<std::size_t>(capacity) + 1, 0) {}

    CycleEditor(const ColoredPermutation& p, int capacity) : CycleEditor(p.colors(), std::max(capacity, p.size())) {
        for (int v = 1; v <= p.size(); ++v) {
            const int w = p.value_at(v);
            next_[idx(v)] = w;
            prev_[idx(w)] = v;
            color_[idx(v)] = p.color_of(v);
        }
    }

    explicit CycleEditor(const ColoredPermutation& p) : CycleEditor(p, p.size()) {}

    int colors() const noexcept { return ell_; }
    int capacity() const noexcept { return static_cast<int>(next_.size()) - 1; }
    bool present(int v) const { return v >= 1 && v <= capacity() && next_[idx(v)] != 0; }
    int next(int v) const { return next_[idx(v)]; }
    int prev(int v) const { return prev_[idx(v)]; }
    int color(int v) const { return color_[idx(v)]; }
    ColoredSymbol symbol(int v) const { return {v, color(v)}; }
    void set_color(int v, int c) { color_[idx(v)] = c; }

    int cycle_length(int v) const {
        int len = 1;
        for (int w = next(v); w != v; w = next(w)) ++len;
        return len;
    }

    /// Values of the cycle through v, starting at v.
    std::vector<int> cycle_of(int v) const {
        std::vector<int> out{v};
        for (int w = next(v); w != v; w = next(w)) out.push_back(w);
        return out;
    }

    /// Splice v out of its cycle.
    void remove(int v) {
        const int a = prev(v);
        const int b = next(v);
        if (a != v) {
            next_[idx(a)] = b;
            prev_[idx(b)] = a;
        }
        next_[idx(v)] = prev_[idx(v)] = 0;
        color_[idx(v)] = 0;
    }

    void remove_cycle(int v) {
        for (int w : cycle_of(v)) {
            next_[idx(w)] = prev_[idx(w)] = 0;
            color_[idx(w)] = 0;
        }
    }

    /// In cycle notation: ( ... a x next(a) ... ).
    void insert_after(int a, ColoredSymbol x) {
        const int b = next(a);
        next_[idx(a)] = x.value;
        prev_[idx(x.value)] = a;
        next_[idx(x.value)] = b;
        prev_[idx(b)] = x.value;
        color_[idx(x.value)] = x.color;
    }

    /// In cycle notation: ( ... prev(b) x b ... ).
    void insert_before(int b, ColoredSymbol x) { insert_after(prev(b), x); }

    void add_cycle(std::span<const ColoredSymbol> letters) {
        const std::size_t k = letters.size();
        for (std::size_t i = 0; i < k; ++i) {
            const int v = letters[i].value;
            const int w = letters[(i + 1) % k].value;
            next_[idx(v)] = w;
            prev_[idx(w)] = v;
            color_[idx(v)] = letters[i].color;
        }
    }

    void add_cycle(std::initializer_list<ColoredSymbol> letters) {
        add_cycle(std::span<const ColoredSymbol>(letters.begin(), letters.size()));
    }

    /// Copy with every present value v renamed to f(v).
    template <class F>
    CycleEditor relabeled(int new_capacity, F&& f) const {
        CycleEditor out(ell_, new_capacity);
        for (int v = 1; v <= capacity(); ++v) {
            if (!present(v)) continue;
            const int fv = f(v);
            const int fw = f(next(v));
            out.next_[idx(fv)] = fw;
            out.prev_[idx(fw)] = fv;
            out.color_[idx(fv)] = color(v);
        }
        return out;
    }

    ColoredPermutation finish(int n) const {
        for (int v = 1; v <= capacity(); ++v)
            if (present(v) != (v <= n))
                throw Error(ErrorKind::domain_error, "cycle rearrangement left support != [1.." + std::to_string(n) + "]");
        std::vector<int> sigma(static_cast<std::size_t>(n));
        std::vector<int> color(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) {
            sigma[static_cast<std::size_t>(v - 1)] = next(v);
            color[static_cast<std::size_t>(v - 1)] = this->color(v);
        }
        return ColoredPermutation(ell_, std::move(sigma), std::move(color));
    }

private:
    static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

    int ell_;
    std::vector<int> next_;
    std::vector<int> prev_;
    std::vector<int> color_;
};

}  // namespace detail

/// Canonical factorization: each cycle ends at its maximum, cycles by decreasing maxima.
inline CycleFactorization cycle_factorization(const ColoredPermutation& p) {
    CycleFactorization cf;
    std::vector<char> seen(static_cast<std::size_t>(p.size()) + 1, 0);
    for (int start = 1; start <= p.size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        CycleFactorization::Cycle c;
        int v = start;
        do {
            seen[static_cast<std::size_t>(v)] = 1;
            c.push_back({v, p.color_of(v)});
            v = p.value_at(v);
        } while (v != start);
        cf.cycles.push_back(std::move(c));
    }
    detail::canonicalize(cf);
    return cf;
}

inline ColoredPermutation from_cycles(const CycleFactorization& cf, int ell, int n) {
    detail::require(ell >= 1, ErrorKind::invalid_parameter, "number of colors must be >= 1");
    detail::require(n >= 0, ErrorKind::invalid_parameter, "size must be >= 0");
    std::vector<int> sigma(static_cast<std::size_t>(n), 0);
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& c : cf.cycles) {
        detail::require(!c.empty(), ErrorKind::invalid_cycles, "empty cycle");
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto [v, col] = c[i];
            detail::require(v >= 1 && v <= n, ErrorKind::invalid_cycles,
                            "value " + std::to_string(v) + " outside [1.." + std::to_string(n) + "]");
            detail::require(!seen[static_cast<std::size_t>(v)], ErrorKind::invalid_cycles,
                            "value " + std::to_string(v) + " appears twice");
            detail::require(col >= 0 && col < ell, ErrorKind::invalid_cycles,
                            "color exponent " + std::to_string(col) + " out of range");
            seen[static_cast<std::size_t>(v)] = 1;
            sigma[static_cast<std::size_t>(v - 1)] = c[(i + 1) % c.size()].value;
            color[static_cast<std::size_t>(v - 1)] = col;
        }
    }
    for (int v = 1; v <= n; ++v)
        detail::require(seen[static_cast<std::size_t>(v)], ErrorKind::invalid_cycles,
                        "value " + std::to_string(v) + " missing from the cycles");
    return ColoredPermutation(ell, std::move(sigma), std::move(color));
}

}  // namespace wreath

#pragma once

#include "../colored_permutation.hpp"
#include "../cycles.hpp"
#include "../statistics.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace wreath {

namespace detail {

inline void require_fixed_within(const ColoredPermutation& p, int m) {
    require(0 <= m && m <= p.size(), ErrorKind::domain_error, "need 0 <= m <= n");
    require(fixed_points_within(p, m), ErrorKind::domain_error,
            "a fixed point lies outside [" + std::to_string(m) + "]");
}

}  // namespace detail

/// tau . pi = pi(tau^{-1}(1)) ... pi(tau^{-1}(m)) pi(m+1) ... pi(n) for tau in
/// G(ell, m) and pi with FIX(pi) in [m].  This is a left action of G(ell, m)
/// whose orbits each hold exactly one m-increasing-fixed permutation.
inline ColoredPermutation act_on_prefix(const ColoredPermutation& tau, const ColoredPermutation& p) {
    const int m = tau.size();
    detail::require(tau.colors() == p.colors(), ErrorKind::domain_error, "acting group has a different color count");
    detail::require_fixed_within(p, m);
    const ColoredPermutation tau_inv = inverse(tau);
    std::vector<ColoredSymbol> word = p.word();
    for (int i = 1; i <= m; ++i) word[static_cast<std::size_t>(i - 1)] = apply(p, tau_inv.at(i));
    return ColoredPermutation::from_word(p.colors(), word);
}

/// The unique m-increasing-fixed element of the orbit of p under act_on_prefix.
inline ColoredPermutation orbit_representative(const ColoredPermutation& p, int m) {
    detail::require_fixed_within(p, m);
    std::vector<ColoredSymbol> word = p.word();
    for (int i = 0; i < m; ++i) word[static_cast<std::size_t>(i)].color = 0;
    std::sort(word.begin(), word.begin() + m);
    return ColoredPermutation::from_word(p.colors(), word);
}

/// D^m -> I^m.  The first m letters become the increasing rearrangement of
/// |pi|(1..m); the sign carried by |pi|(i) moves onto i for i in [m], the
/// letters |pi|(1..m) become uncolored, the tail is untouched.
inline ColoredPermutation isolated_to_increasing(const ColoredPermutation& p, int m) {
    detail::require(0 <= m && m <= p.size(), ErrorKind::domain_error, "need 0 <= m <= n");
    detail::require(is_isolated_fixed(p, m), ErrorKind::domain_error,
                    "input is not " + std::to_string(m) + "-isolated-fixed");
    std::vector<int> sigma(p.one_line().begin(), p.one_line().end());
    std::sort(sigma.begin(), sigma.begin() + m);
    std::vector<int> color(p.color_by_value().begin(), p.color_by_value().end());
    for (int i = 1; i <= m; ++i) color[static_cast<std::size_t>(i - 1)] = p.color_of(p.value_at(i));
    for (int i = 1; i <= m; ++i) color[static_cast<std::size_t>(p.value_at(i) - 1)] = 0;
    return ColoredPermutation(p.colors(), std::move(sigma), std::move(color));
}

/// I^m -> D^m.  For i in [m], |pi|(i) is the first letter of
/// T = {|q|(1..m)} met walking backwards from i along |q|; the tail is kept
/// and the signs are exchanged back.
inline ColoredPermutation increasing_to_isolated(const ColoredPermutation& q, int m) {
    detail::require(0 <= m && m <= q.size(), ErrorKind::domain_error, "need 0 <= m <= n");
    detail::require(is_increasing_fixed(q, m), ErrorKind::domain_error,
                    "input is not " + std::to_string(m) + "-increasing-fixed");
    const int n = q.size();
    const auto pos = q.positions();
    std::vector<char> in_t(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= m; ++i) in_t[static_cast<std::size_t>(q.value_at(i))] = 1;

    std::vector<int> sigma(q.one_line().begin(), q.one_line().end());
    std::vector<int> color(q.color_by_value().begin(), q.color_by_value().end());
    for (int i = 1; i <= m; ++i) {
        int x = i;
        while (!in_t[static_cast<std::size_t>(x)]) x = pos[static_cast<std::size_t>(x)];
        sigma[static_cast<std::size_t>(i - 1)] = x;
        color[static_cast<std::size_t>(x - 1)] = q.color_of(i);
    }
    for (int i = 1; i <= m; ++i) color[static_cast<std::size_t>(i - 1)] = 0;
    return ColoredPermutation(q.colors(), std::move(sigma), std::move(color));
}

/// Everything about pi in G^m that is invariant on its class: the word w(i)
/// of letters strictly between i and the next element of [m] along the cycle,
/// and the cycles Omega avoiding [m].
struct ClassSignature {
    int colors = 1;
    std::vector<std::vector<ColoredSymbol>> words;  // words[i-1] = w(i)
    CycleFactorization omega;                       // canonical order

    int m() const noexcept { return static_cast<int>(words.size()); }
    int size() const {
        int n = m();
        for (const auto& w : words) n += static_cast<int>(w.size());
        for (const auto& c : omega.cycles) n += static_cast<int>(c.size());
        return n;
    }

    friend bool operator==(const ClassSignature&, const ClassSignature&) = default;
};

inline ClassSignature class_signature(const ColoredPermutation& p, int m) {
    detail::require_fixed_within(p, m);
    ClassSignature sig;
    sig.colors = p.colors();
    sig.words.resize(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        for (int v = p.value_at(i); v > m; v = p.value_at(v))
            sig.words[static_cast<std::size_t>(i - 1)].push_back({v, p.color_of(v)});
    for (auto& c : cycle_factorization(p).cycles) {
        const bool avoids = std::none_of(c.begin(), c.end(), [m](const ColoredSymbol& s) { return s.value <= m; });
        if (avoids) sig.omega.cycles.push_back(c);
    }
    return sig;
}

/// pi_m in G(ell, m): the cycles of pi restricted to the letters of [m].
inline ColoredPermutation class_core(const ColoredPermutation& p, int m) {
    detail::require_fixed_within(p, m);
    std::vector<int> sigma(static_cast<std::size_t>(m));
    std::vector<int> color(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        int v = p.value_at(i);
        while (v > m) v = p.value_at(v);
        sigma[static_cast<std::size_t>(i - 1)] = v;
        color[static_cast<std::size_t>(i - 1)] = p.color_of(i);
    }
    return ColoredPermutation(p.colors(), std::move(sigma), std::move(color));
}

/// Rebuilds a class member: every letter zeta^j i of tau is followed by w(i),
/// then the Omega cycles are appended.
inline ColoredPermutation insert_words(const ColoredPermutation& tau, const ClassSignature& sig) {
    detail::require(tau.size() == sig.m() && tau.colors() == sig.colors, ErrorKind::domain_error,
                    "tau must lie in G(ell, m) for the signature's m");
    CycleFactorization cf = sig.omega;
    for (auto& c : cycle_factorization(tau).cycles) {
        CycleFactorization::Cycle expanded;
        for (const auto& s : c) {
            expanded.push_back(s);
            const auto& w = sig.words[static_cast<std::size_t>(s.value - 1)];
            expanded.insert(expanded.end(), w.begin(), w.end());
        }
        cf.cycles.push_back(std::move(expanded));
    }
    return from_cycles(cf, sig.colors, sig.size());
}

/// insert_words(identity, signature): the m-isolated-fixed member of the class.
inline ColoredPermutation canonical_representative(const ColoredPermutation& p, int m) {
    return insert_words(identity(p.colors(), m), class_signature(p, m));
}

}  // namespace wreath

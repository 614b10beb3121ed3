#pragma once

#include "bijections/succession_maps.hpp"
#include "enumerate.hpp"
#include "notation.hpp"
#include "statistics.hpp"
#include "tables.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wreath {

/// Scalar in a check's parameters or counterexample; big values travel as decimal strings.
using FieldValue = std::variant<long long, std::string>;
using Fields = std::vector<std::pair<std::string, FieldValue>>;

struct CheckResult {
    std::string check;
    int ell = 1;
    int n = 0;
    Fields params;
    bool passed = true;
    std::optional<Fields> counterexample;
};

struct VerifyReport {
    std::vector<CheckResult> results;

    bool passed() const {
        return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
    }
};

/// Suites accepted by verify_suite; "all" runs every one of them.
inline constexpr std::array<std::string_view, 12> verify_suites = {
    "all", "t2", "t3", "c7", "l45", "t9", "t11", "skew", "delta", "rotation", "phi", "rec"};

inline bool is_verify_suite(std::string_view name) {
    return std::find(verify_suites.begin(), verify_suites.end(), name) != verify_suites.end();
}

/// Everything the enumeration-based checks need about G(ell, n), gathered in
/// one pass.  Indices: [k][m].
struct GroupSurvey {
    static constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();

    int ell = 1;
    int n = 0;
    std::vector<std::vector<std::uint64_t>> circular;      // k = 0..n, #{c^k = m}
    std::vector<std::vector<std::uint64_t>> linear;        // k = 1..n (row 0 unused)
    std::vector<std::vector<std::uint64_t>> top_circular;  // k = 0..n, #{max C^k = m}, empty set -> 0
    std::vector<std::uint64_t> increasing_fixed;           // m = 0..n
    std::vector<std::uint64_t> isolated_fixed;             // m = 0..n
    // rank of the first element violating each pointwise relation
    std::uint64_t skew_failure = none;
    std::uint64_t delta_failure = none;
    std::uint64_t rotation_failure = none;
    std::uint64_t phi_failure = none;

    GroupSurvey() = default;
    GroupSurvey(int ell_, int n_) : ell(ell_), n(n_) {
        const auto size = static_cast<std::size_t>(n) + 1;
        circular.assign(size, std::vector<std::uint64_t>(size, 0));
        linear.assign(size, std::vector<std::uint64_t>(size, 0));
        top_circular.assign(size, std::vector<std::uint64_t>(size, 0));
        increasing_fixed.assign(size, 0);
        isolated_fixed.assign(size, 0);
    }

    void merge(const GroupSurvey& other) {
        const auto add = [](auto& a, const auto& b) {
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
        };
        add(circular, other.circular);
        add(linear, other.linear);
        add(top_circular, other.top_circular);
        for (std::size_t m = 0; m < increasing_fixed.size(); ++m) {
            increasing_fixed[m] += other.increasing_fixed[m];
            isolated_fixed[m] += other.isolated_fixed[m];
        }
        skew_failure = std::min(skew_failure, other.skew_failure);
        delta_failure = std::min(delta_failure, other.delta_failure);
        rotation_failure = std::min(rotation_failure, other.rotation_failure);
        phi_failure = std::min(phi_failure, other.phi_failure);
    }
};

namespace detail {

/// L^{*k} = L^k, plus {k} exactly when pi(1) = k uncolored.
inline bool skew_relation_holds(const ColoredPermutation& p) {
    for (int k = 1; k <= p.size(); ++k) {
        SuccessionSet expected = linear_successions(p, k);
        if (p.at(1) == ColoredSymbol{k, 0}) {
            expected.values.push_back(k);
            std::sort(expected.values.begin(), expected.values.end());
        }
        if (skew_linear_successions(p, k).values != expected.values) return false;
    }
    return true;
}

/// C^{k+1}(pi) = C^k(delta(pi)) minus {k+1} when pi_n = k+1 uncolored.
inline bool delta_relation_holds(const ColoredPermutation& p) {
    if (p.size() == 0) return true;
    const ColoredPermutation shifted = rotate_right(p);
    for (int k = 0; k <= p.size(); ++k) {
        SuccessionSet expected = circular_successions(shifted, k);
        if (p.at(p.size()) == ColoredSymbol{k + 1, 0})
            std::erase(expected.values, k + 1);
        if (circular_successions(p, k + 1).values != expected.values) return false;
    }
    return true;
}

/// C^k(pi) in [m]  <=>  C^{k+1}(d(pi)) in [m], for 0 <= k < m <= n.
inline bool rotation_relation_holds(const ColoredPermutation& p) {
    if (p.size() == 0) return true;
    const ColoredPermutation rotated = rotate_left(p);
    for (int k = 0; k < p.size(); ++k) {
        const int before = circular_successions(p, k).max();
        const int after = circular_successions(rotated, k + 1).max();
        for (int m = k + 1; m <= p.size(); ++m)
            if ((before <= m) != (after <= m)) return false;
    }
    return true;
}

/// C^{k+1}(pi) = L^{k+1}(Phi(pi)) and C^k(delta(pi)) = L^{*(k+1)}(Phi(pi)) for all k >= 0,
/// and Phi is undone by its inverse.
inline bool phi_relation_holds(const ColoredPermutation& p) {
    const ColoredPermutation image = circular_to_linear(p);
    if (linear_to_circular(image) != p) return false;
    if (p.size() == 0) return true;
    const ColoredPermutation shifted = rotate_right(p);
    for (int k = 0; k < p.size(); ++k) {
        if (circular_successions(p, k + 1).values != linear_successions(image, k + 1).values) return false;
        if (circular_successions(shifted, k).values != skew_linear_successions(image, k + 1).values) return false;
    }
    return true;
}

inline void survey_step(GroupSurvey& s, const ColoredPermutation& p, std::uint64_t rank) {
    const int n = p.size();
    std::vector<int> circ(static_cast<std::size_t>(n) + 1, 0), top(static_cast<std::size_t>(n) + 1, 0),
        lin(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const int g = circular_gap(p, i);
        if (g >= 0) {
            ++circ[static_cast<std::size_t>(g)];
            top[static_cast<std::size_t>(g)] = i + g;
        }
        if (i >= 2) {
            const int l = linear_gap(p, i);
            if (l >= 1) ++lin[static_cast<std::size_t>(l)];
        }
    }
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
        ++s.circular[k][static_cast<std::size_t>(circ[k])];
        ++s.top_circular[k][static_cast<std::size_t>(top[k])];
        if (k >= 1) ++s.linear[k][static_cast<std::size_t>(lin[k])];
    }
    for (int m = 0; m <= n; ++m) {
        s.increasing_fixed[static_cast<std::size_t>(m)] += is_increasing_fixed(p, m);
        s.isolated_fixed[static_cast<std::size_t>(m)] += is_isolated_fixed(p, m);
    }
    const auto record = [rank](std::uint64_t& slot, bool ok) {
        if (!ok && slot == GroupSurvey::none) slot = rank;
    };
    record(s.skew_failure, skew_relation_holds(p));
    record(s.delta_failure, delta_relation_holds(p));
    record(s.rotation_failure, rotation_relation_holds(p));
    record(s.phi_failure, phi_relation_holds(p));
}

inline FieldValue field(std::uint64_t v) { return static_cast<long long>(v); }
inline FieldValue field(int v) { return static_cast<long long>(v); }
inline FieldValue field(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return to_decimal(v);
}

inline CheckResult make_result(std::string check, int ell, int n, Fields params) {
    return CheckResult{std::move(check), ell, n, std::move(params), true, std::nullopt};
}

inline void fail(CheckResult& r, Fields counterexample) {
    if (!r.passed) return;
    r.passed = false;
    r.counterexample = std::move(counterexample);
}

inline CheckResult pointwise_result(const char* check, const GroupSurvey& s, std::uint64_t failure) {
    CheckResult r = make_result(check, s.ell, s.n, {{"elements", field(static_cast<std::uint64_t>(group_order(s.ell, s.n)))}});
    if (failure != GroupSurvey::none)
        fail(r, {{"rank", field(failure)}, {"permutation", format_one_line(unrank(s.ell, s.n, failure))}});
    return r;
}

/// c(n, m, k) from a survey, zero outside the computed range.
inline BigInt circular_count(const GroupSurvey& s, int m, int k) {
    if (m < 0 || m > s.n) return 0;
    if (k > s.n) return m == 0 ? group_order(s.ell, s.n) : BigInt(0);
    return BigInt(s.circular[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)]);
}

}  // namespace detail

inline GroupSurvey survey_group(int ell, int n, int jobs = 1, std::uint64_t budget = enumeration_budget()) {
    return parallel_reduce(
        ell, n, jobs, GroupSurvey(ell, n), detail::survey_step,
        [](GroupSurvey& a, GroupSurvey&& b) { a.merge(b); }, budget);
}

/// #{C^k in [m]} = g[n][m] for 0 <= k <= m <= n.
inline CheckResult check_bounded_successions(const GroupSurvey& s, const DifferenceTable& g) {
    CheckResult r = detail::make_result("t2", s.ell, s.n, {{"k_max", detail::field(s.n)}, {"m_max", detail::field(s.n)}});
    for (int k = 0; k <= s.n; ++k) {
        std::uint64_t below = 0;
        for (int m = 0; m <= s.n; ++m) {
            below += s.top_circular[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
            if (m < k) continue;
            if (BigInt(below) != g.at(s.n, m))
                detail::fail(r, {{"k", detail::field(k)}, {"m", detail::field(m)}, {"expected", detail::field(g.at(s.n, m))},
                                 {"actual", detail::field(below)}});
        }
    }
    return r;
}

/// c(n,m,k+1) = c(n,m,k) + c(n-1,m,k) - c(n-1,m-1,k), and the same right side
/// for l(n,m,k+1) (check "c7").  Needs the surveys of sizes n and n-1.
inline CheckResult check_shift_recurrence(const GroupSurvey& s, const GroupSurvey& below, bool linear) {
    CheckResult r = detail::make_result(linear ? "c7" : "t3", s.ell, s.n,
                                        {{"k_max", detail::field(s.n - 1)}, {"m_max", detail::field(s.n)}});
    for (int k = 0; k + 1 <= s.n; ++k) {
        for (int m = 0; m <= s.n; ++m) {
            const BigInt rhs =
                detail::circular_count(s, m, k) + detail::circular_count(below, m, k) - detail::circular_count(below, m - 1, k);
            const auto& table = linear ? s.linear : s.circular;
            const BigInt lhs(table[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(m)]);
            if (lhs != rhs)
                detail::fail(r, {{"k", detail::field(k)}, {"m", detail::field(m)}, {"lhs", detail::field(lhs)},
                                 {"rhs", detail::field(rhs)}});
        }
    }
    return r;
}

/// c(n,m,k) = C(n-k, m) g[n-m][k] for k <= n - m.
inline CheckResult check_succession_positions(const GroupSurvey& s, const DifferenceTable& g) {
    CheckResult r = detail::make_result("l45", s.ell, s.n, {{"m_max", detail::field(s.n)}});
    for (int m = 0; m <= s.n; ++m)
        for (int k = 0; k <= s.n - m; ++k) {
            const BigInt expected = binomial(s.n - k, m) * g.at(s.n - m, k);
            const BigInt actual = detail::circular_count(s, m, k);
            if (actual != expected)
                detail::fail(r, {{"k", detail::field(k)}, {"m", detail::field(m)}, {"expected", detail::field(expected)},
                                 {"actual", detail::field(actual)}});
        }
    return r;
}

/// |I(ell,n,m)| = d[n][m] ("t9") or |D(ell,n,m)| = d[n][m] ("t11").
inline CheckResult check_fixed_point_classes(const GroupSurvey& s, const DifferenceTable& d, bool isolated) {
    CheckResult r = detail::make_result(isolated ? "t11" : "t9", s.ell, s.n, {{"m_max", detail::field(s.n)}});
    const auto& counts = isolated ? s.isolated_fixed : s.increasing_fixed;
    for (int m = 0; m <= s.n; ++m) {
        const BigInt actual(counts[static_cast<std::size_t>(m)]);
        if (actual != d.at(s.n, m))
            detail::fail(r, {{"m", detail::field(m)}, {"expected", detail::field(d.at(s.n, m))}, {"actual", detail::field(actual)}});
    }
    return r;
}

/// Runs a suite over ell in [1..colors_max] and n in [0..n_max] (the table
/// recurrences use n_max directly as the triangle size).  Results are ordered
/// by (ell, n, check) and do not depend on `jobs`.
inline VerifyReport verify_suite(std::string_view suite, int colors_max, int n_max, int jobs = 1,
                                 std::uint64_t budget = enumeration_budget()) {
    detail::require(is_verify_suite(suite), ErrorKind::invalid_parameter, "unknown suite '" + std::string(suite) + "'");
    detail::require(colors_max >= 1 && n_max >= 0, ErrorKind::invalid_parameter, "need colors-max >= 1 and n-max >= 0");
    const auto wants = [suite](std::string_view name) { return suite == "all" || suite == name; };
    VerifyReport report;

    detail::require(suite != "rec" || n_max >= 2, ErrorKind::invalid_parameter, "the rec suite needs n-max >= 2");
    const bool enumerates = suite != "rec";
    if (enumerates) checked_group_order(colors_max, n_max, budget);
    for (int ell = 1; ell <= colors_max && enumerates; ++ell) {
        const DifferenceTable g = build_table(ell, n_max, TableFlavor::g);
        const DifferenceTable d = build_table(ell, n_max, TableFlavor::d);
        std::optional<GroupSurvey> previous;
        for (int n = 0; n <= n_max; ++n) {
            GroupSurvey s = survey_group(ell, n, jobs, budget);
            if (wants("t2")) report.results.push_back(check_bounded_successions(s, g));
            if (previous && n >= 2 && wants("t3")) report.results.push_back(check_shift_recurrence(s, *previous, false));
            if (previous && n >= 2 && wants("c7")) report.results.push_back(check_shift_recurrence(s, *previous, true));
            if (wants("l45")) report.results.push_back(check_succession_positions(s, g));
            if (wants("t9")) report.results.push_back(check_fixed_point_classes(s, d, false));
            if (wants("t11")) report.results.push_back(check_fixed_point_classes(s, d, true));
            if (wants("skew")) report.results.push_back(detail::pointwise_result("skew", s, s.skew_failure));
            if (wants("delta")) report.results.push_back(detail::pointwise_result("delta", s, s.delta_failure));
            if (wants("rotation")) report.results.push_back(detail::pointwise_result("rotation", s, s.rotation_failure));
            if (wants("phi")) report.results.push_back(detail::pointwise_result("phi", s, s.phi_failure));
            previous = std::move(s);
        }
    }
    if (wants("rec") && n_max >= 2) {
        for (int ell = 1; ell <= colors_max; ++ell) {
            for (const auto& identity : check_recurrences(ell, n_max).identities) {
                CheckResult r = detail::make_result("rec", ell, n_max,
                                                    {{"identity", identity.name}, {"instances", detail::field(identity.instances)}});
                if (identity.counterexample) {
                    const auto& c = *identity.counterexample;
                    detail::fail(r, {{"n", detail::field(c.n)}, {"m", detail::field(c.m)}, {"lhs", detail::field(c.lhs)},
                                     {"rhs", detail::field(c.rhs)}});
                }
                report.results.push_back(std::move(r));
            }
        }
    }
    return report;
}

}  // namespace wreath

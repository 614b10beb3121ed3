#pragma once

#include "bigint.hpp"
#include "error.hpp"
#include "power_series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wreath {

enum class TableFlavor { g, d };

constexpr std::string_view to_string(TableFlavor f) noexcept { return f == TableFlavor::g ? "g" : "d"; }

/// Triangle entries[n][m], 0 <= m <= n <= max_n, of exact integers.
class DifferenceTable {
public:
    DifferenceTable(int ell, TableFlavor flavor, std::vector<std::vector<BigInt>> rows)
        : ell_(ell), flavor_(flavor), rows_(std::move(rows)) {}

    int colors() const noexcept { return ell_; }
    int max_n() const noexcept { return static_cast<int>(rows_.size()) - 1; }
    TableFlavor flavor() const noexcept { return flavor_; }

    bool contains(int n, int m) const noexcept { return n >= 0 && n <= max_n() && m >= 0 && m <= n; }
    const BigInt& at(int n, int m) const {
        detail::require(contains(n, m), ErrorKind::invalid_parameter,
                        "entry (" + std::to_string(n) + "," + std::to_string(m) + ") outside the triangle");
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    }
    const std::vector<BigInt>& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }
    const std::vector<std::vector<BigInt>>& rows() const noexcept { return rows_; }

private:
    int ell_;
    TableFlavor flavor_;
    std::vector<std::vector<BigInt>> rows_;
};

/// g: g[n][n] = ell^n n!, g[n][m] = g[n][m+1] - g[n-1][m].
/// d: d[n][n] = 1,        d[n][m] = ell (m+1) d[n][m+1] - d[n-1][m].
/// Each flavor runs its own recurrence; d is never obtained by dividing g.
inline DifferenceTable build_table(int ell, int max_n, TableFlavor flavor) {
    detail::require(ell >= 1, ErrorKind::invalid_parameter, "number of colors must be >= 1");
    detail::require(max_n >= 0, ErrorKind::invalid_parameter, "max_n must be >= 0");
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(max_n) + 1);
    BigInt diagonal = 1;  // ell^n n!
    for (int n = 0; n <= max_n; ++n) {
        if (n > 0) diagonal *= BigInt(ell) * n;
        auto& row = rows[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(n) + 1);
        row[static_cast<std::size_t>(n)] = flavor == TableFlavor::g ? diagonal : BigInt(1);
        for (int m = n - 1; m >= 0; --m) {
            const BigInt& above = rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m)];
            const BigInt& right = row[static_cast<std::size_t>(m + 1)];
            row[static_cast<std::size_t>(m)] =
                flavor == TableFlavor::g ? right - above : BigInt(ell) * (m + 1) * right - above;
        }
    }
    return DifferenceTable(ell, flavor, std::move(rows));
}

/// g[n][m] = sum_{i=0}^{n-m} (-1)^{n-m-i} C(n-m, i) ell^{m+i} (m+i)!
inline BigInt g_closed_form(int ell, int n, int m) {
    detail::require(ell >= 1, ErrorKind::invalid_parameter, "number of colors must be >= 1");
    detail::require(0 <= m && m <= n, ErrorKind::invalid_parameter, "need 0 <= m <= n");
    const int span = n - m;
    BigInt sum = 0;
    for (int i = 0; i <= span; ++i) {
        BigInt term = binomial(span, i) * group_order(ell, m + i);
        if ((span - i) % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

/// Number of derangements of G(ell, n): n! sum_{i=0}^{n} (-1)^i ell^{n-i} / i!.
inline BigInt derangement_number(int ell, int n) {
    detail::require(ell >= 1 && n >= 0, ErrorKind::invalid_parameter, "need ell >= 1, n >= 0");
    BigInt sum = 0;
    BigInt falling = 1;  // n! / i!, built from i = n downwards
    for (int i = n; i >= 0; --i) {
        BigInt term = power(BigInt(ell), static_cast<unsigned>(n - i)) * falling;
        if (i % 2) sum -= term;
        else sum += term;
        falling *= i;
    }
    return sum;
}

/// n! [u^n] of ell^m m! exp(-u) / (1 - ell u)^{m+1}, by exact series product.
inline BigInt egf_coefficient(int ell, int m, int n) {
    detail::require(ell >= 1 && m >= 0 && n >= 0, ErrorKind::invalid_parameter, "need ell >= 1, m, n >= 0");
    using Series = PowerSeries<BigRational>;
    const auto order = static_cast<std::size_t>(n);
    const Series series = BigRational(group_order(ell, m)) * Series::exponential(order, BigRational(-1)) *
                          Series::geometric(order, BigRational(ell)).pow(static_cast<unsigned>(m + 1));
    const BigRational value = series[order] * BigRational(factorial(static_cast<unsigned>(n)));
    if (boost::multiprecision::denominator(value) != 1)
        throw Error(ErrorKind::domain_error, "non-integral EGF coefficient");
    return boost::multiprecision::numerator(value);
}

struct RecurrenceCounterexample {
    int n = 0;
    int m = 0;
    BigInt lhs;
    BigInt rhs;
};

struct IdentityResult {
    std::string name;
    std::string statement;
    int instances = 0;  // (n, m) pairs inside the identity's domain
    std::optional<RecurrenceCounterexample> counterexample;

    bool passed() const noexcept { return !counterexample.has_value(); }
};

struct RecurrenceReport {
    int ell = 1;
    int max_n = 0;
    std::vector<IdentityResult> identities;

    bool passed() const {
        for (const auto& r : identities)
            if (!r.passed()) return false;
        return true;
    }
};

namespace detail {

/// coeff * table[n][m]; nullopt when a needed entry lies outside the triangle.
/// Terms with a vanishing coefficient never need their entry.
inline std::optional<BigInt> term(const DifferenceTable& t, const BigInt& coeff, int n, int m) {
    if (coeff == 0) return BigInt(0);
    if (!t.contains(n, m)) return std::nullopt;
    return coeff * t.at(n, m);
}

using SideFn = std::function<std::optional<std::pair<BigInt, BigInt>>(int n, int m)>;

inline IdentityResult check_identity(std::string name, std::string statement, int max_n, const SideFn& sides) {
    IdentityResult r{std::move(name), std::move(statement), 0, std::nullopt};
    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
            auto s = sides(n, m);
            if (!s) continue;
            ++r.instances;
            if (s->first != s->second && !r.counterexample)
                r.counterexample = RecurrenceCounterexample{n, m, s->first, s->second};
        }
    }
    return r;
}

inline std::optional<BigInt> sum(std::initializer_list<std::optional<BigInt>> parts) {
    BigInt total = 0;
    for (const auto& p : parts) {
        if (!p) return std::nullopt;
        total += *p;
    }
    return total;
}

}  // namespace detail

/// Validates every secondary recurrence of the g- and d-triangles up to max_n.
/// Instances whose right-hand side would need an entry outside the triangle
/// are skipped, not extended.
inline RecurrenceReport check_recurrences(int ell, int max_n) {
    detail::require(ell >= 1, ErrorKind::invalid_parameter, "number of colors must be >= 1");
    detail::require(max_n >= 2, ErrorKind::invalid_parameter, "recurrence check needs max_n >= 2");
    const DifferenceTable g = build_table(ell, max_n, TableFlavor::g);
    const DifferenceTable d = build_table(ell, max_n, TableFlavor::d);
    const BigInt L = ell;
    using detail::sum;
    using detail::term;
    using Sides = std::optional<std::pair<BigInt, BigInt>>;
    auto pair_of = [](const std::optional<BigInt>& a, const std::optional<BigInt>& b) -> Sides {
        if (!a || !b) return std::nullopt;
        return std::make_pair(*a, *b);
    };

    RecurrenceReport report{ell, max_n, {}};
    auto& out = report.identities;

    // (ell n - 1) X[n-1][m] + ell (n-m-1) X[n-2][m], n >= 2
    auto rec1 = [&](const DifferenceTable& t) {
        return [&, pt = &t](int n, int m) -> Sides {
            if (n < 2) return std::nullopt;
            return pair_of(term(*pt, 1, n, m),
                           sum({term(*pt, L * n - 1, n - 1, m), term(*pt, L * (n - m - 1), n - 2, m)}));
        };
    };
    out.push_back(detail::check_identity("g-rec1", "g[n][m] = (ell n - 1) g[n-1][m] + ell (n-m-1) g[n-2][m]", max_n, rec1(g)));
    out.push_back(detail::check_identity(
        "g-rec2", "g[n][m] = ell (n-m) g[n-1][m] + ell m g[n-1][m-1]", max_n, [&](int n, int m) -> Sides {
            if (m < 1 || n < 1) return std::nullopt;
            return pair_of(term(g, 1, n, m), sum({term(g, L * (n - m), n - 1, m), term(g, L * m, n - 1, m - 1)}));
        }));
    out.push_back(detail::check_identity(
        "g-rec3", "g[n][m] = ell n g[n-1][m] - ell m g[n-2][m-1]", max_n, [&](int n, int m) -> Sides {
            if (m < 1 || n < 2) return std::nullopt;
            return pair_of(term(g, 1, n, m), sum({term(g, L * n, n - 1, m), term(g, -L * m, n - 2, m - 1)}));
        }));
    out.push_back(detail::check_identity("d-rec1", "d[n][m] = (ell n - 1) d[n-1][m] + ell (n-m-1) d[n-2][m]", max_n, rec1(d)));
    out.push_back(detail::check_identity(
        "d-rec2", "d[n][m] = ell (n-m) d[n-1][m] + d[n-1][m-1]", max_n, [&](int n, int m) -> Sides {
            if (m < 1 || n < 1) return std::nullopt;
            return pair_of(term(d, 1, n, m), sum({term(d, L * (n - m), n - 1, m), term(d, 1, n - 1, m - 1)}));
        }));
    out.push_back(detail::check_identity(
        "d-rec3", "d[n][m] + d[n-2][m-1] = ell n d[n-1][m]", max_n, [&](int n, int m) -> Sides {
            if (m < 1 || n < 2) return std::nullopt;
            return pair_of(sum({term(d, 1, n, m), term(d, 1, n - 2, m - 1)}), term(d, L * n, n - 1, m));
        }));
    out.push_back(detail::check_identity(
        "d-raise", "d[n][m-1] + d[n-1][m-1] = ell m d[n][m]", max_n, [&](int n, int m) -> Sides {
            if (m < 1) return std::nullopt;
            return pair_of(sum({term(d, 1, n, m - 1), term(d, 1, n - 1, m - 1)}), term(d, L * m, n, m));
        }));
    out.push_back(detail::check_identity(
        "derangement-rec", "d[n][0] = ell n d[n-1][0] + (-1)^n", max_n, [&](int n, int m) -> Sides {
            if (m != 0 || n < 1) return std::nullopt;
            return pair_of(term(d, 1, n, 0), sum({term(d, L * n, n - 1, 0), BigInt(n % 2 ? -1 : 1)}));
        }));
    out.push_back(detail::check_identity(
        "boundary-g", "g[0][0] = 1, g[1][0] = ell - 1, g[1][1] = ell", max_n, [&](int n, int m) -> Sides {
            if (n > 1) return std::nullopt;
            return pair_of(term(g, 1, n, m), n == 0 ? BigInt(1) : (m == 0 ? L - 1 : L));
        }));
    out.push_back(detail::check_identity(
        "boundary-d", "d[0][0] = 1, d[1][0] = ell - 1, d[1][1] = 1", max_n, [&](int n, int m) -> Sides {
            if (n > 1) return std::nullopt;
            return pair_of(term(d, 1, n, m), n == 0 ? BigInt(1) : (m == 0 ? L - 1 : BigInt(1)));
        }));
    out.push_back(detail::check_identity(
        "cross-table", "g[n][m] = ell^m m! d[n][m]", max_n, [&](int n, int m) -> Sides {
            return pair_of(term(g, 1, n, m), term(d, group_order(ell, m), n, m));
        }));
    return report;
}

}  // namespace wreath

// Acceptance gate: one PASS/FAIL line per criterion, with its time limit.

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace wreath;
using namespace wreath::testing;

namespace {

struct Criterion {
    int id;
    const char* name;
    double limit_ms;
    std::function<std::string()> run;  // empty string on success, otherwise what failed
};

std::string fail_unless(bool ok, const std::string& what) { return ok ? std::string() : what; }

// ---------------------------------------------------------------------------

std::string published_tables() {
    const std::vector<std::vector<std::vector<long long>>> g{
        {{1}, {0, 1}, {1, 1, 2}, {2, 3, 4, 6}, {9, 11, 14, 18, 24}, {44, 53, 64, 78, 96, 120}},
        {{1}, {1, 2}, {5, 6, 8}, {29, 34, 40, 48}, {233, 262, 296, 336, 384}, {2329, 2562, 2824, 3120, 3456, 3840}}};
    const std::vector<std::vector<std::vector<long long>>> d{
        {{1}, {0, 1}, {1, 1, 1}, {2, 3, 2, 1}, {9, 11, 7, 3, 1}, {44, 53, 32, 13, 4, 1}},
        {{1}, {1, 1}, {5, 3, 1}, {29, 17, 5, 1}, {233, 131, 37, 7, 1}, {2329, 1281, 353, 65, 9, 1}}};
    for (int ell = 1; ell <= 2; ++ell) {
        const auto tg = build_table(ell, 5, TableFlavor::g);
        const auto td = build_table(ell, 5, TableFlavor::d);
        for (int n = 0; n <= 5; ++n)
            for (int m = 0; m <= n; ++m) {
                const auto i = static_cast<std::size_t>(ell - 1), r = static_cast<std::size_t>(n), c = static_cast<std::size_t>(m);
                if (tg.at(n, m) != g[i][r][c]) return "g mismatch at ell=" + std::to_string(ell) + " n=" + std::to_string(n);
                if (td.at(n, m) != d[i][r][c]) return "d mismatch at ell=" + std::to_string(ell) + " n=" + std::to_string(n);
            }
    }
    return {};
}

std::string report_failures(const VerifyReport& report) {
    for (const auto& r : report.results)
        if (!r.passed) return r.check + " failed at ell=" + std::to_string(r.ell) + " n=" + std::to_string(r.n);
    return report.results.empty() ? "no results" : "";
}

std::string bounded_successions() {
    // every element counted once per (k, m), compared with the table
    for (int ell = 1; ell <= 3; ++ell)
        for (int n = 0; n <= 5; ++n) {
            const auto g = build_table(ell, n, TableFlavor::g);
            std::vector<std::vector<std::uint64_t>> top(static_cast<std::size_t>(n) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 2, 0));
            for (const auto& p : enumerate_group(ell, n))
                for (int k = 0; k <= n; ++k) ++top[static_cast<std::size_t>(k)][static_cast<std::size_t>(circular_successions(p, k).max())];
            for (int k = 0; k <= n; ++k) {
                std::uint64_t below = 0;
                for (int m = 0; m <= n; ++m) {
                    below += top[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
                    if (m >= k && BigInt(below) != g.at(n, m))
                        return "ell=" + std::to_string(ell) + " n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
                }
            }
        }
    return report_failures(verify_suite("t2", 3, 5));
}

std::string shift_recurrences() {
    const auto t3 = report_failures(verify_suite("t3", 3, 4));
    return t3.empty() ? report_failures(verify_suite("c7", 3, 4)) : t3;
}

std::string succession_positions() { return report_failures(verify_suite("l45", 3, 5)); }

std::string fixed_point_classes() {
    std::set<std::string> increasing;
    std::set<std::string> isolated;
    for (const auto& p : enumerate_group(2, 3)) {
        if (is_increasing_fixed(p, 2)) increasing.insert(format_one_line(p));
        if (is_isolated_fixed(p, 2)) isolated.insert(format_one_line(p));
    }
    if (increasing != std::set<std::string>{"1 2 3^1", "1 3 2", "1 3 2^1", "2 3 1", "2 3 1^1"}) return "I(2,3,2) fixture";
    std::set<std::string> expected;
    for (const char* c : {"(1)(2)(3^1)", "(1 3)(2)", "(1 3^1)(2)", "(1)(2 3)", "(1)(2 3^1)"})
        expected.insert(format_one_line(parse_permutation(c, 2)));
    if (isolated != expected) return "D(2,3,2) fixture";
    const auto t9 = report_failures(verify_suite("t9", 3, 5));
    return t9.empty() ? report_failures(verify_suite("t11", 3, 5)) : t9;
}

// ---------------------------------------------------------------------------

std::vector<ColoredPermutation> isolated_set(int ell, int n, int m) {
    std::vector<ColoredPermutation> out;
    if (n < 0 || m < 0 || m > n) return out;
    for (const auto& p : all_elements(ell, n))
        if (naive_isolated(p, m)) out.push_back(p);
    return out;
}

std::string bijections() {
    // foata on S_6
    for (const auto& s : all_elements(1, 6)) {
        const auto w = foata(s.one_line());
        const auto back = foata_inverse(w);
        if (!std::equal(back.begin(), back.end(), s.one_line().begin(), s.one_line().end())) return "foata roundtrip";
        const ColoredPermutation word(1, w, std::vector<int>(w.size(), 0));
        for (int k = 1; k <= 6; ++k)
            if (naive_circular(s, k) != naive_linear(word, k)) return "foata successions";
    }
    // Phi
    if (format_one_line(circular_to_linear(parse_permutation("3^1 4 9^1 8^1 7 5^1 6 2^2 1^2", 4))) != "1^2 3^3 9 2^2 4^2 8^3 6 5^1 7^1")
        return "Phi fixture";
    for (int ell = 1; ell <= 3; ++ell)
        for (int n = 0; n <= 4; ++n) {
            std::set<ColoredPermutation> images;
            for (const auto& p : all_elements(ell, n)) {
                const auto q = circular_to_linear(p);
                images.insert(q);
                if (linear_to_circular(q) != p) return "Phi roundtrip";
                for (int k = 0; k <= n; ++k)
                    if (naive_circular(p, k + 1) != naive_linear(q, k + 1)) return "Phi successions";
            }
            if (images.size() != all_elements(ell, n).size()) return "Phi not injective";
        }
    for (int ell = 1; ell <= 3; ++ell)
        for (int n = 1; n <= 4; ++n) {
            const auto group = all_elements(ell, n);
            // rho
            for (int m = 0; m < n; ++m)
                for (int k = 0; k <= m; ++k)
                    for (const auto& p : group) {
                        const auto c = naive_circular(p, k);
                        if (c.empty() || c.back() != m + 1) continue;
                        const auto q = drop_top_succession(p, m, k);
                        const auto cq = naive_circular(q, k);
                        if (!(cq.empty() || cq.back() <= m) || restore_top_succession(q, m, k) != p) return "rho";
                    }
            // theta
            for (int k = 0; k <= n; ++k)
                for (const auto& p : group) {
                    const auto pair = strip_successions(p, k);
                    if (!naive_circular(pair.reduced, k).empty() || restore_successions(pair, n, k) != p) return "theta";
                }
            // increasing rearrangement
            for (int m = 0; m <= n; ++m)
                for (const auto& p : group)
                    if (naive_isolated(p, m)) {
                        const auto q = isolated_to_increasing(p, m);
                        if (!naive_increasing(q, m) || increasing_to_isolated(q, m) != p) return "isolated/increasing";
                    }
            // vartheta
            for (int m = 1; m <= n; ++m) {
                std::size_t count = 0;
                for (int size : {n - 1, n})
                    for (const auto& p : isolated_set(ell, size, m - 1)) {
                        ++count;
                        const auto x = raise_isolated(p, n, m);
                        if (!naive_isolated(x.perm, m) || x.mark < 1 || x.mark > m || lower_isolated(x, m) != p) return "vartheta";
                    }
                if (count != static_cast<std::size_t>(ell * m) * isolated_set(ell, n, m).size()) return "vartheta count";
            }
            // tau
            std::size_t tau_domain = 0;
            for (const auto& p : isolated_set(ell, n - 1, 0))
                for (int c = 0; c < ell; ++c)
                    for (int k = 1; k <= n; ++k) {
                        const MarkedPermutation x{c, k, p};
                        if (is_excluded_derangement_seed(x)) continue;
                        ++tau_domain;
                        const auto q = extend_derangement(x);
                        if (!naive_fixed(q).empty() || is_excluded_derangement(q) || reduce_derangement(q) != x) return "tau";
                    }
            const auto targets = isolated_set(ell, n, 0);
            const auto excluded = static_cast<std::size_t>(std::count_if(targets.begin(), targets.end(), is_excluded_derangement));
            if (tau_domain != targets.size() - excluded) return "tau count";
            // Phi'
            for (int m = 1; m < n && n >= 2; ++m) {
                std::size_t count = 0;
                for (const auto& p : isolated_set(ell, n - 1, m))
                    for (int c = 0; c < ell; ++c)
                        for (int a = 1; a <= n; ++a) {
                            ++count;
                            const MarkedPermutation x{c, a, p};
                            const auto q = grow_isolated(x, m);
                            const bool member = q.size() == n ? naive_isolated(q, m) : naive_isolated(q, m - 1);
                            if (!member || shrink_isolated(q, n, m) != x) return "phi3";
                        }
                if (count != isolated_set(ell, n, m).size() + isolated_set(ell, n - 2, m - 1).size()) return "phi3 count";
            }
        }
    // the published table of tau_2 for n = 3
    const std::vector<std::pair<const char*, std::array<const char*, 6>>> table{
        {"(1 2)", {"(1 3 2)", "(1 2 3)", nullptr, "(1 3^1 2)", "(1 2 3^1)", "(1 2)(3^1)"}},
        {"(1^1 2)", {"(1^1 3 2)", "(1^1 2 3)", "(1^1)(3 2)", "(1^1 3^1 2)", "(1^1 2 3^1)", "(1^1 2)(3^1)"}},
        {"(1 2^1)", {"(1 3 2^1)", "(1 2^1 3)", "(1 3)(2^1)", "(1 3^1 2^1)", "(1 2^1 3^1)", "(1 2^1)(3^1)"}},
        {"(1^1 2^1)", {"(1^1 3 2^1)", "(1^1 2^1 3)", "(3^1 2)(1^1)", "(1^1 3^1 2^1)", "(1^1 2^1 3^1)", "(1^1 2^1)(3^1)"}},
        {"(1^1)(2^1)", {"(1^1 3)(2^1)", "(1^1)(2^1 3)", "(3^1 1)(2^1)", "(1^1 3^1)(2^1)", "(1^1)(2^1 3^1)", "(1^1)(2^1)(3^1)"}},
    };
    int cells = 0;
    for (const auto& [input, outputs] : table)
        for (int col = 0; col < 6; ++col) {
            ++cells;
            const MarkedPermutation x{col / 3, col % 3 + 1, parse_permutation(input, 2)};
            const char* expected = outputs[static_cast<std::size_t>(col)];
            if (expected == nullptr) {
                if (!is_excluded_derangement_seed(x)) return "tau table: excluded cell";
                continue;
            }
            if (extend_derangement(x) != parse_permutation(expected, 2)) return std::string("tau table cell ") + input;
        }
    return fail_unless(cells == 30, "tau table size");
}

// ---------------------------------------------------------------------------

std::string closed_forms() {
    for (int ell = 1; ell <= 5; ++ell) {
        const auto g = build_table(ell, 25, TableFlavor::g);
        for (int n = 0; n <= 25; ++n) {
            if (derangement_number(ell, n) != g.at(n, 0)) return "derangement number";
            for (int m = 0; m <= n; ++m)
                if (g_closed_form(ell, n, m) != g.at(n, m)) return "closed form";
        }
    }
    for (int ell = 1; ell <= 4; ++ell) {
        const auto g = build_table(ell, 12, TableFlavor::g);
        for (int m = 0; m <= 12; ++m)
            for (int n = 0; n + m <= 12; ++n)
                if (egf_coefficient(ell, m, n) != g.at(n + m, m)) return "egf";
    }
    return {};
}

std::string recurrences() {
    for (int ell = 1; ell <= 5; ++ell) {
        const auto report = check_recurrences(ell, 30);
        for (const auto& r : report.identities)
            if (!r.passed()) return r.name + " at ell=" + std::to_string(ell);
        const auto g = build_table(ell, 30, TableFlavor::g);
        const auto d = build_table(ell, 30, TableFlavor::d);
        for (int n = 0; n <= 30; ++n)
            for (int m = 0; m <= n; ++m)
                if (g.at(n, m) != power(BigInt(ell), static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(m)) * d.at(n, m))
                    return "cross-table";
    }
    return {};
}

std::string capture(const std::string& command, int& status) {
    std::string out;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) {
        status = -1;
        return out;
    }
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    status = ::pclose(pipe);
    return out;
}

std::string determinism() {
    const std::string base = std::string("\"") + WREATH_EULER_CLI + "\" verify --suite all --colors-max 3 --n-max 5 --jobs ";
    int s1 = 0, s4 = 0;
    const std::string one = capture(base + "1", s1);
    const std::string many = capture(base + "4", s4);
    if (s1 != 0 || s4 != 0) return "verify exited with a non-zero status";
    if (one.empty()) return "empty report";
    return fail_unless(one == many, "reports differ between --jobs 1 and --jobs 4");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "table reproduction", 1, published_tables},
        {2, "bounded successions count g[n][m] for every k", 5000, bounded_successions},
        {3, "shift recurrences for circular and linear distributions", 5000, shift_recurrences},
        {4, "succession positions times succession-free remainder", 5000, succession_positions},
        {5, "increasing-fixed and isolated-fixed counts", 5000, fixed_point_classes},
        {6, "bijection roundtrips, codomains and the tau_2 table", 30000, bijections},
        {7, "closed forms and EGF coefficients", 1000, closed_forms},
        {8, "recurrence suite and cross-table divisibility", 1000, recurrences},
        {9, "verify reports identical for 1 and 4 jobs", 120000, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string problem;
        const auto start = std::chrono::steady_clock::now();
        try {
            problem = c.run();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (problem.empty() && ms > c.limit_ms) problem = "time limit exceeded";
        const bool ok = problem.empty();
        failures += !ok;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << ms << " ms, limit " << c.limit_ms
             << " ms)";
        if (!ok) line << " -- " << problem;
        std::cout << line.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}

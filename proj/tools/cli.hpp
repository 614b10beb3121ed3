#pragma once

// Command-line front end: table, count, bijection, verify.
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 budget, 4 domain.

#include <wreath/wreath.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace wreath::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage = 2, budget = 3, domain = 4 };

enum class OutputFormat { csv, json, text };

struct TableOptions {
    std::string flavor = "g";
    int colors = 1;
    int max_n = 0;
    std::string format = "text";
};

struct CountOptions {
    int colors = 1;
    int n = 0;
    std::string stat = "circ";
    int k = 0;
    int jobs = 1;
};

struct BijectionOptions {
    std::string name;
    int colors = 1;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> k;
    std::optional<int> eps;
    std::optional<int> alpha;
    std::string positions;
    std::string tau;
    std::string input;
    std::string output = "same";
    bool inverse = false;
};

struct VerifyOptions {
    std::string suite = "all";
    int colors_max = 2;
    int n_max = 5;
    int jobs = default_jobs();
};

namespace detail {

/// Usage problems found after CLI11 parsing (bad combinations of flags).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t table_cost(int ell, int max_n) {
    // entries times the decimal length of the largest entry
    const BigInt largest = group_order(ell, max_n);
    const auto digits = static_cast<std::uint64_t>(to_decimal(largest).size());
    const auto entries = static_cast<std::uint64_t>(max_n + 1) * static_cast<std::uint64_t>(max_n + 2) / 2;
    return entries * digits;
}

inline int run_table(const TableOptions& o, std::ostream& out) {
    if (o.colors < 1 || o.max_n < 0) throw UsageError("need --colors >= 1 and --max-n >= 0");
    if (o.max_n > 100000) throw Error(ErrorKind::too_large, "--max-n above 100000");
    const std::uint64_t cost = table_cost(o.colors, o.max_n);
    if (cost > enumeration_budget())
        throw Error(ErrorKind::too_large, "table would store about " + std::to_string(cost) + " digits, budget is " +
                                              std::to_string(enumeration_budget()));
    const DifferenceTable t = build_table(o.colors, o.max_n, o.flavor == "g" ? TableFlavor::g : TableFlavor::d);
    if (o.format == "csv") {
        out << "n,m,value\n";
        for (int n = 0; n <= t.max_n(); ++n)
            for (int m = 0; m <= n; ++m) out << n << ',' << m << ',' << to_decimal(t.at(n, m)) << '\n';
    } else if (o.format == "json") {
        // written by hand so that entries beyond 64 bits stay exact JSON numbers
        out << "{\"ell\":" << o.colors << ",\"flavor\":\"" << o.flavor << "\",\"rows\":[";
        for (int n = 0; n <= t.max_n(); ++n) {
            out << (n ? ",[" : "[");
            for (int m = 0; m <= n; ++m) out << (m ? "," : "") << to_decimal(t.at(n, m));
            out << ']';
        }
        out << "]}\n";
    } else {
        for (int n = 0; n <= t.max_n(); ++n) {
            for (int m = 0; m <= n; ++m) out << (m ? " " : "") << to_decimal(t.at(n, m));
            out << '\n';
        }
    }
    return ok;
}

inline SuccessionKind parse_stat(const std::string& stat) {
    if (stat == "circ") return SuccessionKind::circular;
    if (stat == "lin") return SuccessionKind::linear;
    return SuccessionKind::skew_linear;
}

inline int run_count(const CountOptions& o, std::ostream& out) {
    if (o.colors < 1 || o.n < 0 || o.jobs < 1) throw UsageError("need --colors >= 1, --n >= 0 and --jobs >= 1");
    const SuccessionKind kind = parse_stat(o.stat);
    if (o.k < (kind == SuccessionKind::circular ? 0 : 1))
        throw UsageError("--k must be >= " + std::string(kind == SuccessionKind::circular ? "0" : "1") + " for --stat " + o.stat);
    const CountDistribution dist = distribution(o.colors, o.n, o.k, kind, o.jobs);
    for (std::size_t m = 0; m < dist.counts.size(); ++m) out << (m ? " " : "") << to_decimal(dist.counts[m]);
    out << '\n';
    return ok;
}

inline std::vector<int> parse_positions(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(' ');
        if (first == std::string::npos) continue;
        const auto last = token.find_last_not_of(' ');
        int v = 0;
        const char* b = token.data() + first;
        const char* e = token.data() + last + 1;
        auto [ptr, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || ptr != e) throw UsageError("--positions expects comma-separated integers");
        out.push_back(v);
    }
    return out;
}

inline std::string format_positions(const std::vector<int>& positions) {
    std::string out;
    for (std::size_t i = 0; i < positions.size(); ++i) out += (i ? "," : "") + std::to_string(positions[i]);
    return out;
}

template <class T>
T need(const std::optional<T>& v, const char* flag, const std::string& map) {
    if (!v) throw UsageError(std::string(flag) + " is required by --name " + map);
    return *v;
}

inline bool is_cycle_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string::npos && text[first] == '(';
}

inline int run_bijection(const BijectionOptions& o, std::ostream& out) {
    if (o.colors < 1) throw UsageError("need --colors >= 1");
    const bool cycles_in = is_cycle_text(o.input);
    const bool cycles_out = o.output == "cycles" || (o.output == "same" && cycles_in);
    const auto read = [&](const std::string& text) {
        try {
            return parse_permutation(text, o.colors);
        } catch (const ParseError& e) {
            throw UsageError("cannot parse '" + text + "' at offset " + std::to_string(e.position()) + ": " + e.what());
        }
    };
    const auto show = [&](const ColoredPermutation& p) { return cycles_out ? format_cycles(p) : format_one_line(p); };
    const ColoredPermutation p = read(o.input);
    const std::string& name = o.name;

    if (name == "delta" || name == "d") {
        const bool right = (name == "delta") != o.inverse;
        out << show(right ? rotate_right(p) : rotate_left(p)) << '\n';
    } else if (name == "foata") {
        for (int i = 1; i <= p.size(); ++i)
            if (p.at(i).color != 0) throw Error(ErrorKind::domain_error, "foata acts on uncolored permutations");
        const std::vector<int> word = o.inverse ? foata_inverse(p.one_line()) : foata(p.one_line());
        out << show(ColoredPermutation(o.colors, word, std::vector<int>(word.size(), 0))) << '\n';
    } else if (name == "phi") {
        out << show(o.inverse ? linear_to_circular(p) : circular_to_linear(p)) << '\n';
    } else if (name == "rho") {
        const int m = need(o.m, "--m", name), k = need(o.k, "--k", name);
        out << show(o.inverse ? restore_top_succession(p, m, k) : drop_top_succession(p, m, k)) << '\n';
    } else if (name == "theta") {
        const int k = need(o.k, "--k", name);
        if (o.inverse) {
            const int n = need(o.n, "--n", name);
            out << show(restore_successions({parse_positions(o.positions), p}, n, k)) << '\n';
        } else {
            const DecompositionPair pair = strip_successions(p, k);
            out << "positions=" << format_positions(pair.positions) << " perm=" << show(pair.reduced) << '\n';
        }
    } else if (name == "isolated") {
        const int m = need(o.m, "--m", name);
        out << show(o.inverse ? increasing_to_isolated(p, m) : isolated_to_increasing(p, m)) << '\n';
    } else if (name == "classrep") {
        if (o.inverse) throw UsageError("classrep has no inverse");
        out << show(canonical_representative(p, need(o.m, "--m", name))) << '\n';
    } else if (name == "action") {
        if (o.tau.empty()) throw UsageError("--tau is required by --name action");
        const ColoredPermutation tau = read(o.tau);
        out << show(act_on_prefix(o.inverse ? inverse(tau) : tau, p)) << '\n';
    } else if (name == "vartheta") {
        const int m = need(o.m, "--m", name);
        if (o.inverse) {
            const MarkedPermutation x{need(o.eps, "--eps", name), need(o.alpha, "--alpha", name), p};
            out << show(lower_isolated(x, m)) << '\n';
        } else {
            const MarkedPermutation x = raise_isolated(p, need(o.n, "--n", name), m);
            out << "eps=" << x.color << " alpha=" << x.mark << " perm=" << show(x.perm) << '\n';
        }
    } else if (name == "tau") {
        if (o.inverse) {
            const MarkedPermutation x = reduce_derangement(p);
            out << "eps=" << x.color << " k=" << x.mark << " perm=" << show(x.perm) << '\n';
        } else {
            out << show(extend_derangement({need(o.eps, "--eps", name), need(o.k, "--k", name), p})) << '\n';
        }
    } else if (name == "phi3") {
        const int m = need(o.m, "--m", name);
        if (o.inverse) {
            const MarkedPermutation x = shrink_isolated(p, need(o.n, "--n", name), m);
            out << "eps=" << x.color << " alpha=" << x.mark << " perm=" << show(x.perm) << '\n';
        } else {
            out << show(grow_isolated({need(o.eps, "--eps", name), need(o.alpha, "--alpha", name), p}, m)) << '\n';
        }
    }
    return ok;
}

inline nlohmann::ordered_json to_json(const Fields& fields) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [key, value] : fields)
        std::visit([&j, &key](const auto& v) { j[key] = v; }, value);
    return j;
}

inline nlohmann::ordered_json to_json(const VerifyReport& report) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json entry;
        entry["check"] = r.check;
        entry["ell"] = r.ell;
        entry["n"] = r.n;
        entry["params"] = to_json(r.params);
        entry["status"] = r.passed ? "pass" : "fail";
        if (r.counterexample) entry["counterexample"] = to_json(*r.counterexample);
        list.push_back(std::move(entry));
    }
    return list;
}

inline int run_verify(const VerifyOptions& o, std::ostream& out) {
    if (o.colors_max < 1 || o.n_max < 0 || o.jobs < 1)
        throw UsageError("need --colors-max >= 1, --n-max >= 0 and --jobs >= 1");
    if (o.suite == "rec" && o.n_max < 2) throw UsageError("--suite rec needs --n-max >= 2");
    const VerifyReport report = verify_suite(o.suite, o.colors_max, o.n_max, o.jobs);
    out << to_json(report).dump(2) << '\n';
    return report.passed() ? ok : verification_failed;
}

}  // namespace detail

/// Parses `args` (without the program name) and runs the chosen subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Colored permutations, Euler difference tables and their bijections", "wreath_euler"};
    app.require_subcommand(1);

    TableOptions table;
    CLI::App* table_cmd = app.add_subcommand("table", "print the g- or d-table");
    table_cmd->add_option("--flavor", table.flavor, "g or d")->check(CLI::IsMember({"g", "d"}));
    table_cmd->add_option("--colors", table.colors, "number of colors ell")->required();
    table_cmd->add_option("--max-n", table.max_n, "last row")->required();
    table_cmd->add_option("--format", table.format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));

    CountOptions count;
    CLI::App* count_cmd = app.add_subcommand("count", "distribution of a succession statistic over G(ell, n)");
    count_cmd->add_option("--colors", count.colors)->required();
    count_cmd->add_option("--n", count.n)->required();
    count_cmd->add_option("--stat", count.stat, "circ, lin or skew")->check(CLI::IsMember({"circ", "lin", "skew"}));
    count_cmd->add_option("--k", count.k)->required();
    count_cmd->add_option("--jobs", count.jobs);

    BijectionOptions bij;
    CLI::App* bij_cmd = app.add_subcommand("bijection", "apply one of the bijections to a permutation");
    bij_cmd
        ->add_option("--name", bij.name)
        ->required()
        ->check(CLI::IsMember(
            {"delta", "d", "foata", "phi", "rho", "theta", "isolated", "classrep", "action", "vartheta", "tau", "phi3"}));
    bij_cmd->add_option("--colors", bij.colors);
    bij_cmd->add_option("--n", bij.n);
    bij_cmd->add_option("--m", bij.m);
    bij_cmd->add_option("--k", bij.k);
    bij_cmd->add_option("--eps,--rho", bij.eps, "color exponent of the tuple");
    bij_cmd->add_option("--alpha", bij.alpha);
    bij_cmd->add_option("--positions", bij.positions, "comma-separated positions (theta --inverse)");
    bij_cmd->add_option("--tau", bij.tau, "acting element (action)");
    bij_cmd->add_option("--input", bij.input)->required();
    bij_cmd->add_option("--output", bij.output, "same, one-line or cycles")
        ->check(CLI::IsMember({"same", "one-line", "cycles"}));
    bij_cmd->add_flag("--inverse", bij.inverse);

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "brute-force verification suites, JSON report");
    std::vector<std::string> suites(verify_suites.begin(), verify_suites.end());
    verify_cmd->add_option("--suite", verify.suite)->check(CLI::IsMember(suites));
    verify_cmd->add_option("--colors-max", verify.colors_max);
    verify_cmd->add_option("--n-max", verify.n_max);
    verify_cmd->add_option("--jobs", verify.jobs);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return usage;
    }

    try {
        if (*table_cmd) return detail::run_table(table, out);
        if (*count_cmd) return detail::run_count(count, out);
        if (*verify_cmd) return detail::run_verify(verify, out);
        try {
            return detail::run_bijection(bij, out);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::too_large) throw;
            err << "domain error (" << to_string(e.kind()) << "): " << e.what() << '\n';
            return domain;
        }
    } catch (const detail::UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const Error& e) {
        err << to_string(e.kind()) << ": " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::too_large: return budget;
            case ErrorKind::invalid_parameter:
            case ErrorKind::invalid_k: return usage;
            default: return domain;
        }
    }
    return ok;
}

}  // namespace wreath::cli

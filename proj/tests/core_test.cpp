#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace wreath;
using wreath::testing::all_elements;
using wreath::testing::P;

namespace {

// pi in G(4,11): one-line 3 5^2 1^2 9 6^1 2 7^1 4^1 11^3 8^1 10^1
const char* kExampleWord = "3 5^2 1^2 9 6^1 2 7^1 4^1 11^3 8^1 10^1";

ColoredSymbol sym(int v, int c = 0) { return {v, c}; }

}  // namespace

TEST(ColoredSymbol, OrderPutsHigherColorsFirst) {
    EXPECT_LT(sym(9, 2), sym(1, 1));
    EXPECT_LT(sym(1, 1), sym(2, 1));
    EXPECT_LT(sym(5, 1), sym(1, 0));
    EXPECT_FALSE(sym(3) < sym(3));
}

TEST(ColoredSymbol, OrderIsStrictTotal) {
    std::vector<ColoredSymbol> all;
    for (int c = 0; c < 3; ++c)
        for (int v = 1; v <= 4; ++v) all.push_back({v, c});
    for (auto a : all)
        for (auto b : all) {
            const int relations = (a < b) + (b < a) + (a == b);
            EXPECT_EQ(relations, 1);
            for (auto c : all)
                if (a < b && b < c) EXPECT_LT(a, c);
        }
}

TEST(ColoredSymbol, ShiftKeepsColor) {
    EXPECT_EQ(shift(sym(4, 2), 1, 11), sym(5, 2));
    EXPECT_EQ(shift(sym(7, 1), 0, 9), sym(7, 1));
    EXPECT_EQ(shift(sym(3, 1), -2, 5), sym(1, 1));
    try {
        shift(sym(5), 1, 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::shift_out_of_range);
    }
}

TEST(ColoredPermutation, ExampleTwoLineForm) {
    const auto p = parse_one_line(kExampleWord, 4);
    EXPECT_EQ(p.size(), 11);
    EXPECT_EQ(apply(p, sym(2)), sym(5, 2));
    EXPECT_EQ(apply(p, sym(3)), sym(1, 2));
    EXPECT_EQ(apply(p, sym(5)), sym(6, 1));
    // colors by value
    const std::vector<int> expected{2, 0, 0, 1, 2, 1, 1, 1, 0, 1, 3};
    EXPECT_EQ(std::vector<int>(p.color_by_value().begin(), p.color_by_value().end()), expected);
}

TEST(ColoredPermutation, SignsAreIndexedByValue) {
    const auto p = parse_one_line("4^2 3^1 1 2^1", 3);
    EXPECT_EQ(p.color_of(1), 0);
    EXPECT_EQ(p.color_of(2), 1);
    EXPECT_EQ(p.color_of(3), 1);
    EXPECT_EQ(p.color_of(4), 2);
}

TEST(ColoredPermutation, ApplyIsEquivariant) {
    const auto p = parse_one_line(kExampleWord, 4);
    for (int v = 1; v <= 11; ++v)
        for (int j = 0; j < 4; ++j) {
            const ColoredSymbol image = apply(p, sym(v));
            EXPECT_EQ(apply(p, sym(v, j)), sym(image.value, (image.color + j) % 4));
        }
}

TEST(ColoredPermutation, IdentityAndEmpty) {
    EXPECT_EQ(format_one_line(identity(2, 3)), "1 2 3");
    EXPECT_EQ(format_one_line(identity(2, 2)), "1 2");
    const auto empty = identity(1, 0);
    EXPECT_EQ(empty.size(), 0);
    EXPECT_EQ(parse_one_line("", 1), empty);
    EXPECT_THROW(identity(0, 3), Error);
}

TEST(ColoredPermutation, ComposeMatchesDisplayedRule) {
    // (eps, sigma)(eps', sigma') = ((eps_i eps'_{sigma^{-1}(i)})_i, sigma o sigma')
    for (int ell = 1; ell <= 3; ++ell) {
        const auto group = all_elements(ell, 3);
        for (const auto& a : group)
            for (const auto& b : group) {
                const auto c = compose(a, b);
                const auto a_inv = a.positions();
                for (int i = 1; i <= 3; ++i) {
                    EXPECT_EQ(c.value_at(i), a.value_at(b.value_at(i)));
                    EXPECT_EQ(c.color_of(i), (a.color_of(i) + b.color_of(a_inv[static_cast<std::size_t>(i)])) % ell);
                }
            }
    }
}

TEST(ColoredPermutation, ComposeSmallExample) {
    const auto a = P("2^1 1", 2);
    const auto b = P("1^1 2", 2);
    const auto c = compose(a, b);
    for (int v = 1; v <= 2; ++v)
        for (int j = 0; j < 2; ++j) EXPECT_EQ(apply(c, sym(v, j)), apply(a, apply(b, sym(v, j))));
    EXPECT_EQ(format_one_line(c), "2 1");
}

TEST(ColoredPermutation, GroupAxiomsExhaustive) {
    for (int ell = 1; ell <= 3; ++ell)
        for (int n = 0; n <= 3; ++n) {
            const auto group = all_elements(ell, n);
            const auto e = identity(ell, n);
            for (const auto& a : group) {
                EXPECT_EQ(compose(e, a), a);
                EXPECT_EQ(compose(a, e), a);
                EXPECT_EQ(compose(a, inverse(a)), e);
                EXPECT_EQ(compose(inverse(a), a), e);
                EXPECT_EQ(inverse(inverse(a)), a);
            }
            if (n > 2 && ell > 2) continue;  // keep the cubic loop small
            for (const auto& a : group)
                for (const auto& b : group) {
                    const auto ab = compose(a, b);
                    for (int v = 1; v <= n; ++v)
                        for (int j = 0; j < ell; ++j) EXPECT_EQ(apply(ab, sym(v, j)), apply(a, apply(b, sym(v, j))));
                    for (const auto& c : group) EXPECT_EQ(compose(ab, c), compose(a, compose(b, c)));
                }
        }
}

TEST(ColoredPermutation, ClosureHasGroupOrder) {
    // generate G(2,3) from the transpositions and one sign change
    const std::vector<ColoredPermutation> gens{P("2 1 3", 2), P("1 3 2", 2), P("1^1 2 3", 2)};
    std::set<ColoredPermutation> seen{identity(2, 3)};
    std::vector<ColoredPermutation> frontier{identity(2, 3)};
    while (!frontier.empty()) {
        std::vector<ColoredPermutation> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = compose(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    EXPECT_EQ(seen.size(), 48u);
}

TEST(ColoredPermutation, MismatchedElements) {
    try {
        compose(identity(2, 3), identity(3, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::incompatible_elements);
    }
    EXPECT_THROW(compose(identity(2, 3), identity(2, 4)), Error);
    try {
        apply(identity(2, 3), sym(4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_symbol);
    }
}

TEST(Rotation, DeltaAndD) {
    EXPECT_EQ(format_one_line(rotate_right(P("1 2 3", 1))), "3 1 2");
    EXPECT_EQ(format_one_line(rotate_left(P("1 2 3", 1))), "2 3 1");
    try {
        rotate_right(identity(2, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::empty_permutation);
    }
    for (const auto& p : all_elements(2, 4)) {
        EXPECT_EQ(rotate_left(rotate_right(p)), p);
        EXPECT_EQ(rotate_right(rotate_left(p)), p);
    }
    for (const auto& p : all_elements(3, 3)) {
        auto q = p;
        for (int i = 0; i < 3; ++i) q = delta(q);
        EXPECT_EQ(q, p);
    }
}

TEST(Cycles, ExampleFactorization) {
    const auto p = parse_one_line(kExampleWord, 4);
    const auto expected = P("(1^2 3)(2 5^2 6^1)(4^1 9 11^3 10^1 8^1)(7^1)", 4);
    EXPECT_EQ(p, expected);
    // canonical: maxima last, decreasing maxima
    EXPECT_EQ(format_cycles(p), "(10^1 8^1 4^1 9 11^3)(7^1)(2 5^2 6^1)(1^2 3)");
}

TEST(Cycles, IdentityIsSingletons) {
    const auto cf = cycle_factorization(identity(3, 4));
    ASSERT_EQ(cf.cycles.size(), 4u);
    for (const auto& c : cf.cycles) EXPECT_EQ(c.size(), 1u);
    EXPECT_EQ(format_cycles(identity(3, 4)), "(4)(3)(2)(1)");
}

TEST(Cycles, RoundTripExhaustive) {
    for (int ell = 1; ell <= 3; ++ell)
        for (int n = 0; n <= 4; ++n)
            for (const auto& p : all_elements(ell, n)) {
                EXPECT_EQ(from_cycles(cycle_factorization(p), ell, n), p);
                EXPECT_EQ(parse_cycles(format_cycles(p), ell, n), p);
                EXPECT_EQ(parse_one_line(format_one_line(p), ell, n), p);
            }
}

TEST(Cycles, InvalidFactorizations) {
    const auto expect_invalid = [](const char* text, int n) {
        try {
            from_cycles(parse_cycle_factorization(text, 3), 3, n);
            FAIL() << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::invalid_cycles) << text;
        }
    };
    expect_invalid("(1 2)(2 3)", 3);
    expect_invalid("(1 2)", 3);
    expect_invalid("(1 4)(2 3)", 3);
}

TEST(Notation, ParseErrorsCarryOffsets) {
    const auto offset_of = [](const char* text, int ell) -> long {
        try {
            parse_permutation(text, ell);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    EXPECT_EQ(offset_of("2 2", 2), 2);
    EXPECT_EQ(offset_of("1 2^2", 2), 4);
    EXPECT_EQ(offset_of("1 2^0", 3), 4);
    EXPECT_EQ(offset_of("1^1 2", 1), 1);
    EXPECT_EQ(offset_of("1 x", 2), 2);
    EXPECT_EQ(offset_of("3 1", 2), 0);
    EXPECT_GE(offset_of("(1 2", 2), 0);
    EXPECT_GE(offset_of("()", 2), 0);
    EXPECT_GE(offset_of("(1 2)(1)", 2), 0);
}

TEST(Notation, CommasAndSpacing) {
    EXPECT_EQ(P("(3, 1, 4, 6, 9)(5, 7, 8)(2)", 1), P("(3 1 4 6 9)(5 7 8)(2)", 1));
    EXPECT_EQ(P("  2 1 ", 1), P("2 1", 1));
    EXPECT_EQ(parse_cycles("(1)(2)", 2, 2), identity(2, 2));
    EXPECT_THROW(parse_one_line("1 2", 2, 3), ParseError);
}

#include "test_util.hpp"

#include <numbers>

#include "twisted_lab/reference.hpp"

TEST(Group, SizesFromOrders) {
    EXPECT_EQ(tl::make_group({2, 2}).size(), 4u);
    EXPECT_EQ(tl::make_group({}).size(), 1u);
    EXPECT_EQ(tl::make_group(std::vector<std::size_t>(20, 2)).size(), std::size_t{1} << 20);
    EXPECT_EQ(tl::make_group({4, 9, 5}).size(), 180u);
    EXPECT_TRUE(tl::make_group({}).is_two_group());
    EXPECT_FALSE(tl::make_group({2, 3}).is_two_group());
}

TEST(Group, RejectsZeroOrderAndOverflow) {
    EXPECT_THROW(tl::make_group({2, 0}), std::invalid_argument);
    EXPECT_THROW(tl::make_group(std::vector<std::size_t>(70, 2)), std::overflow_error);
}

TEST(Group, MixedRadixLittleEndian) {
    const auto g = tl::make_group({3, 4, 5});
    const std::vector<std::size_t> x{2, 1, 3};
    EXPECT_EQ(g.index(x), 2u + 1u * 3u + 3u * 12u);
    EXPECT_EQ(g.coordinates(g.index(x)), x);
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_EQ(g.index(g.coordinates(i)), i);
    }
    EXPECT_THROW(g.index(std::vector<std::size_t>{3, 0, 0}), std::invalid_argument);
    EXPECT_THROW(g.index(std::vector<std::size_t>{0, 0}), std::invalid_argument);
    EXPECT_THROW(g.coordinates(60), std::out_of_range);
}

TEST(Group, Arithmetic) {
    const auto g = tl::make_group({4, 6});
    for (std::size_t x = 0; x < g.size(); ++x) {
        EXPECT_EQ(g.add(x, g.negate(x)), 0u);
        EXPECT_EQ(g.multiple(x, 0), 0u);
        EXPECT_EQ(g.multiple(x, -1), g.negate(x));
        EXPECT_EQ(g.multiple(x, 2), g.add(x, x));
        EXPECT_EQ(g.multiple(x, static_cast<long long>(g.order_of(x))), 0u);
        for (std::size_t k = 1; k < g.order_of(x); ++k) {
            EXPECT_NE(g.multiple(x, static_cast<long long>(k)), 0u);
        }
    }
    const auto d = tl::FiniteAbelianGroup::cantor(4);
    EXPECT_EQ(d.add(0b1010, 0b0110), 0b1100u);
    EXPECT_EQ(d.negate(0b1011), 0b1011u);
    EXPECT_EQ(d.order_of(0), 1u);
    EXPECT_EQ(d.order_of(5), 2u);
}

TEST(Group, CharacterMatchesOracle) {
    for (const auto& g : property_groups()) {
        for (std::size_t a = 0; a < g.size(); a += 3) {
            for (std::size_t x = 0; x < g.size(); x += 2) {
                EXPECT_LE(std::abs(g.character(a, x) - tl::reference::character(g, a, x)), 1e-14);
            }
        }
    }
    // gamma_a(x) = exp(2 pi i (a1 x1 / 3 + a2 x2 / 4)) with a = (2, 3), x = (1, 2).
    const auto g = tl::make_group({3, 4});
    const auto expected = std::polar(1.0, 2.0 * std::numbers::pi * (2.0 / 3.0 + 6.0 / 4.0));
    EXPECT_LE(std::abs(g.character(g.index(std::vector<std::size_t>{2, 3}), g.index(std::vector<std::size_t>{1, 2})) - expected),
              1e-14);
}

TEST(Group, CharacterIsHomomorphism) {
    const auto g = tl::make_group({5, 6});
    for (std::size_t a = 0; a < g.size(); a += 7) {
        for (std::size_t x = 0; x < g.size(); x += 5) {
            for (std::size_t y = 0; y < g.size(); y += 11) {
                EXPECT_LE(std::abs(g.character(a, g.add(x, y)) - g.character(a, x) * g.character(a, y)), 1e-13);
            }
        }
    }
}

TEST(Group, WalshAndRademacher) {
    const auto g = tl::FiniteAbelianGroup::cantor(3);
    // r_n(t) = t(n): bit n-1 set means t(n) = -1.
    const auto r2 = tl::rademacher(g, 2);
    for (std::size_t x = 0; x < g.size(); ++x) {
        EXPECT_EQ(r2[x].real(), (x >> 1) & 1 ? -1.0 : 1.0);
    }
    EXPECT_EQ(tl::max_abs_diff(tl::walsh(g, 0b111), tl::rademacher(g, 1) * r2 * tl::rademacher(g, 3)), 0.0);
    EXPECT_EQ(tl::max_abs_diff(tl::walsh(g, 0), tl::constant_one(g)), 0.0);
    EXPECT_THROW(tl::rademacher(g, 0), std::invalid_argument);
    EXPECT_THROW(tl::rademacher(g, 4), std::invalid_argument);
    EXPECT_THROW(tl::walsh(tl::FiniteAbelianGroup::cyclic(4), 1), std::invalid_argument);
}

TEST(Function, ArithmeticAndMismatch) {
    const auto g = tl::make_group({3});
    tl::GroupFunction f(g, {1.0, 2.0, 3.0});
    const tl::GroupFunction h(g, {0.5, 0.0, -1.0});
    EXPECT_EQ((f + h)[2], tl::complex(2.0, 0.0));
    EXPECT_EQ((f - h)[0], tl::complex(0.5, 0.0));
    EXPECT_EQ((f * h)[2], tl::complex(-3.0, 0.0));
    EXPECT_EQ((tl::complex(0.0, 1.0) * f)[1], tl::complex(0.0, 2.0));
    EXPECT_EQ((-f)[0], tl::complex(-1.0, 0.0));
    const tl::GroupFunction other(tl::make_group({2}));
    EXPECT_THROW(f += other, std::invalid_argument);
    EXPECT_THROW((void)(f * other), std::invalid_argument);
    EXPECT_THROW(tl::GroupFunction(g, {1.0}), std::invalid_argument);
    EXPECT_THROW(tl::indicator_at<tl::group_side>(g, 3), std::out_of_range);
}

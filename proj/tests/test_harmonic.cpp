#include "test_util.hpp"

#include "twisted_lab/reference.hpp"

namespace {

double relative(const tl::SpectrumFunction& a, const tl::SpectrumFunction& b) {
    double s = 0.0;
    for (auto v : b.values()) {
        s = std::max(s, std::abs(v));
    }
    return tl::max_abs_diff(a, b) / s;
}

double relative(const tl::GroupFunction& a, const tl::GroupFunction& b) {
    double s = 0.0;
    for (auto v : b.values()) {
        s = std::max(s, std::abs(v));
    }
    return tl::max_abs_diff(a, b) / s;
}

}  // namespace

class TransformOracle : public ::testing::TestWithParam<std::vector<std::size_t>> {};

TEST_P(TransformOracle, FastMatchesNaive) {
    const auto g = tl::make_group(GetParam());
    const tl::reference::CharacterTable table(g);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto f = random_function(g, seed);
        const auto c = random_spectrum(g, seed + 100);
        EXPECT_LE(relative(tl::fourier_forward(f), table.dft(f)), 1e-10);
        EXPECT_LE(relative(tl::fourier_inverse(c), table.inverse_dft(c)), 1e-10);
        EXPECT_LE(relative(tl::fourier_inverse(tl::fourier_forward(f)), f), 1e-10);
    }
}

// 2-groups, prime powers, composite and mixed orders, primes on both sides of
// the direct-radix cutoff (61 / 67 / 127), and the trivial group.
INSTANTIATE_TEST_SUITE_P(Groups, TransformOracle,
                         ::testing::Values(std::vector<std::size_t>{}, std::vector<std::size_t>{1},
                                           std::vector<std::size_t>(10, 2), std::vector<std::size_t>{729},
                                           std::vector<std::size_t>{4, 9, 5}, std::vector<std::size_t>{61},
                                           std::vector<std::size_t>{67}, std::vector<std::size_t>{127, 2},
                                           std::vector<std::size_t>{2, 3, 1, 7}, std::vector<std::size_t>{360},
                                           std::vector<std::size_t>{1009}));

TEST(Transform, ReferenceTableAgreesWithPlainOracle) {
    const auto g = tl::make_group({3, 4});
    const auto f = random_function(g, 3);
    EXPECT_LE(tl::max_abs_diff(tl::reference::CharacterTable(g).dft(f), tl::reference::dft(f)), 1e-15);
    const auto c = random_spectrum(g, 4);
    EXPECT_LE(tl::max_abs_diff(tl::reference::CharacterTable(g).inverse_dft(c), tl::reference::inverse_dft(c)), 1e-14);
}

TEST(Transform, Examples) {
    const auto d1 = tl::FiniteAbelianGroup::cantor(1);
    EXPECT_FUNC_NEAR(tl::fourier_forward(tl::rademacher(d1, 1)), tl::indicator_at<tl::spectrum_side>(d1, 1), 1e-15);
    const auto g = tl::make_group({3, 5});
    EXPECT_FUNC_NEAR(tl::fourier_forward(tl::constant_one(g)), tl::indicator_at<tl::spectrum_side>(g, 0), 1e-15);
    const auto d2 = tl::FiniteAbelianGroup::cantor(2);
    const auto point = tl::fourier_forward(tl::indicator_at<tl::group_side>(d2, 0));
    for (std::size_t a = 0; a < 4; ++a) {
        EXPECT_DOUBLE_EQ(point[a].real(), 0.25);
        EXPECT_EQ(point[a].imag(), 0.0);
    }
    EXPECT_FUNC_NEAR(tl::fourier_inverse(tl::indicator_at<tl::spectrum_side>(g, 0)), tl::constant_one(g), 1e-15);
    EXPECT_FUNC_NEAR(tl::fourier_inverse(tl::indicator_at<tl::spectrum_side>(d2, 1)), tl::rademacher(d2, 1), 1e-15);
}

TEST(Transform, CharactersAreSpectralIndicators) {
    const auto g = tl::make_group({4, 3, 5});
    for (std::size_t a = 0; a < g.size(); a += 13) {
        EXPECT_FUNC_NEAR(tl::fourier_forward(tl::character_function(g, a)), tl::indicator_at<tl::spectrum_side>(g, a), 1e-14);
    }
}

TEST(Transform, Parseval) {
    for (const auto& g : property_groups()) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto f = random_function(g, seed);
            const double n2 = tl::norm(f, 2.0);
            EXPECT_LE(std::abs(n2 - tl::spectral_norm(tl::fourier_forward(f), 2.0)), 1e-10 * n2);
        }
    }
}

TEST(Transform, WalshHadamardIsInvolutionUpToScale) {
    std::vector<tl::complex> v(16);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = {static_cast<double>(i), -0.5 * static_cast<double>(i * i)};
    }
    auto w = v;
    tl::fft::walsh_hadamard(w);
    tl::fft::walsh_hadamard(w);
    for (std::size_t i = 0; i < v.size(); ++i) {
        EXPECT_LE(std::abs(w[i] / 16.0 - v[i]), 1e-12);
    }
}

TEST(Convolution, MatchesNaiveAndTheorem) {
    for (const auto& g : property_groups()) {
        const auto f = random_function(g, 1);
        const auto h = random_function(g, 2);
        const auto fast = tl::convolve(f, h);
        const auto naive = tl::reference::convolve(f, h);
        EXPECT_LE(relative(fast, naive), 1e-10);
        const double scale = tl::norm(f, 2.0) * tl::norm(h, 2.0);
        EXPECT_LE(tl::max_abs_diff(tl::fourier_forward(naive), tl::fourier_forward(f) * tl::fourier_forward(h)), 1e-10 * scale);
        EXPECT_LE(tl::norm(fast, 1.0), tl::norm(f, 1.0) * tl::norm(h, 1.0) + 1e-10);
    }
}

TEST(Convolution, Examples) {
    const auto d2 = tl::FiniteAbelianGroup::cantor(2);
    const auto r1 = tl::rademacher(d2, 1);
    EXPECT_FUNC_NEAR(tl::convolve(r1, r1), r1, 1e-15);
    EXPECT_LE(tl::norm(tl::convolve(r1, tl::rademacher(d2, 2)), tl::infinity), 1e-15);
    const auto g = tl::make_group({7, 2});
    const auto chi = tl::character_function(g, 9);
    EXPECT_FUNC_NEAR(tl::convolve(chi, chi), chi, 1e-14);
    const auto f = random_function(g, 5);
    EXPECT_FUNC_NEAR(tl::convolve(f, tl::constant_one(g)), tl::integral(f) * tl::constant_one(g), 1e-14);
    EXPECT_THROW(tl::convolve(f, tl::constant_one(d2)), std::invalid_argument);
}

TEST(Translation, SpectrumIdentity) {
    for (const auto& g : property_groups()) {
        const auto f = random_function(g, 7);
        const auto fhat = tl::fourier_forward(f);
        for (std::size_t y = 0; y < g.size(); y += 3) {
            const auto got = tl::fourier_forward(tl::translate(f, y));
            for (std::size_t a = 0; a < g.size(); ++a) {
                EXPECT_LE(std::abs(got[a] - std::conj(g.character(a, y)) * fhat[a]), 1e-12);
            }
        }
    }
}

TEST(Translation, GroupActionAndExamples) {
    const auto g = tl::make_group({3, 4});
    const auto f = random_function(g, 8);
    EXPECT_EQ(tl::max_abs_diff(tl::translate(f, 0), f), 0.0);
    for (std::size_t y = 0; y < g.size(); y += 5) {
        for (std::size_t z = 0; z < g.size(); z += 7) {
            EXPECT_EQ(tl::max_abs_diff(tl::translate(tl::translate(f, y), z), tl::translate(f, g.add(y, z))), 0.0);
        }
    }
    // On Delta_2, y = (-1, 1) has index 1 and (r_1)_y = -r_1.
    const auto d2 = tl::FiniteAbelianGroup::cantor(2);
    EXPECT_EQ(tl::max_abs_diff(tl::translate(tl::rademacher(d2, 1), std::vector<std::size_t>{1, 0}), -tl::rademacher(d2, 1)),
              0.0);
    EXPECT_THROW(tl::translate(f, 12), std::out_of_range);
}

TEST(Norm, Examples) {
    const auto d2 = tl::FiniteAbelianGroup::cantor(2);
    for (double p : {1.0, 1.5, 2.0, 3.0, 10.0, tl::infinity}) {
        EXPECT_NEAR(tl::norm(tl::constant_one(d2), p), 1.0, 1e-15);
        EXPECT_NEAR(tl::norm(tl::rademacher(d2, 1), p), 1.0, 1e-15);
    }
    EXPECT_DOUBLE_EQ(tl::norm(tl::rademacher(d2, 1) + tl::rademacher(d2, 2), 1.0), 1.0);
    EXPECT_EQ(tl::norm(tl::GroupFunction(d2), 2.0), 0.0);
    EXPECT_THROW((void)tl::norm(tl::constant_one(d2), 0.5), std::domain_error);
    EXPECT_THROW((void)tl::norm(tl::constant_one(d2), std::nan("")), std::domain_error);
}

TEST(Norm, MonotoneInExponentAndSpectralCounting) {
    const auto g = tl::make_group({6, 5});
    const auto f = random_function(g, 9);
    double prev = 0.0;
    for (double p : {1.0, 1.3, 2.0, 4.0, 16.0, tl::infinity}) {
        const double n = tl::norm(f, p);
        EXPECT_GE(n, prev - 1e-14);
        prev = n;
    }
    const auto c = tl::indicator_at<tl::spectrum_side>(g, 3) + tl::indicator_at<tl::spectrum_side>(g, 4);
    EXPECT_DOUBLE_EQ(tl::spectral_norm(c, 1.0), 2.0);
    EXPECT_DOUBLE_EQ(tl::spectral_norm(c, 2.0), std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(tl::spectral_norm(c, tl::infinity), 1.0);
}

TEST(Norm, LargeExponentDoesNotOverflow) {
    const auto g = tl::FiniteAbelianGroup::cyclic(4);
    const tl::GroupFunction f(g, {1e200, 0.0, 0.0, 0.0});
    EXPECT_NEAR(tl::norm(f, 50.0) / 1e200, std::pow(0.25, 1.0 / 50.0), 1e-12);
}

TEST(Norm, CompensatedSumOnLargeConstantFunction) {
    const auto g = tl::FiniteAbelianGroup::cantor(20);
    const auto f = std::sqrt(1.3) * tl::constant_one(g);
    EXPECT_NEAR(tl::norm(f, 2.0), std::sqrt(1.3), 1e-15);
    EXPECT_NEAR(tl::integral(f).real(), std::sqrt(1.3), 1e-15);
}

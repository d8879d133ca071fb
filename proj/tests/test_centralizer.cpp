#include "test_util.hpp"

#include <numbers>
#include <numeric>

namespace {

const double half_log2 = std::numbers::ln2 / 2.0;

tl::CentralizerConfig config_for(const tl::LipschitzProfile& phi) { return {phi, 2.0, 2.0, 2.0}; }

}  // namespace

TEST(Profile, ParseAndValues) {
    EXPECT_EQ(tl::LipschitzProfile::parse("id").name(), "id");
    EXPECT_EQ(tl::LipschitzProfile::parse("identity").name(), "id");
    EXPECT_EQ(tl::LipschitzProfile::parse("log1p").name(), "log1p");
    const auto p = tl::LipschitzProfile::parse("pow:0.5");
    EXPECT_EQ(p.name(), "pow:0.5");
    EXPECT_DOUBLE_EQ(p.lipschitz_constant(), 0.5);
    EXPECT_NEAR(p(3.0), 1.0, 1e-15);
    EXPECT_NEAR(p(-3.0), -1.0, 1e-15);
    EXPECT_EQ(tl::LipschitzProfile::parse("zero")(5.0), 0.0);
    EXPECT_NEAR(tl::LipschitzProfile::log1p()(std::numbers::e - 1.0), 1.0, 1e-15);
    EXPECT_THROW(tl::LipschitzProfile::parse("pow:"), std::invalid_argument);
    EXPECT_THROW(tl::LipschitzProfile::parse("pow:1.5"), std::invalid_argument);
    EXPECT_THROW(tl::LipschitzProfile::parse("pow:0"), std::invalid_argument);
    EXPECT_THROW(tl::LipschitzProfile::parse("sqrt"), std::invalid_argument);
}

TEST(Profile, TableInterpolatesAndChecksConcavity) {
    const auto t = tl::LipschitzProfile::table({{0.0, 0.0}, {1.0, 0.8}, {3.0, 1.5}, {10.0, 2.0}});
    EXPECT_NEAR(t(0.5), 0.4, 1e-15);
    EXPECT_NEAR(t(2.0), 1.15, 1e-15);
    // Outside the knots the outermost slopes continue.
    EXPECT_NEAR(t(-2.0), -1.6, 1e-15);
    EXPECT_NEAR(t(17.0), 2.5, 1e-15);
    EXPECT_NEAR(t.lipschitz_constant(), 0.8, 1e-15);
    EXPECT_TRUE(t.concave_on_half_line());
    EXPECT_FALSE(tl::LipschitzProfile::table({{0.0, 0.0}, {1.0, 0.1}, {2.0, 2.0}}).concave_on_half_line());
    EXPECT_THROW(tl::LipschitzProfile::table({{1.0, 1.0}}), std::invalid_argument);
    EXPECT_THROW(tl::LipschitzProfile::table({{0.0, 0.0}, {1.0, 1.0}, {1.0, 2.0}}), std::invalid_argument);
    EXPECT_THROW(tl::LipschitzProfile::table({}), std::invalid_argument);
}

TEST(Profile, LipschitzConstantBoundsSlopes) {
    for (const auto& phi : {tl::LipschitzProfile::identity(), tl::LipschitzProfile::log1p(), tl::LipschitzProfile::power(0.3)}) {
        EXPECT_EQ(phi(0.0), 0.0);
        for (double s = -20.0; s < 20.0; s += 0.37) {
            for (double h : {1e-3, 0.5, 7.0}) {
                EXPECT_LE(std::abs(phi(s + h) - phi(s)), phi.lipschitz_constant() * h + 1e-12) << phi.name();
            }
        }
    }
}

TEST(KpMap, Examples) {
    const auto g = tl::make_group({2});
    const auto phi = tl::LipschitzProfile::identity();
    EXPECT_EQ(tl::spectral_norm(tl::kp_map(phi, 2.0, tl::indicator_at<tl::spectrum_side>(g, 1)), tl::infinity), 0.0);
    const tl::SpectrumFunction c(g, {tl::complex(1.0, 0.0), tl::complex(0.0, 1.0)});
    EXPECT_FUNC_NEAR(tl::kp_map(phi, 2.0, c), tl::complex(half_log2, 0.0) * c, 1e-15);
    EXPECT_EQ(tl::spectral_norm(tl::kp_map(phi, 2.0, tl::SpectrumFunction(g)), 1.0), 0.0);
}

TEST(KpMap, HomogeneousAndSupportPreserving) {
    const tl::complex lambda(3.0, 4.0);
    for (const auto& g : property_groups()) {
        auto c = random_spectrum(g, 21);
        c[0] = 0.0;
        for (const auto& phi : {tl::LipschitzProfile::identity(), tl::LipschitzProfile::log1p()}) {
            for (double p : {1.0, 2.0, 3.0, tl::infinity}) {
                const auto base = tl::kp_map(phi, p, c);
                EXPECT_LE(tl::max_abs_diff(tl::kp_map(phi, p, lambda * c), lambda * base), 1e-12 * tl::spectral_norm(base, tl::infinity) * 5 + 1e-14);
                EXPECT_EQ(base[0], tl::complex(0.0, 0.0));
            }
        }
    }
}

TEST(KpMap, QuasilinearityWithinBound) {
    for (const auto& phi : {tl::LipschitzProfile::identity(), tl::LipschitzProfile::log1p(), tl::LipschitzProfile::power(0.5)}) {
        for (const auto& g : {tl::FiniteAbelianGroup::cantor(4), tl::make_group({3, 5})}) {
            const auto r = tl::sample_kp_quasilinear(phi, 2.0, g, 300, 5);
            EXPECT_TRUE(r.pass) << r.map << " " << r.max_defect << " > " << r.bound;
            EXPECT_GT(r.max_defect, 0.0);
        }
    }
}

TEST(Mho, Examples) {
    const auto cfg = config_for(tl::LipschitzProfile::identity());
    for (const auto& g : property_groups()) {
        EXPECT_LE(tl::norm(tl::mho(cfg, tl::constant_one(g)), tl::infinity), 1e-12);
        for (std::size_t a = 0; a < g.size(); a += 4) {
            EXPECT_LE(tl::norm(tl::mho(cfg, tl::character_function(g, a)), tl::infinity), 1e-12);
        }
    }
    const auto d1 = tl::FiniteAbelianGroup::cantor(1);
    const auto f = tl::constant_one(d1) + tl::complex(0.0, 1.0) * tl::rademacher(d1, 1);
    EXPECT_FUNC_NEAR(tl::mho(cfg, f), tl::complex(half_log2, 0.0) * f, 1e-15);
}

TEST(Mho, CommutesWithTranslationsAndCharacterMultiplication) {
    const auto cfg = config_for(tl::LipschitzProfile::log1p());
    for (const auto& g : property_groups()) {
        const auto f = random_function(g, 31);
        const auto mf = tl::mho(cfg, f);
        const double scale = std::max(1.0, tl::norm(mf, tl::infinity));
        for (std::size_t y = 0; y < g.size(); y += 5) {
            EXPECT_LE(tl::max_abs_diff(tl::mho(cfg, tl::translate(f, y)), tl::translate(mf, y)), 1e-12 * scale);
            EXPECT_LE(tl::max_abs_diff(tl::mho(cfg, tl::multiply_by_character(f, y)), tl::multiply_by_character(mf, y)),
                      1e-12 * scale);
        }
    }
}

TEST(Mho, SidonExamples) {
    const auto cfg = config_for(tl::LipschitzProfile::identity());
    const auto d2 = tl::FiniteAbelianGroup::cantor(2);
    const auto r1 = tl::rademacher(d2, 1);
    const auto r2 = tl::rademacher(d2, 2);
    const std::vector<std::size_t> one{1};
    const std::vector<std::size_t> two{1, 2};
    EXPECT_LE(tl::norm(tl::mho_sidon(cfg, two, tl::walsh(d2, 3)), tl::infinity), 1e-15);
    EXPECT_LE(tl::norm(tl::mho_sidon(cfg, one, tl::constant_one(d2) + tl::complex(0.0, 1.0) * r1), tl::infinity), 1e-15);
    EXPECT_FUNC_NEAR(tl::mho_sidon(cfg, two, r1 + r2), tl::complex(half_log2, 0.0) * (r1 + r2), 1e-15);
    const std::vector<std::size_t> dup{1, 1};
    EXPECT_THROW(tl::mho_sidon(cfg, dup, r1), std::invalid_argument);
}

TEST(Mho, SidonOnFullDualEqualsMho) {
    const auto cfg = config_for(tl::LipschitzProfile::identity());
    const auto g = tl::make_group({3, 4});
    std::vector<std::size_t> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    const auto f = random_function(g, 2);
    EXPECT_FUNC_NEAR(tl::mho_sidon(cfg, all, f), tl::mho(cfg, f), 1e-12);
}

TEST(PointwiseKp, Examples) {
    const auto phi = tl::LipschitzProfile::identity();
    const auto d2 = tl::FiniteAbelianGroup::cantor(2);
    EXPECT_EQ(tl::norm(tl::pointwise_kp(phi, 2.0, tl::constant_one(d2)), tl::infinity), 0.0);
    EXPECT_EQ(tl::norm(tl::pointwise_kp(phi, 2.0, tl::rademacher(d2, 1)), tl::infinity), 0.0);
    const auto half = tl::subcube_indicator_mask(d2, 1, 0);
    EXPECT_FUNC_NEAR(tl::pointwise_kp(phi, 2.0, half), tl::complex(-half_log2, 0.0) * half, 1e-15);
}

TEST(Config, Validation) {
    EXPECT_NO_THROW((tl::CentralizerConfig{tl::LipschitzProfile::identity(), tl::infinity, 1.0, 2.0}.validate()));
    EXPECT_THROW((tl::CentralizerConfig{tl::LipschitzProfile::identity(), 1.5, 1.0, 2.0}.validate()), std::domain_error);
    EXPECT_THROW((tl::CentralizerConfig{tl::LipschitzProfile::identity(), 2.0, 3.0, 2.0}.validate()), std::domain_error);
    EXPECT_THROW((tl::CentralizerConfig{tl::LipschitzProfile::identity(), 2.0, 2.0, 0.5}.validate()), std::domain_error);
}

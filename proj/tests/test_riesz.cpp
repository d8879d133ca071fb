#include "test_util.hpp"

#include <limits>
#include <numbers>
#include <numeric>

namespace {

const tl::complex I(0.0, 1.0);

}  // namespace

TEST(Riesz, DdaggerSmallExpansions) {
    const auto s1 = tl::RieszSpec::rademacher(1, 1.0);
    const auto f1 = tl::riesz_product(s1);
    const auto c1 = tl::fourier_forward(f1);
    EXPECT_NEAR(std::abs(c1[0] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c1[1] - I), 0.0, 1e-15);
    EXPECT_NEAR(tl::norm(f1, 2.0), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(tl::norm(f1, tl::infinity), std::sqrt(2.0), 1e-15);

    const auto s2 = tl::RieszSpec::rademacher(2, 1.0);
    const auto c2 = tl::riesz_spectrum(s2);
    EXPECT_FUNC_NEAR(c2, tl::fourier_forward(tl::riesz_product(s2)), 1e-15);
    EXPECT_NEAR(std::abs(c2[0] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c2[1] - I / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c2[2] - I / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c2[3] + 0.5), 0.0, 1e-15);
}

TEST(Riesz, DaggerSingleGenerator) {
    const double alpha = 2.0;
    const auto spec = tl::RieszSpec::lacunary_cyclic(1, alpha);
    EXPECT_EQ(spec.group().size(), 9u);
    const auto c = tl::fourier_forward(tl::riesz_product(spec));
    EXPECT_NEAR(std::abs(c[0] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c[1] - I / (2.0 * alpha)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c[8] - I / (2.0 * alpha)), 0.0, 1e-15);
    for (std::size_t a = 2; a < 8; ++a) {
        EXPECT_LE(std::abs(c[a]), 1e-15);
    }
}

TEST(Riesz, SpectrumMatchesTransformOfProduct) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (double alpha : {1.0, 2.0, 3.5}) {
            for (const auto& spec : {tl::RieszSpec::rademacher(n, alpha), tl::RieszSpec::lacunary_cyclic(n, alpha)}) {
                EXPECT_FUNC_NEAR(tl::riesz_spectrum(spec), tl::fourier_forward(tl::riesz_product(spec)), 1e-12);
            }
        }
    }
}

TEST(Riesz, LengthDecompositionExamples) {
    const auto spec = tl::RieszSpec::rademacher(2, 1.0);
    const auto d = tl::length_decompose(tl::riesz_product(spec), spec);
    const auto& g = spec.group();
    ASSERT_EQ(d.parts.size(), 3u);
    EXPECT_FUNC_NEAR(d.parts[0], tl::constant_one(g), 1e-15);
    EXPECT_FUNC_NEAR(d.parts[1], (I / std::sqrt(2.0)) * (tl::rademacher(g, 1) + tl::rademacher(g, 2)), 1e-15);
    EXPECT_FUNC_NEAR(d.parts[2], tl::complex(-0.5, 0.0) * tl::walsh(g, 3), 1e-15);
    EXPECT_NEAR(tl::norm(d.parts[2], 2.0), 0.5, 1e-15);
    EXPECT_NEAR(tl::riesz_part_norm(spec, 2), 0.5, 1e-15);
}

TEST(Riesz, PartNormsParityAndReconstruction) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& spec : {tl::RieszSpec::rademacher(n, 2.0), tl::RieszSpec::lacunary_cyclic(n, 2.0)}) {
            const auto f = tl::riesz_product(spec);
            const auto d = tl::length_decompose(f, spec);
            tl::GroupFunction sum(spec.group());
            for (std::size_t k = 0; k <= n; ++k) {
                sum += d.parts[k];
                EXPECT_NEAR(tl::norm(d.parts[k], 2.0), tl::riesz_part_norm(spec, k), 1e-12);
                // On the Fourier side f_k is i^k times a real sequence.
                const auto c = tl::fourier_forward(d.parts[k]);
                for (auto v : c.values()) {
                    EXPECT_LE(std::abs(k % 2 == 0 ? v.imag() : v.real()), 1e-12);
                }
            }
            EXPECT_FUNC_NEAR(sum, f, 1e-12);
            EXPECT_NEAR(tl::norm(f, 2.0), tl::riesz_l2_norm(spec), 1e-12);
        }
    }
}

TEST(Riesz, DdaggerNormChain) {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (double alpha : {1.0, 2.0}) {
            const auto spec = tl::RieszSpec::rademacher(n, alpha);
            const auto f = tl::riesz_product(spec);
            const double bound = std::pow(1.0 + 1.0 / (alpha * alpha * static_cast<double>(n)), n / 2.0);
            EXPECT_NEAR(tl::norm(f, tl::infinity), bound, 1e-12);
            EXPECT_NEAR(tl::norm(f, 2.0), bound, 1e-12);
            EXPECT_LE(bound, std::exp(1.0 / (2.0 * alpha * alpha)) + 1e-15);
        }
    }
}

TEST(Riesz, LengthsOnCyclicGroup) {
    const auto spec = tl::RieszSpec::lacunary_cyclic(2, 1.0);
    const auto len = spec.lengths();
    ASSERT_EQ(len.size(), 27u);
    EXPECT_EQ(len[0], 0);
    EXPECT_EQ(len[1], 1);
    EXPECT_EQ(len[26], 1);
    EXPECT_EQ(len[3], 1);
    EXPECT_EQ(len[4], 2);
    EXPECT_EQ(len[2], 2);   // 3 - 1
    EXPECT_EQ(len[5], -1);  // needs 3 + 1 + 1
}

TEST(Riesz, OffSupportIsRejected) {
    const auto spec = tl::RieszSpec::lacunary_cyclic(1, 1.0);
    EXPECT_THROW(tl::length_decompose(tl::character_function(spec.group(), 3), spec), std::invalid_argument);
}

TEST(Riesz, SpecValidation) {
    const auto d2 = tl::FiniteAbelianGroup::cantor(2);
    EXPECT_THROW(tl::RieszSpec(d2, {1, 2}, 0.5, tl::RieszCase::ddagger), std::invalid_argument);
    EXPECT_NO_THROW(tl::RieszSpec(d2, {1, 2}, 1.0, tl::RieszCase::ddagger));
    EXPECT_THROW(tl::RieszSpec(d2, {}, 2.0, tl::RieszCase::ddagger), std::invalid_argument);
    EXPECT_THROW(tl::RieszSpec(d2, {1, 2, 3}, 2.0, tl::RieszCase::ddagger), std::invalid_argument);
    EXPECT_THROW(tl::RieszSpec(d2, {1, 1}, 2.0, tl::RieszCase::ddagger), std::invalid_argument);
    EXPECT_THROW(tl::RieszSpec(d2, {1}, 2.0, tl::RieszCase::dagger), std::invalid_argument);
    EXPECT_THROW(tl::RieszSpec(tl::FiniteAbelianGroup::cyclic(9), {1}, 2.0, tl::RieszCase::ddagger), std::invalid_argument);
    EXPECT_THROW(tl::RieszSpec(tl::FiniteAbelianGroup::cyclic(9), {1, 2}, 2.0, tl::RieszCase::dagger), std::invalid_argument);
    EXPECT_THROW(tl::parse_riesz_case("both"), std::invalid_argument);
    EXPECT_EQ(tl::parse_riesz_case("dagger"), tl::RieszCase::dagger);
    EXPECT_EQ(tl::to_string(tl::RieszCase::ddagger), "ddagger");
}

TEST(Witness, FirstRowExample) {
    const auto row = tl::witness_row(tl::LipschitzProfile::identity(), 2.0, 1, tl::RieszCase::ddagger, tl::default_budget);
    EXPECT_NEAR(row.l2_norm, std::sqrt(5.0) / 2.0, 1e-15);
    // f = 1 + (i/2) r_1 has two coefficients of moduli 1 and 1/2.
    const double s = std::sqrt(5.0) / 2.0;
    const double m0 = std::log(s);
    const double m1 = 0.5 * std::log(2.0 * s);
    const double expected = 0.5 * (std::abs(m0 + I * m1) + std::abs(m0 - I * m1));
    EXPECT_NEAR(row.mho_l1, expected, 1e-15);
    EXPECT_NEAR(row.mho_l1, 0.4175, 5e-5);
    EXPECT_NEAR(row.bound_b1, 0.14 * std::numbers::ln2 - 0.03, 1e-15);
    EXPECT_TRUE(row.pass_b1);
}

TEST(Witness, ReportUpToTwelve) {
    std::vector<std::size_t> ns(12);
    std::iota(ns.begin(), ns.end(), 1);
    const auto rep = tl::witness(tl::LipschitzProfile::identity(), 2.0, ns, tl::RieszCase::ddagger, tl::default_budget);
    ASSERT_EQ(rep.rows.size(), 12u);
    EXPECT_TRUE(rep.pass());
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        EXPECT_GT(rep.rows[i].mho_l1, rep.rows[i - 1].mho_l1);
        EXPECT_TRUE(rep.rows[i].pass_b2);
        EXPECT_TRUE(rep.rows[i].b2_asserted);
    }
    const auto dag = tl::witness(tl::LipschitzProfile::log1p(), 2.0, std::vector<std::size_t>{1, 2, 3, 4}, tl::RieszCase::dagger,
                                 tl::default_budget);
    EXPECT_TRUE(dag.pass());
    EXPECT_FALSE(dag.rows[0].b2_asserted);
}

TEST(Witness, Errors) {
    const auto id = tl::LipschitzProfile::identity();
    EXPECT_THROW(tl::witness_row(id, 2.0, 0, tl::RieszCase::ddagger, tl::default_budget), std::invalid_argument);
    EXPECT_THROW(tl::witness_row(id, 2.0, 25, tl::RieszCase::ddagger, tl::default_budget), std::length_error);
    EXPECT_THROW(tl::witness_row(id, 2.0, 15, tl::RieszCase::dagger, tl::default_budget), std::length_error);
    const auto convex = tl::LipschitzProfile::table({{0.0, 0.0}, {1.0, 0.1}, {2.0, 1.0}});
    EXPECT_THROW(tl::witness(convex, 2.0, std::vector<std::size_t>{1}, tl::RieszCase::ddagger, tl::default_budget),
                 std::invalid_argument);
    EXPECT_FALSE(tl::WitnessReport{}.pass());
    EXPECT_EQ(tl::witness_group_size(tl::RieszCase::dagger, 2), 27u);
    EXPECT_EQ(tl::witness_group_size(tl::RieszCase::ddagger, 200), std::numeric_limits<std::size_t>::max());
}

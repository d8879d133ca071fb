#include "test_util.hpp"

#include <numbers>

namespace {

tl::BlockSpec three_blocks() { return {{0.5, 0.25, 0.125}, {1, 3, 5}, tl::LipschitzProfile::identity()}; }

}  // namespace

TEST(Blocks, SpecValidation) {
    EXPECT_NO_THROW(three_blocks().validate());
    EXPECT_THROW((tl::BlockSpec{{1.0}, {1, 2}, tl::LipschitzProfile::identity()}.validate()), std::invalid_argument);
    EXPECT_THROW((tl::BlockSpec{{1.0, 0.0}, {1, 2}, tl::LipschitzProfile::identity()}.validate()), std::invalid_argument);
    EXPECT_THROW((tl::BlockSpec{{1.0, 1.0}, {2, 2}, tl::LipschitzProfile::identity()}.validate()), std::invalid_argument);
    EXPECT_THROW((tl::BlockSpec{{1.0}, {0}, tl::LipschitzProfile::identity()}.validate()), std::invalid_argument);
    EXPECT_DOUBLE_EQ(three_blocks().weight_sum(), 0.875);
}

TEST(Blocks, MapExamples) {
    const auto spec = three_blocks();
    const auto zero = tl::zero_blocks(spec);
    EXPECT_EQ(tl::block_map(spec, zero).codomain_norm(), 0.0);
    tl::BlockVector ones;
    for (auto n : spec.dims) {
        ones.blocks.push_back(tl::constant_one(tl::FiniteAbelianGroup::cantor(n)));
    }
    EXPECT_LE(tl::block_map(spec, ones).codomain_norm(), 1e-15);
    EXPECT_DOUBLE_EQ(ones.domain_norm(), 1.0);
    EXPECT_DOUBLE_EQ(ones.codomain_norm(), 3.0);

    // A single Riesz product in block 1 reduces to c_1 mho f.
    const tl::BlockSpec single{{0.5, 0.25}, {1, 2}, tl::LipschitzProfile::identity()};
    auto x = tl::zero_blocks(single);
    x.blocks[0] = tl::riesz_product(tl::RieszSpec::rademacher(1, 2.0));
    const auto y = tl::block_map(single, x);
    EXPECT_FUNC_NEAR(y.blocks[0], tl::complex(0.5, 0.0) * tl::mho(single.config(), x.blocks[0]), 1e-15);
    EXPECT_EQ(tl::norm(y.blocks[1], tl::infinity), 0.0);
    EXPECT_NEAR(y.codomain_norm(), 0.5 * 0.4175, 1e-4);
}

TEST(Blocks, MapRejectsMismatchedShapes) {
    const auto spec = three_blocks();
    auto x = tl::zero_blocks(spec);
    x.blocks.pop_back();
    EXPECT_THROW(tl::block_map(spec, x), std::invalid_argument);
    x = tl::zero_blocks(spec);
    x.blocks[1] = tl::GroupFunction(tl::FiniteAbelianGroup::cantor(2));
    EXPECT_THROW(tl::block_map(spec, x), std::invalid_argument);
    EXPECT_THROW(tl::zero_blocks(spec) + tl::BlockVector{}, std::invalid_argument);
}

TEST(Blocks, HomogeneousAndBlockwise) {
    const auto spec = three_blocks();
    tl::BlockSampler s(spec, 4);
    const tl::complex lambda(1.5, -2.0);
    for (int t = 0; t < 20; ++t) {
        const auto x = s.next();
        const auto y = tl::block_map(spec, x);
        for (std::size_t k = 0; k < spec.dims.size(); ++k) {
            EXPECT_FUNC_NEAR(y.blocks[k], tl::complex(spec.weights[k], 0.0) * tl::mho(spec.config(), x.blocks[k]), 1e-15);
        }
        const auto lhs = tl::block_map(spec, lambda * x);
        EXPECT_LE((lhs - lambda * y).codomain_norm(), 1e-12 * (1.0 + y.codomain_norm()));
    }
}

TEST(Blocks, SampledQuasilinearityWithinWeightedBound) {
    const auto spec = three_blocks();
    const auto r = tl::sample_block_quasilinear(spec, 300, 8);
    EXPECT_TRUE(r.pass) << r.max_defect << " > " << r.bound;
    EXPECT_NEAR(r.bound, 0.875 * 8.0 / std::numbers::e, 1e-15);
    EXPECT_THROW(tl::sample_block_quasilinear(tl::BlockSpec{}, 10, 1), std::invalid_argument);
}

TEST(Blocks, DefaultSchedule) {
    const auto sched = tl::default_schedule(tl::LipschitzProfile::identity());
    ASSERT_EQ(sched.size(), 8u);
    // c_1 = 1/2 and (1/2) log n >= 1 first holds at n = 8.
    EXPECT_EQ(sched[0].k, 1u);
    EXPECT_EQ(sched[0].weight, 0.5);
    EXPECT_EQ(sched[0].required_n, 8.0);
    EXPECT_TRUE(sched[0].feasible);
    EXPECT_EQ(sched[1].required_n, std::ceil(std::exp(8.0)));
    EXPECT_FALSE(sched[1].feasible);
    for (std::size_t k = 1; k < sched.size(); ++k) {
        EXPECT_GE(sched[k].required_n, sched[k - 1].required_n);
    }
    const auto spec = tl::spec_from_schedule(sched, tl::LipschitzProfile::identity());
    EXPECT_EQ(spec.dims, std::vector<std::size_t>{8});

    const auto loose = tl::default_schedule(tl::LipschitzProfile::identity(), 3, 5000);
    EXPECT_TRUE(loose[1].feasible);
    EXPECT_FALSE(loose[2].feasible);
    // log1p and pow profiles grow slower; the search must terminate regardless.
    for (const auto& phi : {tl::LipschitzProfile::log1p(), tl::LipschitzProfile::power(0.5)}) {
        const auto s = tl::default_schedule(phi);
        EXPECT_EQ(s.size(), 8u);
    }
    EXPECT_TRUE(std::isinf(tl::default_schedule(tl::LipschitzProfile::zero(), 2)[0].required_n));
}

TEST(Blocks, GrowthReport) {
    const auto phi = tl::LipschitzProfile::identity();
    const auto rep = tl::growth_report(tl::default_schedule(phi), phi, "default", 100, 1);
    ASSERT_EQ(rep.rows.size(), 8u);
    EXPECT_TRUE(rep.rows[0].feasible);
    EXPECT_NEAR(rep.rows[0].delta_lower, tl::block_delta_lower(phi, 0.5, 8), 0.0);
    EXPECT_GT(rep.rows[0].delta_lower, 0.0);
    EXPECT_TRUE(rep.nondecreasing);
    EXPECT_TRUE(rep.total_q.pass);
    EXPECT_LE(rep.rows[0].q_sampled, 0.5 * 8.0 / std::numbers::e + 1e-9);
}

TEST(Blocks, DeltaLowerSingleWitness) {
    const auto phi = tl::LipschitzProfile::identity();
    const auto f = tl::riesz_product(tl::RieszSpec::rademacher(1, 2.0));
    const double expected = tl::norm(tl::mho({phi, tl::infinity, 1.0, 2.0}, f), 1.0) / tl::norm(f, tl::infinity) / 2.0;
    EXPECT_NEAR(tl::block_delta_lower(phi, 1.0, 1), expected, 1e-15);
    EXPECT_NEAR(expected, 0.4175 / std::sqrt(1.25) / 2.0, 1e-4);
    EXPECT_NEAR(tl::block_delta_lower(phi, 0.25, 3), 0.25 * tl::block_delta_lower(phi, 1.0, 3), 1e-15);
}

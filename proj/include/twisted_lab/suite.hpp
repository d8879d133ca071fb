#pragma once

// The named invariant suite.  Every property the library promises has one
// entry in the manifest; each entry draws its own seeded inputs, compares
// against a brute-force oracle or a closed form where one exists, and reports
// the worst observed error (or ratio) next to the threshold it must not
// exceed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "twisted_lab/blocks.hpp"
#include "twisted_lab/cantor.hpp"
#include "twisted_lab/defect.hpp"
#include "twisted_lab/dissociate.hpp"
#include "twisted_lab/reference.hpp"
#include "twisted_lab/riesz.hpp"
#include "twisted_lab/twisted_sum.hpp"

namespace twisted_lab {

struct SuiteOptions {
    std::uint64_t seed = 1;
    /// Random inputs per exact property.
    std::size_t trials = 100;
    /// Sampled pairs per defect estimate.
    std::size_t defect_trials = 500;
    /// Largest N in the witness family.
    std::size_t witness_max_n = 16;
};

struct CheckResult {
    std::string module;
    std::string name;
    std::size_t cases = 0;
    /// Worst error or ratio seen; for boolean checks, the number of failures.
    double observed = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string detail;
};

namespace suite_detail {

inline Rng make_rng(const SuiteOptions& o, std::uint64_t salt) { return Rng(o.seed * 0x9E3779B97F4A7C15ULL + salt); }

/// max |a - b| / max(1, max |b|).
template <class Side>
double scaled_diff(const BasicFunction<Side>& a, const BasicFunction<Side>& b) {
    double scale = 1.0;
    for (const auto& v : b.values()) {
        scale = std::max(scale, std::abs(v));
    }
    return max_abs_diff(a, b) / scale;
}

inline double scaled_diff(const std::vector<complex>& a, const std::vector<complex>& b) {
    double scale = 1.0;
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        scale = std::max(scale, std::abs(b[i]));
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m / scale;
}

/// max |a - b| / max |b|, for transform comparisons.
template <class Side>
double relative_diff(const BasicFunction<Side>& a, const BasicFunction<Side>& b) {
    double scale = 0.0;
    for (const auto& v : b.values()) {
        scale = std::max(scale, std::abs(v));
    }
    return scale == 0.0 ? max_abs_diff(a, b) : max_abs_diff(a, b) / scale;
}

/// Groups of at most 256 points covering 2-groups, odd and mixed orders and
/// a prime above the direct-radix cutoff.
inline std::vector<FiniteAbelianGroup> small_groups() {
    return {FiniteAbelianGroup::cantor(1), FiniteAbelianGroup::cantor(6), FiniteAbelianGroup::cyclic(12),
            make_group({2, 3, 4}),         make_group({7, 5}),            FiniteAbelianGroup::cyclic(64),
            FiniteAbelianGroup::cyclic(67), make_group({3, 3, 3, 3})};
}

inline const FiniteAbelianGroup& pick_group(const std::vector<FiniteAbelianGroup>& gs, Rng& rng) {
    return gs[std::uniform_int_distribution<std::size_t>(0, gs.size() - 1)(rng)];
}

inline std::size_t pick_index(std::size_t n, Rng& rng) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

inline complex unimodular(Rng& rng) {
    return std::polar(1.0, std::uniform_real_distribution<double>(-std::numbers::pi, std::numbers::pi)(rng));
}

inline CheckResult result(std::string module, std::string name, std::size_t cases, double observed, double threshold,
                          std::string detail = {}) {
    CheckResult r{std::move(module), std::move(name), cases, observed, threshold, false, std::move(detail)};
    r.pass = std::isfinite(observed) && observed <= threshold;
    return r;
}

/// Boolean check: `failures` counted over `cases`.
inline CheckResult tally(std::string module, std::string name, std::size_t cases, std::size_t failures,
                         std::string detail = {}) {
    return result(std::move(module), std::move(name), cases, static_cast<double>(failures), 0.0, std::move(detail));
}

inline CheckResult from_defect(std::string module, std::string name, const DefectReport& r) {
    return result(std::move(module), std::move(name), r.trials, r.max_defect, r.bound + 1e-9, r.map);
}

/// Random function supported on the subcube.
inline GroupFunction localized_function(const SubcubeSpec& cube, Rng& rng) {
    auto f = gaussian_function<group_side>(FiniteAbelianGroup::cantor(cube.n), rng);
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (!cube.contains(x)) {
            f[x] = 0.0;
        }
    }
    return f;
}

/// A subcube of Delta_n with 1 <= |a| <= max_a and random signs.
inline SubcubeSpec random_subcube(std::size_t n, std::size_t max_a, Rng& rng) {
    std::vector<unsigned> coords(n);
    std::iota(coords.begin(), coords.end(), 0u);
    std::shuffle(coords.begin(), coords.end(), rng);
    const auto k = std::uniform_int_distribution<std::size_t>(1, std::min(max_a, n))(rng);
    SubcubeSpec s{n, 0, 0};
    for (std::size_t i = 0; i < k; ++i) {
        s.a |= CoordSet{1} << coords[i];
        if (rng() & 1) {
            s.negative |= CoordSet{1} << coords[i];
        }
    }
    return s;
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace suite_detail

// ---- group-core -------------------------------------------------------------

/// Fast transforms against the naive double sum, both directions, plus the
/// round trip.  `count` random functions per group.
inline std::vector<CheckResult> transform_oracle_checks(const std::vector<FiniteAbelianGroup>& groups, std::size_t count,
                                                        std::uint64_t seed) {
    using namespace suite_detail;
    Rng rng(seed);
    double fwd = 0.0;
    double trip = 0.0;
    std::size_t cases = 0;
    for (const auto& g : groups) {
        const reference::CharacterTable table(g);
        for (std::size_t t = 0; t < count; ++t) {
            const auto f = gaussian_function<group_side>(g, rng);
            const auto c = gaussian_function<spectrum_side>(g, rng);
            fwd = std::max(fwd, relative_diff(fourier_forward(f), table.dft(f)));
            fwd = std::max(fwd, relative_diff(fourier_inverse(c), table.inverse_dft(c)));
            trip = std::max(trip, relative_diff(fourier_inverse(fourier_forward(f)), f));
            trip = std::max(trip, relative_diff(fourier_forward(fourier_inverse(c)), c));
            ++cases;
        }
    }
    return {result("group-core", "transform.fast_matches_naive", cases, fwd, 1e-10),
            result("group-core", "transform.round_trip", cases, trip, 1e-10)};
}

inline std::vector<FiniteAbelianGroup> oracle_groups() {
    return {make_group({}), FiniteAbelianGroup::cantor(8), FiniteAbelianGroup::cyclic(243), FiniteAbelianGroup::cyclic(67),
            FiniteAbelianGroup::cyclic(134), make_group({4, 9, 5}), make_group({2, 2, 3, 2, 5})};
}

inline CheckResult check_group_construction(const SuiteOptions&) {
    std::size_t fail = 0;
    fail += make_group({2, 2}).size() != 4;
    fail += make_group({}).size() != 1;
    fail += FiniteAbelianGroup::cantor(20).size() != (std::size_t{1} << 20);
    try {
        make_group({3, 0});
        ++fail;
    } catch (const std::invalid_argument&) {
    }
    try {
        make_group(std::vector<std::size_t>(80, 2));
        ++fail;
    } catch (const std::exception&) {
    }
    // Character formula and the Walsh identification on Delta_3.
    const auto g = make_group({3, 4});
    const complex expected = std::polar(1.0, 2.0 * std::numbers::pi * (2.0 * 1.0 / 3.0 + 3.0 * 2.0 / 4.0));
    fail += std::abs(g.character(g.index(std::vector<std::size_t>{2, 3}), g.index(std::vector<std::size_t>{1, 2})) - expected) > 1e-14;
    const auto d3 = FiniteAbelianGroup::cantor(3);
    const auto w = walsh(d3, 0b101);
    fail += max_abs_diff(w, rademacher(d3, 1) * rademacher(d3, 3)) != 0.0;
    return suite_detail::tally("group-core", "group.construction", 7, fail);
}

inline std::vector<CheckResult> check_transforms(const SuiteOptions& o) {
    return transform_oracle_checks(oracle_groups(), std::max<std::size_t>(1, o.trials / 10), o.seed + 11);
}

inline CheckResult check_transform_examples(const SuiteOptions&) {
    std::size_t fail = 0;
    const auto d1 = FiniteAbelianGroup::cantor(1);
    fail += max_abs_diff(fourier_forward(rademacher(d1, 1)), indicator_at<spectrum_side>(d1, 1)) > 1e-15;
    const auto g = make_group({3, 5});
    fail += max_abs_diff(fourier_forward(constant_one(g)), indicator_at<spectrum_side>(g, 0)) > 1e-15;
    const auto d2 = FiniteAbelianGroup::cantor(2);
    const auto point = fourier_forward(indicator_at<group_side>(d2, 0));
    for (std::size_t a = 0; a < 4; ++a) {
        fail += std::abs(point[a] - 0.25) > 1e-15;
    }
    fail += max_abs_diff(fourier_inverse(indicator_at<spectrum_side>(g, 0)), constant_one(g)) > 1e-15;
    fail += max_abs_diff(fourier_inverse(indicator_at<spectrum_side>(d2, 1)), rademacher(d2, 1)) > 1e-15;
    return suite_detail::tally("group-core", "transform.examples", 8, fail);
}

inline CheckResult check_parseval(const SuiteOptions& o) {
    using namespace suite_detail;
    auto rng = make_rng(o, 12);
    const auto groups = small_groups();
    double worst = 0.0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        MixedSampler<group_side> s(pick_group(groups, rng), rng());
        const auto f = s.next();
        const double n2 = norm(f, 2.0);
        if (n2 > 0.0) {
            worst = std::max(worst, std::abs(n2 - spectral_norm(fourier_forward(f), 2.0)) / n2);
        }
    }
    return result("group-core", "transform.parseval", o.trials, worst, 1e-10);
}

inline std::vector<CheckResult> check_convolution(const SuiteOptions& o) {
    using namespace suite_detail;
    auto rng = make_rng(o, 13);
    const auto groups = small_groups();
    double theorem = 0.0;
    double oracle = 0.0;
    double young = 0.0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto& g = pick_group(groups, rng);
        const auto f = gaussian_function<group_side>(g, rng);
        const auto h = gaussian_function<group_side>(g, rng);
        const auto naive = reference::convolve(f, h);
        const auto fast = convolve(f, h);
        const double scale = norm(f, 2.0) * norm(h, 2.0);
        theorem = std::max(theorem, max_abs_diff(fourier_forward(naive), fourier_forward(f) * fourier_forward(h)) / scale);
        oracle = std::max(oracle, relative_diff(fast, naive));
        young = std::max(young, norm(fast, 1.0) - norm(f, 1.0) * norm(h, 1.0));
    }
    std::size_t fail = 0;
    const auto d2 = FiniteAbelianGroup::cantor(2);
    const auto r1 = rademacher(d2, 1);
    fail += max_abs_diff(convolve(r1, r1), r1) > 1e-15;
    fail += norm(convolve(r1, rademacher(d2, 2)), infinity) > 1e-15;
    const auto z = make_group({5, 3});
    const auto chi = character_function(z, 7);
    fail += max_abs_diff(convolve(chi, chi), chi) > 1e-14;
    const auto f = gaussian_function<group_side>(z, rng);
    fail += max_abs_diff(convolve(f, constant_one(z)), integral(f) * constant_one(z)) > 1e-14;
    return {result("group-core", "convolution.theorem", o.trials, theorem, 1e-10),
            result("group-core", "convolution.matches_naive", o.trials, oracle, 1e-10),
            result("group-core", "convolution.young", o.trials, young, 1e-10),
            tally("group-core", "convolution.examples", 4, fail)};
}

inline std::vector<CheckResult> check_translation(const SuiteOptions& o) {
    using namespace suite_detail;
    auto rng = make_rng(o, 14);
    const auto groups = small_groups();
    double spectrum = 0.0;
    std::size_t fail = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto& g = pick_group(groups, rng);
        const auto f = gaussian_function<group_side>(g, rng);
        const auto y = pick_index(g.size(), rng);
        const auto z = pick_index(g.size(), rng);
        // (f_y)^(gamma) = conj(gamma(y)) f^(gamma)
        auto predicted = fourier_forward(f);
        for (std::size_t a = 0; a < g.size(); ++a) {
            predicted[a] *= std::conj(g.character(a, y));
        }
        spectrum = std::max(spectrum, scaled_diff(fourier_forward(translate(f, y)), predicted));
        fail += max_abs_diff(translate(translate(f, y), z), translate(f, g.add(y, z))) != 0.0;
        fail += max_abs_diff(translate(f, 0), f) != 0.0;
    }
    const auto d2 = FiniteAbelianGroup::cantor(2);
    fail += max_abs_diff(translate(rademacher(d2, 1), 1), -rademacher(d2, 1)) != 0.0;
    return {result("group-core", "translation.spectrum_identity", o.trials, spectrum, 1e-12),
            tally("group-core", "translation.group_action", 2 * o.trials + 1, fail)};
}

inline CheckResult check_norms(const SuiteOptions&) {
    std::size_t fail = 0;
    const auto d2 = FiniteAbelianGroup::cantor(2);
    for (double p : {1.0, 1.5, 2.0, 7.0, infinity}) {
        fail += !suite_detail::close(norm(constant_one(d2), p), 1.0, 1e-15);
        fail += !suite_detail::close(norm(rademacher(d2, 1), p), 1.0, 1e-15);
    }
    fail += !suite_detail::close(norm(rademacher(d2, 1) + rademacher(d2, 2), 1.0), 1.0, 1e-15);
    try {
        (void)norm(constant_one(d2), 0.5);
        ++fail;
    } catch (const std::domain_error&) {
    }
    return suite_detail::tally("group-core", "norm.examples", 12, fail);
}

inline CheckResult check_dissociate(const SuiteOptions& o) {
    using namespace suite_detail;
    auto rng = make_rng(o, 15);
    const std::vector<FiniteAbelianGroup> groups = {FiniteAbelianGroup::cantor(5), FiniteAbelianGroup::cyclic(5),
                                                    FiniteAbelianGroup::cyclic(27), make_group({3, 9}),
                                                    FiniteAbelianGroup::cyclic(64), make_group({4, 6})};
    std::size_t fail = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto& g = pick_group(groups, rng);
        std::vector<std::size_t> all(g.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(6, g.size()))(rng));
        fail += is_dissociate(all, g) != reference::is_dissociate(all, g);
    }
    const auto d3 = FiniteAbelianGroup::cantor(3);
    const std::vector<std::size_t> r123{1, 2, 4};
    fail += !is_dissociate(r123, d3);
    const std::vector<std::size_t> gg2{1, 2};
    fail += is_dissociate(gg2, FiniteAbelianGroup::cyclic(5));
    const std::vector<std::size_t> with_trivial{0, 1};
    fail += is_dissociate(with_trivial, d3);
    const auto lac = RieszSpec::lacunary_cyclic(5, 2.0, false);
    fail += !is_dissociate(lac.sigma(), lac.group());
    return tally("group-core", "dissociate.matches_exhaustive", o.trials + 4, fail);
}

// ---- kp-centralizer ---------------------------------------------------------

inline std::vector<LipschitzProfile> test_profiles() {
    return {LipschitzProfile::identity(), LipschitzProfile::log1p(), LipschitzProfile::power(0.5),
            LipschitzProfile::table({{0.0, 0.0}, {1.0, 0.8}, {3.0, 1.5}, {10.0, 2.0}})};
}

inline CheckResult check_profiles(const SuiteOptions& o) {
    using namespace suite_detail;
    auto rng = make_rng(o, 21);
    std::uniform_real_distribution<double> u(-30.0, 30.0);
    double worst = 0.0;
    std::size_t fail = 0;
    for (const auto& phi : test_profiles()) {
        fail += phi(0.0) != 0.0;
        fail += phi(-0.0) != 0.0;
        for (std::size_t t = 0; t < o.trials; ++t) {
            const double s = u(rng);
            const double r = t % 2 == 0 ? s + 1e-3 * u(rng) : u(rng);
            if (s != r) {
                worst = std::max(worst, std::abs(phi(s) - phi(r)) / std::abs(s - r) - phi.lipschitz_constant());
            }
        }
    }
    return result("kp-centralizer", "profile.zero_and_lipschitz", 4 * o.trials, worst + 1e-9 * static_cast<double>(fail),
                  1e-9, fail ? "phi(0) != 0" : "");
}

inline std::vector<CheckResult> check_kp_symmetries(const SuiteOptions& o) {
    using namespace suite_detail;
    auto rng = make_rng(o, 22);
    const auto groups = small_groups();
    const auto profiles = test_profiles();
    double sharp = 0.0;
    double flat = 0.0;
    double rearr = 0.0;
    std::size_t support_fail = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto& g = pick_group(groups, rng);
        const auto& phi = profiles[t % profiles.size()];
        const double p = t % 3 == 0 ? 2.0 : (t % 3 == 1 ? 1.0 : infinity);
        MixedSampler<spectrum_side> s(g, rng());
        const auto c = s.next();
        const auto kc = kp_map(phi, p, c);

        SpectrumFunction u(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            u[i] = unimodular(rng);
        }
        sharp = std::max(sharp, scaled_diff(kp_map(phi, p, u * c), u * kc));

        std::vector<std::size_t> perm(g.size());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        SpectrumFunction cs(g), kcs(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            cs[i] = c[perm[i]];
            kcs[i] = kc[perm[i]];
        }
        flat = std::max(flat, scaled_diff(kp_map(phi, p, cs), kcs));

        for (std::size_t i = 0; i < g.size(); ++i) {
            support_fail += c[i] == 0.0 && kc[i] != 0.0;
        }

        // Injection into a longer index set: R(c)(sigma(i)) = c(i), zero off the range.
        const std::size_t m = g.size() + std::uniform_int_distribution<std::size_t>(1, 64)(rng);
        std::vector<std::size_t> slots(m);
        std::iota(slots.begin(), slots.end(), std::size_t{0});
        std::shuffle(slots.begin(), slots.end(), rng);
        std::vector<complex> rc(m, 0.0), rkc(m, 0.0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            rc[slots[i]] = c[i];
            rkc[slots[i]] = kc[i];
        }
        rearr = std::max(rearr, scaled_diff(kp_sequence(phi, p, rc), rkc));
    }
    return {result("kp-centralizer", "kp.sharp_unimodular", o.trials, sharp, 1e-12),
            result("kp-centralizer", "kp.flat_permutation", o.trials, flat, 1e-12),
            tally("kp-centralizer", "kp.support_preserving", o.trials, support_fail),
            result("kp-centralizer", "kp.rearrangement_injection", o.trials, rearr, 1e-12)};
}

inline std::vector<CheckResult> check_mho_symmetries(const SuiteOptions& o) {
    using namespace suite_detail;
    auto rng = make_rng(o, 23);
    const auto groups = small_groups();
    const auto profiles = test_profiles();
    double trans = 0.0;
    double chars = 0.0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto& g = pick_group(groups, rng);
        const CentralizerConfig config{profiles[t % profiles.size()], 2.0, 2.0, 2.0};
        MixedSampler<group_side> s(g, rng());
        const auto f = s.next();
        const auto mf = mho(config, f);
        const auto y = pick_index(g.size(), rng);
        const auto gamma = pick_index(g.size(), rng);
        trans = std::max(trans, scaled_diff(mho(config, translate(f, y)), translate(mf, y)));
        chars = std::max(chars, scaled_diff(mho(config, multiply_by_character(f, gamma)), multiply_by_character(mf, gamma)));
    }
    return {result("kp-centralizer", "mho.commutes_with_translations", o.trials, trans, 1e-12),
            result("kp-centralizer", "mho.commutes_with_characters", o.trials, chars, 1e-12)};
}

inline std::vector<CheckResult> check_kp_bounds(const SuiteOptions& o) {
    using namespace suite_detail;
    const std::vector<FiniteAbelianGroup> groups = {FiniteAbelianGroup::cantor(4), FiniteAbelianGroup::cyclic(30),
                                                    make_group({4, 8})};
    double kp = 0.0, kp_bound = 0.0, mq = 0.0, mq_bound = 0.0, cent = 0.0, cent_bound = 0.0, pw = 0.0, pw_bound = 0.0;
    std::size_t k = 0;
    for (const auto& phi : test_profiles()) {
        for (const auto& g : groups) {
            const auto trials = std::max<std::size_t>(1, o.defect_trials / (groups.size() * 4));
            const auto seed = o.seed * 1000 + ++k;
            const auto a = sample_kp_quasilinear(phi, 2.0, g, trials, seed);
            kp = std::max(kp, a.max_defect / a.bound);
            kp_bound = 1.0 + 1e-9 / a.bound;
            const auto b = sample_mho_quasilinear({phi, 2.0, 2.0, 2.0}, g, trials, seed + 1);
            mq = std::max(mq, b.max_defect / b.bound);
            mq_bound = 1.0 + 1e-9 / b.bound;
            const auto c = sample_mho_centralizer({phi, 2.0, 2.0, 2.0}, g, trials, seed + 2);
            cent = std::max(cent, c.max_defect / c.bound);
            cent_bound = 1.0 + 1e-9 / c.bound;
            const auto d = sample_pointwise_centralizer(phi, 2.0, g, trials, seed + 3);
            pw = std::max(pw, d.max_defect / d.bound);
            pw_bound = 1.0 + 1e-9 / d.bound;
        }
    }
    const auto n = o.defect_trials;
    return {result("kp-centralizer", "kp.quasilinear_le_8L_over_e", n, kp, kp_bound, "ratio to bound"),
            result("kp-centralizer", "mho.quasilinear_le_8L_over_e", n, mq, mq_bound, "ratio to bound"),
            result("kp-centralizer", "mho.l1_centralizer_le_2L_over_e", n, cent, cent_bound, "ratio to bound"),
            result("kp-centralizer", "pointwise.l1_centralizer_le_2L_over_e", n, pw, pw_bound, "ratio to bound")};
}

inline CheckResult check_kp_examples(const SuiteOptions&) {
    using suite_detail::close;
    const auto id = LipschitzProfile::identity();
    const double half_log2 = std::log(2.0) / 2.0;
    std::size_t fail = 0;
    const auto g2 = FiniteAbelianGroup::cyclic(2);
    fail += norm(fourier_inverse(kp_map(id, 2.0, indicator_at<spectrum_side>(g2, 1))), infinity) != 0.0;
    const SpectrumFunction c(g2, {complex{1.0, 0.0}, complex{0.0, 1.0}});
    fail += max_abs_diff(kp_map(id, 2.0, c), half_log2 * c) > 1e-15;
    Rng rng(5);
    const auto r = gaussian_function<spectrum_side>(make_group({3, 4}), rng);
    const complex lambda{3.0, 4.0};
    fail += suite_detail::scaled_diff(kp_map(id, 2.0, lambda * r), lambda * kp_map(id, 2.0, r)) > 1e-12;
    // Defect of the pair (e_1, e_2) in l_2.
    const SpectrumFunction e1(g2, {1.0, 0.0}), e2(g2, {0.0, 1.0});
    fail += !close(kp_pair_defect(id, 2.0, e1, e2), std::sqrt(2.0) / 4.0 * std::log(2.0), 1e-14);
    fail += kp_pair_defect(id, 2.0, e1, SpectrumFunction(g2)) != 0.0;
    fail += kp_pair_defect(id, 2.0, e1, e1) != 0.0;

    const CentralizerConfig cfg{id, 2.0, 2.0, 2.0};
    const auto d1 = FiniteAbelianGroup::cantor(1);
    const auto d2 = FiniteAbelianGroup::cantor(2);
    fail += norm(mho(cfg, constant_one(d2)), infinity) != 0.0;
    fail += norm(mho(cfg, character_function(make_group({3, 5}), 4)), infinity) > 1e-12;
    const auto f = constant_one(d1) + complex{0.0, 1.0} * rademacher(d1, 1);
    fail += max_abs_diff(mho(cfg, f), half_log2 * f) > 1e-15;

    const std::vector<std::size_t> s1{1}, s12{1, 2};
    fail += norm(mho_sidon(cfg, s1, f), infinity) != 0.0;
    fail += norm(mho_sidon(cfg, s1, constant_one(d1)), infinity) != 0.0;
    const auto rr = rademacher(d2, 1) + rademacher(d2, 2);
    fail += max_abs_diff(mho_sidon(cfg, s12, rr), half_log2 * rr) > 1e-15;

    fail += norm(pointwise_kp(id, 2.0, constant_one(d2)), infinity) != 0.0;
    fail += norm(pointwise_kp(id, 2.0, rademacher(d2, 1)), infinity) != 0.0;
    const auto half = subcube_indicator_mask(d2, 1, 0);
    fail += max_abs_diff(pointwise_kp(id, 2.0, half), -half_log2 * half) > 1e-15;

    fail += defect_l1(cfg, constant_one(d1), constant_one(d1)) != 0.0;
    fail += !close(defect_l1(cfg, rademacher(d1, 1), f), half_log2 / std::sqrt(2.0), 1e-14);
    return suite_detail::tally("kp-centralizer", "kp.examples", 17, fail);
}

// ---- twisted-sum ------------------------------------------------------------

inline std::vector<CheckResult> check_twisted_sum(const SuiteOptions& o) {
    using namespace suite_detail;
    auto rng = make_rng(o, 31);
    const auto groups = small_groups();
    const auto profiles = test_profiles();
    double triangle = 0.0;
    double action = 0.0;
    std::size_t iso_fail = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto& g = pick_group(groups, rng);
        const auto& phi = profiles[t % profiles.size()];
        const CentralizerConfig cfg = t % 2 == 0 ? CentralizerConfig{phi, 2.0, 2.0, 2.0} : CentralizerConfig{phi, infinity, 1.0, 2.0};
        MixedSampler<group_side> s(g, rng());
        const TwistedPair p1{s.next(), s.next()};
        // Second pair sometimes sits on the graph of mho, where the quasinorm is small.
        const auto f2 = s.next();
        const TwistedPair p2{t % 3 == 0 ? mho(cfg, f2) : s.next(), f2};
        const double denom = twisted_quasinorm(cfg, p1) + twisted_quasinorm(cfg, p2);
        if (denom > 1e-12) {
            triangle = std::max(triangle, twisted_quasinorm(cfg, p1 + p2) / denom / (1.0 + quasilinear_bound(phi)));
        }
        const auto a = s.next();
        const double rhs = (1.0 + centralizer_bound(phi)) * norm(a, 1.0) * twisted_quasinorm(cfg, p1);
        action = std::max(action, twisted_quasinorm(cfg, act(a, p1)) - rhs);

        const auto gy = s.next();
        iso_fail += twisted_quasinorm(cfg, {gy, GroupFunction(g)}) != norm(gy, cfg.q);
        auto f = s.next();
        const double nf = norm(f, cfg.p);
        if (nf > 0.0) {
            f *= 1.0 / nf;
        }
        iso_fail += twisted_quasinorm(cfg, {mho(cfg, f), f}) != norm(f, cfg.p);
        iso_fail += norm(f, cfg.p) > 1.0 + 1e-15;
    }
    return {result("twisted-sum", "twisted.quasi_triangle_le_1_plus_Q", o.trials, triangle, 1.0 + 1e-12, "ratio to 1+Q"),
            result("twisted-sum", "twisted.action_bound", o.trials, action, 1e-9),
            tally("twisted-sum", "twisted.embedding_and_projection", 3 * o.trials, iso_fail)};
}

inline std::vector<CheckResult> check_delta_and_blocks(const SuiteOptions& o) {
    using namespace suite_detail;
    auto rng = make_rng(o, 32);
    const auto profiles = test_profiles();
    std::size_t mono_fail = 0;
    double block = 0.0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const auto g = FiniteAbelianGroup::cantor(n);
        const CentralizerConfig cfg{profiles[t % profiles.size()], infinity, 1.0, 2.0};
        MixedSampler<group_side> s(g, rng());
        std::vector<GroupFunction> w;
        double prev = 0.0;
        for (int k = 0; k < 4; ++k) {
            auto f = s.next();
            if (norm(f, infinity) == 0.0) {
                continue;
            }
            w.push_back(std::move(f));
            const double d = delta_lower(cfg, w).delta_lower;
            mono_fail += d < prev;
            prev = d;
        }
        const CentralizerConfig bcfg{profiles[t % profiles.size()], 2.0, 2.0, 2.0};
        const auto f = s.next();
        if (norm(f, 2.0) > 1e-12) {
            const auto a = rng() & ((std::uint64_t{1} << n) - 1);
            block = std::max(block, block_defect(bcfg, a, f) - block_defect_bound(bcfg, a, f));
        }
    }
    return {tally("twisted-sum", "delta.monotone_in_witnesses", o.trials, mono_fail),
            result("twisted-sum", "block_defect.bound", o.trials, block, 1e-9)};
}

inline CheckResult check_twisted_examples(const SuiteOptions&) {
    using suite_detail::close;
    const auto id = LipschitzProfile::identity();
    const CentralizerConfig cfg{id, 2.0, 2.0, 2.0};
    const CentralizerConfig cfg_inf{id, infinity, 1.0, 2.0};
    const auto d1 = FiniteAbelianGroup::cantor(1);
    const auto d2 = FiniteAbelianGroup::cantor(2);
    const double log2 = std::log(2.0);
    std::size_t fail = 0;
    const GroupFunction zero(d2);
    fail += twisted_quasinorm(cfg, {zero, zero}) != 0.0;
    const auto f = constant_one(d2) + 0.5 * rademacher(d2, 1) + complex{0.0, 0.25} * walsh(d2, 3);
    fail += !close(twisted_quasinorm(cfg, {mho(cfg, f), f}), norm(f, 2.0), 1e-15);
    fail += twisted_quasinorm(cfg, {f, zero}) != norm(f, 2.0);
    const auto act0 = act(zero, {f, f});
    fail += norm(act0.g, infinity) + norm(act0.f, infinity) > 1e-15;
    const auto act1 = act(constant_one(d2), {zero, constant_one(d2)});
    fail += norm(act1.g, infinity) > 1e-15 || max_abs_diff(act1.f, constant_one(d2)) > 1e-15;
    const auto act2 = act(rademacher(d2, 1), {zero, rademacher(d2, 1)});
    fail += norm(act2.g, infinity) > 1e-15 || max_abs_diff(act2.f, rademacher(d2, 1)) > 1e-15;

    const GroupFunction w1[] = {constant_one(d1) + complex{0.0, 1.0} * rademacher(d1, 1)};
    fail += !close(delta_lower(cfg_inf, w1).delta_lower, log2 / 4.0, 1e-14);
    fail += delta_lower({LipschitzProfile::zero(), infinity, 1.0, 2.0}, w1).delta_lower != 0.0;
    fail += norm(mho(cfg_inf, constant_one(d2)), 1.0) != 0.0;

    fail += block_defect(cfg, 0, f) > 1e-15;
    fail += !close(block_defect(cfg, 1, constant_one(d2)), log2 / 2.0, 1e-14);
    return suite_detail::tally("twisted-sum", "twisted.examples", 11, fail);
}

// ---- riesz-lab --------------------------------------------------------------

inline std::vector<RieszSpec> riesz_family(std::size_t max_dd, std::size_t max_d, double alpha) {
    std::vector<RieszSpec> out;
    for (std::size_t n = 1; n <= max_dd; ++n) {
        out.push_back(RieszSpec::rademacher(n, alpha));
    }
    for (std::size_t n = 1; n <= max_d; ++n) {
        out.push_back(RieszSpec::lacunary_cyclic(n, alpha));
    }
    return out;
}

/// Spectrum, part norms and parity of Riesz products against the closed forms.
inline std::vector<CheckResult> riesz_structure_checks(std::size_t max_dd, std::size_t max_d) {
    using namespace suite_detail;
    double spec_dd = 0.0, spec_d = 0.0, parts_dd = 0.0, parts_d = 0.0, parity = 0.0, decomp = 0.0;
    std::size_t cases = 0;
    for (double alpha : {1.0, 2.0, 3.5}) {
        for (const auto& spec : riesz_family(max_dd, max_d, alpha)) {
            ++cases;
            const bool dd = spec.riesz_case() == RieszCase::ddagger;
            const auto f = riesz_product(spec);
            const double e = max_abs_diff(fourier_forward(f), riesz_spectrum(spec));
            (dd ? spec_dd : spec_d) = std::max(dd ? spec_dd : spec_d, e);
            const auto dec = length_decompose(f, spec);
            GroupFunction sum(spec.group());
            for (std::size_t k = 0; k < dec.parts.size(); ++k) {
                const auto& part = dec.parts[k];
                sum += part;
                const double nk = norm(part, 2.0);
                if (dd) {
                    parts_dd = std::max(parts_dd, std::abs(nk - riesz_part_norm(spec, k)));
                } else {
                    // Exact value, and the factorial bound it sits under.
                    const double bound = std::pow(spec.alpha(), -static_cast<double>(k)) /
                                         std::sqrt(std::ldexp(std::tgamma(static_cast<double>(k) + 1.0), static_cast<int>(k)));
                    parts_d = std::max({parts_d, std::abs(nk - riesz_part_norm(spec, k)), nk - bound});
                }
                for (const auto& v : part.values()) {
                    parity = std::max(parity, std::abs(k % 2 == 0 ? v.imag() : v.real()));
                }
            }
            decomp = std::max({decomp, max_abs_diff(sum, f), max_abs_diff(dec.parts[0], constant_one(spec.group()))});
        }
    }
    return {result("riesz-lab", "riesz.spectrum_closed_form_ddagger", cases, spec_dd, 1e-12),
            result("riesz-lab", "riesz.spectrum_closed_form_dagger", cases, spec_d, 1e-12),
            result("riesz-lab", "riesz.part_norms_ddagger", cases, parts_dd, 1e-12),
            result("riesz-lab", "riesz.part_norms_dagger", cases, parts_d, 1e-12),
            result("riesz-lab", "riesz.parity", cases, parity, 1e-12),
            result("riesz-lab", "riesz.length_decomposition", cases, decomp, 1e-10)};
}

/// 1 <= ||f||_inf <= ||f||_2 <= (1 + 1/(alpha^2 N))^{N/2} <= e^{1/(2 alpha^2)}
/// in the ddagger case.  In the dagger case |f| is not constant, so the
/// chain reads 1 <= ||f||_2 <= ||f||_inf with ||f||_2 = (1 + 1/(2 alpha^2 N))^{N/2}
/// <= e^{1/(4 alpha^2)} and ||f||_inf <= (1 + 1/(alpha^2 N))^{N/2}.
inline std::vector<CheckResult> riesz_norm_chain_checks(std::size_t max_dd, std::size_t max_d) {
    double dd = -infinity, d = -infinity;
    std::size_t cases_dd = 0, cases_d = 0;
    for (double alpha : {1.0, 2.0, 3.5}) {
        for (const auto& spec : riesz_family(max_dd, max_d, alpha)) {
            const auto f = riesz_product(spec);
            const double sup = norm(f, infinity);
            const double l2 = norm(f, 2.0);
            const double n = static_cast<double>(spec.n());
            const double a2 = alpha * alpha;
            const double prod = std::pow(1.0 + 1.0 / (a2 * n), n / 2.0);
            if (spec.riesz_case() == RieszCase::ddagger) {
                ++cases_dd;
                dd = std::max({dd, 1.0 - sup, sup - l2, l2 - prod, prod - std::exp(1.0 / (2.0 * a2))});
            } else {
                ++cases_d;
                const double prod2 = std::pow(1.0 + 1.0 / (2.0 * a2 * n), n / 2.0);
                d = std::max({d, 1.0 - l2, l2 - sup, std::abs(l2 - prod2), prod2 - std::exp(1.0 / (4.0 * a2)), sup - prod});
            }
        }
    }
    return {suite_detail::result("riesz-lab", "riesz.norm_chain_ddagger", cases_dd, dd, 1e-12),
            suite_detail::result("riesz-lab", "riesz.norm_chain_dagger", cases_d, d, 1e-12)};
}

inline std::vector<CheckResult> check_riesz(const SuiteOptions&) {
    auto out = riesz_structure_checks(10, 5);
    for (auto& c : riesz_norm_chain_checks(12, 6)) {
        out.push_back(std::move(c));
    }
    return out;
}

/// On a Riesz product mho acts diagonally per length class:
/// (mho f)^ = f^ phi(log(||f||_2 / |step|^k)) on characters of length k.
inline CheckResult check_riesz_mho_diagonal(const SuiteOptions&) {
    double worst = 0.0;
    std::size_t cases = 0;
    for (const auto& phi : test_profiles()) {
        const CentralizerConfig cfg{phi, infinity, 1.0, 2.0};
        for (const auto& spec : riesz_family(10, 5, 2.0)) {
            ++cases;
            const auto f = riesz_product(spec);
            const auto got = fourier_forward(mho(cfg, f));
            const auto fhat = riesz_spectrum(spec);
            const auto len = spec.lengths();
            const double l2 = norm(f, 2.0);
            const double step = std::abs(spec.step());
            for (std::size_t i = 0; i < len.size(); ++i) {
                complex expected = 0.0;
                if (len[i] >= 0) {
                    expected = fhat[i] * phi(std::log(l2) - len[i] * std::log(step));
                }
                worst = std::max(worst, std::abs(got[i] - expected));
            }
        }
    }
    return suite_detail::result("riesz-lab", "riesz.mho_diagonal_per_length", cases, worst, 1e-10);
}

inline std::vector<CheckResult> check_witness(const SuiteOptions& o) {
    std::vector<std::size_t> ns(o.witness_max_n);
    std::iota(ns.begin(), ns.end(), std::size_t{1});
    const auto rep = witness(LipschitzProfile::identity(), 2.0, ns, RieszCase::ddagger);
    std::size_t b1 = 0, b2 = 0, mono = 0;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        b1 += !rep.rows[i].pass_b1;
        b2 += !rep.rows[i].pass_b2;
        if (i > 0 && rep.rows[i].n >= 2 && !(rep.rows[i].mho_l1 > rep.rows[i - 1].mho_l1)) {
            ++mono;
        }
    }
    std::string first;
    for (const auto& r : rep.rows) {
        if (!r.pass_b1 || !r.pass_b2) {
            first = "first failing N=" + std::to_string(r.n);
            break;
        }
    }
    // B1 alone for the other concave profiles, and for the dagger family.
    std::size_t other = 0, other_cases = 0;
    const std::vector<std::size_t> small(ns.begin(), ns.begin() + std::min<std::size_t>(ns.size(), 10));
    for (const auto& phi : {LipschitzProfile::log1p(), LipschitzProfile::power(0.5)}) {
        for (const auto& r : witness(phi, 2.0, small, RieszCase::ddagger).rows) {
            ++other_cases;
            other += !r.pass_b1;
        }
    }
    const std::vector<std::size_t> dn{1, 2, 3, 4, 5, 6};
    for (const auto& r : witness(LipschitzProfile::identity(), 2.0, dn, RieszCase::dagger).rows) {
        ++other_cases;
        other += !r.pass_b1;
    }
    return {suite_detail::tally("riesz-lab", "witness.b1_identity", rep.rows.size(), b1, first),
            suite_detail::tally("riesz-lab", "witness.b2_identity", rep.rows.size(), b2, first),
            suite_detail::tally("riesz-lab", "witness.strictly_increasing", rep.rows.size(), mono),
            suite_detail::tally("riesz-lab", "witness.b1_other_profiles", other_cases, other)};
}

// ---- cantor-lab -------------------------------------------------------------

inline std::vector<CheckResult> check_subcubes_and_embeddings(const SuiteOptions& o) {
    using namespace suite_detail;
    auto rng = make_rng(o, 51);
    double spectrum = 0.0, ebsum = 0.0, ebmho = 0.0, normscale = 0.0;
    std::size_t embed_fail = 0;
    const auto profiles = test_profiles();
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
        const auto cube = random_subcube(n, 4, rng);
        spectrum = std::max(spectrum, max_abs_diff(fourier_forward(subcube_indicator(cube)), subcube_spectrum(cube)));

        const auto e = EmbeddingSpec::canonical(n, cube.a, cube.negative);
        const auto src = FiniteAbelianGroup::cantor(e.source_rank());
        const auto f = gaussian_function<group_side>(src, rng);
        const auto h = gaussian_function<group_side>(src, rng);
        const auto ef = embed(e, f);
        for (std::size_t x = 0; x < ef.size(); ++x) {
            embed_fail += !cube.contains(x) && ef[x] != 0.0;
        }
        embed_fail += max_abs_diff(embed(e, f * h), ef * embed(e, h)) > 1e-12;
        embed_fail += max_abs_diff(embed(e, constant_one(src)), subcube_indicator(cube)) != 0.0;
        if (e.source_rank() > 0) {
            const auto j = std::uniform_int_distribution<std::size_t>(1, e.source_rank())(rng);
            const auto target = FiniteAbelianGroup::cantor(n);
            embed_fail += max_abs_diff(embed(e, rademacher(src, j)),
                                       subcube_indicator(cube) * rademacher(target, e.source_to_target[j - 1] + 1)) != 0.0;
        }
        const double k = std::popcount(cube.a);
        for (double p : {1.0, 2.0, 3.0}) {
            normscale = std::max(normscale, std::abs(norm(ef, p) - std::pow(2.0, -k / p) * norm(f, p)) / norm(f, p));
        }
        normscale = std::max(normscale, std::abs(norm(ef, infinity) - norm(f, infinity)) / norm(f, infinity));

        GroupFunction total(FiniteAbelianGroup::cantor(n));
        const CentralizerConfig cfg{profiles[t % profiles.size()], 2.0, 2.0, 2.0};
        const auto mf = mho(cfg, f);
        CoordSet b = 0;
        do {
            const auto eb = eb_operator(e, b, f);
            total += eb;
            ebmho = std::max(ebmho, scaled_diff(mho(cfg, eb), eb_operator(e, b, mf)));
            b = (b - cube.a) & cube.a;
        } while (b != 0);
        ebsum = std::max(ebsum, scaled_diff(total, ef));
    }
    // E^{empty}(w_d) = 2^{-|a|} w_{s(d)}.
    const auto e = EmbeddingSpec::canonical(4, coord_set({2, 3}), coord_set({3}));
    const auto src = FiniteAbelianGroup::cantor(2);
    const auto tgt = FiniteAbelianGroup::cantor(4);
    embed_fail += max_abs_diff(eb_operator(e, 0, walsh(src, 0b11)), 0.25 * walsh(tgt, 0b1001)) > 1e-15;
    const auto e2 = EmbeddingSpec::canonical(2, coord_set({1}), 0);
    const auto d2 = FiniteAbelianGroup::cantor(2);
    embed_fail += max_abs_diff(embed(e2, rademacher(FiniteAbelianGroup::cantor(1), 1)),
                               0.5 * (constant_one(d2) + rademacher(d2, 1)) * rademacher(d2, 2)) > 1e-15;
    return {result("cantor-lab", "subcube.spectrum_closed_form", o.trials, spectrum, 1e-12),
            tally("cantor-lab", "embed.support_multiplicative_rademacher", 4 * o.trials + 2, embed_fail),
            result("cantor-lab", "embed.norm_scaling", o.trials, normscale, 1e-12),
            result("cantor-lab", "eb.sum_equals_embedding", o.trials, ebsum, 1e-12),
            result("cantor-lab", "eb.commutes_with_mho", o.trials, ebmho, 1e-12)};
}

/// Three-way agreement of the localization conditions on `count` localized
/// and `count` non-localized random functions on Delta_N, N <= max_n.
inline CheckResult localization_check(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    using namespace suite_detail;
    Rng rng(seed);
    std::size_t fail = 0;
    for (std::size_t t = 0; t < 2 * count; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
        const auto cube = random_subcube(n, 4, rng);
        auto f = localized_function(cube, rng);
        const bool localized = t < count;
        if (!localized) {
            // Put mass on one or more points outside the cube.
            const auto k = std::uniform_int_distribution<int>(1, 3)(rng);
            for (int i = 0; i < k; ++i) {
                std::size_t x;
                do {
                    x = pick_index(f.size(), rng);
                } while (cube.contains(x));
                f[x] = gaussian_complex(rng) + complex{0.5, 0.0};
            }
        }
        const auto c = localization_conditions(f, cube);
        fail += !c.agree() || c.support != localized;
    }
    return tally("cantor-lab", "localization.three_way_agreement", 2 * count, fail);
}

inline std::vector<CheckResult> check_localization_and_symmetry(const SuiteOptions& o) {
    using namespace suite_detail;
    auto rng = make_rng(o, 52);
    const auto profiles = test_profiles();
    double stability = 0.0, conj = 0.0;
    std::size_t placement = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
        const auto cube = random_subcube(n, 4, rng);
        const CentralizerConfig cfg{profiles[t % profiles.size()], 2.0, 2.0, 2.0};
        const auto f = localized_function(cube, rng);
        const auto mf = mho(cfg, f);
        const double scale = std::max(1.0, norm(mf, infinity));
        for (std::size_t x = 0; x < mf.size(); ++x) {
            if (!cube.contains(x)) {
                stability = std::max(stability, std::abs(mf[x]) / scale);
            }
        }
        // f lives on Delta(a, eta); translate it onto Delta(a, eps) and back.
        const CoordSet eps = rng() & cube.a;
        const auto y = conjugating_element(cube.a, eps, cube.negative);
        const auto fy = translate(f, y);
        placement += !localization_conditions(fy, {n, cube.a, eps}).support;
        conj = std::max(conj, scaled_diff(translate(mho(cfg, fy), y), mf));
    }
    return {localization_check(o.trials, 10, o.seed * 7 + 53),
            result("cantor-lab", "mho.preserves_subcube_support", o.trials, stability, 1e-12),
            result("cantor-lab", "mho.translation_conjugation", o.trials, conj, 1e-12),
            tally("cantor-lab", "translation.moves_subcube", o.trials, placement)};
}

inline std::vector<CheckResult> check_copies(const SuiteOptions& o) {
    using namespace suite_detail;
    auto rng = make_rng(o, 54);
    double worst = 0.0;
    std::size_t cases = 0;
    for (const auto& phi : test_profiles()) {
        for (int rep = 0; rep < 3; ++rep) {
            const auto n = std::uniform_int_distribution<std::size_t>(3, 9)(rng);
            const auto cube = random_subcube(n, 4, rng);
            const auto e = EmbeddingSpec::canonical(n, cube.a, cube.negative);
            MixedSampler<group_side> s(FiniteAbelianGroup::cantor(e.source_rank()), rng());
            std::vector<GroupFunction> samples;
            while (samples.size() < std::max<std::size_t>(4, o.trials / 4)) {
                auto f = s.next();
                if (norm(f, 2.0) > 1e-12) {
                    samples.push_back(std::move(f));
                }
            }
            const auto r = copies_report(e, phi, samples);
            cases += samples.size();
            worst = std::max(worst, r.max_defect / r.bound);
        }
    }
    // f = 1 with |a| = 1: the defect is ||mho(E1)||_2.
    const auto e = EmbeddingSpec::canonical(3, coord_set({2}), 0);
    const GroupFunction one[] = {constant_one(FiniteAbelianGroup::cantor(2))};
    const auto r = copies_report(e, LipschitzProfile::identity(), one);
    const bool example = close(r.max_defect, std::log(2.0) / 2.0 / std::sqrt(2.0), 1e-14);
    return {result("cantor-lab", "copies.defect_le_37Q", cases, worst, 1.0 + 1e-12, "ratio to bound"),
            tally("cantor-lab", "copies.example_constant", 1, example ? 0 : 1)};
}

/// E|r_1 + ... + r_N| by averaging over Delta_N.
inline double walk_mean_brute(std::size_t n) {
    const auto g = FiniteAbelianGroup::cantor(n);
    GroupFunction s(g);
    for (std::size_t x = 0; x < g.size(); ++x) {
        s[x] = static_cast<double>(n) - 2.0 * std::popcount(x);
    }
    return norm(s, 1.0);
}

inline std::vector<CheckResult> check_walk_and_khintchine(const SuiteOptions& o) {
    using namespace suite_detail;
    std::size_t walk_fail = 0;
    walk_fail += walk_mean(2).exact != 1.0;
    walk_fail += walk_mean(4).exact != 1.5;
    for (std::size_t n = 1; n <= 14; ++n) {
        walk_fail += !close(walk_mean(n).exact, walk_mean_brute(n), 1e-12);
    }
    double prev = 0.0;
    for (std::size_t n : {2, 4, 64, 256, 1024, 4096}) {
        const auto w = walk_mean(n);
        walk_fail += w.ratio <= prev;
        prev = w.ratio;
        walk_fail += n >= 64 && !(std::abs(w.ratio - 1.0) < 0.01);
    }
    auto rng = make_rng(o, 55);
    std::size_t kh_fail = 0;
    const double a11[] = {1.0, 1.0};
    kh_fail += !close(khintchine_ratio(a11, 1.0), std::sqrt(0.5), 1e-12);
    for (double p : {1.0, 2.0, 4.0, infinity}) {
        const double e1[] = {1.0, 0.0, 0.0};
        kh_fail += !close(khintchine_ratio(e1, p), 1.0, 1e-12);
    }
    std::normal_distribution<double> n01;
    for (std::size_t t = 0; t < o.trials; ++t) {
        std::vector<double> a(std::uniform_int_distribution<std::size_t>(1, 12)(rng));
        for (auto& v : a) {
            v = t % 2 ? n01(rng) : std::round(3.0 * n01(rng));
        }
        if (std::all_of(a.begin(), a.end(), [](double v) { return v == 0.0; })) {
            a[0] = 1.0;
        }
        const double r = khintchine_ratio(a, 1.0);
        kh_fail += r < std::sqrt(0.5) - 1e-12 || r > 1.0 + 1e-12;
    }
    return {tally("cantor-lab", "walk.exact_and_asymptotic", 30, walk_fail),
            tally("cantor-lab", "khintchine.A1_bounds", o.trials + 5, kh_fail)};
}

// ---- block-builder ----------------------------------------------------------

inline std::vector<CheckResult> check_blocks(const SuiteOptions& o) {
    using namespace suite_detail;
    const auto phi = LipschitzProfile::identity();
    const BlockSpec spec{{0.5, 0.25, 0.125}, {3, 5, 7}, phi};
    BlockSampler sampler(spec, o.seed + 61);
    auto rng = make_rng(o, 62);
    std::size_t blockwise = 0;
    double homog = 0.0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto x = sampler.next();
        const auto y = sampler.next();
        const auto bx = block_map(spec, x);
        // Replace one block and check the others are untouched.
        const auto j = pick_index(spec.dims.size(), rng);
        auto x2 = x;
        x2.blocks[j] = y.blocks[j];
        const auto bx2 = block_map(spec, x2);
        for (std::size_t k = 0; k < spec.dims.size(); ++k) {
            if (k != j) {
                blockwise += max_abs_diff(bx.blocks[k], bx2.blocks[k]) != 0.0;
            }
        }
        const complex lambda = gaussian_complex(rng);
        const auto lhs = block_map(spec, lambda * x);
        const auto rhs = lambda * bx;
        for (std::size_t k = 0; k < spec.dims.size(); ++k) {
            homog = std::max(homog, scaled_diff(lhs.blocks[k], rhs.blocks[k]));
        }
    }
    std::size_t examples = 0;
    const auto zero = block_map(spec, zero_blocks(spec));
    examples += zero.codomain_norm() != 0.0;
    auto ones = zero_blocks(spec);
    for (auto& b : ones.blocks) {
        b = constant_one(b.group());
    }
    examples += block_map(spec, ones).codomain_norm() != 0.0;
    auto single = zero_blocks(spec);
    single.blocks[0] = riesz_product(RieszSpec::rademacher(3, 2.0));
    const auto out = block_map(spec, single);
    examples += max_abs_diff(out.blocks[0], 0.5 * mho(spec.config(), single.blocks[0])) > 1e-15;
    examples += out.blocks[1].values().size() != 32 || norm(out.blocks[1], infinity) != 0.0;

    const auto q = sample_block_quasilinear(spec, o.defect_trials / 2 + 1, o.seed + 63);
    const auto schedule = default_schedule(phi);
    const auto growth = growth_report(schedule, phi, "default", o.defect_trials / 4 + 1, o.seed + 64);
    std::size_t growth_fail = !growth.nondecreasing;
    growth_fail += !growth.total_q.pass;
    return {tally("block-builder", "blocks.blockwise", o.trials, blockwise),
            result("block-builder", "blocks.homogeneous", o.trials, homog, 1e-12),
            tally("block-builder", "blocks.examples", 4, examples),
            from_defect("block-builder", "blocks.quasilinear_le_sum_c_8L_over_e", q),
            tally("block-builder", "blocks.default_schedule_delta_nondecreasing", schedule.size(), growth_fail)};
}

// ---- manifest ---------------------------------------------------------------

struct SuiteEntry {
    std::string module;
    std::function<std::vector<CheckResult>(const SuiteOptions&)> run;
};

namespace suite_detail {

template <class F>
SuiteEntry single(std::string module, F f) {
    return {std::move(module), [f](const SuiteOptions& o) { return std::vector<CheckResult>{f(o)}; }};
}

}  // namespace suite_detail

inline std::vector<SuiteEntry> suite_manifest() {
    using suite_detail::single;
    return {
        single("group-core", check_group_construction),
        {"group-core", check_transforms},
        single("group-core", check_transform_examples),
        single("group-core", check_parseval),
        {"group-core", check_convolution},
        {"group-core", check_translation},
        single("group-core", check_norms),
        single("group-core", check_dissociate),
        single("kp-centralizer", check_profiles),
        {"kp-centralizer", check_kp_symmetries},
        {"kp-centralizer", check_mho_symmetries},
        {"kp-centralizer", check_kp_bounds},
        single("kp-centralizer", check_kp_examples),
        {"twisted-sum", check_twisted_sum},
        {"twisted-sum", check_delta_and_blocks},
        single("twisted-sum", check_twisted_examples),
        {"riesz-lab", check_riesz},
        single("riesz-lab", check_riesz_mho_diagonal),
        {"riesz-lab", check_witness},
        {"cantor-lab", check_subcubes_and_embeddings},
        {"cantor-lab", check_localization_and_symmetry},
        {"cantor-lab", check_copies},
        {"cantor-lab", check_walk_and_khintchine},
        {"block-builder", check_blocks},
    };
}

/// Runs every manifest entry in order.  A check that throws is reported as
/// failed with the exception text.
inline std::vector<CheckResult> run_suite(const SuiteOptions& o) {
    std::vector<CheckResult> out;
    for (const auto& entry : suite_manifest()) {
        try {
            for (auto& r : entry.run(o)) {
                out.push_back(std::move(r));
            }
        } catch (const std::exception& e) {
            CheckResult r;
            r.module = entry.module;
            r.name = entry.module + ".exception";
            r.observed = infinity;
            r.detail = e.what();
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace twisted_lab

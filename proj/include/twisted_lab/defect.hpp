#pragma once

// Sampled estimators for quasilinearity and centralizer constants.  They
// report the largest ratio seen over the sampled inputs, a lower estimate of
// the true constant, so they can confirm an upper bound but never certify it.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "twisted_lab/centralizer.hpp"
#include "twisted_lab/sampling.hpp"

namespace twisted_lab {

inline constexpr double degenerate_norm = 1e-12;

struct DefectReport {
    std::string map;
    std::size_t trials = 0;
    double max_defect = 0.0;
    double bound = 0.0;
    bool pass = false;
};

/// max over sampled pairs of ||Phi(x+y) - Phi x - Phi y|| / (||x|| + ||y||).
/// `sample` returns a pair; `domain_norm` and `codomain_norm` measure inputs
/// and outputs.  Pairs with ||x|| + ||y|| below 1e-12 are skipped.
template <class Map, class Sampler, class DomainNorm, class CodomainNorm>
double defect_quasilinear(Map&& map, Sampler&& sample, std::size_t trials, DomainNorm&& domain_norm,
                          CodomainNorm&& codomain_norm) {
    if (trials == 0) {
        throw std::invalid_argument("need at least one trial");
    }
    double worst = 0.0;
    std::size_t used = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto [x, y] = sample();
        const double denom = domain_norm(x) + domain_norm(y);
        if (denom < degenerate_norm) {
            continue;
        }
        ++used;
        auto diff = map(x + y);
        diff -= map(x);
        diff -= map(y);
        worst = std::max(worst, codomain_norm(diff) / denom);
    }
    if (used == 0) {
        throw std::invalid_argument("sampler produced only degenerate pairs");
    }
    return worst;
}

/// Quasilinear defect of one pair for the Kalton-Peck map in l_p.
inline double kp_pair_defect(const LipschitzProfile& phi, double p, const SpectrumFunction& x, const SpectrumFunction& y) {
    return defect_quasilinear([&](const SpectrumFunction& c) { return kp_map(phi, p, c); },
                              [&] { return std::pair{x, y}; }, 1,
                              [p](const SpectrumFunction& c) { return spectral_norm(c, p); },
                              [p](const SpectrumFunction& c) { return spectral_norm(c, p); });
}

/// Sampled quasilinear constant of the Kalton-Peck map on l_p of the dual of g.
inline DefectReport sample_kp_quasilinear(const LipschitzProfile& phi, double p, const FiniteAbelianGroup& g,
                                          std::size_t trials, std::uint64_t seed) {
    MixedSampler<spectrum_side> sampler(g, seed);
    DefectReport r;
    r.map = "kp_map[" + phi.name() + "]";
    r.trials = trials;
    r.max_defect = defect_quasilinear([&](const SpectrumFunction& c) { return kp_map(phi, p, c); },
                                      [&] { return sampler.next_pair(); }, trials,
                                      [p](const SpectrumFunction& c) { return spectral_norm(c, p); },
                                      [p](const SpectrumFunction& c) { return spectral_norm(c, p); });
    r.bound = quasilinear_bound(phi);
    r.pass = r.max_defect <= r.bound + 1e-9;
    return r;
}

/// Sampled quasilinear constant of mho from L_p to L_q.
inline DefectReport sample_mho_quasilinear(const CentralizerConfig& config, const FiniteAbelianGroup& g,
                                           std::size_t trials, std::uint64_t seed) {
    config.validate();
    MixedSampler<group_side> sampler(g, seed);
    DefectReport r;
    r.map = "mho[" + config.profile.name() + "]";
    r.trials = trials;
    r.max_defect = defect_quasilinear([&](const GroupFunction& f) { return mho(config, f); },
                                      [&] { return sampler.next_pair(); }, trials,
                                      [&](const GroupFunction& f) { return norm(f, config.p); },
                                      [&](const GroupFunction& f) { return norm(f, config.q); });
    r.bound = quasilinear_bound(config.profile);
    r.pass = r.max_defect <= r.bound + 1e-9;
    return r;
}

/// ||mho(a*f) - a*mho(f)||_q / (||a||_1 ||f||_p).
inline double defect_l1(const CentralizerConfig& config, const GroupFunction& a, const GroupFunction& f) {
    require_same_group(a.group(), f.group());
    const double denom = norm(a, 1.0) * norm(f, config.p);
    if (denom <= degenerate_norm) {
        throw std::invalid_argument("degenerate input to the centralizer defect");
    }
    auto diff = mho(config, convolve(a, f));
    diff -= convolve(a, mho(config, f));
    return norm(diff, config.q) / denom;
}

/// Same ratio for the pointwise map Phi(f) = f phi(log(||f||_p/|f|)) acting
/// on L_p, with convolution as the module action.
inline double pointwise_defect_l1(const LipschitzProfile& phi, double p, const GroupFunction& a, const GroupFunction& f) {
    require_same_group(a.group(), f.group());
    const double denom = norm(a, 1.0) * norm(f, p);
    if (denom <= degenerate_norm) {
        throw std::invalid_argument("degenerate input to the centralizer defect");
    }
    auto diff = pointwise_kp(phi, p, convolve(a, f));
    diff -= convolve(a, pointwise_kp(phi, p, f));
    return norm(diff, p) / denom;
}

namespace detail {

template <class Defect>
DefectReport sample_l1_defect(std::string name, const FiniteAbelianGroup& g, std::size_t trials, std::uint64_t seed,
                              double bound, Defect&& defect) {
    if (trials == 0) {
        throw std::invalid_argument("need at least one trial");
    }
    MixedSampler<group_side> sampler(g, seed);
    DefectReport r;
    r.map = std::move(name);
    r.trials = trials;
    std::size_t used = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto a = sampler.next();
        const auto f = sampler.next();
        if (norm(a, 1.0) * norm(f, 2.0) <= degenerate_norm) {
            continue;
        }
        ++used;
        r.max_defect = std::max(r.max_defect, defect(a, f));
    }
    if (used == 0) {
        throw std::invalid_argument("sampler produced only degenerate pairs");
    }
    r.bound = bound;
    r.pass = r.max_defect <= r.bound + 1e-9;
    return r;
}

}  // namespace detail

/// Sampled L_1(G)-centralizer constant of mho.
inline DefectReport sample_mho_centralizer(const CentralizerConfig& config, const FiniteAbelianGroup& g,
                                           std::size_t trials, std::uint64_t seed) {
    config.validate();
    return detail::sample_l1_defect("mho_l1[" + config.profile.name() + "]", g, trials, seed,
                                    centralizer_bound(config.profile),
                                    [&](const GroupFunction& a, const GroupFunction& f) { return defect_l1(config, a, f); });
}

/// Sampled L_1(G)-centralizer constant of the pointwise map.
inline DefectReport sample_pointwise_centralizer(const LipschitzProfile& phi, double p, const FiniteAbelianGroup& g,
                                                 std::size_t trials, std::uint64_t seed) {
    return detail::sample_l1_defect("pointwise_l1[" + phi.name() + "]", g, trials, seed, centralizer_bound(phi),
                                    [&](const GroupFunction& a, const GroupFunction& f) {
                                        return pointwise_defect_l1(phi, p, a, f);
                                    });
}

}  // namespace twisted_lab

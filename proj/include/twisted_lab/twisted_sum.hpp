#pragma once

// The twisted sum L_q (+)_mho L_p: pairs (g, f) with quasinorm
// ||g - mho(f)||_q + ||f||_p, the L_1-module action by convolution, and two
// finite diagnostics built on top of it.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "twisted_lab/centralizer.hpp"

namespace twisted_lab {

struct TwistedPair {
    GroupFunction g;  // Y-coordinate
    GroupFunction f;  // X-coordinate
};

inline double twisted_quasinorm(const CentralizerConfig& config, const TwistedPair& pair) {
    require_same_group(pair.g.group(), pair.f.group());
    return norm(pair.g - mho(config, pair.f), config.q) + norm(pair.f, config.p);
}

/// a(g, f) = (a*g, a*f).
inline TwistedPair act(const GroupFunction& a, const TwistedPair& pair) {
    require_same_group(pair.g.group(), pair.f.group());
    require_same_group(a.group(), pair.f.group());
    return {convolve(a, pair.g), convolve(a, pair.f)};
}

inline TwistedPair operator+(const TwistedPair& x, const TwistedPair& y) { return {x.g + y.g, x.f + y.f}; }

struct DeltaReport {
    std::size_t witness_count = 0;
    double max_ratio = 0.0;
    double delta_lower = 0.0;
};

/// Lower bound for the distance from mho^{inf,1} to the linear maps:
///   (max_f ||mho f||_1 / ||f||_inf - ||mho(1_G)||_1) / 2, floored at 0.
/// Witnesses may live on different groups; each is compared with the
/// constant function of its own group.
inline DeltaReport delta_lower(const CentralizerConfig& config, std::span<const GroupFunction> witnesses) {
    if (witnesses.empty()) {
        throw std::invalid_argument("delta_lower needs at least one witness");
    }
    DeltaReport r;
    r.witness_count = witnesses.size();
    double best = -infinity;
    for (const auto& w : witnesses) {
        const double sup = norm(w, infinity);
        if (sup == 0.0) {
            throw std::invalid_argument("witness must be nonzero");
        }
        const double ratio = norm(mho(config, w), 1.0) / sup;
        const double offset = norm(mho(config, constant_one(w.group())), 1.0);
        r.max_ratio = std::max(r.max_ratio, ratio);
        best = std::max(best, ratio - offset);
    }
    r.delta_lower = std::max(0.0, best / 2.0);
    return r;
}

/// Indicator of the subcube {t : t(k) = eps(k) for k in a} of Delta_N.
/// `a` and `negative` are bitmasks over coordinates (bit k <-> coordinate
/// k+1); `negative` marks the coordinates of a where eps = -1.
inline GroupFunction subcube_indicator_mask(const FiniteAbelianGroup& g, std::uint64_t a, std::uint64_t negative) {
    GroupFunction out(g);
    for (std::size_t x = 0; x < g.size(); ++x) {
        if ((x & a) == negative) {
            out[x] = 1.0;
        }
    }
    return out;
}

/// Per-input defect of the decomposition of mho along the partition of
/// Delta_N into the 2^{|a|} subcubes fixed on a:
///   ||mho f - sum_eps mho(f 1_{Delta(a,eps)})||_q / ||f||_p.
inline double block_defect(const CentralizerConfig& config, std::uint64_t a, const GroupFunction& f) {
    const auto& g = f.group();
    if (!g.is_two_group()) {
        throw std::invalid_argument("block decomposition needs a 2-group");
    }
    if (g.rank() < 64 && (a >> g.rank()) != 0) {
        throw std::invalid_argument("coordinate set exceeds the group rank");
    }
    const double denom = norm(f, config.p);
    if (denom <= 1e-12) {
        throw std::invalid_argument("block defect of the zero function");
    }
    auto diff = mho(config, f);
    // Enumerate every sign pattern eps as a submask of a.
    std::uint64_t eps = 0;
    do {
        diff -= mho(config, f * subcube_indicator_mask(g, a, eps));
        eps = (eps - a) & a;
    } while (eps != 0);
    return norm(diff, config.q) / denom;
}

/// The bound Q(mho) ceil(log2 k) R for the block defect of f, with k = 2^{|a|}
/// blocks and R = sum_eps ||f 1_eps||_p / ||f||_p.
inline double block_defect_bound(const CentralizerConfig& config, std::uint64_t a, const GroupFunction& f) {
    const auto& g = f.group();
    const int blocks_log2 = std::popcount(a);
    double pieces = 0.0;
    std::uint64_t eps = 0;
    do {
        pieces += norm(f * subcube_indicator_mask(g, a, eps), config.p);
        eps = (eps - a) & a;
    } while (eps != 0);
    return quasilinear_bound(config.profile) * blocks_log2 * pieces / norm(f, config.p);
}

}  // namespace twisted_lab

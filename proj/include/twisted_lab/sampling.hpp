#pragma once

// Seeded random inputs for the sampled estimators.  Besides dense Gaussian
// data the samplers mix in structured families (characters, indicators,
// sparse vectors, short products) since that is where defects peak.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

#include "twisted_lab/group.hpp"

namespace twisted_lab {

using Rng = std::mt19937_64;

inline complex gaussian_complex(Rng& rng) {
    std::normal_distribution<double> n01(0.0, 1.0);
    const double re = n01(rng);
    const double im = n01(rng);
    return {re, im};
}

template <class Side>
BasicFunction<Side> gaussian_function(const FiniteAbelianGroup& g, Rng& rng) {
    BasicFunction<Side> out(g);
    for (auto& v : out.values()) {
        v = gaussian_complex(rng);
    }
    return out;
}

/// Draws functions (on either side) from a mixture of families.
template <class Side>
class MixedSampler {
public:
    MixedSampler(FiniteAbelianGroup g, std::uint64_t seed) : group_(std::move(g)), rng_(seed) {}

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    Rng& rng() noexcept { return rng_; }

    BasicFunction<Side> next() {
        const auto n = group_.size();
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        switch (std::uniform_int_distribution<int>(0, 5)(rng_)) {
            case 0:
                return gaussian_function<Side>(group_, rng_);
            case 1: {
                // sparse, random density
                const double density = unit(rng_);
                BasicFunction<Side> out(group_);
                for (auto& v : out.values()) {
                    if (unit(rng_) < density) {
                        v = gaussian_complex(rng_);
                    }
                }
                out[pick(rng_)] = gaussian_complex(rng_);
                return out;
            }
            case 2: {
                // a single coefficient
                BasicFunction<Side> out(group_);
                out[pick(rng_)] = gaussian_complex(rng_);
                return out;
            }
            case 3: {
                // indicator of a random set times a scalar
                const double density = unit(rng_);
                const complex s = gaussian_complex(rng_);
                BasicFunction<Side> out(group_);
                for (auto& v : out.values()) {
                    if (unit(rng_) < density) {
                        v = s;
                    }
                }
                out[pick(rng_)] = s;
                return out;
            }
            case 4: {
                // a few entries of wildly different sizes
                BasicFunction<Side> out(group_);
                const auto k = std::uniform_int_distribution<int>(1, 4)(rng_);
                for (int i = 0; i < k; ++i) {
                    const double scale = std::exp(std::uniform_real_distribution<double>(-8.0, 2.0)(rng_));
                    out[pick(rng_)] += scale * gaussian_complex(rng_);
                }
                return out;
            }
            default: {
                // short product of 1 + t_j gamma_j, evaluated on the group
                // side; on the spectral side the same recipe gives a vector
                // with geometric-looking magnitudes.
                BasicFunction<Side> out(group_);
                for (auto& v : out.values()) {
                    v = 1.0;
                }
                const auto k = std::uniform_int_distribution<int>(1, 4)(rng_);
                for (int i = 0; i < k; ++i) {
                    const std::size_t gamma = pick(rng_);
                    const complex t = 0.5 * gaussian_complex(rng_);
                    for (std::size_t x = 0; x < n; ++x) {
                        out[x] *= complex{1.0, 0.0} + t * group_.character(gamma, x);
                    }
                }
                return out;
            }
        }
    }

    /// Pairs for quasilinearity: independent draws, scalar multiples, and
    /// near-cancelling pairs.
    std::pair<BasicFunction<Side>, BasicFunction<Side>> next_pair() {
        auto x = next();
        switch (std::uniform_int_distribution<int>(0, 3)(rng_)) {
            case 0: {
                const complex lambda = gaussian_complex(rng_);
                auto y = lambda * x;
                return {std::move(x), std::move(y)};
            }
            case 1: {
                auto y = -x;
                auto e = next();
                e *= 1e-3;
                y += e;
                return {std::move(x), std::move(y)};
            }
            default: {
                auto y = next();
                return {std::move(x), std::move(y)};
            }
        }
    }

private:
    FiniteAbelianGroup group_;
    Rng rng_;
};

}  // namespace twisted_lab

#pragma once

// The c_0 -> l_1 block map x = (x_k) -> (c_k mho_{n(k)}(x_k)), each mho_{n(k)}
// acting from L_inf(Delta_{n(k)}) to L_1(Delta_{n(k)}), and its growth
// diagnostics.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "twisted_lab/defect.hpp"
#include "twisted_lab/riesz.hpp"
#include "twisted_lab/twisted_sum.hpp"

namespace twisted_lab {

struct BlockSpec {
    std::vector<double> weights;     // c_k > 0
    std::vector<std::size_t> dims;   // n(k), strictly increasing
    LipschitzProfile profile = LipschitzProfile::identity();

    void validate() const {
        if (weights.size() != dims.size()) {
            throw std::invalid_argument("block weights and dimensions differ in length");
        }
        for (std::size_t k = 0; k < dims.size(); ++k) {
            if (!(weights[k] > 0.0)) {
                throw std::invalid_argument("block weights must be positive");
            }
            if (dims[k] == 0 || (k > 0 && dims[k] <= dims[k - 1])) {
                throw std::invalid_argument("block dimensions must be positive and increasing");
            }
        }
    }

    double weight_sum() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

    CentralizerConfig config() const { return {profile, infinity, 1.0, 2.0}; }
};

struct BlockVector {
    std::vector<GroupFunction> blocks;

    /// max_k ||x_k||_inf
    double domain_norm() const {
        double m = 0.0;
        for (const auto& b : blocks) {
            m = std::max(m, norm(b, infinity));
        }
        return m;
    }

    /// sum_k ||x_k||_1
    double codomain_norm() const {
        double s = 0.0;
        for (const auto& b : blocks) {
            s += norm(b, 1.0);
        }
        return s;
    }

    BlockVector& operator+=(const BlockVector& o) {
        if (o.blocks.size() != blocks.size()) {
            throw std::invalid_argument("block vectors differ in length");
        }
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            blocks[k] += o.blocks[k];
        }
        return *this;
    }

    BlockVector& operator-=(const BlockVector& o) {
        if (o.blocks.size() != blocks.size()) {
            throw std::invalid_argument("block vectors differ in length");
        }
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            blocks[k] -= o.blocks[k];
        }
        return *this;
    }

    BlockVector& operator*=(complex s) {
        for (auto& b : blocks) {
            b *= s;
        }
        return *this;
    }

    friend BlockVector operator+(BlockVector a, const BlockVector& b) { return a += b; }
    friend BlockVector operator-(BlockVector a, const BlockVector& b) { return a -= b; }
    friend BlockVector operator*(complex s, BlockVector a) { return a *= s; }
};

inline BlockVector zero_blocks(const BlockSpec& spec) {
    BlockVector v;
    for (auto n : spec.dims) {
        v.blocks.emplace_back(FiniteAbelianGroup::cantor(n));
    }
    return v;
}

inline BlockVector block_map(const BlockSpec& spec, const BlockVector& x) {
    spec.validate();
    if (x.blocks.size() != spec.dims.size()) {
        throw std::invalid_argument("block vector does not match the block spec");
    }
    const auto config = spec.config();
    BlockVector out;
    out.blocks.reserve(x.blocks.size());
    for (std::size_t k = 0; k < x.blocks.size(); ++k) {
        if (!(x.blocks[k].group() == FiniteAbelianGroup::cantor(spec.dims[k]))) {
            throw std::invalid_argument("block " + std::to_string(k + 1) + " has the wrong dimension");
        }
        out.blocks.push_back(spec.weights[k] * mho(config, x.blocks[k]));
    }
    return out;
}

struct ScheduleEntry {
    std::size_t k = 0;
    double weight = 0.0;
    /// Smallest n with weight * phi(log n) >= k; may be astronomically large.
    double required_n = 0.0;
    bool feasible = false;
};

/// c_k = 2^{-k}, n(k) = smallest n with c_k phi(log n) >= k, for k = 1..blocks;
/// entries needing n > max_n are kept but marked infeasible.
inline std::vector<ScheduleEntry> default_schedule(const LipschitzProfile& phi, std::size_t blocks = 8,
                                                   std::size_t max_n = 24) {
    std::vector<ScheduleEntry> out;
    for (std::size_t k = 1; k <= blocks; ++k) {
        ScheduleEntry e;
        e.k = k;
        e.weight = std::ldexp(1.0, -static_cast<int>(k));
        const double target = static_cast<double>(k) / e.weight;
        // phi is increasing on [0, inf): bracket log n, then bisect.
        double lo = 0.0;
        double hi = 1.0;
        while (phi(hi) < target && hi < 700.0) {
            lo = hi;
            hi *= 2.0;
        }
        if (phi(hi) < target) {
            e.required_n = infinity;
        } else {
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                (phi(mid) >= target ? hi : lo) = mid;
            }
            double n = std::max(1.0, std::ceil(std::exp(hi)));
            // Settle rounding in the bracket: step to the true minimum.  Past
            // 2^53 consecutive integers are not representable and the bisected
            // value is kept as is.
            if (n < 0x1p53) {
                while (n > 1.0 && e.weight * phi(std::log(n - 1.0)) >= static_cast<double>(k)) {
                    n -= 1.0;
                }
                while (e.weight * phi(std::log(n)) < static_cast<double>(k)) {
                    n += 1.0;
                }
            }
            e.required_n = n;
        }
        e.feasible = e.required_n <= static_cast<double>(max_n);
        out.push_back(e);
    }
    return out;
}

/// BlockSpec from the feasible prefix of a schedule.
inline BlockSpec spec_from_schedule(const std::vector<ScheduleEntry>& schedule, const LipschitzProfile& phi) {
    BlockSpec spec;
    spec.profile = phi;
    for (const auto& e : schedule) {
        if (!e.feasible) {
            break;
        }
        spec.weights.push_back(e.weight);
        spec.dims.push_back(static_cast<std::size_t>(e.required_n));
    }
    return spec;
}

/// Random block vectors, each block from a MixedSampler and sometimes zero.
class BlockSampler {
public:
    BlockSampler(const BlockSpec& spec, std::uint64_t seed) : rng_(seed) {
        for (std::size_t k = 0; k < spec.dims.size(); ++k) {
            samplers_.emplace_back(FiniteAbelianGroup::cantor(spec.dims[k]), seed + 1 + k);
        }
    }

    BlockVector next() {
        BlockVector v;
        for (auto& s : samplers_) {
            if (std::uniform_int_distribution<int>(0, 3)(rng_) == 0) {
                v.blocks.emplace_back(s.group());
            } else {
                v.blocks.push_back(s.next());
            }
        }
        return v;
    }

    std::pair<BlockVector, BlockVector> next_pair() {
        auto x = next();
        if (std::uniform_int_distribution<int>(0, 2)(rng_) == 0) {
            auto y = gaussian_complex(rng_) * x;
            return {std::move(x), std::move(y)};
        }
        return {std::move(x), next()};
    }

private:
    Rng rng_;
    std::vector<MixedSampler<group_side>> samplers_;
};

/// Sampled quasilinear constant of block_map in the (sup, sum) norms.
inline DefectReport sample_block_quasilinear(const BlockSpec& spec, std::size_t trials, std::uint64_t seed) {
    spec.validate();
    if (spec.dims.empty()) {
        throw std::invalid_argument("block spec has no blocks");
    }
    BlockSampler sampler(spec, seed);
    DefectReport r;
    r.map = "block_map[" + spec.profile.name() + "]";
    r.trials = trials;
    r.max_defect = defect_quasilinear([&](const BlockVector& x) { return block_map(spec, x); },
                                      [&] { return sampler.next_pair(); }, trials,
                                      [](const BlockVector& x) { return x.domain_norm(); },
                                      [](const BlockVector& x) { return x.codomain_norm(); });
    r.bound = spec.weight_sum() * quasilinear_bound(spec.profile);
    r.pass = r.max_defect <= r.bound + 1e-9;
    return r;
}

struct GrowthRow {
    std::size_t k = 0;
    double weight = 0.0;
    double n = 0.0;  // n(k), or the required n when infeasible
    bool feasible = false;
    double delta_lower = 0.0;
    double q_sampled = 0.0;
};

struct GrowthReport {
    std::string schedule;
    std::vector<GrowthRow> rows;
    /// delta_lower nondecreasing along the feasible prefix.
    bool nondecreasing = false;
    DefectReport total_q;
};

/// delta_lower of c_k mho on Delta_{n(k)} from the Riesz witness with
/// alpha, i.e. c_k (||mho f||_1 / ||f||_inf - ||mho 1||_1) / 2.
inline double block_delta_lower(const LipschitzProfile& phi, double weight, std::size_t n, double alpha = 2.0) {
    const auto f = riesz_product(RieszSpec::rademacher(n, alpha));
    const CentralizerConfig config{phi, infinity, 1.0, 2.0};
    const GroupFunction witnesses[] = {f};
    return weight * delta_lower(config, witnesses).delta_lower;
}

inline GrowthReport growth_report(const std::vector<ScheduleEntry>& schedule, const LipschitzProfile& phi,
                                  std::string schedule_name, std::size_t trials, std::uint64_t seed, double alpha = 2.0) {
    GrowthReport rep;
    rep.schedule = std::move(schedule_name);
    const auto spec = spec_from_schedule(schedule, phi);
    spec.validate();
    rep.nondecreasing = true;
    double prev = -infinity;
    for (const auto& e : schedule) {
        GrowthRow row;
        row.k = e.k;
        row.weight = e.weight;
        row.n = e.required_n;
        row.feasible = e.feasible;
        if (e.feasible) {
            const auto n = static_cast<std::size_t>(e.required_n);
            row.delta_lower = block_delta_lower(phi, e.weight, n, alpha);
            BlockSpec single{{e.weight}, {n}, phi};
            row.q_sampled = sample_block_quasilinear(single, trials, seed + e.k).max_defect;
            rep.nondecreasing = rep.nondecreasing && row.delta_lower >= prev;
            prev = row.delta_lower;
        }
        rep.rows.push_back(row);
    }
    if (!spec.dims.empty()) {
        rep.total_q = sample_block_quasilinear(spec, trials, seed);
    }
    return rep;
}

}  // namespace twisted_lab

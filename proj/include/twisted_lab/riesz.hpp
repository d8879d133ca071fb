#pragma once

// Riesz products over a dissociate set and the witness that mho^{inf,1}
// grows without bound on them.
//
//   ddagger (every gamma_j of order 2):  f = prod (1 + i gamma_j / (alpha sqrt N))
//   dagger  (no gamma_j of order 2):     f = prod (1 + i/(alpha sqrt N) (gamma_j + conj gamma_j)/2)
//
// A character of length k (k generators with nonzero exponent) carries the
// coefficient (i/(alpha sqrt N))^k, resp. (i/(2 alpha sqrt N))^k.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twisted_lab/centralizer.hpp"
#include "twisted_lab/dissociate.hpp"

namespace twisted_lab {

enum class RieszCase { dagger, ddagger };

inline std::string_view to_string(RieszCase c) { return c == RieszCase::dagger ? "dagger" : "ddagger"; }

inline RieszCase parse_riesz_case(std::string_view s) {
    if (s == "dagger") {
        return RieszCase::dagger;
    }
    if (s == "ddagger") {
        return RieszCase::ddagger;
    }
    throw std::invalid_argument("case must be 'dagger' or 'ddagger'");
}

/// Default group budget (number of points) for any single function.
inline constexpr std::size_t default_budget = std::size_t{1} << 24;

class RieszSpec {
public:
    /// Largest N for which dissociateness is verified exhaustively.
    static constexpr std::size_t verified_up_to = max_dissociate_check;

    RieszSpec(FiniteAbelianGroup group, std::vector<std::size_t> sigma, double alpha, RieszCase c, bool verify = true)
        : group_(std::move(group)), sigma_(std::move(sigma)), alpha_(alpha), case_(c) {
        if (sigma_.empty()) {
            throw std::invalid_argument("Riesz product needs at least one character");
        }
        if (!(alpha_ >= 1.0)) {
            throw std::invalid_argument("alpha must be at least 1");
        }
        require_distinct_characters(group_, sigma_);
        for (auto s : sigma_) {
            const bool order_two = group_.order_of(s) == 2;
            if (case_ == RieszCase::ddagger && !order_two) {
                throw std::invalid_argument("ddagger case needs characters of order 2");
            }
            if (case_ == RieszCase::dagger && order_two) {
                throw std::invalid_argument("dagger case excludes characters of order 2");
            }
        }
        if (verify && sigma_.size() <= verified_up_to && !is_dissociate(sigma_, group_)) {
            throw std::invalid_argument("character set is not dissociate");
        }
    }

    /// Rademachers r_1..r_N on Delta_N.  Dissociate by construction.
    static RieszSpec rademacher(std::size_t n, double alpha) {
        std::vector<std::size_t> sigma(n);
        for (std::size_t j = 0; j < n; ++j) {
            sigma[j] = std::size_t{1} << j;
        }
        return RieszSpec(FiniteAbelianGroup::cantor(n), std::move(sigma), alpha, RieszCase::ddagger, false);
    }

    /// gamma^{3^j}, j < N, on Z_M with M = 3^{N+1}.  Balanced ternary sums of
    /// at most N digits stay below M/2 in absolute value, so Gamma_N embeds
    /// without wrap-around; verified exhaustively for small N.
    static RieszSpec lacunary_cyclic(std::size_t n, double alpha, bool verify = true) {
        std::size_t m = 3;
        for (std::size_t j = 0; j < n; ++j) {
            m *= 3;
        }
        std::vector<std::size_t> sigma(n);
        std::size_t pw = 1;
        for (std::size_t j = 0; j < n; ++j) {
            sigma[j] = pw;
            pw *= 3;
        }
        return RieszSpec(FiniteAbelianGroup::cyclic(m), std::move(sigma), alpha, RieszCase::dagger, verify && n <= 8);
    }

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    const std::vector<std::size_t>& sigma() const noexcept { return sigma_; }
    std::size_t n() const noexcept { return sigma_.size(); }
    double alpha() const noexcept { return alpha_; }
    RieszCase riesz_case() const noexcept { return case_; }

    /// Coefficient ratio per generator: i/(alpha sqrt N) or i/(2 alpha sqrt N).
    complex step() const {
        const double base = 1.0 / (alpha_ * std::sqrt(static_cast<double>(n())));
        return {0.0, case_ == RieszCase::ddagger ? base : base / 2.0};
    }

    /// Length of every character: k >= 0 on Gamma_N, -1 off it.
    std::vector<int> lengths() const {
        std::vector<int> len(group_.size(), -1);
        // Walk all exponent patterns in {0, 1} (ddagger) or {0, 1, -1}
        // (dagger) as a counter.
        const int radix = case_ == RieszCase::ddagger ? 2 : 3;
        std::vector<int> digit(n(), 0);
        std::vector<std::size_t> powers_neg(n());
        for (std::size_t j = 0; j < n(); ++j) {
            powers_neg[j] = group_.negate(sigma_[j]);
        }
        while (true) {
            std::size_t idx = 0;
            int k = 0;
            for (std::size_t j = 0; j < n(); ++j) {
                if (digit[j] == 1) {
                    idx = group_.add(idx, sigma_[j]);
                    ++k;
                } else if (digit[j] == 2) {
                    idx = group_.add(idx, powers_neg[j]);
                    ++k;
                }
            }
            if (len[idx] != -1 && len[idx] != k) {
                throw std::logic_error("character set is not dissociate: ambiguous length");
            }
            len[idx] = k;
            std::size_t j = 0;
            while (j < digit.size() && ++digit[j] == radix) {
                digit[j++] = 0;
            }
            if (j == digit.size()) {
                break;
            }
        }
        return len;
    }

private:
    FiniteAbelianGroup group_;
    std::vector<std::size_t> sigma_;
    double alpha_;
    RieszCase case_;
};

/// The Riesz product evaluated pointwise on the group.
inline GroupFunction riesz_product(const RieszSpec& spec) {
    const auto& g = spec.group();
    const double scale = 1.0 / (spec.alpha() * std::sqrt(static_cast<double>(spec.n())));
    GroupFunction out = constant_one(g);
    if (g.is_two_group()) {
        // gamma_j(x) = +-1: the factor is 1 +- i scale.
        for (std::size_t x = 0; x < g.size(); ++x) {
            complex v{1.0, 0.0};
            for (auto s : spec.sigma()) {
                const double sign = std::popcount(static_cast<std::uint64_t>(s & x)) % 2 == 0 ? 1.0 : -1.0;
                v *= complex{1.0, sign * scale};
            }
            out[x] = v;
        }
        return out;
    }
    for (auto s : spec.sigma()) {
        for (std::size_t x = 0; x < g.size(); ++x) {
            const complex gx = g.character(s, x);
            const complex factor = spec.riesz_case() == RieszCase::ddagger
                                       ? complex{1.0, 0.0} + complex{0.0, scale} * gx
                                       : complex{1.0, 0.0} + complex{0.0, scale} * gx.real();
            out[x] *= factor;
        }
    }
    return out;
}

/// Spectrum predicted by the product expansion: step^length on Gamma_N.
inline SpectrumFunction riesz_spectrum(const RieszSpec& spec) {
    const auto len = spec.lengths();
    SpectrumFunction out(spec.group());
    // Repeated multiplication keeps the powers of i exactly real or imaginary.
    std::vector<complex> powers(spec.n() + 1, complex{1.0, 0.0});
    for (std::size_t k = 1; k < powers.size(); ++k) {
        powers[k] = powers[k - 1] * spec.step();
    }
    for (std::size_t i = 0; i < len.size(); ++i) {
        if (len[i] >= 0) {
            out[i] = powers[static_cast<std::size_t>(len[i])];
        }
    }
    return out;
}

struct LengthDecomposition {
    std::vector<GroupFunction> parts;  // f_0, ..., f_N
    std::vector<int> lengths;          // per character, -1 off Gamma_N
};

/// f = f_0 + ... + f_N with f_k collecting the characters of length k.
inline LengthDecomposition length_decompose(const GroupFunction& f, const RieszSpec& spec) {
    require_same_group(f.group(), spec.group());
    const auto spectrum = fourier_forward(f);
    LengthDecomposition d;
    d.lengths = spec.lengths();
    std::vector<SpectrumFunction> graded(spec.n() + 1, SpectrumFunction(spec.group()));
    double off = 0.0;
    for (std::size_t i = 0; i < d.lengths.size(); ++i) {
        if (d.lengths[i] < 0) {
            off = std::max(off, std::abs(spectrum[i]));
        } else {
            graded[static_cast<std::size_t>(d.lengths[i])][i] = spectrum[i];
        }
    }
    if (off > 1e-10) {
        throw std::invalid_argument("function has spectral mass off Gamma_N");
    }
    d.parts.reserve(graded.size());
    for (const auto& s : graded) {
        d.parts.push_back(fourier_inverse(s));
    }
    return d;
}

/// ||f_k||_2 from the closed form: (alpha sqrt N)^{-k} C(N,k)^{1/2} (ddagger)
/// and (2 alpha sqrt N)^{-k} (2^k C(N,k))^{1/2} (dagger).
inline double riesz_part_norm(const RieszSpec& spec, std::size_t k) {
    const double n = static_cast<double>(spec.n());
    const double log_binom = std::lgamma(n + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) - std::lgamma(n - static_cast<double>(k) + 1.0);
    const double kk = static_cast<double>(k);
    if (spec.riesz_case() == RieszCase::ddagger) {
        return std::exp(0.5 * log_binom - kk * std::log(spec.alpha() * std::sqrt(n)));
    }
    return std::exp(0.5 * (log_binom + kk * std::log(2.0)) - kk * std::log(2.0 * spec.alpha() * std::sqrt(n)));
}

/// ||f||_2 = (1 + 1/(alpha^2 N))^{N/2} (ddagger), (1 + 1/(2 alpha^2 N))^{N/2} (dagger).
inline double riesz_l2_norm(const RieszSpec& spec) {
    const double n = static_cast<double>(spec.n());
    const double a2 = spec.alpha() * spec.alpha();
    const double per = spec.riesz_case() == RieszCase::ddagger ? 1.0 / (a2 * n) : 1.0 / (2.0 * a2 * n);
    return std::pow(1.0 + per, n / 2.0);
}

/// 0.14 phi(log(2 sqrt N)) - 0.03.
inline double witness_bound_b1(const LipschitzProfile& phi, std::size_t n) {
    return 0.14 * phi(std::log(2.0 * std::sqrt(static_cast<double>(n)))) - 0.03;
}

/// 0.07 ln N.
inline double witness_bound_b2(std::size_t n) { return 0.07 * std::log(static_cast<double>(n)); }

struct WitnessRow {
    std::size_t n = 0;
    double linf_norm = 0.0;
    double l2_norm = 0.0;
    double mho_l1 = 0.0;
    double bound_b1 = 0.0;
    double bound_b2 = 0.0;
    bool pass_b1 = false;
    bool pass_b2 = false;
    /// Whether pass_b2 counts towards the verdict; only for phi = identity.
    bool b2_asserted = false;
    double seconds = 0.0;
};

struct WitnessReport {
    std::string profile;
    double alpha = 2.0;
    RieszCase riesz_case = RieszCase::ddagger;
    std::vector<WitnessRow> rows;

    bool pass() const {
        for (const auto& r : rows) {
            if (!r.pass_b1 || (r.b2_asserted && !r.pass_b2)) {
                return false;
            }
        }
        return !rows.empty();
    }
};

inline RieszSpec witness_spec(RieszCase c, std::size_t n, double alpha) {
    return c == RieszCase::ddagger ? RieszSpec::rademacher(n, alpha) : RieszSpec::lacunary_cyclic(n, alpha);
}

/// Points in the witness group for N generators, saturating at SIZE_MAX.
inline std::size_t witness_group_size(RieszCase c, std::size_t n) {
    const std::size_t base = c == RieszCase::ddagger ? 2 : 3;
    std::size_t size = c == RieszCase::ddagger ? 1 : 3;
    for (std::size_t j = 0; j < n; ++j) {
        if (size > std::numeric_limits<std::size_t>::max() / base) {
            return std::numeric_limits<std::size_t>::max();
        }
        size *= base;
    }
    return size;
}

/// One witness row: Riesz product on Delta_N (ddagger) or Z_{3^{N+1}}
/// (dagger), its norms, and ||mho f||_1 against the two bounds.
inline WitnessRow witness_row(const LipschitzProfile& phi, double alpha, std::size_t n, RieszCase c,
                              std::size_t budget = default_budget) {
    if (n == 0) {
        throw std::invalid_argument("N must be positive");
    }
    if (witness_group_size(c, n) > budget) {
        throw std::length_error("N=" + std::to_string(n) + " exceeds the group size budget");
    }
    const auto start = std::chrono::steady_clock::now();
    const auto spec = witness_spec(c, n, alpha);
    const auto f = riesz_product(spec);
    CentralizerConfig config{phi, infinity, 1.0, 2.0};
    WitnessRow row;
    row.n = n;
    row.linf_norm = norm(f, infinity);
    row.l2_norm = norm(f, 2.0);
    row.mho_l1 = norm(mho(config, f), 1.0);
    row.bound_b1 = witness_bound_b1(phi, n);
    row.bound_b2 = witness_bound_b2(n);
    row.pass_b1 = row.mho_l1 >= row.bound_b1;
    row.pass_b2 = row.mho_l1 >= row.bound_b2;
    row.b2_asserted = phi.kind() == LipschitzProfile::Kind::identity;
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

inline WitnessReport witness(const LipschitzProfile& phi, double alpha, std::span<const std::size_t> n_list, RieszCase c,
                             std::size_t budget = default_budget) {
    if (!phi.concave_on_half_line() || phi.lipschitz_constant() > 1.0) {
        throw std::invalid_argument("witness bounds need a concave profile with Lipschitz constant <= 1");
    }
    WitnessReport report;
    report.profile = phi.name();
    report.alpha = alpha;
    report.riesz_case = c;
    for (auto n : n_list) {
        report.rows.push_back(witness_row(phi, alpha, n, c, budget));
    }
    return report;
}

}  // namespace twisted_lab

#pragma once

// Kalton-Peck maps and the centralizers on L_p(G) obtained by conjugating
// them with the Fourier transform.

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "twisted_lab/harmonic.hpp"
#include "twisted_lab/profile.hpp"

namespace twisted_lab {

/// Upper bound for the quasilinearity constant of a Kalton-Peck map.
inline double quasilinear_bound(const LipschitzProfile& phi) {
    return 8.0 * phi.lipschitz_constant() / std::numbers::e;
}

/// Upper bound for its l_inf-centralizer constant.
inline double centralizer_bound(const LipschitzProfile& phi) {
    return 2.0 * phi.lipschitz_constant() / std::numbers::e;
}

struct CentralizerConfig {
    LipschitzProfile profile = LipschitzProfile::identity();
    /// Domain exponent p, used for ||f||_p in the estimators.
    double p = 2.0;
    /// Codomain exponent q.
    double q = 2.0;
    /// Exponent inside the Kalton-Peck formula.
    double spectral_p = 2.0;

    /// q <= 2 <= p, the range in which mho^{pq} is a well-defined centralizer.
    void validate() const {
        if (!(q >= 1.0 && q <= 2.0 && p >= 2.0)) {
            throw std::domain_error("centralizer exponents must satisfy 1 <= q <= 2 <= p <= inf");
        }
        if (!(spectral_p >= 1.0)) {
            throw std::domain_error("spectral exponent must be >= 1");
        }
    }
};

/// Kalton-Peck map on a coefficient sequence:
///   out(i) = c(i) phi(log(||c||_p / |c(i)|)),  out(i) = 0 where c(i) = 0.
inline std::vector<complex> kp_sequence(const LipschitzProfile& phi, double p, std::span<const complex> c) {
    std::vector<complex> out(c.size(), complex{0.0, 0.0});
    const double total = sequence_norm(c, p);
    if (total == 0.0) {
        return out;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double mod = std::abs(c[i]);
        if (mod == 0.0) {
            continue;
        }
        out[i] = c[i] * phi(std::log(total / mod));
    }
    return out;
}

inline SpectrumFunction kp_map(const LipschitzProfile& phi, double p, const SpectrumFunction& c) {
    return SpectrumFunction(c.group(), kp_sequence(phi, p, c.values()));
}

/// mho(f) = F^{-1} Omega(F f).  As a map it does not depend on (p, q).
inline GroupFunction mho(const CentralizerConfig& config, const GroupFunction& f) {
    return fourier_inverse(kp_map(config.profile, config.spectral_p, fourier_forward(f)));
}

inline void require_distinct_characters(const FiniteAbelianGroup& g, std::span<const std::size_t> sigma) {
    std::unordered_set<std::size_t> seen;
    for (auto c : sigma) {
        g.check_index(c);
        if (!seen.insert(c).second) {
            throw std::invalid_argument("duplicate character in set");
        }
    }
}

/// mho_Sigma(f) = S Omega(F f restricted to Sigma), S(c) = sum c(gamma) gamma.
inline GroupFunction mho_sidon(const CentralizerConfig& config, std::span<const std::size_t> sigma, const GroupFunction& f) {
    const auto& g = f.group();
    require_distinct_characters(g, sigma);
    const auto spectrum = fourier_forward(f);
    std::vector<complex> restricted(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        restricted[j] = spectrum[sigma[j]];
    }
    const auto mapped = kp_sequence(config.profile, config.spectral_p, restricted);
    SpectrumFunction out(g);
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        out[sigma[j]] = mapped[j];
    }
    return fourier_inverse(out);
}

/// Pointwise Kalton-Peck map on the group side,
///   Phi(f)(x) = f(x) phi(log(||f||_p / |f(x)|)),
/// with ||.||_p taken against normalized Haar measure.
inline GroupFunction pointwise_kp(const LipschitzProfile& phi, double p, const GroupFunction& f) {
    GroupFunction out(f.group());
    const double total = norm(f, p);
    if (total == 0.0) {
        return out;
    }
    for (std::size_t x = 0; x < f.size(); ++x) {
        const double mod = std::abs(f[x]);
        if (mod != 0.0) {
            out[x] = f[x] * phi(std::log(total / mod));
        }
    }
    return out;
}

}  // namespace twisted_lab

#pragma once

// Cantor-group machinery on Delta_N = {-1, 1}^N: subcubes Delta(a, eps), the
// embeddings E of Delta_{N-|a|} onto a subcube and their spectral pieces E^b,
// support localization, and two Rademacher averages (random-walk mean and
// the Khintchine ratio).
//
// Coordinate sets are bitmasks, bit k standing for coordinate k+1.  A sign
// choice eps on a is stored as the submask of a where eps = -1.

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twisted_lab/centralizer.hpp"
#include "twisted_lab/twisted_sum.hpp"

namespace twisted_lab {

using CoordSet = std::uint64_t;

/// Bitmask from 1-based coordinates.
inline CoordSet coord_set(std::span<const std::size_t> coords) {
    CoordSet s = 0;
    for (auto k : coords) {
        if (k == 0 || k > 64) {
            throw std::invalid_argument("coordinate out of range");
        }
        s |= CoordSet{1} << (k - 1);
    }
    return s;
}

inline CoordSet coord_set(std::initializer_list<std::size_t> coords) {
    return coord_set(std::span<const std::size_t>(coords.begin(), coords.size()));
}

inline bool within_rank(CoordSet a, std::size_t n) { return n >= 64 || (a >> n) == 0; }

struct SubcubeSpec {
    std::size_t n = 0;
    CoordSet a = 0;
    CoordSet negative = 0;  // where eps = -1, a submask of a

    void validate() const {
        if (!within_rank(a, n)) {
            throw std::invalid_argument("subcube coordinates exceed N");
        }
        if ((negative & ~a) != 0) {
            throw std::invalid_argument("sign choice must be a submask of a");
        }
    }

    bool contains(std::size_t x) const { return (x & a) == negative; }

    /// Haar measure 2^{-|a|}.
    double measure() const { return std::ldexp(1.0, -std::popcount(a)); }

    /// eps(k) for a 1-based coordinate k in a.
    int sign(std::size_t k) const { return (negative >> (k - 1)) & 1 ? -1 : 1; }
};

inline GroupFunction subcube_indicator(const SubcubeSpec& spec) {
    spec.validate();
    return subcube_indicator_mask(FiniteAbelianGroup::cantor(spec.n), spec.a, spec.negative);
}

/// Closed form of the indicator's spectrum: 2^{-|a|} prod_{k in b} eps(k) on
/// w_b for b a subset of a, zero elsewhere.
inline SpectrumFunction subcube_spectrum(const SubcubeSpec& spec) {
    spec.validate();
    SpectrumFunction out(FiniteAbelianGroup::cantor(spec.n));
    const double weight = spec.measure();
    CoordSet b = 0;
    do {
        out[b] = std::popcount(b & spec.negative) % 2 == 0 ? weight : -weight;
        b = (b - spec.a) & spec.a;
    } while (b != 0);
    return out;
}

/// Data of E: Delta_{N-|a|} -> functions supported on Delta(a, eps).
/// source_to_target[j] is the (0-based) target coordinate s(j+1) - 1.
struct EmbeddingSpec {
    SubcubeSpec cube;
    std::vector<unsigned> source_to_target;

    /// s = increasing enumeration of {1..N} \ a.
    static EmbeddingSpec canonical(std::size_t n, CoordSet a, CoordSet negative) {
        EmbeddingSpec e{{n, a, negative}, {}};
        e.cube.validate();
        if (n > 63) {
            throw std::invalid_argument("embedding target too large");
        }
        for (unsigned k = 0; k < n; ++k) {
            if (((a >> k) & 1) == 0) {
                e.source_to_target.push_back(k);
            }
        }
        return e;
    }

    std::size_t target_rank() const { return cube.n; }
    std::size_t source_rank() const { return source_to_target.size(); }

    /// s(d) as a target coordinate set, for a source set d.
    CoordSet lift(CoordSet d) const {
        CoordSet out = 0;
        for (std::size_t j = 0; j < source_to_target.size(); ++j) {
            if ((d >> j) & 1) {
                out |= CoordSet{1} << source_to_target[j];
            }
        }
        return out;
    }

    /// (sigma x)(j) = x(s(j)): reads the source point off a target point.
    std::size_t pull(std::size_t x) const {
        std::size_t out = 0;
        for (std::size_t j = 0; j < source_to_target.size(); ++j) {
            out |= ((x >> source_to_target[j]) & 1) << j;
        }
        return out;
    }
};

inline void require_source(const EmbeddingSpec& spec, const GroupFunction& f) {
    if (!(f.group() == FiniteAbelianGroup::cantor(spec.source_rank()))) {
        throw std::invalid_argument("function does not live on the embedding's source group");
    }
}

/// (Ef)(x) = f(sigma x) on Delta(a, eps), 0 elsewhere.
inline GroupFunction embed(const EmbeddingSpec& spec, const GroupFunction& f) {
    require_source(spec, f);
    const auto target = FiniteAbelianGroup::cantor(spec.target_rank());
    GroupFunction out(target);
    for (std::size_t x = 0; x < target.size(); ++x) {
        if (spec.cube.contains(x)) {
            out[x] = f[spec.pull(x)];
        }
    }
    return out;
}

/// c_b = 2^{-|a|} prod_{k in b} eps(k).
inline double eb_weight(const EmbeddingSpec& spec, CoordSet b) {
    const double w = spec.cube.measure();
    return std::popcount(b & spec.cube.negative) % 2 == 0 ? w : -w;
}

/// E^b sends w_d to c_b w_{b symmetric-difference s(d)}.
inline GroupFunction eb_operator(const EmbeddingSpec& spec, CoordSet b, const GroupFunction& f) {
    require_source(spec, f);
    if ((b & ~spec.cube.a) != 0) {
        throw std::invalid_argument("b must be a subset of a");
    }
    const auto source_spec = fourier_forward(f);
    SpectrumFunction out(FiniteAbelianGroup::cantor(spec.target_rank()));
    const double cb = eb_weight(spec, b);
    for (std::size_t d = 0; d < source_spec.size(); ++d) {
        out[b ^ spec.lift(d)] = cb * source_spec[d];
    }
    return fourier_inverse(out);
}

/// 37, the K-space constant of Hilbert space.
inline constexpr double hilbert_k_constant = 37.0;

struct CopiesReport {
    std::vector<double> defects;
    double max_defect = 0.0;
    double bound = 0.0;
    bool pass = false;
};

/// d(f) = ||mho(Ef) - E(mho f)||_2 / ||f||_2 for every sample, against
/// 37 Q(Omega) with Q(Omega) <= 8 L_phi / e.
inline CopiesReport copies_report(const EmbeddingSpec& spec, const LipschitzProfile& phi,
                                  std::span<const GroupFunction> samples) {
    if (samples.empty()) {
        throw std::invalid_argument("copies report needs samples");
    }
    const CentralizerConfig config{phi, 2.0, 2.0, 2.0};
    CopiesReport r;
    r.bound = hilbert_k_constant * quasilinear_bound(phi);
    for (const auto& f : samples) {
        const double nf = norm(f, 2.0);
        if (nf <= 1e-12) {
            throw std::invalid_argument("zero sample in copies report");
        }
        auto diff = mho(config, embed(spec, f));
        diff -= embed(spec, mho(config, f));
        const double d = norm(diff, 2.0) / nf;
        r.defects.push_back(d);
        r.max_defect = std::max(r.max_defect, d);
    }
    r.pass = r.max_defect <= r.bound + 1e-9;
    return r;
}

/// The three equivalent descriptions of supp f contained in Delta(a, eps).
struct LocalizationCheck {
    bool support = false;     // f = 0 off Delta(a, eps)
    bool rademacher = false;  // r_k f = eps(k) f for k in a
    bool spectral = false;    // f^(d xor {k}) = eps(k) f^(d) for k in a, all d

    bool agree() const { return support == rademacher && rademacher == spectral; }
};

inline LocalizationCheck localization_conditions(const GroupFunction& f, const SubcubeSpec& cube, double tol = 1e-10) {
    cube.validate();
    if (!(f.group() == FiniteAbelianGroup::cantor(cube.n))) {
        throw std::invalid_argument("function does not live on Delta_N");
    }
    const double scale = std::max(1.0, norm(f, infinity));
    LocalizationCheck c;
    c.support = true;
    for (std::size_t x = 0; x < f.size() && c.support; ++x) {
        if (!cube.contains(x) && std::abs(f[x]) > tol * scale) {
            c.support = false;
        }
    }
    c.rademacher = true;
    c.spectral = true;
    const auto spectrum = fourier_forward(f);
    for (unsigned k = 0; k < cube.n; ++k) {
        if (((cube.a >> k) & 1) == 0) {
            continue;
        }
        const double eps = ((cube.negative >> k) & 1) ? -1.0 : 1.0;
        for (std::size_t x = 0; x < f.size() && c.rademacher; ++x) {
            const double rk = ((x >> k) & 1) ? -1.0 : 1.0;
            if (std::abs(rk * f[x] - eps * f[x]) > tol * scale) {
                c.rademacher = false;
            }
        }
        for (std::size_t d = 0; d < spectrum.size() && c.spectral; ++d) {
            if (std::abs(spectrum[d ^ (std::size_t{1} << k)] - eps * spectrum[d]) > tol * scale) {
                c.spectral = false;
            }
        }
    }
    return c;
}

/// y with y(n) = 1 off a and eps(n) eta(n) on a; x -> x y^{-1} swaps
/// Delta(a, eps) and Delta(a, eta).
inline std::size_t conjugating_element(CoordSet a, CoordSet eps_negative, CoordSet eta_negative) {
    return static_cast<std::size_t>((eps_negative ^ eta_negative) & a);
}

struct WalkMean {
    double exact = 0.0;
    double ratio = 0.0;
};

/// E|r_1 + ... + r_N| = 2^{-N} sum_k |2k - N| C(N, k), with exact integer
/// binomials, and its ratio to sqrt(2N/pi).
inline WalkMean walk_mean(std::size_t n) {
    using boost::multiprecision::cpp_int;
    if (n == 0) {
        throw std::invalid_argument("walk length must be positive");
    }
    cpp_int binom = 1;
    cpp_int total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        const auto dev = static_cast<long long>(2 * k) - static_cast<long long>(n);
        total += binom * static_cast<unsigned long long>(dev < 0 ? -dev : dev);
        binom *= static_cast<unsigned long long>(n - k);
        binom /= static_cast<unsigned long long>(k + 1);
    }
    // total / 2^n, rounding only once: keep the top 62 bits of total.
    const auto bits = total == 0 ? 0u : boost::multiprecision::msb(total) + 1;
    const unsigned shift = bits > 62 ? static_cast<unsigned>(bits - 62) : 0u;
    const auto top = static_cast<std::uint64_t>(total >> shift);
    WalkMean w;
    w.exact = std::ldexp(static_cast<double>(top), static_cast<int>(shift) - static_cast<int>(n));
    w.ratio = w.exact / std::sqrt(2.0 * static_cast<double>(n) / std::numbers::pi);
    return w;
}

/// ||sum a_i r_i||_{L_p(Delta_k)} / ||a||_2, averaged exactly over Delta_k.
inline double khintchine_ratio(std::span<const double> a, double p) {
    if (a.empty() || a.size() > 30) {
        throw std::invalid_argument("coefficient vector must have length 1..30");
    }
    double l2 = 0.0;
    for (auto v : a) {
        l2 += v * v;
    }
    if (l2 == 0.0) {
        throw std::invalid_argument("coefficient vector must be nonzero");
    }
    const auto g = FiniteAbelianGroup::cantor(a.size());
    GroupFunction f(g);
    for (std::size_t x = 0; x < g.size(); ++x) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            s += ((x >> i) & 1) ? -a[i] : a[i];
        }
        f[x] = s;
    }
    return norm(f, p) / std::sqrt(l2);
}

}  // namespace twisted_lab

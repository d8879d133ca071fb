#pragma once

// Brute-force evaluations straight from the definitions.  They share no code
// with the fast paths and serve as oracles for tests and the invariant suite.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "twisted_lab/group.hpp"

namespace twisted_lab::reference {

/// exp(2 pi i sum_j a_j x_j / m_j) from coordinates, in long double.
inline complex character(const FiniteAbelianGroup& g, std::size_t a, std::size_t x) {
    const auto ac = g.coordinates(a);
    const auto xc = g.coordinates(x);
    long double turns = 0.0L;
    for (std::size_t j = 0; j < ac.size(); ++j) {
        turns += static_cast<long double>((ac[j] * xc[j]) % g.orders()[j]) / static_cast<long double>(g.orders()[j]);
    }
    turns -= std::floor(turns);
    const long double angle = 2.0L * std::numbers::pi_v<long double> * turns;
    return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

/// (1/|G|) sum_x f(x) conj(gamma(x)) by the double sum.
inline SpectrumFunction dft(const GroupFunction& f) {
    const auto& g = f.group();
    SpectrumFunction out(g);
    for (std::size_t a = 0; a < g.size(); ++a) {
        std::complex<long double> s{0.0L, 0.0L};
        for (std::size_t x = 0; x < g.size(); ++x) {
            const auto c = std::conj(character(g, a, x));
            s += std::complex<long double>(f[x].real(), f[x].imag()) * std::complex<long double>(c.real(), c.imag());
        }
        s /= static_cast<long double>(g.size());
        out[a] = {static_cast<double>(s.real()), static_cast<double>(s.imag())};
    }
    return out;
}

/// sum_gamma c(gamma) gamma(x) by the double sum.
inline GroupFunction inverse_dft(const SpectrumFunction& c) {
    const auto& g = c.group();
    GroupFunction out(g);
    for (std::size_t x = 0; x < g.size(); ++x) {
        std::complex<long double> s{0.0L, 0.0L};
        for (std::size_t a = 0; a < g.size(); ++a) {
            const auto ch = character(g, a, x);
            s += std::complex<long double>(c[a].real(), c[a].imag()) * std::complex<long double>(ch.real(), ch.imag());
        }
        out[x] = {static_cast<double>(s.real()), static_cast<double>(s.imag())};
    }
    return out;
}

/// Full character matrix, computed once per group, for repeated naive
/// transforms.  Row a holds gamma_a(x) for every x.
class CharacterTable {
public:
    explicit CharacterTable(FiniteAbelianGroup g) : group_(std::move(g)), table_(group_.size() * group_.size()) {
        for (std::size_t a = 0; a < group_.size(); ++a) {
            for (std::size_t x = 0; x < group_.size(); ++x) {
                table_[a * group_.size() + x] = character(group_, a, x);
            }
        }
    }

    const FiniteAbelianGroup& group() const noexcept { return group_; }

    SpectrumFunction dft(const GroupFunction& f) const {
        require_same_group(f.group(), group_);
        const std::size_t n = group_.size();
        SpectrumFunction out(group_);
        for (std::size_t a = 0; a < n; ++a) {
            long double re = 0.0L;
            long double im = 0.0L;
            const complex* row = &table_[a * n];
            for (std::size_t x = 0; x < n; ++x) {
                // f(x) * conj(gamma_a(x))
                re += static_cast<long double>(f[x].real()) * row[x].real() + static_cast<long double>(f[x].imag()) * row[x].imag();
                im += static_cast<long double>(f[x].imag()) * row[x].real() - static_cast<long double>(f[x].real()) * row[x].imag();
            }
            out[a] = {static_cast<double>(re / n), static_cast<double>(im / n)};
        }
        return out;
    }

    GroupFunction inverse_dft(const SpectrumFunction& c) const {
        require_same_group(c.group(), group_);
        const std::size_t n = group_.size();
        GroupFunction out(group_);
        for (std::size_t x = 0; x < n; ++x) {
            long double re = 0.0L;
            long double im = 0.0L;
            for (std::size_t a = 0; a < n; ++a) {
                const complex ch = table_[a * n + x];
                re += static_cast<long double>(c[a].real()) * ch.real() - static_cast<long double>(c[a].imag()) * ch.imag();
                im += static_cast<long double>(c[a].real()) * ch.imag() + static_cast<long double>(c[a].imag()) * ch.real();
            }
            out[x] = {static_cast<double>(re), static_cast<double>(im)};
        }
        return out;
    }

private:
    FiniteAbelianGroup group_;
    std::vector<complex> table_;
};

/// (1/|G|) sum_y f(x - y) g(y).
inline GroupFunction convolve(const GroupFunction& f, const GroupFunction& h) {
    const auto& g = f.group();
    GroupFunction out(g);
    for (std::size_t x = 0; x < g.size(); ++x) {
        complex s{0.0, 0.0};
        for (std::size_t y = 0; y < g.size(); ++y) {
            s += f[g.subtract(x, y)] * h[y];
        }
        out[x] = s / static_cast<double>(g.size());
    }
    return out;
}

/// Dissociateness by walking all of {0, +-1, +-2}^|sigma|.
inline bool is_dissociate(const std::vector<std::size_t>& sigma, const FiniteAbelianGroup& g) {
    for (auto s : sigma) {
        if (s == 0) {
            return false;
        }
    }
    std::vector<int> digit(sigma.size(), 0);
    static constexpr long long exps[] = {0, 1, -1, 2, -2};
    while (true) {
        std::size_t sum = 0;
        bool nontrivial = false;
        for (std::size_t j = 0; j < sigma.size(); ++j) {
            const auto term = g.multiple(sigma[j], exps[digit[j]]);
            sum = g.add(sum, term);
            nontrivial = nontrivial || term != 0;
        }
        if (sum == 0 && nontrivial) {
            return false;
        }
        std::size_t j = 0;
        while (j < digit.size() && ++digit[j] == 5) {
            digit[j++] = 0;
        }
        if (j == digit.size()) {
            return true;
        }
    }
}

}  // namespace twisted_lab::reference

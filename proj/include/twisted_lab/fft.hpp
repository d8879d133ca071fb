#pragma once

// Unnormalized discrete Fourier transforms used by the harmonic layer.
//
//   walsh_hadamard   in-place butterfly for Z_2^N, index-free
//   DftPlan          1-D transform of any length: mixed-radix Cooley-Tukey
//                    over the prime factors, Bluestein when a prime factor
//                    is too large for an O(p^2) butterfly
//   transform_axes   separable transform over Z_{m_1} x ... x Z_{m_r}

#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "twisted_lab/group.hpp"

namespace twisted_lab::fft {

/// Sign of the exponent: forward transforms use exp(-2 pi i k x / n).
enum class Direction { forward = -1, backward = +1 };

inline void walsh_hadamard(std::span<complex> a) {
    const std::size_t n = a.size();
    if (n & (n - 1)) {
        throw std::invalid_argument("Walsh-Hadamard transform needs a power-of-two length");
    }
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const complex x = a[j];
                const complex y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
    }
}

inline std::vector<std::size_t> prime_factors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

class DftPlan {
public:
    /// Largest prime handled by a direct butterfly; beyond it the whole
    /// transform goes through Bluestein's chirp convolution.
    static constexpr std::size_t max_direct_radix = 61;

    DftPlan(std::size_t n, Direction dir) : n_(n), dir_(dir) {
        if (n == 0) {
            throw std::invalid_argument("transform length must be positive");
        }
        factors_ = prime_factors(n);
        if (!factors_.empty() && factors_.back() > max_direct_radix) {
            init_bluestein();
        } else {
            roots_.resize(n);
            const double sign = static_cast<double>(static_cast<int>(dir));
            for (std::size_t k = 0; k < n; ++k) {
                roots_[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
            }
            scratch_.resize(n);
        }
    }

    std::size_t size() const noexcept { return n_; }

    /// out[k] = sum_x in[x] exp(sign 2 pi i k x / n).  `in` and `out` must not alias.
    void execute(std::span<const complex> in, std::span<complex> out) const {
        if (in.size() != n_ || out.size() != n_) {
            throw std::invalid_argument("buffer length does not match plan");
        }
        if (bluestein_) {
            run_bluestein(in, out);
            return;
        }
        recurse(in.data(), 1, out.data(), n_, 0);
    }

private:
    // Decimation in time: split by the first remaining factor p into p
    // interleaved subsequences of length m = n/p, transform each, then
    // combine with twiddles w_n^{r(k + s m)}.
    void recurse(const complex* in, std::size_t stride, complex* out, std::size_t n, std::size_t level) const {
        if (n == 1) {
            out[0] = in[0];
            return;
        }
        const std::size_t p = factors_[level];
        const std::size_t m = n / p;
        for (std::size_t r = 0; r < p; ++r) {
            recurse(in + r * stride, stride * p, out + r * m, m, level + 1);
        }
        const std::size_t root_step = n_ / n;
        complex* tmp = scratch_.data();
        if (p == 2) {
            for (std::size_t k = 0; k < m; ++k) {
                const complex t = roots_[k * root_step] * out[m + k];
                const complex u = out[k];
                out[k] = u + t;
                out[m + k] = u - t;
            }
            return;
        }
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t s = 0; s < p; ++s) {
                const std::size_t kk = k + s * m;
                complex acc = out[k];
                for (std::size_t r = 1; r < p; ++r) {
                    acc += roots_[((r * kk) % n) * root_step] * out[r * m + k];
                }
                tmp[s] = acc;
            }
            for (std::size_t s = 0; s < p; ++s) {
                out[k + s * m] = tmp[s];
            }
        }
    }

    void init_bluestein() {
        bluestein_ = true;
        std::size_t len = 1;
        while (len < 2 * n_ - 1) {
            len <<= 1;
        }
        conv_len_ = len;
        const double sign = static_cast<double>(static_cast<int>(dir_));
        chirp_.resize(n_);
        const std::size_t two_n = 2 * n_;
        for (std::size_t k = 0; k < n_; ++k) {
            // k^2 mod 2n keeps the angle argument small and exact.
            const auto k2 = static_cast<std::size_t>((static_cast<unsigned __int128>(k) * k) % two_n);
            chirp_[k] = std::polar(1.0, sign * std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n_));
        }
        pow2_fwd_ = std::make_unique<DftPlan>(len, Direction::forward);
        pow2_bwd_ = std::make_unique<DftPlan>(len, Direction::backward);
        std::vector<complex> b(len, complex{0.0, 0.0});
        b[0] = std::conj(chirp_[0]);
        for (std::size_t k = 1; k < n_; ++k) {
            b[k] = std::conj(chirp_[k]);
            b[len - k] = std::conj(chirp_[k]);
        }
        kernel_.resize(len);
        pow2_fwd_->execute(b, kernel_);
    }

    void run_bluestein(std::span<const complex> in, std::span<complex> out) const {
        std::vector<complex> a(conv_len_, complex{0.0, 0.0});
        for (std::size_t k = 0; k < n_; ++k) {
            a[k] = in[k] * chirp_[k];
        }
        std::vector<complex> fa(conv_len_);
        pow2_fwd_->execute(a, fa);
        for (std::size_t k = 0; k < conv_len_; ++k) {
            fa[k] *= kernel_[k];
        }
        pow2_bwd_->execute(fa, a);
        const double scale = 1.0 / static_cast<double>(conv_len_);
        for (std::size_t k = 0; k < n_; ++k) {
            out[k] = a[k] * chirp_[k] * scale;
        }
    }

    std::size_t n_;
    Direction dir_;
    std::vector<std::size_t> factors_;
    std::vector<complex> roots_;
    mutable std::vector<complex> scratch_;

    bool bluestein_ = false;
    std::size_t conv_len_ = 0;
    std::vector<complex> chirp_;
    std::vector<complex> kernel_;
    std::unique_ptr<DftPlan> pow2_fwd_;
    std::unique_ptr<DftPlan> pow2_bwd_;
};

/// Separable unnormalized DFT of a mixed-radix array over the given group.
inline void transform_axes(const FiniteAbelianGroup& g, std::span<complex> data, Direction dir) {
    if (data.size() != g.size()) {
        throw std::invalid_argument("buffer length does not match group size");
    }
    if (g.is_two_group()) {
        walsh_hadamard(data);
        return;
    }
    const auto& orders = g.orders();
    const auto& strides = g.strides();
    std::vector<complex> line;
    std::vector<complex> line_out;
    for (std::size_t axis = 0; axis < orders.size(); ++axis) {
        const std::size_t m = orders[axis];
        if (m == 1) {
            continue;
        }
        const std::size_t stride = strides[axis];
        const std::size_t block = stride * m;
        const DftPlan plan(m, dir);
        line.resize(m);
        line_out.resize(m);
        for (std::size_t base = 0; base < data.size(); base += block) {
            for (std::size_t offset = 0; offset < stride; ++offset) {
                const std::size_t start = base + offset;
                for (std::size_t k = 0; k < m; ++k) {
                    line[k] = data[start + k * stride];
                }
                plan.execute(line, line_out);
                for (std::size_t k = 0; k < m; ++k) {
                    data[start + k * stride] = line_out[k];
                }
            }
        }
    }
}

}  // namespace twisted_lab::fft

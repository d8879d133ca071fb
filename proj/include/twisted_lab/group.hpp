#pragma once

// Finite abelian groups Z_{m_1} x ... x Z_{m_r} and complex functions on
// them and on their duals.
//
// Elements and characters share one indexing: an r-tuple (x_1, ..., x_r) is
// stored as the mixed-radix integer x_1 + m_1 (x_2 + m_2 (x_3 + ...)), so the
// first coordinate varies fastest.  For the Cantor group Delta_N = Z_2^N the
// index of a Walsh function w_a is the bitmask of a, and an element's bit k
// is 1 exactly when its (k+1)-th coordinate equals -1.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twisted_lab {

using complex = std::complex<double>;

class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() : size_(1) {}

    explicit FiniteAbelianGroup(std::vector<std::size_t> orders) : orders_(std::move(orders)) {
        strides_.reserve(orders_.size());
        std::size_t size = 1;
        for (auto m : orders_) {
            if (m == 0) {
                throw std::invalid_argument("group order must be positive");
            }
            strides_.push_back(size);
            if (size > std::numeric_limits<std::size_t>::max() / m) {
                throw std::overflow_error("group size overflows the index range");
            }
            size *= m;
        }
        size_ = size;
        two_group_ = std::all_of(orders_.begin(), orders_.end(), [](auto m) { return m == 2; });
    }

    static FiniteAbelianGroup cantor(std::size_t n) { return FiniteAbelianGroup(std::vector<std::size_t>(n, 2)); }
    static FiniteAbelianGroup cyclic(std::size_t m) { return FiniteAbelianGroup({m}); }

    std::size_t size() const noexcept { return size_; }
    std::size_t rank() const noexcept { return orders_.size(); }
    const std::vector<std::size_t>& orders() const noexcept { return orders_; }
    const std::vector<std::size_t>& strides() const noexcept { return strides_; }

    /// True when every factor is Z_2, i.e. the group is some Delta_N.
    bool is_two_group() const noexcept { return two_group_; }

    std::vector<std::size_t> coordinates(std::size_t index) const {
        check_index(index);
        std::vector<std::size_t> x(orders_.size());
        for (std::size_t j = 0; j < orders_.size(); ++j) {
            x[j] = index % orders_[j];
            index /= orders_[j];
        }
        return x;
    }

    std::size_t index(std::span<const std::size_t> coords) const {
        if (coords.size() != orders_.size()) {
            throw std::invalid_argument("element tuple has wrong length");
        }
        std::size_t idx = 0;
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (coords[j] >= orders_[j]) {
                throw std::invalid_argument("element coordinate out of range");
            }
            idx += coords[j] * strides_[j];
        }
        return idx;
    }

    std::size_t add(std::size_t x, std::size_t y) const {
        if (two_group_) {
            return x ^ y;
        }
        std::size_t out = 0;
        for (std::size_t j = 0; j < orders_.size(); ++j) {
            const auto m = orders_[j];
            out += ((x % m + y % m) % m) * strides_[j];
            x /= m;
            y /= m;
        }
        return out;
    }

    std::size_t negate(std::size_t x) const {
        if (two_group_) {
            return x;
        }
        std::size_t out = 0;
        for (std::size_t j = 0; j < orders_.size(); ++j) {
            const auto m = orders_[j];
            out += ((m - x % m) % m) * strides_[j];
            x /= m;
        }
        return out;
    }

    std::size_t subtract(std::size_t x, std::size_t y) const { return add(x, negate(y)); }

    /// n-fold sum of x (n may be negative).
    std::size_t multiple(std::size_t x, long long n) const {
        std::size_t out = 0;
        for (std::size_t j = 0; j < orders_.size(); ++j) {
            const auto m = static_cast<long long>(orders_[j]);
            const auto xj = static_cast<long long>(x % orders_[j]);
            long long v = (xj * (n % m)) % m;
            if (v < 0) {
                v += m;
            }
            out += static_cast<std::size_t>(v) * strides_[j];
            x /= orders_[j];
        }
        return out;
    }

    /// Order of an element (equivalently of the character with that index).
    std::size_t order_of(std::size_t x) const {
        std::size_t ord = 1;
        for (auto m : orders_) {
            const auto xj = x % m;
            x /= m;
            ord = std::lcm(ord, m / std::gcd(xj, m));
        }
        return ord;
    }

    /// gamma_a(x) = exp(2 pi i sum_j a_j x_j / m_j).
    complex character(std::size_t a, std::size_t x) const {
        if (two_group_) {
            return std::popcount(static_cast<std::uint64_t>(a & x)) % 2 == 0 ? complex{1.0, 0.0} : complex{-1.0, 0.0};
        }
        // Each term a_j x_j mod m_j is exact; only the final sum of fractions
        // is rounded.
        double turns = 0.0;
        for (auto m : orders_) {
            const auto aj = a % m;
            const auto xj = x % m;
            a /= m;
            x /= m;
            const auto num = static_cast<unsigned __int128>(aj) * xj % m;
            turns += static_cast<double>(num) / static_cast<double>(m);
        }
        turns -= std::floor(turns);
        return std::polar(1.0, 2.0 * std::numbers::pi * turns);
    }

    void check_index(std::size_t index) const {
        if (index >= size_) {
            throw std::out_of_range("group index out of range");
        }
    }

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.orders_ == b.orders_;
    }

private:
    std::vector<std::size_t> orders_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 1;
    bool two_group_ = true;
};

inline FiniteAbelianGroup make_group(std::vector<std::size_t> orders) {
    return FiniteAbelianGroup(std::move(orders));
}

inline void require_same_group(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    if (!(a == b)) {
        throw std::invalid_argument("functions live on different groups");
    }
}

struct group_side {};
struct spectrum_side {};

/// Complex array indexed by group elements (Side = group_side) or by
/// characters (Side = spectrum_side).  Elementwise arithmetic only makes sense
/// between values of the same side, which the type enforces.
template <class Side>
class BasicFunction {
public:
    BasicFunction() = default;

    explicit BasicFunction(FiniteAbelianGroup group)
        : group_(std::move(group)), values_(group_.size(), complex{0.0, 0.0}) {}

    BasicFunction(FiniteAbelianGroup group, std::vector<complex> values)
        : group_(std::move(group)), values_(std::move(values)) {
        if (values_.size() != group_.size()) {
            throw std::invalid_argument("value count does not match group size");
        }
    }

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    std::size_t size() const noexcept { return values_.size(); }

    std::span<const complex> values() const noexcept { return values_; }
    std::span<complex> values() noexcept { return values_; }

    complex operator[](std::size_t i) const { return values_[i]; }
    complex& operator[](std::size_t i) { return values_[i]; }

    BasicFunction& operator+=(const BasicFunction& o) {
        require_same_group(group_, o.group_);
        for (std::size_t i = 0; i < values_.size(); ++i) {
            values_[i] += o.values_[i];
        }
        return *this;
    }

    BasicFunction& operator-=(const BasicFunction& o) {
        require_same_group(group_, o.group_);
        for (std::size_t i = 0; i < values_.size(); ++i) {
            values_[i] -= o.values_[i];
        }
        return *this;
    }

    BasicFunction& operator*=(complex s) {
        for (auto& v : values_) {
            v *= s;
        }
        return *this;
    }

    friend BasicFunction operator+(BasicFunction a, const BasicFunction& b) { return a += b; }
    friend BasicFunction operator-(BasicFunction a, const BasicFunction& b) { return a -= b; }
    friend BasicFunction operator*(complex s, BasicFunction a) { return a *= s; }
    friend BasicFunction operator*(BasicFunction a, complex s) { return a *= s; }
    friend BasicFunction operator-(BasicFunction a) { return a *= complex{-1.0, 0.0}; }

    /// Pointwise product.
    friend BasicFunction operator*(BasicFunction a, const BasicFunction& b) {
        require_same_group(a.group_, b.group_);
        for (std::size_t i = 0; i < a.values_.size(); ++i) {
            a.values_[i] *= b.values_[i];
        }
        return a;
    }

private:
    FiniteAbelianGroup group_;
    std::vector<complex> values_;
};

using GroupFunction = BasicFunction<group_side>;
using SpectrumFunction = BasicFunction<spectrum_side>;

template <class Side>
double max_abs_diff(const BasicFunction<Side>& a, const BasicFunction<Side>& b) {
    require_same_group(a.group(), b.group());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

template <class Side>
BasicFunction<Side> indicator_at(const FiniteAbelianGroup& g, std::size_t index) {
    g.check_index(index);
    BasicFunction<Side> out(g);
    out[index] = 1.0;
    return out;
}

/// 1_G.
inline GroupFunction constant_one(const FiniteAbelianGroup& g) {
    return GroupFunction(g, std::vector<complex>(g.size(), complex{1.0, 0.0}));
}

/// The character with index a, as a function on G.
inline GroupFunction character_function(const FiniteAbelianGroup& g, std::size_t a) {
    g.check_index(a);
    GroupFunction out(g);
    for (std::size_t x = 0; x < g.size(); ++x) {
        out[x] = g.character(a, x);
    }
    return out;
}

/// Walsh function w_a on Delta_N; `a` is a bitmask (bit k <-> coordinate k+1).
inline GroupFunction walsh(const FiniteAbelianGroup& g, std::uint64_t a) {
    if (!g.is_two_group()) {
        throw std::invalid_argument("Walsh functions need a 2-group");
    }
    return character_function(g, static_cast<std::size_t>(a));
}

/// Rademacher r_n (1-based), r_n(t) = t(n).
inline GroupFunction rademacher(const FiniteAbelianGroup& g, std::size_t n) {
    if (n == 0 || n > g.rank()) {
        throw std::invalid_argument("Rademacher index out of range");
    }
    return walsh(g, std::uint64_t{1} << (n - 1));
}

}  // namespace twisted_lab

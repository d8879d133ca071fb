#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "twisted_lab/group.hpp"

namespace twisted_lab {

inline constexpr std::size_t max_dissociate_check = 16;

namespace detail {

struct HalfSums {
    // For every reachable sum: whether some assignment reaching it has a
    // factor gamma_j^{n(j)} != 1.
    std::unordered_map<std::size_t, bool> nontrivial_at;
};

inline HalfSums enumerate_half(const FiniteAbelianGroup& g, std::span<const std::size_t> chars) {
    static constexpr long long exponents[] = {0, 1, -1, 2, -2};
    // powers[j][e] = chars[j]^{exponents[e]}
    std::vector<std::array<std::size_t, 5>> powers(chars.size());
    for (std::size_t j = 0; j < chars.size(); ++j) {
        for (std::size_t e = 0; e < 5; ++e) {
            powers[j][e] = g.multiple(chars[j], exponents[e]);
        }
    }
    HalfSums out;
    std::vector<std::size_t> digit(chars.size(), 0);
    while (true) {
        std::size_t sum = 0;
        bool nontrivial = false;
        for (std::size_t j = 0; j < chars.size(); ++j) {
            const auto term = powers[j][digit[j]];
            sum = g.add(sum, term);
            nontrivial = nontrivial || term != 0;
        }
        auto [it, inserted] = out.nontrivial_at.try_emplace(sum, nontrivial);
        if (!inserted) {
            it->second = it->second || nontrivial;
        }
        std::size_t j = 0;
        while (j < digit.size() && ++digit[j] == 5) {
            digit[j++] = 0;
        }
        if (j == digit.size()) {
            break;
        }
    }
    return out;
}

}  // namespace detail

/// Whether sigma (character indices) is dissociate: 1 is not in sigma and
/// every relation prod gamma_j^{n(j)} = 1 with n(j) in {0, +-1, +-2} has all
/// factors trivial.
///
/// The 5^|sigma| search is split in two halves that meet in a hash table,
/// so the cost is about 2 * 5^{|sigma|/2} group additions.
inline bool is_dissociate(std::span<const std::size_t> sigma, const FiniteAbelianGroup& g) {
    if (sigma.size() > max_dissociate_check) {
        throw std::invalid_argument("character set too large for an exhaustive dissociateness check");
    }
    std::unordered_set<std::size_t> seen;
    for (auto c : sigma) {
        g.check_index(c);
        if (!seen.insert(c).second) {
            throw std::invalid_argument("duplicate character in set");
        }
    }
    for (auto c : sigma) {
        if (c == 0) {
            return false;
        }
    }
    const auto half = sigma.size() / 2;
    const auto left = detail::enumerate_half(g, sigma.first(half));
    const auto right = detail::enumerate_half(g, sigma.subspan(half));
    // A bad relation is a pair (L, R) with L + R = 0 and at least one side
    // carrying a nontrivial factor.
    for (const auto& [sum, left_nontrivial] : left.nontrivial_at) {
        const auto it = right.nontrivial_at.find(g.negate(sum));
        if (it == right.nontrivial_at.end()) {
            continue;
        }
        if (left_nontrivial || it->second) {
            return false;
        }
    }
    return true;
}

}  // namespace twisted_lab

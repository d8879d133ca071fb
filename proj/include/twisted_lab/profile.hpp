#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twisted_lab {

/// The scalar function phi of a Kalton-Peck map: Lipschitz, phi(0) = 0.
///
/// The named profiles are concave on [0, inf) and extended to the whole line
/// by oddness; a table profile is piecewise linear through its knots and
/// continues with the outermost slopes.
class LipschitzProfile {
public:
    enum class Kind { identity, log1p, power, table };

    static LipschitzProfile identity() { return LipschitzProfile(Kind::identity, 1.0, 1.0, {}); }

    /// sign(t) log(1 + |t|).
    static LipschitzProfile log1p() { return LipschitzProfile(Kind::log1p, 1.0, 1.0, {}); }

    /// sign(t) ((1 + |t|)^alpha - 1), Lipschitz constant alpha.
    static LipschitzProfile power(double alpha) {
        if (!(alpha > 0.0 && alpha <= 1.0)) {
            throw std::invalid_argument("power profile needs alpha in (0, 1]");
        }
        return LipschitzProfile(Kind::power, alpha, alpha, {});
    }

    static LipschitzProfile table(std::vector<std::pair<double, double>> knots) {
        if (knots.empty()) {
            throw std::invalid_argument("table profile needs at least one knot");
        }
        std::sort(knots.begin(), knots.end());
        for (std::size_t i = 1; i < knots.size(); ++i) {
            if (knots[i].first == knots[i - 1].first) {
                throw std::invalid_argument("table profile has repeated abscissae");
            }
        }
        const auto zero = std::find_if(knots.begin(), knots.end(), [](const auto& k) { return k.first == 0.0; });
        if (zero == knots.end() || zero->second != 0.0) {
            throw std::invalid_argument("table profile must contain the knot (0, 0)");
        }
        double lip = 0.0;
        for (std::size_t i = 1; i < knots.size(); ++i) {
            lip = std::max(lip, std::abs((knots[i].second - knots[i - 1].second) / (knots[i].first - knots[i - 1].first)));
        }
        return LipschitzProfile(Kind::table, 0.0, lip, std::move(knots));
    }

    /// phi = 0, the profile of the zero map.
    static LipschitzProfile zero() { return table({{0.0, 0.0}}); }

    /// Parses the command-line spelling: id, log1p, pow:<alpha>.
    static LipschitzProfile parse(std::string_view name) {
        if (name == "id" || name == "identity") {
            return identity();
        }
        if (name == "log1p") {
            return log1p();
        }
        if (name.starts_with("pow:")) {
            const auto arg = name.substr(4);
            double alpha = 0.0;
            const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), alpha);
            if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
                throw std::invalid_argument("bad exponent in profile '" + std::string(name) + "'");
            }
            return power(alpha);
        }
        if (name == "zero") {
            return zero();
        }
        throw std::invalid_argument("unknown profile '" + std::string(name) + "'");
    }

    Kind kind() const noexcept { return kind_; }
    double lipschitz_constant() const noexcept { return lipschitz_; }
    double alpha() const noexcept { return alpha_; }

    std::string name() const {
        switch (kind_) {
            case Kind::identity: return "id";
            case Kind::log1p: return "log1p";
            case Kind::power: {
                char buf[32];
                const auto res = std::to_chars(buf, buf + sizeof buf, alpha_);
                return "pow:" + std::string(buf, res.ptr);
            }
            case Kind::table: return knots_.size() == 1 ? "zero" : "table";
        }
        return "?";
    }

    double operator()(double t) const {
        switch (kind_) {
            case Kind::identity: return t;
            case Kind::log1p: return std::copysign(std::log1p(std::abs(t)), t);
            case Kind::power: return std::copysign(std::expm1(alpha_ * std::log1p(std::abs(t))), t);
            case Kind::table: return eval_table(t);
        }
        return 0.0;
    }

    /// Concave on [0, inf), as the non-triviality estimates require.
    bool concave_on_half_line() const {
        if (kind_ != Kind::table) {
            return true;
        }
        double prev_slope = infinity_slope();
        for (std::size_t i = 1; i < knots_.size(); ++i) {
            if (knots_[i].first <= 0.0) {
                continue;
            }
            const double slope = (knots_[i].second - knots_[i - 1].second) / (knots_[i].first - knots_[i - 1].first);
            if (slope > prev_slope + 1e-15) {
                return false;
            }
            prev_slope = slope;
        }
        return true;
    }

private:
    LipschitzProfile(Kind kind, double alpha, double lip, std::vector<std::pair<double, double>> knots)
        : kind_(kind), alpha_(alpha), lipschitz_(lip), knots_(std::move(knots)) {}

    static double infinity_slope() { return std::numeric_limits<double>::infinity(); }

    double eval_table(double t) const {
        if (knots_.size() == 1 || t == 0.0) {
            return 0.0;
        }
        auto hi = std::upper_bound(knots_.begin(), knots_.end(), t, [](double v, const auto& k) { return v < k.first; });
        if (hi == knots_.begin()) {
            ++hi;
        } else if (hi == knots_.end()) {
            --hi;
        }
        const auto lo = hi - 1;
        const double slope = (hi->second - lo->second) / (hi->first - lo->first);
        return lo->second + slope * (t - lo->first);
    }

    Kind kind_;
    double alpha_;
    double lipschitz_;
    std::vector<std::pair<double, double>> knots_;
};

}  // namespace twisted_lab

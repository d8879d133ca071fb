#pragma once

// JSON and CSV serialization of functions and reports, and the two-column
// tables used for plotting.  Numbers are written with std::to_chars
// (shortest round-trip form), which ignores the process locale.

#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "twisted_lab/blocks.hpp"
#include "twisted_lab/cantor.hpp"
#include "twisted_lab/defect.hpp"
#include "twisted_lab/riesz.hpp"
#include "twisted_lab/twisted_sum.hpp"

namespace twisted_lab {

using json = nlohmann::json;

inline std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline const char* format_bool(bool b) { return b ? "true" : "false"; }

namespace detail {

template <class Side>
constexpr const char* side_name() {
    if constexpr (std::is_same_v<Side, group_side>) {
        return "group";
    } else {
        return "spectrum";
    }
}

template <class Side>
json function_to_json(const BasicFunction<Side>& f) {
    json values = json::array();
    for (const auto& v : f.values()) {
        values.push_back({v.real(), v.imag()});
    }
    return {{"orders", f.group().orders()}, {"side", side_name<Side>()}, {"values", std::move(values)}};
}

template <class Side>
BasicFunction<Side> function_from_json(const json& j) {
    if (!j.is_object() || !j.contains("orders") || !j.contains("side") || !j.contains("values")) {
        throw std::invalid_argument("function JSON needs orders, side and values");
    }
    if (j.at("side").get<std::string>() != side_name<Side>()) {
        throw std::invalid_argument(std::string("expected side \"") + side_name<Side>() + "\"");
    }
    FiniteAbelianGroup g(j.at("orders").get<std::vector<std::size_t>>());
    const auto& vals = j.at("values");
    if (!vals.is_array() || vals.size() != g.size()) {
        throw std::invalid_argument("values array does not match group size");
    }
    std::vector<complex> v;
    v.reserve(vals.size());
    for (const auto& e : vals) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("each value must be [re, im]");
        }
        v.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return BasicFunction<Side>(std::move(g), std::move(v));
}

}  // namespace detail

inline json to_json(const GroupFunction& f) { return detail::function_to_json(f); }
inline json to_json(const SpectrumFunction& f) { return detail::function_to_json(f); }

inline GroupFunction group_function_from_json(const json& j) { return detail::function_from_json<group_side>(j); }
inline SpectrumFunction spectrum_function_from_json(const json& j) { return detail::function_from_json<spectrum_side>(j); }

inline json to_json(const TwistedPair& p) { return {{"g", to_json(p.g)}, {"f", to_json(p.f)}}; }

inline TwistedPair twisted_pair_from_json(const json& j) {
    if (!j.is_object() || !j.contains("g") || !j.contains("f")) {
        throw std::invalid_argument("pair JSON needs g and f");
    }
    TwistedPair p{group_function_from_json(j.at("g")), group_function_from_json(j.at("f"))};
    require_same_group(p.g.group(), p.f.group());
    return p;
}

inline json to_json(const DefectReport& r) {
    return {{"map", r.map}, {"trials", r.trials}, {"max_defect", r.max_defect}, {"bound", r.bound}, {"pass", r.pass}};
}

inline json to_json(const DeltaReport& r) {
    return {{"witness_count", r.witness_count}, {"max_ratio", r.max_ratio}, {"delta_lower", r.delta_lower}};
}

inline json to_json(const CopiesReport& r) {
    return {{"defects", r.defects}, {"max_defect", r.max_defect}, {"bound", r.bound}, {"pass", r.pass}};
}

// ---- CSV ------------------------------------------------------------------

inline void write_witness_csv(std::ostream& os, const WitnessReport& rep) {
    os << "N,linf_norm,l2_norm,mho_l1,bound_b1,bound_b2,pass_b1,pass_b2,seconds\n";
    for (const auto& r : rep.rows) {
        os << r.n << ',' << format_number(r.linf_norm) << ',' << format_number(r.l2_norm) << ','
           << format_number(r.mho_l1) << ',' << format_number(r.bound_b1) << ',' << format_number(r.bound_b2) << ','
           << format_bool(r.pass_b1) << ',' << format_bool(r.pass_b2) << ',' << format_number(r.seconds) << '\n';
    }
}

struct WalkRow {
    std::size_t n = 0;
    WalkMean mean;
};

inline void write_walk_csv(std::ostream& os, const std::vector<WalkRow>& rows) {
    os << "N,exact,ratio\n";
    for (const auto& r : rows) {
        os << r.n << ',' << format_number(r.mean.exact) << ',' << format_number(r.mean.ratio) << '\n';
    }
}

inline void write_growth_csv(std::ostream& os, const GrowthReport& rep) {
    os << "k,c_k,n_k,delta_lower_k,q_sampled,feasible\n";
    for (const auto& r : rep.rows) {
        os << r.k << ',' << format_number(r.weight) << ',' << format_number(r.n) << ',';
        if (r.feasible) {
            os << format_number(r.delta_lower) << ',' << format_number(r.q_sampled);
        } else {
            os << ',';
        }
        os << ',' << format_bool(r.feasible) << '\n';
    }
}

// ---- plot tables ----------------------------------------------------------

struct PlotTable {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

inline void write_plot_table(std::ostream& os, const PlotTable& t) {
    for (const auto& [x, y] : t.points) {
        os << format_number(x) << ' ' << format_number(y) << '\n';
    }
}

/// ||mho f||_1, B1 and B2 against log N.
inline std::vector<PlotTable> emit_plot_data(const WitnessReport& rep) {
    if (rep.rows.empty()) {
        throw std::invalid_argument("empty witness report");
    }
    PlotTable mho_t{"witness_mho_l1", {}}, b1{"witness_bound_b1", {}}, b2{"witness_bound_b2", {}};
    for (const auto& r : rep.rows) {
        const double x = std::log(static_cast<double>(r.n));
        mho_t.points.emplace_back(x, r.mho_l1);
        b1.points.emplace_back(x, r.bound_b1);
        b2.points.emplace_back(x, r.bound_b2);
    }
    return {mho_t, b1, b2};
}

/// Walk ratio against N.
inline std::vector<PlotTable> emit_plot_data(const std::vector<WalkRow>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("empty walk report");
    }
    PlotTable t{"walk_ratio", {}};
    for (const auto& r : rows) {
        t.points.emplace_back(static_cast<double>(r.n), r.mean.ratio);
    }
    return {t};
}

/// Per-block delta lower bound against k (feasible blocks only).
inline std::vector<PlotTable> emit_plot_data(const GrowthReport& rep) {
    PlotTable t{"blocks_delta", {}};
    for (const auto& r : rep.rows) {
        if (r.feasible) {
            t.points.emplace_back(static_cast<double>(r.k), r.delta_lower);
        }
    }
    if (t.points.empty()) {
        throw std::invalid_argument("growth report has no feasible blocks");
    }
    return {t};
}

}  // namespace twisted_lab

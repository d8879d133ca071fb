#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "twisted_lab/suite.hpp"
#include "twisted_lab/twisted_lab.hpp"

namespace tl = twisted_lab;
using tl::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_assertion = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t parse_count(const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not a nonnegative integer: '" + s + "'");
    }
    if (pos != s.size() || s.starts_with('-')) {
        throw UsageError("not a nonnegative integer: '" + s + "'");
    }
    return static_cast<std::size_t>(v);
}

// "1..20", "2,4,64" or a mix such as "1..3,8".
std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_count(item));
            continue;
        }
        const auto lo = parse_count(item.substr(0, dots));
        const auto hi = parse_count(item.substr(dots + 2));
        if (lo > hi) {
            throw UsageError("empty range '" + item + "'");
        }
        for (auto v = lo; v <= hi; ++v) {
            out.push_back(v);
        }
    }
    if (out.empty()) {
        throw UsageError("empty list");
    }
    return out;
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(item);
    }
    return out;
}

tl::LipschitzProfile parse_profile(const std::string& name) {
    try {
        return tl::LipschitzProfile::parse(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// --budget wins over TWISTED_LAB_BUDGET, which wins over the default.
std::size_t resolve_budget(const std::optional<std::size_t>& flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("TWISTED_LAB_BUDGET"); env != nullptr && *env != '\0') {
        return parse_count(env);
    }
    return tl::default_budget;
}

void require_budget(std::size_t size, std::size_t budget, const std::string& what) {
    if (size > budget) {
        throw UsageError(what + " needs a group of size " + std::to_string(size) + ", above the budget " +
                         std::to_string(budget));
    }
}

// Writes to the file at `path`, or stdout when the path is empty or "-".
void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    write(os);
}

void emit_json(const std::string& path, const json& j) {
    emit(path, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

void write_plots(const std::string& dir, const std::vector<tl::PlotTable>& tables) {
    if (dir.empty()) {
        return;
    }
    std::filesystem::create_directories(dir);
    for (const auto& t : tables) {
        emit((std::filesystem::path(dir) / (t.name + ".dat")).string(), [&](std::ostream& os) { tl::write_plot_table(os, t); });
    }
}

json check_to_json(const tl::CheckResult& c) {
    return {{"module", c.module},   {"name", c.name},       {"cases", c.cases}, {"observed", c.observed},
            {"threshold", c.threshold}, {"pass", c.pass}, {"detail", c.detail}};
}

int report_checks(const std::vector<tl::CheckResult>& checks, const std::string& out, json header) {
    std::size_t failed = 0;
    json list = json::array();
    for (const auto& c : checks) {
        list.push_back(check_to_json(c));
        if (!c.pass) {
            ++failed;
            std::cerr << "FAIL " << c.module << '.' << c.name << ": observed " << tl::format_number(c.observed)
                      << ", threshold " << tl::format_number(c.threshold) << (c.detail.empty() ? "" : " (" + c.detail + ")")
                      << '\n';
        }
    }
    header["total"] = checks.size();
    header["passed"] = checks.size() - failed;
    header["failed"] = failed;
    header["pass"] = failed == 0;
    header["checks"] = std::move(list);
    emit_json(out, header);
    return failed == 0 ? exit_ok : exit_assertion;
}

tl::GroupFunction read_function(const std::string& path) {
    std::ifstream is(path);
    if (!is) {
        throw UsageError("cannot read '" + path + "'");
    }
    try {
        return tl::group_function_from_json(json::parse(is));
    } catch (const json::exception& e) {
        throw UsageError("bad JSON in '" + path + "': " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError("bad function in '" + path + "': " + e.what());
    }
}

tl::TwistedPair read_pair(const std::string& path) {
    std::ifstream is(path);
    if (!is) {
        throw UsageError("cannot read '" + path + "'");
    }
    try {
        return tl::twisted_pair_from_json(json::parse(is));
    } catch (const json::exception& e) {
        throw UsageError("bad JSON in '" + path + "': " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError("bad pair in '" + path + "': " + e.what());
    }
}

// ---- walk -----------------------------------------------------------------

struct WalkArgs {
    std::string n = "2,4,64,1024";
    std::string out;
    std::string format = "csv";
    std::string plot_dir;
};

void add_walk_options(CLI::App* cmd, WalkArgs& a) {
    cmd->add_option("--n", a.n, "walk lengths, e.g. 2,4,64 or 1..10")->capture_default_str();
    cmd->add_option("--out", a.out, "output file (default stdout)");
    cmd->add_option("--format", a.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    cmd->add_option("--plot-dir", a.plot_dir, "directory for plot tables");
}

int run_walk(const WalkArgs& a) {
    std::vector<tl::WalkRow> rows;
    for (auto n : parse_size_list(a.n)) {
        if (n == 0) {
            throw UsageError("walk length must be positive");
        }
        rows.push_back({n, tl::walk_mean(n)});
    }
    if (a.format == "json") {
        json list = json::array();
        for (const auto& r : rows) {
            list.push_back({{"N", r.n}, {"exact", r.mean.exact}, {"ratio", r.mean.ratio}});
        }
        emit_json(a.out, {{"walk", list}});
    } else {
        emit(a.out, [&](std::ostream& os) { tl::write_walk_csv(os, rows); });
    }
    write_plots(a.plot_dir, tl::emit_plot_data(rows));
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical experiments on twisted sums of L_p spaces over finite abelian groups"};
    app.require_subcommand(1);
    std::optional<std::size_t> budget_flag;
    app.add_option("--budget", budget_flag, "largest group size a run may build (env TWISTED_LAB_BUDGET)");

    std::function<int()> action;

    // transform-check
    auto* transform = app.add_subcommand("transform-check", "fast transform against the naive DFT oracle");
    std::size_t tc_count = 100;
    std::uint64_t tc_seed = 1;
    std::string tc_out;
    transform->add_option("--count", tc_count, "random functions per group")->capture_default_str();
    transform->add_option("--seed", tc_seed)->capture_default_str();
    transform->add_option("--out", tc_out, "JSON output file (default stdout)");
    transform->callback([&] {
        action = [&] {
            const auto groups = tl::oracle_groups();
            for (const auto& g : groups) {
                require_budget(g.size(), resolve_budget(budget_flag), "transform-check");
            }
            return report_checks(tl::transform_oracle_checks(groups, tc_count, tc_seed), tc_out,
                                 {{"command", "transform-check"}, {"seed", tc_seed}, {"count", tc_count}});
        };
    });

    // witness
    auto* witness = app.add_subcommand("witness", "Riesz-product non-triviality witness");
    std::string w_case = "ddagger", w_phi = "id", w_n = "1..20", w_out, w_plot, w_format = "csv";
    double w_alpha = 2.0;
    bool w_timing = false;
    witness->add_option("--case", w_case, "ddagger (Delta_N) or dagger (Z_{3^{N+1}})")
        ->check(CLI::IsMember({"ddagger", "dagger"}))
        ->capture_default_str();
    witness->add_option("--phi", w_phi, "profile: id, log1p, pow:<alpha>")->capture_default_str();
    witness->add_option("--alpha", w_alpha, "Riesz parameter, at least 1")->capture_default_str();
    witness->add_option("--n", w_n, "values of N, e.g. 1..20")->capture_default_str();
    witness->add_option("--out", w_out, "output file (default stdout)");
    witness->add_option("--format", w_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    witness->add_flag("--timing", w_timing, "record wall-clock seconds per row (non-deterministic)");
    witness->add_option("--plot-dir", w_plot, "directory for plot tables");
    witness->callback([&] {
        action = [&] {
            const auto phi = parse_profile(w_phi);
            const auto c = tl::parse_riesz_case(w_case);
            const auto ns = parse_size_list(w_n);
            const auto budget = resolve_budget(budget_flag);
            for (auto n : ns) {
                if (n == 0) {
                    throw UsageError("N must be positive");
                }
                require_budget(tl::witness_group_size(c, n), budget, "witness N=" + std::to_string(n));
            }
            if (!(w_alpha >= 1.0)) {
                throw UsageError("alpha must be at least 1");
            }
            auto rep = tl::witness(phi, w_alpha, ns, c, budget);
            if (!w_timing) {
                for (auto& r : rep.rows) {
                    r.seconds = 0.0;
                }
            }
            if (w_format == "json") {
                json rows = json::array();
                for (const auto& r : rep.rows) {
                    rows.push_back({{"N", r.n},
                                    {"linf_norm", r.linf_norm},
                                    {"l2_norm", r.l2_norm},
                                    {"mho_l1", r.mho_l1},
                                    {"bound_b1", r.bound_b1},
                                    {"bound_b2", r.bound_b2},
                                    {"pass_b1", r.pass_b1},
                                    {"pass_b2", r.pass_b2},
                                    {"b2_asserted", r.b2_asserted},
                                    {"seconds", r.seconds}});
                }
                emit_json(w_out, {{"profile", rep.profile},
                                  {"alpha", rep.alpha},
                                  {"case", tl::to_string(rep.riesz_case)},
                                  {"pass", rep.pass()},
                                  {"rows", rows}});
            } else {
                emit(w_out, [&](std::ostream& os) { tl::write_witness_csv(os, rep); });
            }
            write_plots(w_plot, tl::emit_plot_data(rep));
            int status = exit_ok;
            for (const auto& r : rep.rows) {
                if (!r.pass_b1) {
                    std::cerr << "FAIL witness row N=" << r.n << ": mho_l1 " << tl::format_number(r.mho_l1) << " < bound_b1 "
                              << tl::format_number(r.bound_b1) << '\n';
                    status = exit_assertion;
                }
                if (r.b2_asserted && !r.pass_b2) {
                    std::cerr << "FAIL witness row N=" << r.n << ": mho_l1 " << tl::format_number(r.mho_l1) << " < bound_b2 "
                              << tl::format_number(r.bound_b2) << '\n';
                    status = exit_assertion;
                }
            }
            return status;
        };
    });

    // cantor walk / copies, and the top-level walk alias
    auto* cantor = app.add_subcommand("cantor", "Cantor-group experiments");
    cantor->require_subcommand(1);
    WalkArgs walk_args;
    auto* cantor_walk = cantor->add_subcommand("walk", "exact mean of |r_1 + ... + r_N|");
    add_walk_options(cantor_walk, walk_args);
    cantor_walk->callback([&] { action = [&] { return run_walk(walk_args); }; });
    auto* walk = app.add_subcommand("walk", "alias of 'cantor walk'");
    add_walk_options(walk, walk_args);
    walk->callback([&] { action = [&] { return run_walk(walk_args); }; });

    auto* copies = cantor->add_subcommand("copies", "defect of the copies E: L_2(Delta_{N-|a|}) -> L_2(Delta_N)");
    std::size_t cp_n = 8, cp_samples = 200;
    std::string cp_a = "1", cp_eps, cp_phi = "id", cp_out;
    std::uint64_t cp_seed = 7;
    copies->add_option("--n", cp_n, "target rank N")->capture_default_str();
    copies->add_option("--a", cp_a, "fixed coordinates, 1-based, e.g. 1,3")->capture_default_str();
    copies->add_option("--eps", cp_eps, "signs on a, e.g. +,- (default all +)");
    copies->add_option("--phi", cp_phi)->capture_default_str();
    copies->add_option("--samples", cp_samples)->capture_default_str();
    copies->add_option("--seed", cp_seed)->capture_default_str();
    copies->add_option("--out", cp_out, "JSON output file (default stdout)");
    copies->callback([&] {
        action = [&] {
            const auto phi = parse_profile(cp_phi);
            std::vector<std::size_t> coords = parse_size_list(cp_a);
            tl::CoordSet a = 0;
            try {
                a = tl::coord_set(coords);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            tl::CoordSet negative = 0;
            if (!cp_eps.empty()) {
                const auto signs = split(cp_eps);
                if (signs.size() != coords.size()) {
                    throw UsageError("--eps needs one sign per coordinate in --a");
                }
                for (std::size_t i = 0; i < signs.size(); ++i) {
                    if (signs[i] == "-") {
                        negative |= tl::CoordSet{1} << (coords[i] - 1);
                    } else if (signs[i] != "+") {
                        throw UsageError("signs must be + or -");
                    }
                }
            }
            if (cp_n > 62 || cp_n < coords.size() || !tl::within_rank(a, cp_n)) {
                throw UsageError("coordinates in --a must lie in 1..N");
            }
            if (cp_samples == 0) {
                throw UsageError("--samples must be positive");
            }
            require_budget(std::size_t{1} << cp_n, resolve_budget(budget_flag), "copies");
            const auto spec = tl::EmbeddingSpec::canonical(cp_n, a, negative);
            tl::MixedSampler<tl::group_side> sampler(tl::FiniteAbelianGroup::cantor(spec.source_rank()), cp_seed);
            std::vector<tl::GroupFunction> samples;
            while (samples.size() < cp_samples) {
                auto f = sampler.next();
                if (tl::norm(f, 2.0) > 1e-9) {
                    samples.push_back(std::move(f));
                }
            }
            const auto rep = tl::copies_report(spec, phi, samples);
            auto j = tl::to_json(rep);
            j["N"] = cp_n;
            j["a"] = coords;
            j["negative_mask"] = negative;
            j["profile"] = phi.name();
            j["seed"] = cp_seed;
            emit_json(cp_out, j);
            if (!rep.pass) {
                for (std::size_t i = 0; i < rep.defects.size(); ++i) {
                    if (rep.defects[i] > rep.bound + 1e-9) {
                        std::cerr << "FAIL copies sample " << i << ": defect " << tl::format_number(rep.defects[i]) << " > "
                                  << tl::format_number(rep.bound) << '\n';
                    }
                }
                return exit_assertion;
            }
            return exit_ok;
        };
    });

    // blocks
    auto* blocks = app.add_subcommand("blocks", "block construction growth report");
    std::string b_schedule = "default", b_phi = "id", b_out, b_plot, b_format = "csv";
    std::size_t b_count = 8, b_max_n = 24, b_trials = 200;
    std::uint64_t b_seed = 1;
    double b_alpha = 2.0;
    blocks->add_option("--schedule", b_schedule, "block schedule")->check(CLI::IsMember({"default"}))->capture_default_str();
    blocks->add_option("--phi", b_phi)->capture_default_str();
    blocks->add_option("--blocks", b_count, "number of blocks k")->capture_default_str();
    blocks->add_option("--max-n", b_max_n, "largest feasible block rank")->capture_default_str();
    blocks->add_option("--trials", b_trials, "sampled pairs for the quasilinear constants")->capture_default_str();
    blocks->add_option("--seed", b_seed)->capture_default_str();
    blocks->add_option("--alpha", b_alpha)->capture_default_str();
    blocks->add_option("--out", b_out, "output file (default stdout)");
    blocks->add_option("--format", b_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    blocks->add_option("--plot-dir", b_plot, "directory for plot tables");
    blocks->callback([&] {
        action = [&] {
            const auto phi = parse_profile(b_phi);
            if (b_max_n > 62) {
                throw UsageError("--max-n must be at most 62");
            }
            require_budget(std::size_t{1} << b_max_n, resolve_budget(budget_flag), "blocks");
            if (b_trials == 0 || b_count == 0) {
                throw UsageError("--trials and --blocks must be positive");
            }
            const auto rep = tl::growth_report(tl::default_schedule(phi, b_count, b_max_n), phi, b_schedule, b_trials, b_seed, b_alpha);
            const bool any_feasible = std::any_of(rep.rows.begin(), rep.rows.end(), [](const auto& r) { return r.feasible; });
            if (b_format == "json") {
                json rows = json::array();
                for (const auto& r : rep.rows) {
                    json row = {{"k", r.k}, {"c_k", r.weight}, {"feasible", r.feasible}};
                    row["n_k"] = std::isfinite(r.n) ? json(r.n) : json("inf");
                    if (r.feasible) {
                        row["delta_lower_k"] = r.delta_lower;
                        row["q_sampled"] = r.q_sampled;
                    }
                    rows.push_back(row);
                }
                json j = {{"schedule", rep.schedule}, {"profile", phi.name()}, {"nondecreasing", rep.nondecreasing}, {"rows", rows}};
                if (any_feasible) {
                    j["total_q"] = tl::to_json(rep.total_q);
                }
                emit_json(b_out, j);
            } else {
                emit(b_out, [&](std::ostream& os) { tl::write_growth_csv(os, rep); });
            }
            if (any_feasible) {
                write_plots(b_plot, tl::emit_plot_data(rep));
            }
            int status = exit_ok;
            if (!rep.nondecreasing) {
                double prev = -tl::infinity;
                for (const auto& r : rep.rows) {
                    if (r.feasible && r.delta_lower < prev) {
                        std::cerr << "FAIL blocks row k=" << r.k << ": delta_lower decreases\n";
                    }
                    if (r.feasible) {
                        prev = r.delta_lower;
                    }
                }
                status = exit_assertion;
            }
            if (any_feasible && !rep.total_q.pass) {
                std::cerr << "FAIL blocks total Q " << tl::format_number(rep.total_q.max_defect) << " > "
                          << tl::format_number(rep.total_q.bound) << '\n';
                status = exit_assertion;
            }
            return status;
        };
    });

    // delta
    auto* delta = app.add_subcommand("delta", "lower bound on the distance of mho to linear maps");
    std::string d_phi = "id", d_n = "1..16", d_out;
    double d_alpha = 2.0;
    std::optional<double> d_min;
    delta->add_option("--phi", d_phi)->capture_default_str();
    delta->add_option("--n", d_n, "Riesz witnesses on Delta_N for these N")->capture_default_str();
    delta->add_option("--alpha", d_alpha)->capture_default_str();
    delta->add_option("--min", d_min, "assert delta_lower exceeds this value");
    delta->add_option("--out", d_out, "JSON output file (default stdout)");
    delta->callback([&] {
        action = [&] {
            const auto phi = parse_profile(d_phi);
            if (!(d_alpha >= 1.0)) {
                throw UsageError("alpha must be at least 1");
            }
            std::vector<tl::GroupFunction> witnesses;
            for (auto n : parse_size_list(d_n)) {
                if (n == 0) {
                    throw UsageError("N must be positive");
                }
                require_budget(tl::witness_group_size(tl::RieszCase::ddagger, n), resolve_budget(budget_flag),
                               "delta N=" + std::to_string(n));
                witnesses.push_back(tl::riesz_product(tl::RieszSpec::rademacher(n, d_alpha)));
            }
            const tl::CentralizerConfig config{phi, tl::infinity, 1.0, 2.0};
            const auto rep = tl::delta_lower(config, witnesses);
            auto j = tl::to_json(rep);
            j["profile"] = phi.name();
            j["alpha"] = d_alpha;
            if (d_min) {
                j["min"] = *d_min;
                j["pass"] = rep.delta_lower > *d_min;
            }
            emit_json(d_out, j);
            if (d_min && !(rep.delta_lower > *d_min)) {
                std::cerr << "FAIL delta_lower " << tl::format_number(rep.delta_lower) << " <= " << tl::format_number(*d_min) << '\n';
                return exit_assertion;
            }
            return exit_ok;
        };
    });

    // twisted quasinorm / act
    auto* twisted = app.add_subcommand("twisted", "twisted-sum quasinorm and module action on JSON pairs");
    twisted->require_subcommand(1);
    std::string t_phi = "id", t_pair, t_a, t_out;
    double t_p = 2.0, t_q = 2.0;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--pair", t_pair, "JSON file {g: function, f: function}")->required();
        cmd->add_option("--phi", t_phi)->capture_default_str();
        cmd->add_option("--p", t_p, "domain exponent")->capture_default_str();
        cmd->add_option("--q", t_q, "codomain exponent")->capture_default_str();
        cmd->add_option("--out", t_out, "JSON output file (default stdout)");
    };
    auto make_config = [&] {
        tl::CentralizerConfig c{parse_profile(t_phi), t_p, t_q, 2.0};
        try {
            c.validate();
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
        return c;
    };
    auto* quasinorm = twisted->add_subcommand("quasinorm", "||g - mho f||_q + ||f||_p");
    add_common(quasinorm);
    quasinorm->callback([&] {
        action = [&] {
            const auto config = make_config();
            const auto pair = read_pair(t_pair);
            emit_json(t_out, {{"quasinorm", tl::twisted_quasinorm(config, pair)}, {"profile", config.profile.name()}});
            return exit_ok;
        };
    });
    auto* act = twisted->add_subcommand("act", "convolution action a(g, f) = (a*g, a*f) and its bound");
    add_common(act);
    act->add_option("--a", t_a, "JSON file with the function a")->required();
    act->callback([&] {
        action = [&] {
            const auto config = make_config();
            const auto pair = read_pair(t_pair);
            const auto a = read_function(t_a);
            if (!(a.group() == pair.f.group())) {
                throw UsageError("a and the pair live on different groups");
            }
            const auto out = tl::act(a, pair);
            const double lhs = tl::twisted_quasinorm(config, out);
            const double rhs = (1.0 + tl::centralizer_bound(config.profile)) * tl::norm(a, 1.0) * tl::twisted_quasinorm(config, pair);
            emit_json(t_out, {{"pair", tl::to_json(out)},
                              {"quasinorm", lhs},
                              {"bound", rhs},
                              {"pass", lhs <= rhs + 1e-9}});
            if (!(lhs <= rhs + 1e-9)) {
                std::cerr << "FAIL act: quasinorm " << tl::format_number(lhs) << " > bound " << tl::format_number(rhs) << '\n';
                return exit_assertion;
            }
            return exit_ok;
        };
    });
    auto* tdelta = twisted->add_subcommand("delta", "delta_lower on witness functions from JSON files");
    std::vector<std::string> td_files;
    tdelta->add_option("witnesses", td_files, "JSON function files")->required();
    tdelta->add_option("--phi", t_phi)->capture_default_str();
    tdelta->add_option("--out", t_out, "JSON output file (default stdout)");
    tdelta->callback([&] {
        action = [&] {
            const tl::CentralizerConfig config{parse_profile(t_phi), tl::infinity, 1.0, 2.0};
            std::vector<tl::GroupFunction> ws;
            for (const auto& f : td_files) {
                ws.push_back(read_function(f));
            }
            try {
                emit_json(t_out, tl::to_json(tl::delta_lower(config, ws)));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            return exit_ok;
        };
    });

    // suite
    auto* suite = app.add_subcommand("suite", "run every invariant check");
    tl::SuiteOptions s_opts;
    std::string s_out;
    suite->add_option("--seed", s_opts.seed)->capture_default_str();
    suite->add_option("--trials", s_opts.trials, "random inputs per property")->capture_default_str();
    suite->add_option("--defect-trials", s_opts.defect_trials, "sampled pairs per defect estimate")->capture_default_str();
    suite->add_option("--witness-max-n", s_opts.witness_max_n, "largest N in the witness checks")->capture_default_str();
    suite->add_option("--out", s_out, "JSON output file (default stdout)");
    suite->callback([&] {
        action = [&] {
            require_budget(std::size_t{1} << std::min<std::size_t>(s_opts.witness_max_n, 62), resolve_budget(budget_flag),
                           "suite");
            json manifest = json::array();
            for (const auto& e : tl::suite_manifest()) {
                if (manifest.empty() || manifest.back() != e.module) {
                    manifest.push_back(e.module);
                }
            }
            return report_checks(tl::run_suite(s_opts), s_out,
                                 {{"command", "suite"}, {"seed", s_opts.seed}, {"trials", s_opts.trials}, {"manifest", manifest}});
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

// Copyright 2026 The nongauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"
#include "nongauss/cubic.h"
#include "nongauss/errors.h"
#include "nongauss/gaussian.h"
#include "nongauss/measures.h"
#include "nongauss/shadows.h"
#include "nongauss/swap_test.h"

namespace nongauss::cli {

namespace {

using Json = nlohmann::ordered_json;

double parse_double(std::string_view text, const char *what) {
    double v = 0.0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw InvalidArgument(std::string(what) + ": cannot parse '" + std::string(text) + "' as a number");
    }
    return v;
}

long long parse_integer(std::string_view text, const char *what) {
    long long v = 0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw InvalidArgument(std::string(what) + ": cannot parse '" + std::string(text) + "' as an integer");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

// Rounds to the printed precision so JSON and CSV carry the same digits.
Json json_number(double v) {
    std::string s = format_number(v);
    return parse_double(s, "json");
}

class Output {
   public:
    Output(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw InvalidArgument("cannot open output file '" + path + "'");
            }
            stream_ = &file_;
        }
    }
    std::ostream &operator*() {
        return *stream_;
    }

   private:
    std::ofstream file_;
    std::ostream *stream_;
};

void write_csv_row(std::ostream &out, const std::vector<std::string> &fields) {
    for (size_t i = 0; i < fields.size(); i++) {
        out << (i ? "," : "") << fields[i];
    }
    out << '\n';
}

struct MeasureArgs {
    std::string family = "fock";
    std::string n;
    std::string energy;
    std::string beta;
    double squeeze = 0.0;
    std::string alpha = "2";
    int cutoff = 60;
};

void run_measure(const MeasureArgs &args, std::ostream &out) {
    const std::vector<double> alphas = parse_grid(args.alpha);
    auto require = [&](const std::string &grid, const char *flag) {
        if (grid.empty()) {
            throw InvalidArgument("measure --family " + args.family + " needs " + flag);
        }
    };
    struct Row {
        double param;
        double mean_photon;
        std::function<double(double)> value;
    };
    std::vector<Row> rows;
    if (args.family == "fock" || args.family == "zero-n") {
        require(args.n, "--n");
        for (int n : parse_int_grid(args.n)) {
            PureState psi = args.family == "fock" ? make_fock(n, args.cutoff) : make_zero_n(n, args.cutoff);
            rows.push_back({double(n), mean_photon_number(psi), [psi](double a) { return n_renyi(psi, a); }});
        }
    } else if (args.family == "cubic") {
        require(args.energy, "--energy");
        for (double e : parse_grid(args.energy)) {
            CubicPhaseParams p = cubic_params_for_energy(e);
            int cutoff = args.cutoff;
            rows.push_back({e, cubic_mean_photon(p.gamma, p.r, p.momentum), [p, cutoff](double a) {
                                if (a == 2.0) {
                                    return cubic_n_renyi2(p.x());
                                }
                                return n_renyi(make_cubic_phase(p.gamma, p.r, cutoff, p.momentum), a);
                            }});
        }
    } else if (args.family == "cat") {
        require(args.beta, "--beta");
        for (double b : parse_grid(args.beta)) {
            PureState psi = make_cat({1.0, 1.0}, {b, -b}, args.squeeze, args.cutoff);
            rows.push_back({b, mean_photon_number(psi), [psi](double a) { return n_renyi(psi, a); }});
        }
    } else {
        throw InvalidArgument("measure: unknown family '" + args.family + "'");
    }
    std::ostringstream buf;
    write_csv_row(buf, {"family", "param", "mean_photon", "alpha", "value"});
    for (const Row &row : rows) {
        for (double a : alphas) {
            write_csv_row(buf, {args.family, format_number(row.param), format_number(row.mean_photon),
                                format_number(a), format_number(row.value(a))});
        }
    }
    out << buf.str();
}

struct SwapArgs {
    std::string state;
    std::string sigma;
    int cap = 10;
    uint64_t shots = 100000;
    uint64_t seed = 0;
    int cutoff = 40;
};

Json report_json(const EstimatorReport &r) {
    Json j;
    j["estimate"] = json_number(r.estimate);
    j["shots"] = r.shots;
    j["cap"] = r.cap;
    j["statistical_stderr"] = json_number(r.statistical_stderr);
    j["systematic_bound"] = json_number(r.systematic_bound);
    j["truncated_expectation"] = json_number(r.truncated_expectation);
    return j;
}

void run_swap(const SwapArgs &args, std::ostream &out) {
    PureState psi = parse_state(args.state, args.cutoff);
    Json j;
    if (args.sigma.empty()) {
        ProtocolReport r = simulate_nongauss_protocol(psi, args.cap, args.shots, args.seed);
        j = report_json(r.swap);
        j["mode"] = "protocol";
        j["purity"] = json_number(r.purity);
        j["e2"] = json_number(r.e2);
        j["e2_stderr"] = json_number(r.e2_stderr);
        j["reliable"] = r.reliable;
    } else {
        PureState phi = parse_state(args.sigma, args.cutoff);
        j = report_json(simulate_swap_test(DensityOperator::from_pure(psi), DensityOperator::from_pure(phi),
                                           args.cap, args.shots, args.seed));
        j["mode"] = "pair";
    }
    j["seed"] = args.seed;
    out << j.dump(2) << '\n';
}

void run_negativity(const std::string &grid, std::ostream &out) {
    std::ostringstream buf;
    write_csv_row(buf, {"x", "W", "err"});
    for (double x : parse_grid(grid)) {
        NegativityResult w = wigner_negativity(x);
        write_csv_row(buf, {format_number(x), format_number(w.value), format_number(w.error)});
    }
    out << buf.str();
}

void run_bound(const std::string &grid, double epsilon, double delta, std::ostream &out) {
    std::ostringstream buf;
    write_csv_row(buf, {"x", "r_opt", "mean_photon", "dr", "N"});
    for (const BoundRow &r : lower_bound_curve(epsilon, delta, parse_grid(grid))) {
        write_csv_row(buf, {format_number(r.x), format_number(r.r_opt), format_number(r.mean_photon),
                            format_number(r.dr), format_number(r.samples)});
    }
    out << buf.str();
}

struct ShadowArgs {
    std::string state;
    uint64_t samples = 200000;
    int cap = 4;
    uint64_t seed = 0;
    int cutoff = 20;
    int blocks = 50;
    int resamples = 1000;
};

void run_shadow(const ShadowArgs &args, std::ostream &out) {
    DensityOperator rho = DensityOperator::from_pure(parse_state(args.state, args.cutoff));
    std::vector<ShadowSample> samples = sample_shadows(rho, args.samples, args.seed);
    ShadowStatistics st = shadow_statistics(samples, args.cap, args.seed, args.blocks, args.resamples);
    Json j;
    j["purity"] = json_number(st.purity);
    j["stderr_bootstrap"] = json_number(st.purity_stderr);
    j["N"] = args.samples;
    j["M"] = args.cap;
    j["seed"] = args.seed;
    out << j.dump(2) << '\n';
}

// Fast invariants; the full criterion suite lives in the acceptance test.
int run_selftest(std::ostream &out) {
    struct Check {
        const char *name;
        std::function<bool()> pass;
    };
    const std::vector<Check> checks = {
        {"hom_fock1_all_orders",
         [] {
             PureState one = make_fock(1, 8);
             for (double a : {0.5, 1.0, 2.0, 3.0}) {
                 if (std::abs(n_renyi(one, a) - 1.0) > 1e-9) {
                     return false;
                 }
             }
             return true;
         }},
        {"gaussian_inputs_zero",
         [] {
             return n_renyi(make_coherent(1.0, 30), 2.0) < 1e-6 && n_renyi(make_squeezed(0.3, 30), 2.0) < 1e-6;
         }},
        {"fock_analytic_matches_simulation",
         [] {
             for (int n = 0; n <= 6; n++) {
                 double sim = n_renyi(make_fock(n, 2 * n + 2), 2.0);
                 if (std::abs(sim - n_renyi_fock_analytic(n, 2.0)) > 1e-9) {
                     return false;
                 }
             }
             return true;
         }},
        {"beam_splitter_preserves_two_copy_covariance",
         [] {
             PureState cat = make_cat({1.0, Complex(0.0, 1.0)}, {1.2, -0.4}, 0.2, 30);
             PureState pair = tensor(cat, cat);
             RMatrix before = covariance_of(pair).cov;
             RMatrix after = covariance_of(apply_beam_splitter(pair)).cov;
             return (before - after).cwiseAbs().maxCoeff() < 1e-8;
         }},
        {"negativity_small_x_is_one", [] { return std::abs(wigner_negativity(1e-3).value - 1.0) < 1e-3; }},
        {"swap_expectation_fock1_reduced",
         [] {
             DensityOperator rho = partial_trace(beam_splitter_output(make_fock(1, 10)), 0);
             return std::abs(truncated_swap_expectation(joint_pnr_distribution(rho, rho), 10) - 0.5) < 1e-10;
         }},
        {"cubic_fidelity_formula",
         [] {
             PureState a = make_squeezed(-0.2, 60);
             PureState b = make_squeezed(-0.7, 60);
             double overlap = std::norm(a.amplitudes().dot(b.amplitudes()));
             return std::abs(overlap - cubic_fidelity(0.2, 0.7)) < 1e-8;
         }},
    };
    bool ok = true;
    for (const Check &c : checks) {
        bool pass = false;
        try {
            pass = c.pass();
        } catch (const std::exception &e) {
            out << "ERROR " << c.name << ": " << e.what() << '\n';
        }
        out << (pass ? "PASS " : "FAIL ") << c.name << '\n';
        ok = ok && pass;
    }
    return ok ? kExitOk : kExitNumerical;
}

std::optional<std::string> find_flag_value(int argc, const char *const *argv, const std::string &flag) {
    for (int i = 1; i < argc; i++) {
        std::string_view a = argv[i];
        if (a == flag && i + 1 < argc) {
            return std::string(argv[i + 1]);
        }
        if (a.size() > flag.size() && a.substr(0, flag.size() + 1) == flag + "=") {
            return std::string(a.substr(flag.size() + 1));
        }
    }
    return std::nullopt;
}

std::string json_scalar(const Json &v, const std::string &key) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    if (v.is_number_integer() || v.is_number_unsigned()) {
        return v.dump();
    }
    if (v.is_number_float()) {
        return format_number(v.get<double>());
    }
    throw InvalidArgument("config key '" + key + "' must be a string, number or boolean");
}

// Config values become option defaults of the chosen subcommand, so flags still win.
void apply_config(const std::string &path, CLI::App *sub) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidArgument("cannot read config file '" + path + "'");
    }
    Json cfg;
    try {
        cfg = Json::parse(in);
    } catch (const Json::exception &e) {
        throw InvalidArgument("config file '" + path + "': " + e.what());
    }
    if (!cfg.is_object()) {
        throw InvalidArgument("config file '" + path + "' must hold a JSON object");
    }
    for (const auto &[key, value] : cfg.items()) {
        CLI::Option *opt = sub == nullptr ? nullptr : sub->get_option_no_throw("--" + key);
        if (opt == nullptr) {
            throw InvalidArgument("config key '" + key + "' is not an option of this subcommand");
        }
        opt->default_val(json_scalar(value, key));
    }
}

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    if (ec != std::errc()) {
        throw NumericalFailure("format_number: conversion failed");
    }
    return std::string(buf, ptr);
}

std::vector<double> parse_grid(const std::string &text) {
    if (text.find("..") != std::string::npos) {
        std::vector<int> ints = parse_int_grid(text);
        return std::vector<double>(ints.begin(), ints.end());
    }
    std::vector<std::string_view> parts = split(text, ':');
    if (parts.size() == 1) {
        return {parse_double(parts[0], "grid")};
    }
    if (parts.size() < 3 || parts.size() > 4 || (parts.size() == 4 && parts[3] != "log")) {
        throw InvalidArgument("grid '" + text + "': expected start:stop:count[:log]");
    }
    const double start = parse_double(parts[0], "grid start");
    const double stop = parse_double(parts[1], "grid stop");
    const long long count = parse_integer(parts[2], "grid count");
    const bool log = parts.size() == 4;
    if (count < 1 || count > 1000000) {
        throw InvalidArgument("grid '" + text + "': count must be in [1, 1e6]");
    }
    if (log && !(start > 0.0 && stop > 0.0)) {
        throw InvalidArgument("grid '" + text + "': log grids need positive endpoints");
    }
    std::vector<double> out(size_t(count), start);
    for (long long i = 1; i < count; i++) {
        double t = double(i) / double(count - 1);
        out[size_t(i)] = log ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                             : start + t * (stop - start);
    }
    if (count > 1) {
        out.back() = stop;
    }
    return out;
}

std::vector<int> parse_int_grid(const std::string &text) {
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
        std::vector<int> out;
        for (double v : parse_grid(text)) {
            if (v != std::round(v) || std::abs(v) > 1e9) {
                throw InvalidArgument("grid '" + text + "': integer values expected");
            }
            out.push_back(int(v));
        }
        return out;
    }
    std::string_view view = text;
    long long lo = parse_integer(view.substr(0, dots), "grid start");
    long long hi = parse_integer(view.substr(dots + 2), "grid stop");
    if (lo > hi || hi - lo > 1000000 || std::abs(lo) > 1000000000 || std::abs(hi) > 1000000000) {
        throw InvalidArgument("grid '" + text + "': need start <= stop");
    }
    std::vector<int> out;
    for (long long v = lo; v <= hi; v++) {
        out.push_back(int(v));
    }
    return out;
}

PureState parse_state(const std::string &spec, int cutoff) {
    size_t colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        for (std::string_view part : split(std::string_view(spec).substr(colon + 1), ',')) {
            args.push_back(parse_double(part, "state parameter"));
        }
    }
    auto need = [&](size_t lo, size_t hi) {
        if (args.size() < lo || args.size() > hi) {
            throw InvalidArgument("state '" + spec + "': wrong number of parameters");
        }
    };
    auto as_int = [&](double v) {
        if (v != std::round(v) || v < 0 || v > 1e6) {
            throw InvalidArgument("state '" + spec + "': photon number must be a nonnegative integer");
        }
        return int(v);
    };
    if (kind == "vacuum") {
        need(0, 0);
        return make_fock(0, cutoff);
    }
    if (kind == "fock") {
        need(1, 1);
        return make_fock(as_int(args[0]), cutoff);
    }
    if (kind == "zero-n") {
        need(1, 1);
        return make_zero_n(as_int(args[0]), cutoff);
    }
    if (kind == "coherent") {
        need(1, 2);
        return make_coherent(Complex(args[0], args.size() > 1 ? args[1] : 0.0), cutoff);
    }
    if (kind == "squeezed") {
        need(1, 1);
        return make_squeezed(args[0], cutoff);
    }
    if (kind == "cat") {
        need(1, 2);
        return make_cat({1.0, 1.0}, {args[0], -args[0]}, args.size() > 1 ? args[1] : 0.0, cutoff);
    }
    if (kind == "cubic") {
        need(2, 3);
        return make_cubic_phase(args[0], args[1], cutoff, args.size() > 2 ? args[2] : 0.0);
    }
    throw InvalidArgument("unknown state kind '" + kind + "'");
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Beam-splitter non-Gaussianity measures, SWAP-test and negativity tools", "nongauss"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config;
    std::string output;
    app.add_option("--config", config, "JSON object of option defaults for the subcommand");
    app.add_option("-o,--output", output, "Write CSV/JSON here instead of stdout");

    MeasureArgs measure;
    CLI::App *measure_cmd = app.add_subcommand("measure", "Beam-splitter entanglement measures (CSV)");
    measure_cmd->add_option("--family", measure.family, "fock | zero-n | cubic | cat")
        ->check(CLI::IsMember({"fock", "zero-n", "cubic", "cat"}))
        ->capture_default_str();
    measure_cmd->add_option("--n", measure.n, "Photon numbers for fock and zero-n (grid)");
    measure_cmd->add_option("--energy", measure.energy, "Mean photon numbers for cubic (grid)");
    measure_cmd->add_option("--beta", measure.beta, "Cat amplitudes (grid)");
    measure_cmd->add_option("--squeeze", measure.squeeze, "Cat squeezing")->capture_default_str();
    measure_cmd->add_option("--alpha", measure.alpha, "Renyi orders (grid)")->capture_default_str();
    measure_cmd->add_option("--cutoff", measure.cutoff, "Fock cutoff")->capture_default_str();

    SwapArgs swap;
    CLI::App *swap_cmd = app.add_subcommand("swap-sim", "Simulated PNR SWAP test (JSON)");
    swap_cmd->add_option("--state", swap.state, "Input state, e.g. fock:1")->required();
    swap_cmd->add_option("--sigma", swap.sigma, "Second state; without it the four-copy E2 protocol runs");
    swap_cmd->add_option("--M", swap.cap, "Detector cap M (counts up to 2M)")->capture_default_str();
    swap_cmd->add_option("--shots", swap.shots, "Shots")->capture_default_str();
    swap_cmd->add_option("--seed", swap.seed, "Seed")->capture_default_str();
    swap_cmd->add_option("--cutoff", swap.cutoff, "Fock cutoff")->capture_default_str();

    std::string x_grid;
    CLI::App *neg_cmd = app.add_subcommand("negativity", "Cubic-phase Wigner negativity (CSV)");
    neg_cmd->add_option("--x", x_grid, "Invariant x = gamma e^{3r} (grid)")->required();

    std::string bound_grid = "2:40:12:log";
    double epsilon = 0.1;
    double delta = 0.05;
    CLI::App *bound_cmd = app.add_subcommand("bound", "Negativity sample lower bound (CSV)");
    bound_cmd->add_option("--x", bound_grid, "Invariant x grid")->capture_default_str();
    bound_cmd->add_option("--epsilon", epsilon, "Negativity accuracy")->capture_default_str();
    bound_cmd->add_option("--delta", delta, "Failure probability")->capture_default_str();

    ShadowArgs shadow;
    CLI::App *shadow_cmd = app.add_subcommand("shadow", "Homodyne classical-shadow purity (JSON)");
    shadow_cmd->add_option("--state", shadow.state, "Input state")->required();
    shadow_cmd->add_option("--N", shadow.samples, "Samples")->capture_default_str();
    shadow_cmd->add_option("--M", shadow.cap, "Fock projection cap")->capture_default_str();
    shadow_cmd->add_option("--seed", shadow.seed, "Seed")->capture_default_str();
    shadow_cmd->add_option("--cutoff", shadow.cutoff, "Fock cutoff of the input")->capture_default_str();
    shadow_cmd->add_option("--blocks", shadow.blocks, "Bootstrap blocks")->capture_default_str();
    shadow_cmd->add_option("--resamples", shadow.resamples, "Bootstrap resamples")->capture_default_str();

    CLI::App *selftest_cmd = app.add_subcommand("selftest", "Run fast invariant checks");

    try {
        if (auto path = find_flag_value(argc, argv, "--config")) {
            CLI::App *chosen = nullptr;
            for (int i = 1; i < argc && chosen == nullptr; i++) {
                for (CLI::App *sub : app.get_subcommands({})) {
                    if (sub->get_name() == argv[i]) {
                        chosen = sub;
                    }
                }
            }
            apply_config(*path, chosen);
        }
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        Output sink(output, out);
        if (*measure_cmd) {
            run_measure(measure, *sink);
        } else if (*swap_cmd) {
            run_swap(swap, *sink);
        } else if (*neg_cmd) {
            run_negativity(x_grid, *sink);
        } else if (*bound_cmd) {
            run_bound(bound_grid, epsilon, delta, *sink);
        } else if (*shadow_cmd) {
            run_shadow(shadow, *sink);
        } else if (*selftest_cmd) {
            return run_selftest(*sink);
        }
    } catch (const NumericalFailure &e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument &e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

}  // namespace nongauss::cli

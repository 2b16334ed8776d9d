/***************************************************************
 *  cli_app.hpp
 *
 *  Command-line front end: scheme/region computation with named
 *  figure presets, single-point evaluation, the improvement
 *  check, discrete-channel search, and CSV/JSON export of
 *  boundary polylines.
 *
 *  Exit codes: 0 success, 2 argument error, 3 resource error.
 ***************************************************************/

#ifndef TWRC_CLI_APP_HPP
#define TWRC_CLI_APP_HPP

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twrc/discrete.hpp"
#include "twrc/geometry.hpp"
#include "twrc/schemes.hpp"
#include "twrc/sweep.hpp"

namespace twrc::cli {

using nlohmann::json;

/// Channel preset keyed to a figure configuration, with the schemes that
/// figure compares.
struct FigurePreset {
    std::string name;
    GaussianTwrc channel;
    std::vector<Scheme> schemes;
};

inline const std::vector<FigurePreset>& presets() {
    static const std::vector<FigurePreset> table = {
        {"fig-asym-pdf", {20, 20, 20, 2, 30, 6},
         {Scheme::direct, Scheme::df, Scheme::partial_df}},
        {"fig-sym-pdf", {20, 20, 20, 12, 12, 6},
         {Scheme::direct, Scheme::df, Scheme::partial_df}},
        {"fig-asym-combined", {50, 40, 20, 20, 40, 15},
         {Scheme::df, Scheme::cf, Scheme::combined, Scheme::partial_df, Scheme::cutset}},
        {"fig-sym-combined", {20, 20, 20, 8, 8, 6},
         {Scheme::df, Scheme::cf, Scheme::combined, Scheme::partial_df, Scheme::cutset}},
    };
    return table;
}

inline const FigurePreset* find_preset(const std::string& name) {
    for (const auto& p : presets())
        if (p.name == name) return &p;
    return nullptr;
}

namespace detail {

struct ChannelArgs {
    double p1 = 0, p2 = 0, pr = 0, n1 = 1, n2 = 1, nr = 1;
    bool db = false;
    std::string preset;
    CLI::Option* preset_opt = nullptr;
    std::vector<CLI::Option*> flag_opts;
};

inline void add_channel_flags(CLI::App* cmd, ChannelArgs& c) {
    c.flag_opts = {
        cmd->add_option("--p1", c.p1, "user-1 transmit power"),
        cmd->add_option("--p2", c.p2, "user-2 transmit power"),
        cmd->add_option("--pr", c.pr, "relay transmit power"),
        cmd->add_option("--n1", c.n1, "noise variance at user 1"),
        cmd->add_option("--n2", c.n2, "noise variance at user 2"),
        cmd->add_option("--nr", c.nr, "noise variance at the relay"),
    };
    cmd->add_flag("--db", c.db, "interpret powers and noise variances as dB");
    std::string names;
    for (const auto& p : presets()) names += (names.empty() ? "" : ", ") + p.name;
    c.preset_opt = cmd->add_option("--preset", c.preset, "figure preset (" + names + ")");
    for (auto* opt : c.flag_opts) c.preset_opt->excludes(opt);
}

inline GaussianTwrc resolve_channel(const ChannelArgs& c) {
    if (c.preset_opt && c.preset_opt->count() > 0) {
        const FigurePreset* p = find_preset(c.preset);
        if (!p) throw std::invalid_argument("unknown preset '" + c.preset + "'");
        return p->channel;
    }
    for (const auto* opt : c.flag_opts)
        if (opt->count() == 0)
            throw std::invalid_argument(
                "channel not specified: pass --p1 --p2 --pr --n1 --n2 --nr or --preset");
    GaussianTwrc ch{c.p1, c.p2, c.pr, c.n1, c.n2, c.nr};
    if (c.db) {
        ch.p1 = db_to_linear(ch.p1);
        ch.p2 = db_to_linear(ch.p2);
        ch.pr = db_to_linear(ch.pr);
        ch.n1 = db_to_linear(ch.n1);
        ch.n2 = db_to_linear(ch.n2);
        ch.nr = db_to_linear(ch.nr);
    }
    require_valid(ch);
    return ch;
}

inline json channel_json(const GaussianTwrc& ch) {
    return {{"p1", ch.p1}, {"p2", ch.p2}, {"pr", ch.pr},
            {"n1", ch.n1}, {"n2", ch.n2}, {"nr", ch.nr}};
}

inline void write_output(const std::string& out_path, const std::string& text, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    f << text;
}

inline std::string csv_boundary(const std::vector<RatePoint>& pts) {
    std::ostringstream os;
    os << "r1,r2\n" << std::setprecision(9);
    for (const auto& p : pts) os << p.r1 << ',' << p.r2 << '\n';
    return os.str();
}

inline std::size_t parse_quantization(const std::string& q) {
    // expects the literal form 1/k
    const auto slash = q.find('/');
    if (slash != std::string::npos && q.substr(0, slash) == "1") {
        try {
            const long long k = std::stoll(q.substr(slash + 1));
            if (k >= 1) return static_cast<std::size_t>(k);
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("quantization must have the form 1/k with integer k >= 1, got '" +
                                q + "'");
}

inline std::size_t enum_cap_from_env() {
    if (const char* env = std::getenv("TWRC_MAX_ENUM")) {
        try {
            const long long v = std::stoll(env);
            if (v >= 1) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("TWRC_MAX_ENUM must be a positive integer");
    }
    return SearchOptions{}.max_enumerations;
}

}  // namespace detail

/// Runs the CLI on the given arguments (program name excluded).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"achievable rate regions and outer bounds for the two-way relay channel"};
    app.name("twrc");
    app.require_subcommand(1);

    // --- region ---------------------------------------------------------
    auto* region_cmd = app.add_subcommand("region", "sweep a scheme and export its boundary");
    detail::ChannelArgs region_ch;
    detail::add_channel_flags(region_cmd, region_ch);
    std::string region_scheme;
    region_cmd->add_option("--scheme", region_scheme,
                           "direct, df, partial-df, cf, combined, cutset")
        ->required();
    std::size_t region_grid = 101;
    region_cmd->add_option("--grid", region_grid, "grid points per parameter axis")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    std::string region_format = "csv";
    region_cmd->add_option("--format", region_format)->check(CLI::IsMember({"csv", "json"}));
    std::string region_out;
    region_cmd->add_option("--out", region_out, "output path (default: stdout)");

    // --- point ----------------------------------------------------------
    auto* point_cmd = app.add_subcommand("point", "evaluate one scheme at fixed split parameters");
    detail::ChannelArgs point_ch;
    detail::add_channel_flags(point_cmd, point_ch);
    std::string point_scheme;
    point_cmd->add_option("--scheme", point_scheme,
                          "direct, df, partial-df, cf, combined, cutset")
        ->required();
    double alpha = 1.0, beta = 1.0, gamma = 0.0;
    auto* alpha_opt = point_cmd->add_option("--alpha", alpha, "user-1 split fraction");
    auto* beta_opt = point_cmd->add_option("--beta", beta, "user-2 split fraction");
    auto* gamma_opt = point_cmd->add_option("--gamma", gamma, "relay split fraction");
    std::string point_out;
    point_cmd->add_option("--out", point_out, "output path (default: stdout)");

    // --- check-improvement ------------------------------------------------
    auto* check_cmd =
        app.add_subcommand("check-improvement",
                           "evaluate the partial-DF strict-improvement condition");
    detail::ChannelArgs check_ch;
    detail::add_channel_flags(check_cmd, check_ch);
    std::string check_out;
    check_cmd->add_option("--out", check_out, "output path (default: stdout)");

    // --- dm ---------------------------------------------------------------
    auto* dm_cmd = app.add_subcommand("dm", "exhaustive search over a discrete channel file");
    std::string dm_file;
    dm_cmd->add_option("--channel-file", dm_file, "plain-text channel table")->required();
    std::string dm_quant = "1/2";
    dm_cmd->add_option("--quantization", dm_quant, "simplex grid step, form 1/k");
    std::size_t dm_usize = 2;
    dm_cmd->add_option("--u-size", dm_usize, "auxiliary alphabet size")
        ->check(CLI::Range(std::size_t{1}, std::size_t{16}));
    std::size_t dm_grid = 101;
    dm_cmd->add_option("--grid", dm_grid, "boundary resolution")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    std::string dm_format = "csv";
    dm_cmd->add_option("--format", dm_format)->check(CLI::IsMember({"csv", "json"}));
    std::string dm_out;
    dm_cmd->add_option("--out", dm_out, "output path (default: stdout)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);

        if (region_cmd->parsed()) {
            const GaussianTwrc ch = detail::resolve_channel(region_ch);
            const Scheme scheme = scheme_from_string(region_scheme);
            RateRegion region = region_sweep(ch, scheme, region_grid);
            const auto columns = union_boundary_indexed(region.pentagons, region_grid);
            if (region_format == "csv") {
                std::vector<RatePoint> pts;
                for (const auto& c : columns) pts.push_back(c.point);
                detail::write_output(region_out, detail::csv_boundary(pts), out);
            } else {
                json doc;
                doc["channel"] = detail::channel_json(ch);
                doc["scheme"] = to_string(scheme);
                doc["grid"] = region_grid;
                json boundary = json::array();
                const bool with_params = !region.params.empty();
                for (const auto& c : columns) {
                    json pt = {{"r1", c.point.r1}, {"r2", c.point.r2}};
                    if (with_params) {
                        const SplitParams& sp = region.params[c.pentagon];
                        pt["alpha"] = sp.alpha;
                        pt["beta"] = sp.beta;
                        if (scheme == Scheme::combined) pt["gamma"] = sp.gamma;
                    }
                    boundary.push_back(std::move(pt));
                }
                doc["boundary"] = std::move(boundary);
                detail::write_output(region_out, doc.dump(2) + "\n", out);
            }
            return 0;
        }

        if (point_cmd->parsed()) {
            const GaussianTwrc ch = detail::resolve_channel(point_ch);
            const Scheme scheme = scheme_from_string(point_scheme);
            const bool uses_ab = scheme == Scheme::partial_df || scheme == Scheme::combined;
            const bool uses_g = scheme == Scheme::combined;
            if (!uses_ab && alpha_opt->count() > 0)
                err << "warning: --alpha is ignored by scheme '" << point_scheme << "'\n";
            if (!uses_ab && beta_opt->count() > 0)
                err << "warning: --beta is ignored by scheme '" << point_scheme << "'\n";
            if (!uses_g && gamma_opt->count() > 0)
                err << "warning: --gamma is ignored by scheme '" << point_scheme << "'\n";

            const SplitParams sp{alpha, beta, gamma};
            RateConstraintSet set;
            switch (scheme) {
                case Scheme::direct: set = direct_transmission(ch); break;
                case Scheme::df: set = decode_forward(ch); break;
                case Scheme::cf: set = compute_forward(ch); break;
                case Scheme::partial_df: set = partial_decode_forward(ch, sp); break;
                case Scheme::combined: set = combined_df_cf(ch, sp); break;
                case Scheme::cutset: set = cutset_bound(ch, 101); break;
            }
            json doc;
            doc["channel"] = detail::channel_json(ch);
            doc["scheme"] = to_string(scheme);
            if (uses_ab) {
                doc["alpha"] = sp.alpha;
                doc["beta"] = sp.beta;
            }
            if (uses_g) doc["gamma"] = sp.gamma;
            doc["r1_max"] = set.r1_max;
            doc["r2_max"] = set.r2_max;
            doc["sum_max"] = set.sum_max ? json(*set.sum_max) : json(nullptr);
            if (scheme == Scheme::combined) {
                const IValues v = combined_i_values(ch, sp);
                doc["i_values"] = {{"i1", v.i1}, {"i2", v.i2}, {"i3", v.i3},
                                   {"i4", v.i4}, {"i5", v.i5}, {"i6", v.i6},
                                   {"i7", v.i7}, {"i8", v.i8}, {"i9", v.i9}};
            }
            detail::write_output(point_out, doc.dump(2) + "\n", out);
            return 0;
        }

        if (check_cmd->parsed()) {
            const GaussianTwrc ch = detail::resolve_channel(check_ch);
            const ImprovementWitness w = pdf_improvement_witness(ch);
            json doc;
            doc["channel"] = detail::channel_json(ch);
            doc["noise_condition"] = {{"nr", w.nr},
                                      {"min_n1_n2", w.min_n1_n2},
                                      {"holds", w.noise_disjunct}};
            doc["rate_condition"] = {{"direct_sum", w.direct_sum},
                                     {"relay_mac_sum", w.relay_mac_sum},
                                     {"holds", w.rate_disjunct}};
            doc["improvement"] = w.improved;
            detail::write_output(check_out, doc.dump(2) + "\n", out);
            return 0;
        }

        if (dm_cmd->parsed()) {
            const DmTwrc dm = load_dm_twrc_file(dm_file);
            SearchOptions opt;
            opt.u1_size = dm_usize;
            opt.u2_size = dm_usize;
            opt.max_enumerations = detail::enum_cap_from_env();
            const std::size_t k = detail::parse_quantization(dm_quant);
            RateRegion region = exhaustive_search(dm, k, opt);
            const auto pts = union_boundary(region.pentagons, dm_grid);
            if (dm_format == "csv") {
                detail::write_output(dm_out, detail::csv_boundary(pts), out);
            } else {
                json doc;
                doc["channel_file"] = dm_file;
                doc["quantization"] = "1/" + std::to_string(k);
                doc["u_size"] = dm_usize;
                doc["distributions"] = region.pentagons.size();
                json boundary = json::array();
                for (const auto& p : pts) boundary.push_back({{"r1", p.r1}, {"r2", p.r2}});
                doc["boundary"] = std::move(boundary);
                detail::write_output(dm_out, doc.dump(2) + "\n", out);
            }
            return 0;
        }
        return 0;
    } catch (const CLI::CallForHelp&) {
        for (const auto* sub : {region_cmd, point_cmd, check_cmd, dm_cmd}) {
            if (sub->parsed()) {
                out << sub->help();
                return 0;
            }
        }
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace twrc::cli

#endif  // TWRC_CLI_APP_HPP

// lmg — command-line driver for the lmgphase library.
//
// Emits CSV (comment lines prefixed with '#', then a header row, then data
// rows) to stdout or --out. Formatting is fixed at 12 significant digits so
// identical flags produce byte-identical output, independent of --threads.
//
// Exit codes: 0 success, 1 every grid point failed, 2 usage error.

#include "lmgphase.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

/// One model parameter that is either pinned (--name V) or swept
/// (--name-min/--name-max/--name-steps).
struct AxisFlags {
    double single = 0.0;
    double min = 0.0;
    double max = 0.0;
    long steps = 0;
    CLI::Option* opt_single = nullptr;
    CLI::Option* opt_min = nullptr;
    CLI::Option* opt_max = nullptr;
    CLI::Option* opt_steps = nullptr;

    void add(CLI::App* cmd, const std::string& name, const std::string& what) {
        opt_single = cmd->add_option("--" + name, single, "fixed " + what);
        opt_min = cmd->add_option("--" + name + "-min", min, what + " grid start");
        opt_max = cmd->add_option("--" + name + "-max", max, what + " grid end");
        opt_steps = cmd->add_option("--" + name + "-steps", steps, what + " grid points");
    }

    bool specified() const {
        return opt_single->count() > 0 || opt_min->count() > 0 || opt_max->count() > 0 ||
               opt_steps->count() > 0;
    }

    lmg_axis resolve(const std::string& name) const {
        const bool ranged = opt_min->count() > 0 || opt_max->count() > 0 ||
                            opt_steps->count() > 0;
        if (opt_single->count() > 0) {
            if (ranged) {
                throw UsageError("--" + name + " conflicts with --" + name + "-min/max/steps");
            }
            return lmg_axis{single, single, 1};
        }
        if (opt_min->count() == 0 || opt_max->count() == 0 || opt_steps->count() == 0) {
            throw UsageError("need --" + name + " or all of --" + name + "-min/-max/-steps");
        }
        return lmg_axis{min, max, steps};
    }

    void echo(std::ostream& os, const std::string& name) const {
        if (opt_single->count() > 0) {
            os << "# " << name << ": " << fmt(single) << "\n";
        } else {
            os << "# " << name << ": min=" << fmt(min) << " max=" << fmt(max)
               << " steps=" << steps << "\n";
        }
    }
};

struct TableDeleter {
    void operator()(lmg_table* t) const { lmg_table_destroy(t); }
};
using TablePtr = std::unique_ptr<lmg_table, TableDeleter>;

void check(lmg_status status) {
    if (status != LMG_OK) {
        throw UsageError(std::string(lmg_status_name(status)) + ": " + lmg_last_error());
    }
}

/// Writes comment metadata, the header row and all data rows. Returns 1 when
/// every row carries an error marker, 0 otherwise.
int write_table(std::ostream& os, const std::string& meta, const lmg_table* table,
                const std::string& model_label, const std::string& trailer) {
    os << "# lmgphase " << lmg_version() << "\n" << meta;

    const long cols = lmg_table_cols(table);
    if (!model_label.empty()) os << "model,";
    for (long j = 0; j < cols; ++j) {
        os << lmg_table_column_name(table, j) << ",";
    }
    os << "error\n";

    const long rows = lmg_table_rows(table);
    long failed = 0;
    for (long i = 0; i < rows; ++i) {
        if (!model_label.empty()) os << model_label << ",";
        for (long j = 0; j < cols; ++j) {
            double v = 0.0;
            check(lmg_table_get(table, i, j, &v));
            os << fmt(v) << ",";
        }
        const char* err = lmg_table_row_error(table, i);
        os << (err != nullptr ? err : "") << "\n";
        if (err != nullptr && err[0] != '\0') ++failed;
    }
    os << trailer;
    return (rows > 0 && failed == rows) ? 1 : 0;
}

int emit(const std::string& out_path, const std::string& meta, const lmg_table* table,
         const std::string& model_label, const std::string& trailer = "") {
    if (out_path.empty()) {
        return write_table(std::cout, meta, table, model_label, trailer);
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "lmg: cannot open output file '" << out_path << "'\n";
        return 1;
    }
    return write_table(file, meta, table, model_label, trailer);
}

struct CommonFlags {
    long n = 0;
    long truncation = -1;
    int threads = 0;
    std::string out;

    void add(CLI::App* cmd) {
        cmd->add_option("--n", n, "particle number N")->required();
        cmd->add_option("--truncation", truncation,
                        "series truncation M; -1 = floor(N/2)")
            ->capture_default_str();
        cmd->add_option("--threads", threads, "worker threads; 0 = auto")
            ->capture_default_str();
        cmd->add_option("--out", out, "output CSV path; default stdout");
    }

    void echo(std::ostream& os) const {
        os << "# n: " << n << "\n# truncation: " << truncation
           << (truncation < 0 ? " (floor(N/2))" : "") << "\n# threads: " << threads << "\n";
    }
};

int run_biaxial(const AxisFlags& gamma, const AxisFlags& h, const CommonFlags& common,
                bool with_ed, long ed_limit) {
    const lmg_axis gamma_axis = gamma.resolve("gamma");
    const lmg_axis h_axis = h.resolve("h");

    lmg_ed_options ed;
    lmg_ed_options_init(&ed);
    ed.dim_limit = ed_limit;

    lmg_table* raw = nullptr;
    check(lmg_run_biaxial_sweep(&gamma_axis, &h_axis, common.n, common.truncation,
                                with_ed ? 1 : 0, &ed, common.threads, &raw));
    TablePtr table(raw);

    std::ostringstream meta;
    meta << "# command: biaxial\n";
    gamma.echo(meta, "gamma");
    h.echo(meta, "h");
    common.echo(meta);
    meta << "# ed: " << (with_ed ? 1 : 0) << "\n";
    if (with_ed) meta << "# ed-limit: " << ed_limit << "\n";
    return emit(common.out, meta.str(), table.get(), "");
}

int run_uniaxial(const AxisFlags& hx, const AxisFlags& hz, const CommonFlags& common) {
    const lmg_axis hx_axis = hx.resolve("hx");
    const lmg_axis hz_axis = hz.resolve("hz");

    lmg_table* raw = nullptr;
    check(lmg_run_uniaxial_sweep(&hx_axis, &hz_axis, common.n, common.truncation,
                                 common.threads, &raw));
    TablePtr table(raw);

    std::ostringstream meta;
    meta << "# command: uniaxial\n";
    hx.echo(meta, "hx");
    hz.echo(meta, "hz");
    common.echo(meta);
    return emit(common.out, meta.str(), table.get(), "");
}

int run_scaling(double gamma, double h, const std::vector<long>& n_list, long truncation,
                const std::string& out) {
    if (n_list.size() < 3) {
        throw UsageError("scaling needs at least 3 values in --n-list");
    }
    for (size_t i = 1; i < n_list.size(); ++i) {
        if (n_list[i] <= n_list[i - 1]) {
            throw UsageError("--n-list must be strictly increasing");
        }
    }

    std::ostringstream body;
    std::vector<double> ns, phis;
    for (long n : n_list) {
        lmg_biaxial_params* params = nullptr;
        check(lmg_biaxial_params_create(gamma, h, n, &params));
        lmg_biaxial_result result{};
        const lmg_status status = lmg_biaxial_eval(params, truncation, &result);
        lmg_biaxial_params_destroy(params);
        check(status);
        body << fmt(gamma) << "," << fmt(h) << "," << n << "," << result.truncation_m << ","
             << fmt(result.epsilon) << "," << fmt(result.t_sq) << "," << fmt(result.phi_g)
             << "," << fmt(result.n_mean) << ",\n";
        ns.push_back(static_cast<double>(n));
        phis.push_back(result.phi_g);
    }

    lmg_fit linear{}, loglog{};
    check(lmg_scaling_fit(ns.data(), phis.data(), static_cast<long>(ns.size()), &linear,
                          &loglog));

    std::ostringstream text;
    text << "# lmgphase " << lmg_version() << "\n# command: scaling\n# gamma: " << fmt(gamma)
         << "\n# h: " << fmt(h) << "\n# truncation: " << truncation
         << (truncation < 0 ? " (floor(N/2))" : "") << "\n";
    text << "gamma,h,N,truncation_m,epsilon,t_sq,phi_g,n_mean,error\n" << body.str();
    text << "# fit: linear slope=" << fmt(linear.slope) << " intercept="
         << fmt(linear.intercept) << " r_sq=" << fmt(linear.r_sq) << "\n";
    text << "# fit: loglog slope=" << fmt(loglog.slope) << " intercept="
         << fmt(loglog.intercept) << " r_sq=" << fmt(loglog.r_sq) << "\n";

    if (out.empty()) {
        std::cout << text.str();
        return 0;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) {
        std::cerr << "lmg: cannot open output file '" << out << "'\n";
        return 1;
    }
    file << text.str();
    return 0;
}

int run_oracle(const std::string& model, const AxisFlags& gamma, const AxisFlags& h,
               const AxisFlags& hx, const AxisFlags& hz, const CommonFlags& common,
               long ed_limit, long steps, bool full_check) {
    const bool biaxial = model == "biaxial";
    if (biaxial && (hx.specified() || hz.specified())) {
        throw UsageError("--hx/--hz flags require --model uniaxial");
    }
    if (!biaxial && (gamma.specified() || h.specified())) {
        throw UsageError("--gamma/--h flags require --model biaxial");
    }

    const lmg_axis axis1 = biaxial ? gamma.resolve("gamma") : hx.resolve("hx");
    const lmg_axis axis2 = biaxial ? h.resolve("h") : hz.resolve("hz");

    lmg_ed_options ed;
    lmg_ed_options_init(&ed);
    ed.dim_limit = ed_limit;
    ed.overlap_steps = steps;

    lmg_table* raw = nullptr;
    check(lmg_run_oracle_sweep(biaxial ? LMG_MODEL_BIAXIAL : LMG_MODEL_UNIAXIAL, &axis1,
                               &axis2, common.n, common.truncation, &ed,
                               full_check ? 1 : 0, common.threads, &raw));
    TablePtr table(raw);

    std::ostringstream meta;
    meta << "# command: oracle\n# model: " << model << "\n";
    if (biaxial) {
        gamma.echo(meta, "gamma");
        h.echo(meta, "h");
    } else {
        hx.echo(meta, "hx");
        hz.echo(meta, "hz");
    }
    common.echo(meta);
    meta << "# ed-limit: " << ed_limit << "\n# steps: " << steps
         << "\n# full-check: " << (full_check ? 1 : 0) << "\n";
    return emit(common.out, meta.str(), table.get(), model);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ground-state geometric phase of collective spin models"};
    app.set_help_flag("--help", "print help and exit"); // keep --h free for the field flag
    app.set_version_flag("--version", lmg_version());
    app.require_subcommand(1);

    // biaxial
    auto* cmd_biaxial = app.add_subcommand(
        "biaxial", "phase of H = -(S_x^2 + gamma S_y^2)/N - h S_z over a parameter grid");
    AxisFlags bi_gamma, bi_h;
    CommonFlags bi_common;
    bi_gamma.add(cmd_biaxial, "gamma", "anisotropy gamma in [0,1]");
    bi_h.add(cmd_biaxial, "h", "field strength h > 0");
    bi_common.add(cmd_biaxial);
    bool bi_ed = false;
    long bi_ed_limit = 4001;
    cmd_biaxial->add_flag("--ed", bi_ed, "append exact-diagonalization columns");
    cmd_biaxial->add_option("--ed-limit", bi_ed_limit, "sector dimension limit for --ed")
        ->capture_default_str();

    // uniaxial
    auto* cmd_uniaxial = app.add_subcommand(
        "uniaxial", "phase of H = -S_x^2/N - h_x S_x - h_z S_z over a parameter grid");
    AxisFlags un_hx, un_hz;
    CommonFlags un_common;
    un_hx.add(cmd_uniaxial, "hx", "transverse field h_x");
    un_hz.add(cmd_uniaxial, "hz", "longitudinal field h_z > 0");
    un_common.add(cmd_uniaxial);

    // scaling
    auto* cmd_scaling =
        app.add_subcommand("scaling", "phi_g vs N at fixed (gamma, h) with linear and "
                                      "log-log fits");
    double sc_gamma = 0.0, sc_h = 0.0;
    std::vector<long> sc_n_list;
    long sc_truncation = -1;
    std::string sc_out;
    cmd_scaling->add_option("--gamma", sc_gamma, "anisotropy gamma in [0,1]")->required();
    cmd_scaling->add_option("--h", sc_h, "field strength h > 0")->required();
    cmd_scaling->add_option("--n-list", sc_n_list, "comma-separated N values (>= 3)")
        ->required()
        ->delimiter(',');
    cmd_scaling->add_option("--truncation", sc_truncation,
                            "series truncation M; -1 = floor(N/2)")
        ->capture_default_str();
    cmd_scaling->add_option("--out", sc_out, "output CSV path; default stdout");

    // oracle
    auto* cmd_oracle = app.add_subcommand(
        "oracle", "analytic pipeline vs exact diagonalization on a parameter grid");
    std::string or_model;
    AxisFlags or_gamma, or_h, or_hx, or_hz;
    CommonFlags or_common;
    long or_ed_limit = 4001;
    long or_steps = 10000;
    bool or_full_check = false;
    cmd_oracle->add_option("--model", or_model, "biaxial or uniaxial")
        ->required()
        ->check(CLI::IsMember({"biaxial", "uniaxial"}));
    or_gamma.add(cmd_oracle, "gamma", "anisotropy (biaxial)");
    or_h.add(cmd_oracle, "h", "field strength (biaxial)");
    or_hx.add(cmd_oracle, "hx", "transverse field (uniaxial)");
    or_hz.add(cmd_oracle, "hz", "longitudinal field (uniaxial)");
    or_common.add(cmd_oracle);
    cmd_oracle->add_option("--ed-limit", or_ed_limit, "sector dimension limit")
        ->capture_default_str();
    cmd_oracle->add_option("--steps", or_steps, "overlap-product discretization steps")
        ->capture_default_str();
    cmd_oracle->add_flag("--full-check", or_full_check,
                         "compare the 2^N and sector ground energies (N <= 12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cmd_biaxial->parsed()) {
            return run_biaxial(bi_gamma, bi_h, bi_common, bi_ed, bi_ed_limit);
        }
        if (cmd_uniaxial->parsed()) {
            return run_uniaxial(un_hx, un_hz, un_common);
        }
        if (cmd_scaling->parsed()) {
            return run_scaling(sc_gamma, sc_h, sc_n_list, sc_truncation, sc_out);
        }
        if (cmd_oracle->parsed()) {
            return run_oracle(or_model, or_gamma, or_h, or_hx, or_hz, or_common,
                              or_ed_limit, or_steps, or_full_check);
        }
    } catch (const UsageError& e) {
        std::cerr << "lmg: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "lmg: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

// Command-line surface: eigenpairs, evaluations, Gram matrices, residual
// reports and plot-ready figure data as CSV/JSON.
//
// Exit codes: 0 success, 2 usage or parameter error, 3 numerical failure.

#include "wcpswf/cgp.hpp"
#include "wcpswf/cpswf.hpp"
#include "wcpswf/errors.hpp"
#include "wcpswf/figures.hpp"
#include "wcpswf/io.hpp"
#include "wcpswf/quadrature.hpp"
#include "wcpswf/transform.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace wcpswf;

struct RunConfig {
    int n = 0;
    int count = 1;
    int k = 0;
    int m = 2;
    double alpha = 0.0;
    double c = 1.0;
    double tol = 1e-14;
    int grid = 64;
    std::string out;
    std::string format = "csv";
    std::string parity = "even";
    bool normalized = false;
    bool radial_only = false;
    bool verify = false;
    int npts = 120;
    int figure = 1;
};

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

void check_common(const RunConfig& cfg) {
    if (cfg.alpha <= -1.0) throw std::invalid_argument("alpha must exceed -1");
    if (cfg.m < 2) throw std::invalid_argument("m must be >= 2");
    if (cfg.k < 0) throw std::invalid_argument("k must be >= 0");
    if (cfg.c < 0.0) throw std::invalid_argument("c must be >= 0");
    if (cfg.format != "csv" && cfg.format != "json")
        throw std::invalid_argument("format must be csv or json");
}

Parity parse_parity(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw std::invalid_argument("parity must be even or odd");
}

void emit_cgp_2d(std::ostream& os, const CgpSpec& spec, int grid, bool normalized) {
    write_csv_row(os, std::vector<std::string>{"r", "theta", "blade_e0", "blade_e1",
                                               "blade_e2", "blade_e12"});
    for (int i = 0; i <= grid; ++i) {
        const double r = static_cast<double>(i) / grid;
        for (int j = 0; j < grid; ++j) {
            const double th = 2.0 * std::numbers::pi * j / grid;
            const Multivector2 v = cgp_eval_2d(spec, r, th, normalized);
            write_csv_row(os, std::vector<double>{r, th, v.s, v.e1, v.e2, v.e12});
        }
    }
}

void emit_cgp_radial(std::ostream& os, const CgpSpec& spec, int grid, bool normalized) {
    write_csv_row(os, std::vector<std::string>{"t", "value"});
    for (int i = 0; i <= grid; ++i) {
        const double t = static_cast<double>(i) / grid;
        write_csv_row(os, std::vector<double>{t, cgp_radial_value(spec, t, normalized)});
    }
}

int cmd_cgp(const RunConfig& cfg) {
    check_common(cfg);
    const CgpSpec spec{cfg.n, cfg.m, cfg.k, cfg.alpha};
    validate(spec);
    if (spec.m != 2 && !cfg.radial_only)
        throw std::invalid_argument("2-D evaluation needs m = 2; pass --radial");
    std::ofstream file;
    std::ostream& os = open_sink(cfg.out, file);
    if (cfg.radial_only)
        emit_cgp_radial(os, spec, cfg.grid, cfg.normalized);
    else
        emit_cgp_2d(os, spec, cfg.grid, cfg.normalized);
    return 0;
}

int cmd_cpswf(const RunConfig& cfg) {
    check_common(cfg);
    if (cfg.count < 1) throw std::invalid_argument("count must be >= 1");
    const Parity parity = parse_parity(cfg.parity);
    const auto pairs = cpswf_solve(parity, cfg.k, cfg.m, cfg.alpha, cfg.c, cfg.count, cfg.tol);
    std::ofstream file;
    std::ostream& os = open_sink(cfg.out, file);
    if (cfg.format == "json") {
        write_eigenpairs_json(os, pairs);
    } else {
        write_csv_row(os, std::vector<std::string>{"parity", "N", "k", "m", "alpha", "c",
                                                   "chi", "trunc"});
        for (const auto& p : pairs) {
            std::vector<std::string> row{p.parity == Parity::Even ? "even" : "odd",
                                         std::to_string(p.N),
                                         std::to_string(p.k),
                                         std::to_string(p.m),
                                         format_float(p.alpha),
                                         format_float(p.c),
                                         format_float(p.chi),
                                         std::to_string(p.trunc)};
            write_csv_row(os, row);
        }
    }
    if (cfg.verify) {
        const auto G = gram_matrix(pairs, cfg.npts);
        double max_off = 0.0, max_diag_dev = 0.0;
        for (std::size_t i = 0; i < G.size(); ++i)
            for (std::size_t j = 0; j < G.size(); ++j) {
                if (i == j)
                    max_diag_dev = std::max(max_diag_dev, std::abs(G[i][j] - 1.0));
                else
                    max_off = std::max(max_off, std::abs(G[i][j]));
            }
        double max_res = 0.0;
        for (const auto& p : pairs) {
            for (int g = 1; g < 20; ++g) {
                const double t = g / 20.0;
                const double res = (parity == Parity::Even) ? sl_residual_even(p, t)
                                                            : sl_residual_odd(p, t);
                const double scale = sl_residual_scale(p, t);
                if (scale > 0.0) max_res = std::max(max_res, std::abs(res) / scale);
            }
        }
        os << "# verify: max_gram_offdiag=" << format_float(max_off)
           << " max_gram_diag_dev=" << format_float(max_diag_dev)
           << " max_sl_residual_rel=" << format_float(max_res) << "\n";
    }
    return 0;
}

int cmd_gram(const RunConfig& cfg) {
    check_common(cfg);
    if (cfg.count < 1) throw std::invalid_argument("count must be >= 1");
    const Parity parity = parse_parity(cfg.parity);
    const auto pairs = cpswf_solve(parity, cfg.k, cfg.m, cfg.alpha, cfg.c, cfg.count, cfg.tol);
    const auto G = gram_matrix(pairs, cfg.npts);
    std::ofstream file;
    std::ostream& os = open_sink(cfg.out, file);
    for (const auto& row : G) write_csv_row(os, row);
    return 0;
}

int cmd_transform_check(const RunConfig& cfg) {
    check_common(cfg);
    if (cfg.m != 2) throw std::invalid_argument("transform-check needs m = 2");
    const Parity parity = parse_parity(cfg.parity);
    const auto pairs =
        cpswf_solve(parity, cfg.k, cfg.m, cfg.alpha, cfg.c, cfg.n + 1, cfg.tol);
    const EigenQuality q = eigen_quality(pairs[cfg.n], cfg.c, cfg.grid, 2 * cfg.grid);
    std::ofstream file;
    std::ostream& os = open_sink(cfg.out, file);
    os << "{\n"
       << "  \"parity\": \"" << cfg.parity << "\",\n"
       << "  \"N\": " << cfg.n << ",\n"
       << "  \"k\": " << cfg.k << ",\n"
       << "  \"alpha\": " << format_float(cfg.alpha) << ",\n"
       << "  \"c\": " << format_float(cfg.c) << ",\n"
       << "  \"mu_cos\": " << format_float(q.mu_cos) << ",\n"
       << "  \"mu_sin\": " << format_float(q.mu_sin) << ",\n"
       << "  \"residual_rel\": " << format_float(q.residual_rel) << ",\n"
       << "  \"energy_ratio\": " << format_float(q.energy_ratio) << ",\n"
       << "  \"grid\": \"polar " << q.nrad << "x" << q.nang << "\",\n"
       << "  \"note\": \"new numerical measurement; no published reference values\"\n"
       << "}\n";
    return 0;
}

int cmd_figure_data(const RunConfig& cfg) {
    const auto panels = figure_panels(cfg.figure);
    const std::filesystem::path dir = cfg.out.empty() ? "." : cfg.out;
    std::filesystem::create_directories(dir);
    for (const auto& panel : panels) {
        const std::filesystem::path path = dir / ("figure" + panel.label + ".csv");
        std::ofstream os(path, std::ios::binary | std::ios::trunc);
        if (!os) throw std::invalid_argument("cannot open output file: " + path.string());
        if (!panel.is_cpswf) {
            const CgpSpec spec{panel.n, 2, panel.k, panel.alpha};
            if (panel.component == PanelComponent::Radial) {
                emit_cgp_radial(os, spec, cfg.grid, true);
            } else {
                write_csv_row(os, std::vector<std::string>{"r", "theta", "value"});
                for (int i = 0; i <= cfg.grid; ++i) {
                    const double r = static_cast<double>(i) / cfg.grid;
                    for (int j = 0; j < cfg.grid; ++j) {
                        const double th = 2.0 * std::numbers::pi * j / cfg.grid;
                        const Multivector2 v = cgp_eval_2d(spec, r, th, true);
                        const double val = (panel.component == PanelComponent::BladeE1)
                                               ? v.e1
                                               : (panel.component == PanelComponent::BladeE12)
                                                     ? v.e12
                                                     : v.s;
                        write_csv_row(os, std::vector<double>{r, th, val});
                    }
                }
            }
            continue;
        }
        const Parity parity = (panel.n % 2 == 0) ? Parity::Even : Parity::Odd;
        const int N = panel.n / 2;
        const auto pairs = cpswf_solve(parity, panel.k, 2, panel.alpha, panel.c, N + 1, cfg.tol);
        const CpswfEigenpair& p = pairs[N];
        if (panel.component == PanelComponent::Radial) {
            write_csv_row(os, std::vector<std::string>{"t", "value"});
            for (int i = 0; i <= cfg.grid; ++i) {
                const double t = static_cast<double>(i) / cfg.grid;
                write_csv_row(os, std::vector<double>{t, cpswf_radial_value(p, t)});
            }
        } else {
            write_csv_row(os, std::vector<std::string>{"r", "theta", "value"});
            for (int i = 0; i <= cfg.grid; ++i) {
                const double r = static_cast<double>(i) / cfg.grid;
                for (int j = 0; j < cfg.grid; ++j) {
                    const double th = 2.0 * std::numbers::pi * j / cfg.grid;
                    const Multivector2 v = cpswf_eval_2d(p, r, th);
                    const double val = (panel.component == PanelComponent::BladeE1)
                                           ? v.e1
                                           : (panel.component == PanelComponent::BladeE12)
                                                 ? v.e12
                                                 : v.s;
                    write_csv_row(os, std::vector<double>{r, th, val});
                }
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted Clifford prolate spheroidal wave functions"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--k", cfg.k, "spherical monogenic degree");
        sub->add_option("--m", cfg.m, "ambient dimension (>= 2)");
        sub->add_option("--alpha", cfg.alpha, "weight exponent (> -1)");
        sub->add_option("--c", cfg.c, "bandwidth (>= 0)");
        sub->add_option("--tol", cfg.tol, "truncation tail tolerance");
        sub->add_option("--grid", cfg.grid, "grid resolution");
        sub->add_option("--npts", cfg.npts, "quadrature points for verification");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "csv|json");
    };

    CLI::App* cgp = app.add_subcommand("cgp", "evaluate a Clifford Gegenbauer polynomial");
    cgp->add_option("--n,--N", cfg.n, "degree");
    cgp->add_flag("--normalized", cfg.normalized, "unit weighted norm");
    cgp->add_flag("--radial", cfg.radial_only, "emit the radial profile only");
    add_common(cgp);

    CLI::App* cpswf = app.add_subcommand("cpswf", "solve for weighted CPSWFs");
    cpswf->add_option("--count", cfg.count, "number of eigenpairs");
    cpswf->add_option("--parity", cfg.parity, "even|odd");
    cpswf->add_flag("--verify", cfg.verify, "append gram/residual report");
    add_common(cpswf);

    CLI::App* gram = app.add_subcommand("gram", "Gram matrix of solved eigenfunctions");
    gram->add_option("--count", cfg.count, "number of eigenpairs");
    gram->add_option("--parity", cfg.parity, "even|odd");
    add_common(gram);

    CLI::App* tcheck =
        app.add_subcommand("transform-check", "finite Fourier eigen-quality report");
    tcheck->add_option("--n,--N", cfg.n, "order within the parity family");
    tcheck->add_option("--parity", cfg.parity, "even|odd");
    add_common(tcheck);

    CLI::App* fig = app.add_subcommand("figure-data", "plot-ready panel data");
    fig->add_option("--figure", cfg.figure, "figure number 1..7");
    add_common(fig);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cgp)) return cmd_cgp(cfg);
        if (app.got_subcommand(cpswf)) return cmd_cpswf(cfg);
        if (app.got_subcommand(gram)) return cmd_gram(cfg);
        if (app.got_subcommand(tcheck)) return cmd_transform_check(cfg);
        if (app.got_subcommand(fig)) return cmd_figure_data(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const wcpswf::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

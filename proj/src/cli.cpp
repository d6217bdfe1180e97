#include "abspec/cli.hpp"

#include <CLI11.hpp>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include "abspec/checks.hpp"
#include "abspec/io.hpp"
#include "abspec/spectrum.hpp"

namespace abspec::cli {

namespace {

const char* kJsonSchemaNote =
    "JSON output schema:\n"
    "  spectrum: {\"config\":{...},\"records\":[{\"lambda\":num,\"z\":num|null,\n"
    "            \"source\":\"stable_landau|stable_shifted|critical|critical_endpoint\",\n"
    "            \"sectors\":[int],\"multiplicity\":int,\"multiplicity_truncated\":bool}],\n"
    "            \"diagnostics\":[str]}\n"
    "  sweep:    {\"config\":{...},\"t\":[num],\"branches\":[{\"id\":int,\"sector\":int|null,\n"
    "            \"lambda\":[num|null]}],\"stable_levels\":[num],\"diagnostics\":[str]}\n"
    "  verify:   {\"config\":{...},\"checks\":[{\"name\":str,\"pass\":bool,\n"
    "            \"measured\":num,\"threshold\":num,\"detail\":str}]}\n"
    "All floating-point values carry 15 significant digits.";

void emit_error(const std::string& kind, const std::string& msg) {
    std::cerr << "{\"error\":\"" << io::json_escape(msg) << "\",\"kind\":\"" << kind
              << "\"}\n";
}

struct OutputTarget {
    std::string path;  // empty = stdout
    template <typename Fn>
    void write(Fn&& fn) const {
        if (path.empty()) {
            fn(std::cout);
        } else {
            std::ofstream ofs(path, std::ios::binary);
            if (!ofs) throw std::runtime_error("cannot open output file: " + path);
            fn(ofs);
        }
    }
};

bool parse_complex(const std::string& s, std::complex<double>& out) {
    std::istringstream iss(s);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(iss >> re)) return false;
    if (iss >> comma) {
        if (comma != ',' || !(iss >> im)) return false;
    }
    out = {re, im};
    return true;
}

bool parse_range(const std::string& s, double& lo, double& hi, int* n) {
    std::istringstream iss(s);
    char c1 = 0, c2 = 0;
    if (!(iss >> lo >> c1 >> hi) || c1 != ':') return false;
    if (n) {
        if (!(iss >> c2 >> *n) || c2 != ':') return false;
    }
    return true;
}

std::string config_json_common(const std::string& command, const ModelParams& p) {
    return "{\"command\":\"" + command + "\",\"alpha\":" + io::fmt15(p.alpha) +
           ",\"B\":" + io::fmt15(p.B);
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Spectra of the Aharonov-Bohm flux + homogeneous field family "
                 "of Hamiltonians under generalized boundary conditions"};
    app.name("abspec");
    app.footer(kJsonSchemaNote);
    app.require_subcommand(1);

    double alpha = 0.3, B = 1.0;
    std::string format = "csv";
    std::string output_path;

    // ---- spectrum ----
    auto* sp_cmd = app.add_subcommand("spectrum", "point spectrum below lambda-max");
    double sp_u = 0.0, sp_v = 0.0, sp_xi = 0.0, sp_eta = 0.0, sp_zeta = 0.0;
    std::string sp_w, sp_bc;
    double sp_lambda_max = 10.0;
    int sp_m_cap = 8;
    sp_cmd->add_option("--alpha", alpha, "flux fraction in ]0,1[");
    sp_cmd->add_option("--B", B, "field strength (> 0)");
    auto* ou = sp_cmd->add_option("--u", sp_u, "Lambda parameter u");
    auto* ov = sp_cmd->add_option("--v", sp_v, "Lambda parameter v");
    auto* ow = sp_cmd->add_option("--w", sp_w, "Lambda parameter w, re[,im]");
    auto* oxi = sp_cmd->add_option("--xi", sp_xi, "rescaled xi");
    auto* oeta = sp_cmd->add_option("--eta", sp_eta, "rescaled eta");
    auto* ozeta = sp_cmd->add_option("--zeta", sp_zeta, "rescaled zeta");
    auto* obc = sp_cmd->add_option("--bc", sp_bc, "'inf' for the H^inf extension");
    sp_cmd->add_option("--lambda-max", sp_lambda_max, "upper end of the window");
    sp_cmd->add_option("--m-cap", sp_m_cap, "Landau degeneracy enumeration cap");
    sp_cmd->add_option("--format", format, "csv|json");
    sp_cmd->add_option("-o,--output", output_path, "output path (default stdout)");

    // ---- sweep ----
    auto* sw_cmd = app.add_subcommand("sweep", "eigenvalue branches along a "
                                               "parameter line t*(xi,eta,zeta)");
    std::string sw_dir = "0.95,0.25,0.25", sw_t = "-5:5:501", sw_window;
    bool sw_serial = false;
    sw_cmd->add_option("--alpha", alpha, "flux fraction in ]0,1[");
    sw_cmd->add_option("--B", B, "field strength (> 0)");
    sw_cmd->add_option("--dir", sw_dir, "direction xi,eta,zeta per unit t");
    sw_cmd->add_option("--t", sw_t, "t range lo:hi:n_steps");
    sw_cmd->add_option("--lambda-window", sw_window, "lo:hi (default -3B:9B)");
    sw_cmd->add_flag("--serial", sw_serial, "use the serial reference path");
    sw_cmd->add_option("--format", format, "csv|json|svg");
    sw_cmd->add_option("-o,--output", output_path, "output path (default stdout)");

    // ---- verify ----
    auto* vf_cmd = app.add_subcommand("verify", "run an invariant suite");
    std::string vf_suite = "all";
    vf_cmd->add_option("suite", vf_suite,
                       "tables|series|green|unitary|digamma|gaps|all");
    vf_cmd->add_option("--alpha", alpha, "flux fraction in ]0,1[");
    vf_cmd->add_option("--B", B, "field strength (> 0)");
    vf_cmd->add_option("--format", format, "text|json");
    vf_cmd->add_option("-o,--output", output_path, "output path (default stdout)");

    // ---- green ----
    auto* gr_cmd = app.add_subcommand("green", "sector Green function, series "
                                               "and closed form");
    int gr_m = 0, gr_terms = 2000;
    double gr_z = 0.0, gr_zi = 0.0, gr_r1 = 1.0, gr_r2 = 1.0;
    gr_cmd->add_option("--alpha", alpha, "flux fraction in ]0,1[");
    gr_cmd->add_option("--B", B, "field strength (> 0)");
    gr_cmd->add_option("--m", gr_m, "angular momentum sector");
    gr_cmd->add_option("--z", gr_z, "spectral parameter, real part");
    gr_cmd->add_option("--zi", gr_zi, "spectral parameter, imaginary part");
    gr_cmd->add_option("--r1", gr_r1, "first radius");
    gr_cmd->add_option("--r2", gr_r2, "second radius");
    gr_cmd->add_option("--terms", gr_terms, "series truncation length");
    gr_cmd->add_option("--format", format, "csv|json");
    gr_cmd->add_option("-o,--output", output_path, "output path (default stdout)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const OutputTarget target{output_path};
    try {
        const ModelParams p{alpha, B};
        validate(p);

        if (sp_cmd->parsed()) {
            const bool has_uvw = ou->count() || ov->count() || ow->count();
            const bool has_resc = oxi->count() || oeta->count() || ozeta->count();
            const bool has_inf = obc->count() > 0;
            if (has_uvw + has_resc + has_inf != 1) {
                emit_error("config",
                           "exactly one of (--u/--v/--w), (--xi/--eta/--zeta), "
                           "--bc inf must be given");
                return 1;
            }
            if (has_inf && sp_bc != "inf") {
                emit_error("config", "--bc only accepts 'inf'");
                return 1;
            }
            std::vector<EigenvalueRecord> recs;
            RescaledBC rbc;
            if (has_inf) {
                recs = hinf_spectrum(p, sp_lambda_max, sp_m_cap);
            } else {
                if (has_uvw) {
                    std::complex<double> w{0.0, 0.0};
                    if (*ow && !parse_complex(sp_w, w)) {
                        emit_error("config", "cannot parse --w (want re or re,im)");
                        return 1;
                    }
                    rbc = rescale({sp_u, sp_v, w}, p);
                } else {
                    rbc = {sp_xi, sp_eta, std::abs(sp_zeta)};
                }
                recs = full_spectrum(rbc, p, sp_lambda_max, sp_m_cap);
            }
            std::string cfg = config_json_common("spectrum", p) +
                              ",\"lambda_max\":" + io::fmt15(sp_lambda_max) +
                              ",\"m_cap\":" + std::to_string(sp_m_cap);
            if (has_inf)
                cfg += ",\"bc\":\"inf\"";
            else
                cfg += ",\"xi\":" + io::fmt15(rbc.xi) + ",\"eta\":" +
                       io::fmt15(rbc.eta) + ",\"zeta\":" + io::fmt15(rbc.zeta);
            cfg += "}";
            target.write([&](std::ostream& os) {
                if (format == "json")
                    io::write_spectrum_json(os, recs, cfg, {});
                else
                    io::write_spectrum_csv(os, recs);
            });
            return 0;
        }

        if (sw_cmd->parsed()) {
            SweepSpec spec;
            {
                std::istringstream iss(sw_dir);
                char c1 = 0, c2 = 0;
                if (!(iss >> spec.direction[0] >> c1 >> spec.direction[1] >> c2 >>
                      spec.direction[2]) ||
                    c1 != ',' || c2 != ',') {
                    emit_error("config", "cannot parse --dir (want a,b,c)");
                    return 1;
                }
            }
            if (!parse_range(sw_t, spec.t_lo, spec.t_hi, &spec.n_steps)) {
                emit_error("config", "cannot parse --t (want lo:hi:n)");
                return 1;
            }
            if (sw_window.empty()) {
                spec.lambda_lo = -3.0 * B;
                spec.lambda_hi = 9.0 * B;
            } else if (!parse_range(sw_window, spec.lambda_lo, spec.lambda_hi,
                                    nullptr)) {
                emit_error("config", "cannot parse --lambda-window (want lo:hi)");
                return 1;
            }
            const auto table = sweep(spec, p, !sw_serial);
            std::string cfg = config_json_common("sweep", p) + ",\"dir\":[" +
                              io::fmt15(spec.direction[0]) + "," +
                              io::fmt15(spec.direction[1]) + "," +
                              io::fmt15(spec.direction[2]) + "],\"t\":[" +
                              io::fmt15(spec.t_lo) + "," + io::fmt15(spec.t_hi) +
                              "," + std::to_string(spec.n_steps) +
                              "],\"lambda_window\":[" + io::fmt15(spec.lambda_lo) +
                              "," + io::fmt15(spec.lambda_hi) + "]}";
            const std::string title =
                "(xi,eta,zeta) = (" + io::fmt15(spec.direction[0]) + " t, " +
                io::fmt15(spec.direction[1]) + " t, " +
                io::fmt15(spec.direction[2]) + " t), alpha=" + io::fmt15(alpha) +
                ", B=" + io::fmt15(B);
            target.write([&](std::ostream& os) {
                if (format == "json")
                    io::write_sweep_json(os, table, cfg);
                else if (format == "svg")
                    io::write_sweep_svg(os, table, title, spec.lambda_lo,
                                        spec.lambda_hi);
                else
                    io::write_sweep_csv(os, table);
            });
            return 0;
        }

        if (vf_cmd->parsed()) {
            const auto results = run_suite(vf_suite, p);
            std::string cfg = config_json_common("verify", p) + ",\"suite\":\"" +
                              vf_suite + "\"}";
            target.write([&](std::ostream& os) {
                if (format == "json")
                    io::write_checks_json(os, results, cfg);
                else
                    io::write_checks_text(os, results);
            });
            const bool all_pass =
                std::all_of(results.begin(), results.end(),
                            [](const CheckResult& r) { return r.pass; });
            if (!all_pass) {
                emit_error("verify", "one or more checks failed");
                return 3;
            }
            return 0;
        }

        if (gr_cmd->parsed()) {
            const std::complex<double> z{gr_z, gr_zi};
            const auto gs = green_series({gr_m}, z, gr_r1, gr_r2, p, gr_terms);
            const auto gc = green_closed({gr_m}, z, gr_r1, gr_r2, p);
            target.write([&](std::ostream& os) {
                if (format == "json") {
                    os << "{\"config\":" << config_json_common("green", p)
                       << ",\"m\":" << gr_m << ",\"z\":[" << io::fmt15(gr_z) << ","
                       << io::fmt15(gr_zi) << "],\"r1\":" << io::fmt15(gr_r1)
                       << ",\"r2\":" << io::fmt15(gr_r2)
                       << ",\"terms\":" << gr_terms << "}"
                       << ",\"series\":[" << io::fmt15(gs.real()) << ","
                       << io::fmt15(gs.imag()) << "],\"closed\":["
                       << io::fmt15(gc.real()) << "," << io::fmt15(gc.imag())
                       << "],\"rel_diff\":"
                       << io::fmt15(std::abs(gs - gc) / std::abs(gc)) << "}\n";
                } else {
                    os << "quantity,re,im\n";
                    os << "series," << io::fmt15(gs.real()) << ','
                       << io::fmt15(gs.imag()) << '\n';
                    os << "closed," << io::fmt15(gc.real()) << ','
                       << io::fmt15(gc.imag()) << '\n';
                    os << "rel_diff," << io::fmt15(std::abs(gs - gc) / std::abs(gc))
                       << ",0\n";
                }
            });
            return 0;
        }
    } catch (const CountMismatchError& e) {
        emit_error("count_mismatch", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        emit_error("config", e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error("runtime", e.what());
        return 1;
    }
    return 1;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace abspec::cli

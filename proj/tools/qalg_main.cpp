#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qalg/qalg.h"

namespace {

std::string take(char* s) {
    if (!s) return {};
    std::string out = s;
    qalg_string_free(s);
    return out;
}

int fail_with(int status) {
    std::cerr << "error: " << qalg_last_error() << "\n";
    return status;
}

void emit(const std::string& text, const std::string& out_path) {
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << text;
    }
    std::cout << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qalg: exact computations in the quadratic algebras of braid type"};
    app.require_subcommand(1);

    size_t guard = 0;
    app.add_option("--guard-terms", guard,
                   "term-count guard for intermediate polynomials (env QALG_GUARD_TERMS)");

    /* ---- dim ---- */
    auto* dim = app.add_subcommand("dim", "graded or filtered dimensions of a preset algebra");
    std::string dim_preset, dim_file, dim_field = "default", dim_expect, dim_out;
    int dim_n = 3, dim_deg = -1;
    bool dim_filtered = false, dim_json = false;
    dim->add_option("preset", dim_preset, "preset name (or use --file)");
    dim->add_option("--file", dim_file, "presentation file");
    dim->add_option("--n", dim_n, "rank");
    dim->add_option("--deg", dim_deg, "degree bound (preset default if omitted)");
    dim->add_option("--field", dim_field, "Q | Fp:<prime> | frac | default");
    dim->add_flag("--filtered", dim_filtered, "filtered quotient dimensions");
    dim->add_option("--expect", dim_expect, "expected polynomial, e.g. \"(1+t)^2*(1+t^2)\"");
    dim->add_flag("--json", dim_json, "JSON report");
    dim->add_option("--out", dim_out, "also write the report to this file");

    /* ---- reduce ---- */
    auto* red = app.add_subcommand("reduce", "normal form of an element");
    std::string red_preset, red_file, red_expr, red_field = "default", red_logout, red_out;
    int red_n = 3, red_deg = -1;
    bool red_emit_log = false;
    red->add_option("preset", red_preset, "preset name (or use --file)");
    red->add_option("--file", red_file, "presentation file");
    red->add_option("--n", red_n, "rank");
    red->add_option("--deg", red_deg, "completion degree (preset default if omitted)");
    red->add_option("--expr", red_expr, "element expression")->required();
    red->add_option("--field", red_field, "Q | Fp:<prime> | frac | default");
    red->add_flag("--emit-log", red_emit_log, "emit the replayable reduction log");
    red->add_option("--log-out", red_logout, "write the log to this file (default stdout)");
    red->add_option("--out", red_out, "also write the normal form to this file");

    /* ---- verify ---- */
    auto* ver = app.add_subcommand("verify", "run a named verification");
    std::string ver_check, ver_preset;
    int ver_n = -1, ver_deg = -1, ver_threads = 1;
    bool ver_list = false, ver_json = false;
    std::string ver_out;
    ver->add_option("check", ver_check, "check name (see --list)");
    ver->add_flag("--list", ver_list, "list available checks");
    ver->add_option("--n", ver_n, "rank");
    ver->add_option("--deg", ver_deg, "degree/slice bound");
    ver->add_option("--preset", ver_preset, "preset for checks that take one");
    ver->add_option("--threads", ver_threads, "worker cap for independent sub-identities");
    ver->add_flag("--json", ver_json, "JSON report");
    ver->add_option("--out", ver_out, "also write the report to this file");

    /* ---- op-check ---- */
    auto* opc = app.add_subcommand("op-check", "compare two polynomial operators on a slice");
    std::string opc_lhs, opc_rhs, opc_out;
    int opc_n = 3, opc_deg = 3;
    bool opc_json = false;
    opc->add_option("lhs", opc_lhs, "left operator expression")->required();
    opc->add_option("rhs", opc_rhs, "right operator expression")->required();
    opc->add_option("--n", opc_n, "rank");
    opc->add_option("--deg", opc_deg, "slice degree");
    opc->add_flag("--json", opc_json, "JSON report");
    opc->add_option("--out", opc_out, "also write the report to this file");

    /* ---- torsion ---- */
    auto* tor = app.add_subcommand("torsion", "graded dimensions over Q versus prime fields");
    std::string tor_preset, tor_primes, tor_out;
    int tor_n = 3, tor_deg = 5;
    bool tor_json = false;
    tor->add_option("preset", tor_preset, "preset name")->required();
    tor->add_option("--n", tor_n, "rank");
    tor->add_option("--deg", tor_deg, "max degree");
    tor->add_option("--primes", tor_primes, "comma-separated primes (default set if omitted)");
    tor->add_flag("--json", tor_json, "JSON report");
    tor->add_option("--out", tor_out, "also write the report to this file");

    /* ---- presets ---- */
    auto* pres = app.add_subcommand("presets", "list preset algebra names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : QALG_USAGE;
    }

    if (guard) setenv("QALG_GUARD_TERMS", std::to_string(guard).c_str(), 1);

    try {
        if (pres->parsed()) {
            std::cout << "Gn Bn Ent En0 Bnt Bn0 Ant An0 Lnbeta Pnbeta GnComm TildeGn0\n";
            return QALG_OK;
        }

        if (dim->parsed()) {
            char* report = nullptr;
            int rc;
            if (!dim_file.empty()) {
                std::string text = read_file(dim_file);
                rc = qalg_dim_command(text.c_str(), 1, dim_n, dim_deg, dim_field.c_str(),
                                      dim_filtered, dim_expect.empty() ? nullptr : dim_expect.c_str(),
                                      dim_json, &report);
            } else {
                if (dim_preset.empty()) {
                    std::cerr << "error: preset or --file required\n";
                    return QALG_USAGE;
                }
                rc = qalg_dim_command(dim_preset.c_str(), 0, dim_n, dim_deg, dim_field.c_str(),
                                      dim_filtered, dim_expect.empty() ? nullptr : dim_expect.c_str(),
                                      dim_json, &report);
            }
            if (rc == QALG_GUARD || rc == QALG_USAGE) return fail_with(rc);
            emit(take(report), dim_out);
            return rc;
        }

        if (red->parsed()) {
            qalg_presentation* p = nullptr;
            int rc;
            if (!red_file.empty()) {
                std::string text = read_file(red_file);
                rc = qalg_presentation_parse(text.c_str(), &p);
            } else {
                if (red_preset.empty()) {
                    std::cerr << "error: preset or --file required\n";
                    return QALG_USAGE;
                }
                rc = qalg_preset_build(red_preset.c_str(), red_n, &p);
            }
            if (rc != QALG_OK) return fail_with(rc);
            if (red_deg < 0) {
                /* preset default degree comes through the dim command path;
                 * for reduce default to a bound covering the expression */
                red_deg = 6;
            }
            qalg_basis* b = nullptr;
            rc = qalg_complete(p, red_deg, red_field.c_str(), 0, &b);
            if (rc != QALG_OK) {
                qalg_presentation_free(p);
                return fail_with(rc);
            }
            char* nf = nullptr;
            char* log = nullptr;
            rc = qalg_reduce(b, red_expr.c_str(), red_emit_log ? 1 : 0, &nf, &log);
            qalg_basis_free(b);
            qalg_presentation_free(p);
            if (rc != QALG_OK) return fail_with(rc);
            std::string nfs = take(nf);
            emit(nfs + "\n", red_out);
            if (red_emit_log) {
                std::string logs = take(log);
                if (!red_logout.empty()) {
                    std::ofstream f(red_logout);
                    f << logs;
                } else {
                    std::cout << logs;
                }
            }
            return QALG_OK;
        }

        if (ver->parsed()) {
            if (ver_list) {
                char* text = nullptr;
                int rc = qalg_check_list(&text);
                if (rc != QALG_OK) return fail_with(rc);
                std::cout << take(text);
                return QALG_OK;
            }
            if (ver_check.empty()) {
                std::cerr << "error: check name or --list required\n";
                return QALG_USAGE;
            }
            char* report = nullptr;
            int rc = qalg_verify(ver_check.c_str(), ver_n, ver_deg,
                                 ver_preset.empty() ? nullptr : ver_preset.c_str(), ver_threads, 0,
                                 ver_json, &report);
            if (rc == QALG_GUARD || rc == QALG_USAGE) return fail_with(rc);
            emit(take(report), ver_out);
            return rc;
        }

        if (opc->parsed()) {
            char* report = nullptr;
            int rc = qalg_op_check(opc_lhs.c_str(), opc_rhs.c_str(), opc_n, opc_deg, opc_json,
                                   &report);
            if (rc == QALG_GUARD || rc == QALG_USAGE) return fail_with(rc);
            emit(take(report), opc_out);
            return rc;
        }

        if (tor->parsed()) {
            char* report = nullptr;
            int rc = qalg_torsion_probe(tor_preset.c_str(), tor_n, tor_deg, tor_primes.c_str(),
                                        tor_json, &report);
            if (rc != QALG_OK) return fail_with(rc);
            emit(take(report), tor_out);
            return QALG_OK;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return QALG_USAGE;
    }
    return QALG_USAGE;
}

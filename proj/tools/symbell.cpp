// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: constructs the operator families, evaluates exact
// expectations, runs spectral and classical-bound computations and prints a
// JSON envelope (or text/csv) per command.

#include <CLI11.hpp>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symbell/bell_ops.hpp"
#include "symbell/bounds.hpp"
#include "symbell/cache.hpp"
#include "symbell/dicke.hpp"
#include "symbell/report_json.hpp"
#include "symbell/spectra.hpp"
#include "symbell/util.hpp"

namespace sb = symbell;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string format = "json";
    int workers = 0;
    std::string cache_dir;
};

struct OpSelect {
    std::string family;
    int n = 0;
    std::string notation;
    std::string m1 = "x";
    std::string m2 = "y";
    std::string file;
};

void add_format_flag(CLI::App* cmd, GlobalOpts& opts,
                     const std::string& choices = "json,text") {
    cmd->add_option("--format", opts.format, "output format (" + choices + ")")
        ->default_str("json");
    cmd->add_option("--workers", opts.workers,
                    "worker thread count for parallel kernels (0 = library default)");
}

void apply_workers(const GlobalOpts& opts) {
#ifdef _OPENMP
    if (opts.workers > 0) omp_set_num_threads(opts.workers);
#endif
}

void add_operator_flags(CLI::App* cmd, OpSelect& sel) {
    cmd->add_option("--op", sel.family,
                    "operator family: dicke-bell, w-bell, mermin3, mabk4, pi, file")
        ->required();
    cmd->add_option("--n", sel.n, "qubit count (dicke-bell)");
    cmd->add_option("--notation", sel.notation, "bracket notation (family pi)");
    cmd->add_option("--m1", sel.m1, "first-setting observable: x, y, z or bloch:a,b,c");
    cmd->add_option("--m2", sel.m2, "second-setting observable: x, y, z or bloch:a,b,c");
    cmd->add_option("--file", sel.file, "operator text file (family file)");
}

sb::ObservableSpec parse_observable(const std::string& text) {
    if (text.size() == 1) return sb::ObservableSpec::axis(text[0]);
    if (text.rfind("bloch:", 0) == 0) {
        double x, y, z;
        if (std::sscanf(text.c_str() + 6, "%lf,%lf,%lf", &x, &y, &z) != 3)
            throw std::invalid_argument("expected bloch:a,b,c");
        return sb::ObservableSpec::bloch(x, y, z);
    }
    throw std::invalid_argument("bad observable '" + text + "'");
}

sb::PauliSum build_operator(const OpSelect& sel) {
    auto fixed_n = [&](int expect, const char* name) {
        if (sel.n != 0 && sel.n != expect)
            throw std::invalid_argument(std::string(name) + " is fixed at n=" +
                                        std::to_string(expect));
    };
    if (sel.family == "dicke-bell") {
        if (sel.n < 2) throw std::invalid_argument("dicke-bell requires --n >= 2");
        return sb::dicke_bell(sel.n);
    }
    if (sel.family == "w-bell") {
        fixed_n(3, "w-bell");
        return sb::w_bell();
    }
    if (sel.family == "mermin3") {
        fixed_n(3, "mermin3");
        return sb::mermin3();
    }
    if (sel.family == "mabk4") {
        fixed_n(4, "mabk4");
        return sb::mabk4();
    }
    if (sel.family == "pi") {
        if (sel.notation.empty()) throw std::invalid_argument("family pi requires --notation");
        sb::CoefficientGroups groups = sb::parse_pi(sel.notation);
        if (sel.n != 0 && sel.n != groups.parties())
            throw std::invalid_argument("--n disagrees with the notation's party count");
        return sb::compile_pi(groups, parse_observable(sel.m1), parse_observable(sel.m2));
    }
    if (sel.family == "file") {
        if (sel.file.empty()) throw std::invalid_argument("family file requires --file");
        std::ifstream in(sel.file);
        if (!in) throw std::invalid_argument("cannot read " + sel.file);
        std::ostringstream buf;
        buf << in.rdbuf();
        return sb::PauliSum::from_text(buf.str());
    }
    throw std::invalid_argument("unknown operator family '" + sel.family + "'");
}

json operator_config(const OpSelect& sel) {
    json j{{"op", sel.family}};
    if (sel.n != 0) j["n"] = sel.n;
    if (!sel.notation.empty()) j["notation"] = sel.notation;
    if (sel.family == "pi") {
        j["m1"] = sel.m1;
        j["m2"] = sel.m2;
    }
    if (!sel.file.empty()) j["file"] = sel.file;
    return j;
}

void emit(const json& envelope, const GlobalOpts& opts, const std::string& text) {
    if (opts.format == "json") {
        std::cout << envelope.dump(2) << '\n';
    } else if (opts.format == "text") {
        std::cout << text;
    } else {
        throw std::invalid_argument("format '" + opts.format +
                                    "' is not available for this command");
    }
}

std::string bitstring(uint64_t idx, int n) {
    std::string s(n, '0');
    for (int p = 0; p < n; ++p)
        if (idx & (uint64_t(1) << (n - 1 - p))) s[p] = '1';
    return s;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
}

// --- state parsing for `expect` -------------------------------------------

struct StateSelect {
    std::string kind;  // "dicke", "ghz", "basis"
    int m = 0;
    int n = 0;
    int phase_k = 0;  // GHZ phase in units of pi/4
    std::string bits;
};

StateSelect parse_state(const std::string& text, int phase_k) {
    StateSelect st;
    st.phase_k = phase_k;
    if (text.rfind("dicke:", 0) == 0) {
        st.kind = "dicke";
        if (std::sscanf(text.c_str() + 6, "%d,%d", &st.m, &st.n) != 2)
            throw std::invalid_argument("expected dicke:m,n");
        return st;
    }
    if (text.rfind("ghz:", 0) == 0) {
        st.kind = "ghz";
        if (std::sscanf(text.c_str() + 4, "%d", &st.n) != 1)
            throw std::invalid_argument("expected ghz:n");
        return st;
    }
    if (text.rfind("basis:", 0) == 0) {
        st.kind = "basis";
        st.bits = text.substr(6);
        if (st.bits.empty() ||
            st.bits.find_first_not_of("01") != std::string::npos)
            throw std::invalid_argument("expected basis:<bitstring>");
        st.n = static_cast<int>(st.bits.size());
        return st;
    }
    throw std::invalid_argument("unknown state '" + text + "'");
}

// --- commands ---------------------------------------------------------------

int cmd_dicke(int m, int n, const GlobalOpts& opts) {
    sb::ExactVector v = sb::dicke_vector({m, n});
    json result{{"m", m},
                {"n", n},
                {"norm_sq", sb::to_string(v.norm_sq())},
                {"support_size", v.support_size()}};
    if (n <= 16) {
        json states = json::array();
        for (const auto& [idx, amp] : v.amps()) states.push_back(bitstring(idx, n));
        result["basis_states"] = states;
    }
    std::ostringstream text;
    text << "dicke m=" << m << " n=" << n << " support=" << v.support_size()
         << " norm_sq=" << sb::to_string(v.norm_sq()) << '\n';
    emit(sb::make_envelope("dicke", json{{"m", m}, {"n", n}}, result), opts, text.str());
    return 0;
}

int cmd_op(const OpSelect& sel, const GlobalOpts& opts) {
    sb::PauliSum sum = build_operator(sel);
    json result{{"family", sel.family},
                {"n", sum.n()},
                {"term_count", sum.size()},
                {"hash", sum.hash_hex()},
                {"text", sum.to_text()}};
    std::ostringstream text;
    text << "# " << sel.family << " n=" << sum.n() << " terms=" << sum.size()
         << " hash=" << sum.hash_hex() << '\n'
         << sum.to_text();
    emit(sb::make_envelope("op", operator_config(sel), result), opts, text.str());
    return 0;
}

int cmd_expect(const OpSelect& sel, const std::string& state_text, int phase_k,
               const GlobalOpts& opts) {
    sb::PauliSum sum = build_operator(sel);
    StateSelect st = parse_state(state_text, phase_k);
    json result;
    std::ostringstream text;
    if (st.kind == "dicke" || st.kind == "basis") {
        sb::ExactVector v =
            (st.kind == "dicke")
                ? sb::dicke_vector({st.m, st.n})
                : sb::ExactVector::basis(st.n, std::stoull(st.bits, nullptr, 2));
        if (v.n() != sum.n()) throw std::invalid_argument("state/operator size mismatch");
        sb::Rational value = sb::expectation_exact(sum, v);
        result = json{{"value", sb::to_string(value)},
                      {"value_float", sb::to_double(value)},
                      {"exact", true}};
        text << "expect = " << sb::to_string(value) << " (exact)\n";
    } else {
        sb::FloatVector v = sb::ghz_float(st.n, st.phase_k);
        if (v.n != sum.n()) throw std::invalid_argument("state/operator size mismatch");
        double value = sb::expectation_float(sum, v);
        result = json{{"value", nullptr}, {"value_float", value}, {"exact", false}};
        text << "expect = " << fmt_double(value) << " (float)\n";
    }
    json config = operator_config(sel);
    config["state"] = state_text;
    if (st.kind == "ghz") config["phase_k"] = phase_k;
    emit(sb::make_envelope("expect", config, result), opts, text.str());
    return 0;
}

std::string normalize_method(const std::string& m) {
    return m == "iter" ? std::string("iterative") : m;
}

int cmd_spectrum(const OpSelect& sel, const std::string& method_flag, double tol,
                 long max_iter, uint64_t seed, int dense_max, double extremal_tol,
                 const GlobalOpts& opts) {
    const std::string method = normalize_method(method_flag);
    sb::PauliSum sum = build_operator(sel);
    sb::DenseOptions dense{dense_max, extremal_tol};
    sb::IterOptions iter{tol, max_iter, seed};

    std::string cache_dir = sb::resolve_cache_dir(opts.cache_dir);
    std::string key = sb::spectral_cache_key(sum, method, dense, iter);
    sb::SpectralReport report;
    if (auto cached = sb::cache_load(cache_dir, key)) {
        report = *cached;
    } else {
        if (method == "dense") {
            report = sb::dense_spectrum(sum, dense);
        } else if (method == "iterative") {
            report = sb::extremal_eigen_iterative(sum, iter);
        } else {
            throw std::invalid_argument("method must be dense or iterative");
        }
        sb::cache_store(cache_dir, key, report);
    }
    report.operator_family = sel.family;

    json config = operator_config(sel);
    config["method"] = method;
    if (method == "dense") {
        config["dense_max"] = dense_max;
        config["extremal_tol"] = extremal_tol;
    } else {
        config["tol"] = tol;
        config["max_iter"] = max_iter;
        config["seed"] = seed;
    }

    std::ostringstream text;
    text << "operator " << sel.family << " n=" << report.n << " hash="
         << report.operator_hash << '\n'
         << "method " << report.method << '\n'
         << "max_abs " << fmt_double(report.max_abs) << '\n'
         << "range [" << fmt_double(report.min_eigenvalue) << ", "
         << fmt_double(report.max_eigenvalue) << "]\n";
    if (report.method == "dense") {
        text << "extremal_multiplicity " << report.extremal_multiplicity << '\n';
        for (const auto& dm : report.dicke_membership)
            text << "dicke m=" << dm.m << " residual=" << fmt_double(dm.residual)
                 << '\n';
    } else {
        text << "iterations " << report.iterations << " converged "
             << (report.converged ? "true" : "false") << '\n';
    }
    emit(sb::make_envelope("spectrum", config, sb::to_json(report)), opts, text.str());
    return 0;
}

int cmd_verify_theorem(int n_min, int n_max, const GlobalOpts& opts) {
    auto checks = sb::verify_theorem_range(n_min, n_max);
    bool all_match = true;
    json list = json::array();
    std::ostringstream text;
    for (const auto& c : checks) {
        all_match = all_match && c.matches;
        list.push_back(sb::to_json(c));
        text << "n=" << c.n << " m=" << c.m << " eigenvalue="
             << sb::to_string(c.eigenvalue) << " expected=" << sb::to_string(c.expected)
             << (c.matches ? " ok" : " MISMATCH") << '\n';
    }
    text << (all_match ? "all checks passed\n" : "checks FAILED\n");
    json config{{"n_min", n_min}, {"n_max", n_max}};
    json result{{"checks", list}, {"all_match", all_match}};
    emit(sb::make_envelope("verify-theorem", config, result), opts, text.str());
    return all_match ? 0 : 1;
}

int cmd_conjecture(int n, const std::string& method_flag, double tol, long max_iter,
                   uint64_t seed, int dense_max, const GlobalOpts& opts) {
    const std::string method = normalize_method(method_flag);
    sb::ConjectureOptions copt;
    copt.method = method;
    copt.dense.max_n = dense_max;
    copt.iter = sb::IterOptions{tol, max_iter, seed};
    sb::ConjectureReport report = sb::conjecture_report(n, copt);

    json config{{"n", n}, {"method", method}};
    if (method == "iterative") {
        config["tol"] = tol;
        config["max_iter"] = max_iter;
        config["seed"] = seed;
    } else {
        config["dense_max"] = dense_max;
    }
    std::ostringstream text;
    text << "n=" << n << " method=" << method << " max_abs="
         << fmt_double(report.max_abs) << " formula=" << sb::to_string(report.formula)
         << " agrees=" << (report.agrees ? "true" : "false") << '\n';
    for (const auto& e : report.central)
        text << "  m=" << e.m << " eigenvalue=" << sb::to_string(e.eigenvalue)
             << " is_eigen=" << (e.is_eigen ? "true" : "false") << " in_extremal="
             << (e.in_extremal ? "true" : "false") << '\n';
    emit(sb::make_envelope("conjecture", config, sb::to_json(report)), opts, text.str());
    return 0;
}

int cmd_bound(const OpSelect& sel, const std::string& method, const GlobalOpts& opts) {
    sb::PauliSum sum = build_operator(sel);
    sb::BoundOptions bopt;
    bopt.method = method;
    sb::BoundResult result = sb::classical_bound(sum, bopt);

    json config = operator_config(sel);
    config["method"] = method;
    std::ostringstream text;
    text << "L = " << sb::to_string(result.value) << " (" << method << ")\n";
    text << "axes:";
    for (char a : result.axes) text << ' ' << a;
    text << "\nassignment:";
    for (const auto& party : result.assignment) {
        text << " (";
        for (size_t i = 0; i < party.size(); ++i)
            text << (i ? "," : "") << (party[i] > 0 ? "+1" : "-1");
        text << ")";
    }
    text << '\n';
    emit(sb::make_envelope("bound", config, sb::to_json(result)), opts, text.str());
    return 0;
}

int cmd_parse(const std::string& notation, const GlobalOpts& opts) {
    sb::CoefficientGroups groups = sb::parse_pi(notation);
    std::ostringstream text;
    text << sb::serialize_pi(groups) << '\n';
    emit(sb::make_envelope("parse", json{{"notation", notation}}, sb::to_json(groups)),
         opts, text.str());
    return 0;
}

int cmd_table(int n_min, int n_max, const GlobalOpts& opts) {
    auto rows = sb::extremal_table(n_min, n_max);
    if (opts.format == "csv") {
        std::cout << "n,m,lambda,max_abs,membership_residual,sign_matches_paper\n";
        for (const auto& row : rows) {
            std::cout << row.n << ',' << row.m << ',' << sb::to_string(row.lambda)
                      << ',' << fmt_double(row.max_abs) << ','
                      << fmt_double(row.membership_residual) << ',';
            if (row.sign_matches_paper)
                std::cout << (*row.sign_matches_paper ? "true" : "false");
            std::cout << '\n';
        }
        return 0;
    }
    json list = json::array();
    std::ostringstream text;
    for (const auto& row : rows) {
        list.push_back(sb::to_json(row));
        text << "n=" << row.n << " m=" << row.m << " lambda="
             << sb::to_string(row.lambda) << " max_abs=" << fmt_double(row.max_abs)
             << " membership_residual=" << fmt_double(row.membership_residual);
        if (row.sign_matches_paper)
            text << " sign_matches_paper=" << (*row.sign_matches_paper ? "true" : "false");
        text << '\n';
    }
    json config{{"n_min", n_min}, {"n_max", n_max}};
    emit(sb::make_envelope("table", config, json{{"rows", list}}), opts, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation-invariant Bell operators: construction, exact eigenstate "
                 "checks, spectra and classical bounds"};
    app.require_subcommand(1);

    GlobalOpts g_dicke, g_op, g_expect, g_spectrum, g_verify, g_conj, g_bound, g_parse,
        g_table;

    // dicke
    int d_m = 0, d_n = 0;
    CLI::App* c_dicke = app.add_subcommand("dicke", "Dicke state support and norm");
    c_dicke->add_option("--m", d_m, "excitation count")->required();
    c_dicke->add_option("--n", d_n, "qubit count")->required();
    add_format_flag(c_dicke, g_dicke);

    // op
    OpSelect op_sel;
    CLI::App* c_op = app.add_subcommand("op", "construct an operator and print it");
    add_operator_flags(c_op, op_sel);
    add_format_flag(c_op, g_op);

    // expect
    OpSelect ex_sel;
    std::string ex_state;
    int ex_phase_k = 0;
    CLI::App* c_expect = app.add_subcommand("expect", "expectation value on a state");
    add_operator_flags(c_expect, ex_sel);
    c_expect->add_option("--state", ex_state, "dicke:m,n | ghz:n | basis:<bits>")
        ->required();
    c_expect->add_option("--k", ex_phase_k, "GHZ relative phase numerator: phase = k*pi/4");
    add_format_flag(c_expect, g_expect);

    // spectrum
    OpSelect sp_sel;
    std::string sp_method = "dense";
    double sp_tol = 1e-10, sp_extremal_tol = 1e-8;
    long sp_max_iter = 400;
    uint64_t sp_seed = 1;
    int sp_dense_max = 12;
    CLI::App* c_spectrum = app.add_subcommand("spectrum", "dense or iterative spectrum");
    add_operator_flags(c_spectrum, sp_sel);
    c_spectrum->add_option("--method", sp_method, "dense or iter");
    c_spectrum->add_option("--tol", sp_tol, "iterative convergence tolerance");
    c_spectrum->add_option("--max-iter", sp_max_iter, "iteration cap");
    c_spectrum->add_option("--seed", sp_seed, "start-vector seed");
    c_spectrum->add_option("--dense-max", sp_dense_max, "dense qubit-count guard");
    c_spectrum->add_option("--extremal-tol", sp_extremal_tol,
                           "extremal eigenspace tolerance");
    c_spectrum->add_option("--cache-dir", g_spectrum.cache_dir,
                           "report cache directory (default $SYMBELL_CACHE)");
    add_format_flag(c_spectrum, g_spectrum);

    // verify-theorem
    int vt_min = 2, vt_max = 10;
    CLI::App* c_verify = app.add_subcommand(
        "verify-theorem", "exact Dicke eigenstate checks over a range of n");
    c_verify->add_option("--n-min", vt_min, "smallest qubit count");
    c_verify->add_option("--n-max", vt_max, "largest qubit count")->required();
    add_format_flag(c_verify, g_verify);

    // conjecture
    int cj_n = 0, cj_dense_max = 12;
    std::string cj_method = "dense";
    double cj_tol = 1e-10;
    long cj_max_iter = 400;
    uint64_t cj_seed = 1;
    CLI::App* c_conj = app.add_subcommand(
        "conjecture", "extremal magnitude vs the alternating-sum formula");
    c_conj->add_option("--n", cj_n, "qubit count")->required();
    c_conj->add_option("--method", cj_method, "dense or iter");
    c_conj->add_option("--tol", cj_tol, "iterative convergence tolerance");
    c_conj->add_option("--max-iter", cj_max_iter, "iteration cap");
    c_conj->add_option("--seed", cj_seed, "start-vector seed");
    c_conj->add_option("--dense-max", cj_dense_max, "dense qubit-count guard");
    add_format_flag(c_conj, g_conj);

    // bound
    OpSelect bd_sel;
    std::string bd_method = "brute";
    CLI::App* c_bound = app.add_subcommand(
        "bound", "maximum over deterministic +-1 strategies");
    add_operator_flags(c_bound, bd_sel);
    c_bound->add_option("--method", bd_method, "brute or symmetric");
    add_format_flag(c_bound, g_bound);

    // parse
    std::string pr_notation;
    CLI::App* c_parse = app.add_subcommand("parse", "parse bracket notation");
    c_parse->add_option("--notation", pr_notation, "bracket notation")->required();
    add_format_flag(c_parse, g_parse);

    // table
    int tb_min = 3, tb_max = 10;
    CLI::App* c_table =
        app.add_subcommand("table", "extremal eigenvalue table with published signs");
    c_table->add_option("--n-min", tb_min, "smallest qubit count");
    c_table->add_option("--n-max", tb_max, "largest qubit count")->required();
    add_format_flag(c_table, g_table, "json,csv,text");

    try {
        app.parse(argc, argv);

        if (*c_dicke) {
            apply_workers(g_dicke);
            return cmd_dicke(d_m, d_n, g_dicke);
        }
        if (*c_op) {
            apply_workers(g_op);
            return cmd_op(op_sel, g_op);
        }
        if (*c_expect) {
            apply_workers(g_expect);
            return cmd_expect(ex_sel, ex_state, ex_phase_k, g_expect);
        }
        if (*c_spectrum) {
            apply_workers(g_spectrum);
            return cmd_spectrum(sp_sel, sp_method, sp_tol, sp_max_iter, sp_seed,
                                sp_dense_max, sp_extremal_tol, g_spectrum);
        }
        if (*c_verify) {
            apply_workers(g_verify);
            return cmd_verify_theorem(vt_min, vt_max, g_verify);
        }
        if (*c_conj) {
            apply_workers(g_conj);
            return cmd_conjecture(cj_n, cj_method, cj_tol, cj_max_iter, cj_seed,
                                  cj_dense_max, g_conj);
        }
        if (*c_bound) {
            apply_workers(g_bound);
            return cmd_bound(bd_sel, bd_method, g_bound);
        }
        if (*c_parse) {
            apply_workers(g_parse);
            return cmd_parse(pr_notation, g_parse);
        }
        if (*c_table) {
            apply_workers(g_table);
            return cmd_table(tb_min, tb_max, g_table);
        }
        std::cerr << "no command selected\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints contextual help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

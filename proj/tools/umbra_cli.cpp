// Command-line front end. Talks to the library exclusively through the C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "umbra.h"

namespace {

struct CtxGuard {
    umb_ctx* ctx = nullptr;
    ~CtxGuard() { umb_ctx_free(ctx); }
};

int write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

std::string take(char* s) {
    std::string out = s ? s : "";
    umb_free(s);
    return out;
}

int fail(umb_ctx* ctx, int code) {
    std::cerr << "error: " << umb_last_error(ctx) << "\n";
    return code == UMB_EBADINPUT || code == UMB_ENOTFOUND ? 2 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernoulli-operator calculus: constants, identity verification, special functions, "
                 "xi zero scans, and the explicit formula"};
    app.require_subcommand(1);

    int precision = 0;
    if (const char* env = std::getenv("UMBRA_PRECISION")) precision = std::atoi(env);
    app.add_option("-p,--precision", precision, "working precision in decimal digits (15..100)");
    int engine_n = -1, engine_m = -1;
    app.add_option("--engine-n", engine_n, "override the engine shift N");
    app.add_option("--engine-m", engine_m, "override the engine truncation order M");

    // constants
    auto* constants = app.add_subcommand("constants", "closed-form constants vs computed routes");
    std::string const_out;
    constants->add_option("--report", const_out, "write to a file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "run identity checks");
    std::vector<std::string> ids;
    bool all = false, no_timestamp = false;
    std::string report_path, format = "human";
    verify->add_option("--id", ids, "identity id (repeatable)");
    verify->add_flag("--all", all, "run the full registry");
    verify->add_flag("--list", "list identity ids and exit");
    verify->add_option("--report", report_path, "write the report to a file");
    verify->add_option("--format", format, "human | json | csv");
    verify->add_flag("--no-timestamp", no_timestamp, "omit the timestamp field (byte-stable output)");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a special function");
    std::string what, s_arg = "2", alpha = "1", char_table;
    int modulus = 1, order = 0;
    eval->add_option("function", what, "zeta | hurwitz | lfunc | gammapi | xi")->required();
    eval->add_option("--s", s_arg, "argument, RE or RE,IM");
    eval->add_option("--order", order, "0 for the value, 1 for the derivative (zeta only)");
    eval->add_option("--alpha", alpha, "Hurwitz offset");
    eval->add_option("--modulus", modulus, "character modulus");
    eval->add_option("--char-table", char_table, "comma-separated chi(1..k)");

    // xi-scan
    auto* xiscan = app.add_subcommand("xi-scan", "scan t -> xi(B+it) for zeros");
    std::string t_max = "60", step = "0.5";
    bool weighted = false;
    xiscan->add_option("--t-max", t_max, "upper end of the scan");
    xiscan->add_option("--step", step, "scan step");
    xiscan->add_flag("--weighted", weighted, "use the sin-weighted kernel");

    // zeros
    auto* zeros = app.add_subcommand("zeros", "compute or validate zeta zero ordinates");
    auto* zcompute = zeros->add_subcommand("compute", "scan xi(1/2+it) for the first K ordinates");
    int zcount = 10;
    std::string zout;
    zcompute->add_option("--count", zcount, "number of ordinates (<= 200)");
    zcompute->add_option("--out", zout, "output path");
    auto* zcheck = zeros->add_subcommand("check", "validate a zeros file");
    std::string zfile;
    zcheck->add_option("--file", zfile, "path to the zeros file")->required();

    // explicit
    auto* expl = app.add_subcommand("explicit", "prime side vs explicit side of the psi formula");
    std::string ex_x = "10", ex_zeros_file;
    int ex_compute = 0, ex_k = 0;
    expl->add_option("--x", ex_x, "evaluation point (> 1)");
    expl->add_option("--zeros-file", ex_zeros_file, "ordinates file");
    expl->add_option("--compute-zeros", ex_compute, "compute K ordinates internally");
    expl->add_option("--num-zeros", ex_k, "zero-sum truncation K");

    // sum
    auto* sum = app.add_subcommand("sum", "Ramanujan-sum an oracle at B + a");
    std::string fn_name, fn_params, shift = "0";
    sum->add_option("--function", fn_name, "oracle name (see --list-oracles)")->required();
    sum->add_option("--params", fn_params, "oracle parameters, key=value[,key=value...]");
    sum->add_option("--shift", shift, "shift a, RE or RE,IM");
    sum->add_option("--n", engine_n, "engine shift N");
    sum->add_option("--m", engine_m, "engine truncation order M");

    CLI11_PARSE(app, argc, argv);

    CtxGuard guard;
    guard.ctx = umb_ctx_new(precision);
    umb_ctx* ctx = guard.ctx;
    umb_ctx_set_engine(ctx, engine_n, engine_m);

    auto split_s = [](const std::string& s) -> std::pair<std::string, std::string> {
        auto comma = s.find(',');
        if (comma == std::string::npos) return {s, ""};
        return {s.substr(0, comma), s.substr(comma + 1)};
    };

    if (constants->parsed()) {
        char* out = nullptr;
        int rc = umb_constants(ctx, &out);
        if (rc != UMB_OK) return fail(ctx, rc);
        return write_out(take(out), const_out);
    }

    if (verify->parsed()) {
        if (verify->count("--list")) {
            char* out = nullptr;
            int rc = umb_identity_list(ctx, &out);
            if (rc != UMB_OK) return fail(ctx, rc);
            std::cout << take(out);
            return 0;
        }
        if (!all && ids.empty()) {
            std::cerr << "verify: pass --all or at least one --id\n";
            return 2;
        }
        std::string id_csv;
        for (const auto& id : ids) {
            if (!id_csv.empty()) id_csv += ',';
            id_csv += id;
        }
        char* out = nullptr;
        int failures = 0;
        int rc = umb_verify(ctx, all ? nullptr : id_csv.c_str(), format.c_str(), no_timestamp ? 0 : 1,
                            &out, &failures);
        if (rc != UMB_OK) return fail(ctx, rc);
        int wrc = write_out(take(out), report_path);
        if (wrc != 0) return wrc;
        return failures == 0 ? 0 : 1;
    }

    if (eval->parsed()) {
        auto [re, im] = split_s(s_arg);
        char* out = nullptr;
        int rc;
        if (what == "zeta") rc = umb_eval_zeta(ctx, re.c_str(), im.c_str(), order, &out);
        else if (what == "hurwitz") rc = umb_eval_hurwitz(ctx, re.c_str(), im.c_str(), alpha.c_str(), &out);
        else if (what == "lfunc")
            rc = umb_eval_lfunc(ctx, re.c_str(), im.c_str(), modulus, char_table.c_str(), &out);
        else if (what == "gammapi") rc = umb_eval_gammapi(ctx, re.c_str(), im.c_str(), &out);
        else if (what == "xi") rc = umb_eval_xi(ctx, re.c_str(), im.c_str(), &out);
        else {
            std::cerr << "unknown function: " << what << "\n";
            return 2;
        }
        if (rc != UMB_OK) return fail(ctx, rc);
        std::cout << take(out) << "\n";
        return 0;
    }

    if (xiscan->parsed()) {
        char* out = nullptr;
        int rc = umb_xi_scan(ctx, t_max.c_str(), step.c_str(), weighted ? 1 : 0, &out);
        if (rc != UMB_OK) return fail(ctx, rc);
        std::cout << take(out);
        return 0;
    }

    if (zeros->parsed()) {
        if (zcompute->parsed()) {
            char* out = nullptr;
            int rc = umb_zeros_compute(ctx, zcount, &out);
            if (rc != UMB_OK) return fail(ctx, rc);
            return write_out(take(out), zout);
        }
        if (zcheck->parsed()) {
            char* out = nullptr;
            int rc = umb_zeros_check(ctx, zfile.c_str(), &out);
            if (rc != UMB_OK) return fail(ctx, rc);
            std::cout << take(out);
            return 0;
        }
        std::cerr << "zeros: use 'compute' or 'check'\n";
        return 2;
    }

    if (expl->parsed()) {
        char* out = nullptr;
        int rc = umb_explicit_formula(ctx, ex_x.c_str(),
                                      ex_zeros_file.empty() ? nullptr : ex_zeros_file.c_str(), ex_compute,
                                      ex_k, &out);
        if (rc != UMB_OK) return fail(ctx, rc);
        std::cout << take(out);
        return 0;
    }

    if (sum->parsed()) {
        auto [re, im] = split_s(shift);
        umb_ctx_set_engine(ctx, engine_n, engine_m);
        char* out = nullptr;
        int rc = umb_ramanujan_sum(ctx, fn_name.c_str(), fn_params.c_str(), re.c_str(), im.c_str(), &out);
        if (rc != UMB_OK) return fail(ctx, rc);
        std::cout << take(out);
        return 0;
    }

    return 2;
}

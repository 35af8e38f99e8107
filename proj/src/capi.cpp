#include "umbra.h"

#include <cstring>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "umbra/catalogue.hpp"
#include "umbra/explicit_formula.hpp"
#include "umbra/special.hpp"
#include "umbra/xi_operator.hpp"

using namespace umbra;

struct umb_ctx {
    int digits = Context::kDefaultDigits;
    engine::EngineConfig engine_cfg;
    std::string last_error;
};

namespace {

// The precision context is process-global; serialize C API entry points so a
// context's digits are in force for the whole call.
std::mutex g_mutex;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int code_of(const Error& e) {
    switch (e.code) {
        case Error::kDomain: return UMB_EDOMAIN;
        case Error::kNoConvergence: return UMB_ENOCONV;
        case Error::kCapacity: return UMB_ECAP;
        case Error::kUnknownSymbol: return UMB_ESYMBOL;
        case Error::kLatticePole: return UMB_ELATTICE;
        case Error::kBadInput: return UMB_EBADINPUT;
        case Error::kNotFound: return UMB_ENOTFOUND;
    }
    return UMB_EINTERNAL;
}

template <typename Fn>
int guarded(umb_ctx* ctx, Fn&& fn) {
    if (!ctx) return UMB_EBADINPUT;
    std::lock_guard<std::mutex> lock(g_mutex);
    Context::set_precision(ctx->digits);
    try {
        fn();
        ctx->last_error.clear();
        return UMB_OK;
    } catch (const Error& e) {
        ctx->last_error = e.what();
        return code_of(e);
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return UMB_EINTERNAL;
    }
}

Complex parse_complex(const char* re, const char* im) {
    Real r = re && *re ? Real(std::string(re)) : Real(0);
    Real i = im && *im ? Real(std::string(im)) : Real(0);
    return {r, i};
}

// "a" or "a+bi"/"a-bi" tokens
Complex parse_complex_token(const std::string& tok) {
    auto ipos = tok.find('i');
    if (ipos == std::string::npos) return Complex(Real(tok));
    std::string body = tok.substr(0, ipos);
    size_t split = body.find_last_of("+-");
    if (split == std::string::npos || split == 0)
        return Complex(Real(0), Real(body.empty() || body == "+" ? "1" : (body == "-" ? "-1" : body)));
    std::string rs = body.substr(0, split);
    std::string is = body.substr(split);
    if (is == "+") is = "1";
    if (is == "-") is = "-1";
    return Complex(Real(rs), Real(is));
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string complex_out(const Complex& z) { return z.str(Context::digits()); }

} // namespace

extern "C" {

umb_ctx* umb_ctx_new(int precision_digits) {
    auto* ctx = new umb_ctx;
    ctx->digits = precision_digits > 0 ? precision_digits : Context::kDefaultDigits;
    if (ctx->digits < Context::kMinDigits) ctx->digits = Context::kMinDigits;
    if (ctx->digits > Context::kMaxDigits) ctx->digits = Context::kMaxDigits;
    return ctx;
}

void umb_ctx_free(umb_ctx* ctx) { delete ctx; }

int umb_ctx_precision(const umb_ctx* ctx) { return ctx ? ctx->digits : 0; }

const char* umb_last_error(const umb_ctx* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

void umb_ctx_set_engine(umb_ctx* ctx, int shift_n, int trunc_m) {
    if (!ctx) return;
    ctx->engine_cfg.shift_n = shift_n;
    ctx->engine_cfg.trunc_m = trunc_m;
}

void umb_free(char* s) { std::free(s); }

const char* umb_version(void) { return "umbra 1.0.0"; }

int umb_eval_zeta(umb_ctx* ctx, const char* re, const char* im, int order, char** out) {
    return guarded(ctx, [&] {
        if (order < 0 || order > 1) throw Error(Error::kBadInput, "order must be 0 or 1");
        Complex v = sf::zeta(parse_complex(re, im), order);
        *out = dup_string(complex_out(v));
    });
}

int umb_eval_hurwitz(umb_ctx* ctx, const char* re, const char* im, const char* alpha, char** out) {
    return guarded(ctx, [&] {
        Real a = alpha && *alpha ? Real(std::string(alpha)) : Real(1);
        Complex v = sf::hurwitz_zeta(parse_complex(re, im), a);
        *out = dup_string(complex_out(v));
    });
}

int umb_eval_lfunc(umb_ctx* ctx, const char* re, const char* im, int modulus, const char* chi_table,
                   char** out) {
    return guarded(ctx, [&] {
        sf::DirichletCharacter chi;
        if (modulus <= 1 || !chi_table || !*chi_table) {
            chi = sf::DirichletCharacter::principal_mod1();
        } else {
            std::vector<Complex> values;
            for (const auto& tok : split_csv(chi_table)) values.push_back(parse_complex_token(tok));
            chi = sf::DirichletCharacter::from_table(modulus, std::move(values));
        }
        Complex v = sf::dirichlet_l(parse_complex(re, im), chi);
        *out = dup_string(complex_out(v));
    });
}

int umb_eval_gammapi(umb_ctx* ctx, const char* re, const char* im, char** out) {
    return guarded(ctx, [&] {
        Complex v = sf::log_gamma_pi(parse_complex(re, im));
        *out = dup_string(complex_out(v));
    });
}

int umb_eval_xi(umb_ctx* ctx, const char* re, const char* im, char** out) {
    return guarded(ctx, [&] {
        Complex v = sf::xi_complete(parse_complex(re, im));
        *out = dup_string(complex_out(v));
    });
}

int umb_ramanujan_sum(umb_ctx* ctx, const char* oracle, const char* params, const char* shift_re,
                      const char* shift_im, char** out_json) {
    return guarded(ctx, [&] {
        if (!oracle) throw Error(Error::kBadInput, "oracle name required");
        OracleParams op;
        if (params && *params) {
            for (const auto& kv : split_csv(params)) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw Error(Error::kBadInput, "params must be key=value pairs: " + kv);
                op.values[kv.substr(0, eq)] = parse_complex_token(kv.substr(eq + 1));
            }
        }
        auto o = make_oracle(oracle, op);
        auto r = engine::ramanujan_sum(*o, parse_complex(shift_re, shift_im), ctx->engine_cfg);
        nlohmann::ordered_json doc;
        doc["oracle"] = oracle;
        doc["value"] = complex_out(r.value);
        doc["error_estimate"] = r.error_estimate.str(4);
        doc["method"] = engine::method_name(r.method);
        doc["class"] = engine::class_name(r.convergence);
        doc["shift_n"] = r.shift_n;
        doc["trunc_m"] = r.trunc_m;
        *out_json = dup_string(doc.dump(2) + "\n");
    });
}

int umb_constants(umb_ctx* ctx, char** out_json) {
    return guarded(ctx, [&] {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        auto add = [&doc](const std::string& name, const std::string& closed_expr, const Real& closed,
                          const Complex& computed, const std::string& how) {
            doc.push_back({{"name", name},
                           {"closed_form", closed_expr},
                           {"closed_value", closed.str(Context::digits())},
                           {"computed", computed.str(Context::digits())},
                           {"difference", abs(Complex(closed) - computed).str(4)},
                           {"route", how}});
        };
        const auto& cfg = ctx->engine_cfg;
        Real g = Real::euler_gamma();
        Real l2pi = log(Real(2) * Real::pi());
        Real pi = Real::pi();

        auto blogb = engine::ramanujan_sum(*make_oracle("xlogx"), Complex(), cfg);
        add("B log B", "(1 - log 2pi)/2", (Real(1) - l2pi) / Real(2), blogb.value, "xlogx lattice sum");

        auto logpib = engine::ramanujan_sum(*make_oracle("logpi"), Complex(), cfg);
        add("log Pi(B)", "(log 2pi - 1)/2 - gamma", (l2pi - Real(1)) / Real(2) - g, logpib.value,
            "log Pi lattice sum");

        Complex logsin = Complex(-g) - logpib.value + Complex(l2pi / Real(2)) - Complex(Real::log2());
        add("log sin(pi B/2)", "1/2 - log 2", Real::ratio(1, 2) - Real::log2(), logsin,
            "chain through log Pi(B)");

        Real lam1 = cat::lambda1_constant();
        Real lam2 = cat::lambda2_constant();

        Real zl_closed = (Real(1) + g + l2pi) / Real(2) + pi * pi / Real(16);
        Real zl_route = engine::moment_value(engine::Symbol::power(-1)) + (g + log(pi)) / Real(2) + lam1;
        add("zeta'(B)/zeta(B)", "(1 + gamma + log 2pi)/2 + pi^2/16", zl_closed, Complex(zl_route),
            "B^{-1} moment + lambda1 double sum");

        Real zlw_closed = pi / Real(4) * (Real(1) + g + log(Real(4) * pi));
        Real zlw_route = pi * Real::log2() + (g + log(pi)) * pi / Real(4) + pi * lam2;
        add("sin(pi B) zeta'(B)/zeta(B)", "(pi/4)(1 + gamma + log 4pi)", zlw_closed, Complex(zlw_route),
            "pi log 2 + lambda2 double sum");

        auto gamma_series = [] {
            auto term = [](int k) {
                long n = k + 2;
                Real t = sf::zeta(Complex(Real(n))).re / Real(n);
                return n % 2 == 0 ? t : -t;
            };
            return accelerate_alternating(term).limit;
        };
        add("gamma", "-log B", g, Complex(gamma_series()), "alternating zeta series");

        add("lambda1", "(1 + log 2)/2 - 5 pi^2/48",
            (Real(1) + Real::log2()) / Real(2) - Real(5) * pi * pi / Real(48), Complex(lam1),
            "inner Hurwitz sums, outer EM tail");
        add("lambda2", "(1 - 2 log 2)/4", (Real(1) - Real(2) * Real::log2()) / Real(4), Complex(lam2),
            "inner alternating sums, outer EM tail");
        *out_json = dup_string(doc.dump(2) + "\n");
    });
}

int umb_identity_list(umb_ctx* ctx, char** out_json) {
    return guarded(ctx, [&] {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& e : cat::registry())
            doc.push_back({{"id", e.id},
                           {"class", e.klass},
                           {"description", e.description},
                           {"independence", e.independence}});
        *out_json = dup_string(doc.dump(2) + "\n");
    });
}

int umb_verify(umb_ctx* ctx, const char* ids, const char* format, int with_timestamp, char** out_report,
               int* out_failures) {
    return guarded(ctx, [&] {
        cat::RunConfig cfg;
        cfg.engine = ctx->engine_cfg;
        std::vector<cat::VerificationRecord> records;
        if (!ids || !*ids) {
            records = cat::run_all(cfg);
        } else {
            records = cat::run_selected(split_csv(ids), cfg);
        }
        int failures = 0;
        for (const auto& r : records)
            if (r.failed()) ++failures;
        if (out_failures) *out_failures = failures;
        std::string fmt = format ? format : "json";
        std::string text;
        if (fmt == "json") text = cat::render_report_json(records, with_timestamp != 0);
        else if (fmt == "csv") text = cat::render_report_csv(records);
        else if (fmt == "human") text = cat::render_report_human(records);
        else throw Error(Error::kBadInput, "unknown report format: " + fmt);
        *out_report = dup_string(text);
    });
}

int umb_xi_scan(umb_ctx* ctx, const char* t_max, const char* step, int sin_weighted, char** out_json) {
    return guarded(ctx, [&] {
        Real tm = t_max && *t_max ? Real(std::string(t_max)) : Real(60);
        Real st = step && *step ? Real(std::string(step)) : Real::ratio(1, 2);
        auto flavor = sin_weighted ? xi::KernelFlavor::kSinWeighted : xi::KernelFlavor::kPlain;
        auto zeros = xi::scan_xi_zeros(tm, st, flavor);
        nlohmann::ordered_json doc;
        doc["t_max"] = tm.str(8);
        doc["step"] = st.str(8);
        doc["kernel"] = sin_weighted ? "sin-weighted" : "plain";
        doc["count"] = zeros.size();
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& z : zeros) arr.push_back(z.str(10));
        doc["ordinates"] = arr;
        if (zeros.empty()) doc["note"] = "no sign change bracketed; the step may be too coarse";
        *out_json = dup_string(doc.dump(2) + "\n");
    });
}

int umb_zeros_compute(umb_ctx* ctx, int count, char** out_text) {
    return guarded(ctx, [&] {
        auto zeros = xf::compute_zeros(count);
        *out_text = dup_string(xf::format_zeros(zeros));
    });
}

int umb_zeros_check(umb_ctx* ctx, const char* path, char** out_json) {
    return guarded(ctx, [&] {
        if (!path) throw Error(Error::kBadInput, "zeros file path required");
        auto zeros = xf::load_zeros(path);
        nlohmann::ordered_json doc;
        doc["path"] = path;
        doc["count"] = zeros.count();
        if (zeros.count() > 0) {
            doc["first"] = zeros.ordinates.front().str(12);
            doc["last"] = zeros.ordinates.back().str(12);
        }
        doc["status"] = "ok";
        *out_json = dup_string(doc.dump(2) + "\n");
    });
}

int umb_explicit_formula(umb_ctx* ctx, const char* x, const char* zeros_path, int compute_count,
                         int num_zeros, char** out_json) {
    return guarded(ctx, [&] {
        if (!x || !*x) throw Error(Error::kBadInput, "x required");
        xf::ZeroList zeros;
        if (zeros_path && *zeros_path) {
            zeros = xf::load_zeros(zeros_path);
        } else {
            zeros = xf::compute_zeros(compute_count > 0 ? compute_count : 100);
        }
        int K = num_zeros > 0 ? num_zeros : zeros.count();
        auto cmp = xf::psi_explicit_side(Real(std::string(x)), zeros, K);
        nlohmann::ordered_json doc;
        doc["x"] = cmp.x.str(10);
        doc["zeros_used"] = cmp.zeros_used;
        doc["zeros_source"] = zeros.source == xf::ZeroList::kFile ? "file" : "internal";
        doc["prime_side"] = cmp.prime_side.str(Context::digits());
        doc["explicit_side"] = cmp.explicit_side.str(Context::digits());
        doc["difference"] = cmp.difference.str(6);
        doc["terms"] = {{"log(x-1)", cmp.term_log.str(12)},
                        {"zero_sum", cmp.term_zero_sum.str(12)},
                        {"tail_integral", cmp.term_tail.str(12)},
                        {"log_neg_zeta_B", cmp.term_const.str(12)},
                        {"const_tail_bound", cmp.const_tail_bound.str(4)}};
        *out_json = dup_string(doc.dump(2) + "\n");
    });
}

} // extern "C"

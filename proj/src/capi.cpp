#include "koszul.h"

#include <new>
#include <string>

#include "koszul/engine.hpp"

struct koszul_options {
    koszul::RunOptions opts;
};

struct koszul_result {
    int status = KOSZUL_INPUT_ERROR;
    std::string report;
    std::string error;
};

extern "C" {

koszul_options *koszul_options_new(void) { return new (std::nothrow) koszul_options(); }

void koszul_options_free(koszul_options *opt) { delete opt; }

int koszul_options_set_max_degree(koszul_options *opt, int n) {
    if (!opt || n < 2) return KOSZUL_INPUT_ERROR;
    opt->opts.max_degree = n;
    return KOSZUL_OK;
}

int koszul_options_set_report_format(koszul_options *opt, const char *fmt) {
    if (!opt || !fmt) return KOSZUL_INPUT_ERROR;
    std::string s(fmt);
    if (s != "json" && s != "text") return KOSZUL_INPUT_ERROR;
    opt->opts.report_format = s;
    return KOSZUL_OK;
}

int koszul_options_set_field(koszul_options *opt, const char *field) {
    if (!opt || !field) return KOSZUL_INPUT_ERROR;
    opt->opts.field_override = std::string(field);
    return KOSZUL_OK;
}

int koszul_options_set_seed(koszul_options *opt, unsigned long long seed) {
    if (!opt) return KOSZUL_INPUT_ERROR;
    opt->opts.seed = seed;
    return KOSZUL_OK;
}

int koszul_options_set_coring_truncate(koszul_options *opt, int degree) {
    if (!opt || degree < 0) return KOSZUL_INPUT_ERROR;
    opt->opts.coring_truncate = degree;
    return KOSZUL_OK;
}

int koszul_options_set_timings(koszul_options *opt, int enabled) {
    if (!opt) return KOSZUL_INPUT_ERROR;
    opt->opts.timings = enabled != 0;
    return KOSZUL_OK;
}

int koszul_run(const char *command, const char *input_text, const koszul_options *opt,
               koszul_result **out) {
    if (out) *out = nullptr;
    koszul_result *res = new (std::nothrow) koszul_result();
    if (!res) return KOSZUL_INPUT_ERROR;
    if (!command || !input_text) {
        res->status = KOSZUL_INPUT_ERROR;
        res->error = "command and input text must be non-NULL";
    } else {
        koszul::RunOptions opts = opt ? opt->opts : koszul::RunOptions{};
        try {
            koszul::RunResult r = koszul::run_command(command, input_text, opts);
            res->status = r.status;
            res->report = std::move(r.report);
            res->error = std::move(r.error);
        } catch (const std::exception& e) { // run_command maps its own errors; this is a backstop
            res->status = KOSZUL_INPUT_ERROR;
            res->error = std::string("internal error: ") + e.what();
        }
    }
    int status = res->status;
    if (out)
        *out = res;
    else
        delete res;
    return status;
}

int koszul_result_status(const koszul_result *res) {
    return res ? res->status : KOSZUL_INPUT_ERROR;
}

const char *koszul_result_report(const koszul_result *res) {
    return res ? res->report.c_str() : "";
}

const char *koszul_result_error(const koszul_result *res) {
    if (!res || res->error.empty()) return nullptr;
    return res->error.c_str();
}

void koszul_result_free(koszul_result *res) { delete res; }

const char *koszul_version(void) { return koszul::library_version(); }

} // extern "C"

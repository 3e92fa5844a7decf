// Command-line front end. Talks to the library exclusively through the
// extern-C API in koszul.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "koszul.h"

namespace {

struct CommonArgs {
    std::string input;
    int max_degree = 5;
    std::string field;
    std::string report = "json";
    unsigned long long seed = 0;
    bool seed_set = false;
    int coring_truncate = -1;
    bool timings = false;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_truncate) {
    cmd->add_option("--input", a.input, "presentation file (JSON)")->required();
    cmd->add_option("--max-degree", a.max_degree, "degree bound N (default 5)");
    cmd->add_option("--field", a.field, "override the file's field: rational or gfP (e.g. gf5)");
    cmd->add_option("--report", a.report, "report format: json or text");
    cmd->add_option("--seed", a.seed, "seed recorded in the report (for property corpora)")
        ->each([&a](const std::string&) { a.seed_set = true; });
    if (with_truncate)
        cmd->add_option("--coring-truncate", a.coring_truncate,
                        "debugging: drop coring components above this degree");
    cmd->add_flag("--timings", a.timings, "include wall-clock timings in the report");
}

int run(const std::string& command, const CommonArgs& a) {
    std::ifstream in(a.input, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open input file '" << a.input << "'\n";
        return KOSZUL_INPUT_ERROR;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    koszul_options* opt = koszul_options_new();
    if (!opt) {
        std::cerr << "error: out of memory\n";
        return KOSZUL_INPUT_ERROR;
    }
    int rc = KOSZUL_OK;
    if (koszul_options_set_max_degree(opt, a.max_degree) != KOSZUL_OK) {
        std::cerr << "error: --max-degree must be at least 2\n";
        rc = KOSZUL_INPUT_ERROR;
    }
    if (rc == KOSZUL_OK && koszul_options_set_report_format(opt, a.report.c_str()) != KOSZUL_OK) {
        std::cerr << "error: --report must be json or text\n";
        rc = KOSZUL_INPUT_ERROR;
    }
    if (rc == KOSZUL_OK && !a.field.empty()) koszul_options_set_field(opt, a.field.c_str());
    if (rc == KOSZUL_OK && a.seed_set) koszul_options_set_seed(opt, a.seed);
    if (rc == KOSZUL_OK && a.coring_truncate >= 0)
        koszul_options_set_coring_truncate(opt, a.coring_truncate);
    if (rc == KOSZUL_OK && a.timings) koszul_options_set_timings(opt, 1);
    if (rc != KOSZUL_OK) {
        koszul_options_free(opt);
        return rc;
    }

    koszul_result* res = nullptr;
    int status = koszul_run(command.c_str(), text.c_str(), opt, &res);
    if (res) {
        std::cout << koszul_result_report(res);
        if (const char* err = koszul_result_error(res)) std::cerr << "error: " << err << "\n";
        koszul_result_free(res);
    }
    koszul_options_free(opt);
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic Koszulity checker for quadratic presentations and "
                 "twisted tensor products"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(koszul_version()));

    CommonArgs check_args, dual_args, twist_args, hilbert_args;
    CLI::App* check = app.add_subcommand(
        "check", "decide Koszulity up to --max-degree via all six complexes");
    add_common(check, check_args, true);
    CLI::App* dual = app.add_subcommand(
        "dual", "quadratic dual dimensions with Tor/Ext cross-checks");
    add_common(dual, dual_args, false);
    CLI::App* twist = app.add_subcommand(
        "twist", "build and verify the twisted tensor product of the two presentations");
    add_common(twist, twist_args, false);
    CLI::App* hilbert = app.add_subcommand(
        "hilbert", "truncated dimension series and their alternating convolution");
    add_common(hilbert, hilbert_args, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : KOSZUL_INPUT_ERROR;
    }

    if (check->parsed()) return run("check", check_args);
    if (dual->parsed()) return run("dual", dual_args);
    if (twist->parsed()) return run("twist", twist_args);
    return run("hilbert", hilbert_args);
}

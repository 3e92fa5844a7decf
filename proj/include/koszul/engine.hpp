#ifndef KOSZUL_ENGINE_HPP
#define KOSZUL_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace koszul {

struct RunOptions {
    int max_degree = 5;
    std::string report_format = "json"; // "json" | "text"
    std::optional<std::string> field_override; // "rational" | "gfP"
    std::optional<std::uint64_t> seed;
    std::optional<int> coring_truncate; // debugging: drop C^n for n > D
    bool timings = false;
};

struct RunResult {
    int status = 0;     // 0 pass, 1 mathematical failure (witness in report), 2 input error
    std::string report; // rendered report
    std::string error;  // diagnostic when status != 0
};

// command is one of "check", "dual", "twist", "hilbert".
RunResult run_command(const std::string& command, const std::string& input_bytes,
                      const RunOptions& opts);

const char* library_version();

} // namespace koszul

#endif

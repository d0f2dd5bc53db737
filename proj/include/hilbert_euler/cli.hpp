#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <hilbert_euler/verify.hpp>

namespace hilbert_euler::cli {

inline constexpr int exit_success = 0;
inline constexpr int exit_failure = 1; // verification failure or route mismatch
inline constexpr int exit_usage = 2;

enum class output_mode { product, strata, both, macdonald, breakdown };
enum class output_format { table, json, csv };

struct cli_config {
    std::int64_t euler_char = 1;
    unsigned max_n = 20;
    output_mode mode = output_mode::both;
    output_format format = output_format::table;
    verify_config verify;
};

/// Parses "a..b" (either bound may be negative). Empty optional on malformed
/// input.
std::optional<int_range> parse_range(std::string_view text);

std::string_view mode_name(output_mode m);

/// e(X^[n]) (or e(X^(n)), or the stratum breakdown) for n = 0..max_n.
/// Returns `exit_failure` if mode::both finds the two routes disagreeing;
/// the differing rows are written to `err`.
int cmd_compute(const cli_config& config, std::ostream& out, std::ostream& err);

/// Runs the verification grid; `exit_success` iff every check passed.
int cmd_verify(const cli_config& config, std::ostream& out);

/// Full command line entry point; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hilbert_euler::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "singular_lrt/densities.hpp"
#include "singular_lrt/trinomial.hpp"

namespace slrt::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;

/// Runs the command line with args[0] as the program name. Data goes to out,
/// diagnostics to err; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "t1:<idx>", "t1" (index 1) or "t3".
ModelId parse_model(std::string_view text);
/// "t1:<mu0>", "t3:<mu0>,<alpha0>", "chisq:<k>" or "mix".
DensitySpec parse_density_spec(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);
/// Accepts integral values written as reals, e.g. "1e4".
std::vector<std::int64_t> parse_count_list(std::string_view text);

/// 17 significant digits.
std::string format_real(double x);

}  // namespace slrt::cli

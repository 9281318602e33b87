#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toughseq::cli {

/// Exit codes: 0 success / declared / true, 1 well-formed negative answer,
/// 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Sweep cap from TOUGHSEQ_MAX_N (default 7, never above the sweep limit).
int max_sweep_n();

}  // namespace toughseq::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wendroff::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kParameterError = 2;
inline constexpr int kConstructionError = 3;

/// Runs `wendroff <build|zeros|verify|compare|figure> ...`. args excludes
/// the program name. Diagnostics go to err; data goes to --out or, when that
/// is absent or "-", to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wendroff::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sixfold {
struct VerifyReport;
}

namespace sixfold::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// 0 when every m matched, 1 otherwise.
int verify_exit_code(const sixfold::VerifyReport& report);

/// Runs `sixfold <command> ...`; args excludes the program name.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sixfold::cli

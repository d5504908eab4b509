#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zagreb {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `zagreb` tool. args excludes the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zagreb

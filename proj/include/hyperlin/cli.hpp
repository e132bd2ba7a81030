#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlin {

inline constexpr const char* kToolName = "hyperlin";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitCap = 3, kExitIdentityFailure = 4 };

/// Entry point behind the `hyperlin` executable. `args` excludes the program name.
/// Results go to `out` (or the --output file), error objects to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a 64 of `text`, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace hyperlin

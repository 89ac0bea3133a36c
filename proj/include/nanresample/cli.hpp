#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nanresample {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsageError = 2;

/// Entry point behind the nanresample executable. `args` excludes the
/// program name. Returns 0 on success, 1 on a data error, 2 on a usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nanresample

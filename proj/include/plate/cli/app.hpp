#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plate::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kInternalError = 1, kUsageError = 2 };

/// Runs the command line `args` (program name excluded). Normal output goes
/// to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes `content` to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace plate::cli

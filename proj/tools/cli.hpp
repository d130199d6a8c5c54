#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rtorsion::cli {

enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

/// Runs one command line (without the program name). Output goes to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, lowercase hex.
std::string fnv1a_hex(const std::string& data);

}  // namespace rtorsion::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace periodrel::cli {

/// Runs the command line. Exit codes: 0 success, 1 computation failure
/// (a JSON {"error": ...} object is printed), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a digest of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace periodrel::cli

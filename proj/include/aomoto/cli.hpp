#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aomoto {

inline constexpr const char* kEngineVersion = "0.1.0";

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 mathematical precondition failure, 2 usage or parse error, 3 resource cap exceeded.
int execute_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of the given bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace aomoto

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossmat::cli {

/// Exit codes: 0 success, 1 predicate false / not realizable / claim failed,
/// 2 input error.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossmat::cli

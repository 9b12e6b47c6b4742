#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbicoh::cli {

/// Entry point behind the `orbicoh` binary; `args` excludes the program
/// name. Returns 0 on success, 1 when the input fails validation and 2 for
/// malformed input or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbicoh::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace easyq::cli {

/// Parses `args` (without the program name), runs the selected engine and
/// writes the envelope to `out`. Returns 0 on success, 1 when defects were
/// reported and 2 on usage or input errors.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace easyq::cli

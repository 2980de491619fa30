#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gqc::cli {

/// Exit codes: 0 success, 1 domain error or failed fixture, 2 usage or
/// parse error, 3 budget exceeded, 4 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace gqc::cli

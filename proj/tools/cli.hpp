#pragma once

#include <iosfwd>

namespace trifree::cli {

/// Exit codes: 0 success or property holds, 1 property fails or a
/// counterexample was found, 2 usage error, 3 precondition or format error.
auto run(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err) -> int;

} // namespace trifree::cli

#pragma once

#include <iosfwd>

namespace gmew {

/// Exit codes: 0 success, 1 usage or input error, 2 numerical-validation failure.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gmew

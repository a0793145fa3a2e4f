#pragma once

#include <ostream>

namespace softgrip {

/// Exit codes: 0 success, 1 model/domain error, 2 usage or parse error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace softgrip

#pragma once

#include <iosfwd>

namespace dfvs {

// Exit codes: 0 success, 1 NO answer or failed verification, 2 usage or input error.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace dfvs

#pragma once

#include <iosfwd>

namespace symlab::cli {

// Exit codes: 0 pass, 1 violations found or order relation false,
// 2 usage or domain error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symlab::cli

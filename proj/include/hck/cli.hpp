#pragma once

#include <iosfwd>

namespace hck {

/// Exit codes: 0 when no check reports FAIL, 1 when one does, 2 for bad
/// input or an exceeded size cap. Command-line syntax errors use CLI11's
/// own nonzero codes.
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hck

#pragma once

#include <iosfwd>

namespace omnivr::cli {

/// Entry point of the `omnivr` tool. Returns the process exit code: 0 on
/// success, 2 on bad flags or out-of-domain parameters, 1 on I/O or data
/// errors. Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace omnivr::cli

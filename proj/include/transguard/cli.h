#pragma once

#include <ostream>

namespace transguard {

enum ExitCode { kExitOk = 0, kExitDomain = 1, kExitUsage = 2, kExitTranslator = 3 };

/// The `transguard` command line. Payloads go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace transguard

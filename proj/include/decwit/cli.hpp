#pragma once

// Command-line front end.  Every subcommand computes one structured report
// and renders it as a human-readable block/table, JSON, or CSV; "the search
// found nothing" is a successful computation (exit 0 with an explicit
// status field), not an error.
//
// Exit codes: 0 = computed; 2 = invalid input (bad flags, bad values,
// unwritable --out target); 3 = violated internal invariant.

#include <iosfwd>
#include <string>
#include <vector>

namespace decwit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Testable entry point: `args` holds the arguments without the program
// name; rendered output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Process entry point used by the decwit binary.
int run(int argc, const char* const* argv);

}  // namespace decwit::cli

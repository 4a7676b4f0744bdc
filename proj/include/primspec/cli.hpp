#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "primspec/theorems.hpp"

namespace primspec {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFalse = 1, kExitUsage = 2, kExitCap = 3 };

struct CheckOutcome {
    std::string label;           // display name, e.g. "T0"
    std::optional<bool> value;   // nullopt when the W-ring scan is over its limit
    std::string witness;
};

/// One named property of R or Prim(R): t0, t1, t2, irreducible, sober,
/// spectral, supercompact, local, field, p-ring, w-ring, zero-dimensional,
/// star, base. Throws ValidationError for other names.
CheckOutcome evaluate_property(const std::string& property, const RingAnalysis& analysis);
const std::vector<std::string>& property_names();

/// Runs one command line (without the program name) and returns its exit
/// status. Normal output goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primspec

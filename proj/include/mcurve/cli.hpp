#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mcurve/moduli.hpp"

namespace mcurve::cli {

inline constexpr const char* kSchemaVersion = "1";

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

struct Terminal {
  /// stdout is an interactive terminal; colors are used only then, and only
  /// when NO_COLOR is unset.
  bool is_tty = false;
};

/**
 * Entry point of the `mcurve` command line tool. `args` excludes the program
 * name. Normal output goes to `out`, diagnostics to `err`.
 *
 * Returns 0 on success, 2 on usage errors and 1 on domain errors (the error
 * name, e.g. GenusTooSmall, is always part of the diagnostic).
 */
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, Terminal term = {});

/// Scan rows as CSV: header `delta,epsilon,R,d,nonempty,dim`, LF line ends.
void emit_csv(const std::vector<RegionRow>& rows, std::ostream& out);

}  // namespace mcurve::cli

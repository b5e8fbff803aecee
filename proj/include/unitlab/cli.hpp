#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unitlab {

// Runs the unitlab command line: subcommands list, build, invariants, verify,
// distinguish, report, plus --list-checks. Returns the process exit code:
// 0 all pass, 1 any verification failure, 2 usage error. The UNITLAB_CAP
// environment variable overrides the default order cap; --cap overrides both.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitlab

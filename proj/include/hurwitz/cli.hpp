#pragma once

// The `seq` command line:
//   seq <group> <verb> [--a FILE] [--b FILE] [--u FILE] [-n LEN] [--ring DESC]
//       [--transform SPEC] [--online] ...
// Results go to `out` as JSON; errors go to `err` as "error: Kind: detail".

#include <iosfwd>
#include <span>
#include <string>

namespace seqalg {

/// `args` excludes the program name. Returns 0 on success, 1 on a domain error
/// and 2 on a usage or parse error. A FILE of "-" reads standard input.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace seqalg

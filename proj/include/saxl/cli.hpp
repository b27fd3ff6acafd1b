#ifndef SAXL_CLI_HPP
#define SAXL_CLI_HPP

/*
 * Command-line frontend.  dispatch() owns argument parsing, configuration
 * layering (defaults < config file < environment < flags), report
 * serialization (JSON with fixed key order, or TSV), and the exit-code
 * contract:
 *
 *   0  success
 *   1  domain error (bad partition, size mismatch, unsupported request)
 *   2  usage error (unknown flags/subcommand; --help also exits 0 here)
 *   3  budget exceeded (table or spectrum would not fit the configured cap)
 *
 * Reports go to `out`, logs and error messages to `err`.
 */

#include <ostream>
#include <string>
#include <vector>

#include "saxl/partition.hpp"

namespace saxl {

// Parse a shape argument: bracket syntax ("[5,3,1]", "[2^3,1]"), a family
// shorthand ("staircase:4", "chopped:3", "caret:2"), and an optional
// trailing '^' taking the principal hooks of the shape ("caret:2^").
Partition parse_shape_argument(const std::string& text);

// Run one invocation; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace saxl

#endif

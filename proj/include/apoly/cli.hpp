// Command-line front end.
//
//   compute -n <int> [--method all|explicit|substitution|resultant]
//                    [--format text|latex|json]
//   verify  --range a..b [--format text|json] [--corrupt <method>]
//   table   --range a..b --format latex|csv
//
// Exit codes: 0 success / agreement, 1 computation failure or verification
// disagreement, 2 usage error.  stdout carries only the payload; stderr
// carries diagnostics.

#pragma once

#include <iosfwd>

namespace apoly {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace apoly

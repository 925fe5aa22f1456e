#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace krc {

// Subcommands: solve, oracle, verify, cliques, gen, bench, decompose.
// Results go to `out` as JSON text lines; diagnostics go to `err`.
// Exit codes: 0 decided or completed, 2 usage error, 3 input error.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace krc

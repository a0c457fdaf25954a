#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bowtie::cli {

// Dispatches one subcommand.  Exit status 0 on success, 1 on domain errors
// (NotSpecial, ContainsBowtie, NotExtendable, InvalidK, failed
// preconditions), 2 on usage or format errors.  Machine-readable output
// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bowtie::cli

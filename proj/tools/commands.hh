#pragma once

#include <blstate/document.hh>

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace blstate::cli {

enum ExitCode { ok = 0, check_failed = 1, usage_error = 2 };

/// Resolves a command operand: an existing file is read as a document,
/// anything else is parsed as a constructor expression such as
/// `product(mv-chain(1), godel-chain(3))`. Throws ParseError.
LoadedAlgebra resolve_operand(std::string_view operand);

/// Runs one command line (without the program name) and returns the exit
/// code: 0 when every check passed, 1 when a check failed, 2 for usage and
/// parse errors.
int run_command(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace blstate::cli

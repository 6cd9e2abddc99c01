#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kform/repring.hpp"

namespace kform {

// Grammar: expr := ['-'] term (('+'|'-') term)* ; term := [int '*'] name | int.
// A bare integer n denotes n copies of the trivial character. Whitespace
// insignificant. ParseError carries the offending position; UnknownName the
// identifier.
VirtualCharacter parse_rep_expression(const std::string& text, TablePtr table);

// Exit codes: 0 success, 1 domain errors (not free, unknown name, invalid
// table), 2 usage or expression-grammar errors.
int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err);

}  // namespace kform

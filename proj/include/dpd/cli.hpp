#pragma once

// Element grammar and the dpdsurf command-line front end.

#include <iosfwd>
#include <string>
#include <vector>

#include "dpd/dpdring.hpp"

namespace dpd {

/// expr := ['+'|'-'] term (('+'|'-') term)*
/// term := power (['*'|'/'] power)*      (juxtaposition multiplies)
/// power := primary ['^' ['-'] integer]
/// primary := integer | t | u | '(' expr ')'
/// Division and negative powers need a single nonzero graded term.
GradedElement parse_element(const std::string& src, const std::string& t_name = "t",
                            const std::string& u_name = "u");

/// Runs one command; returns the process exit status (0 ok, 1 domain error,
/// 2 usage error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpd

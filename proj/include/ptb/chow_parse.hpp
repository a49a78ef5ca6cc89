#pragma once

#include <string>

#include "ptb/chow.hpp"
#include "ptb/errors.hpp"

namespace ptb {

// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := '-' factor | power; power := primary ('^' nat)?;
// primary := 'z' | 'a' | 'E' nat | nat | '(' expr ')'.
// '^' binds tightest, then '*', then additive. Exponents past the top degree
// legally reduce to zero; huge exponents on degree-zero (scalar) bases are
// refused to keep coefficients bounded.
ChowClass parse_expression(int n, const std::string& src);

} // namespace ptb

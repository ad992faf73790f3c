#pragma once

#include <string>

#include "geoconn/poly.hpp"

namespace geoconn {

/// Parses the polynomial grammar
///   poly   := ('+'|'-')? term (('+'|'-') term)*
///   term   := coeff? ('*'? factor)*
///   factor := var ('^' uint)?
///   coeff  := uint
/// Whitespace is insignificant, '#' starts a comment, '*' is optional.
/// Integer literals are reduced mod p; over extension fields the reserved
/// symbol t denotes the field generator. Throws parse_error with the byte
/// offset of the offending token.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ctx);

} // namespace geoconn

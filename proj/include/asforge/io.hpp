#pragma once

#include <string>

#include "asforge/poly.hpp"

namespace asforge {

// "x^7+x^3+1" with terms in falling degree; coefficients outside F2 are
// prefixed in brackets, e.g. "[3]x^2+x". The zero polynomial prints "0".
std::string poly_str(const Poly& p);

// hex of the packed coefficient bits, lowest degree in bit 0; F2 input only
std::string poly_hex(const Poly& p);

// Accepts the poly_str shape over F2 ("x^5+x^2+1", spaces allowed) and the
// poly_hex shape with an 0x prefix. Throws std::invalid_argument on junk.
Poly parse_poly(const std::string& s);

}  // namespace asforge

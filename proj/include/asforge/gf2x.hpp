#pragma once

#include "asforge/common.hpp"

namespace asforge::gf2x {

// Polynomials over F2 packed into bits: bit i = coefficient of x^i.
// Degrees up to 64, so encodings live in u128 (a degree-64 modulus has bit 64 set).

int deg(u128 p);                       // -1 for the zero polynomial
u128 mul(u128 a, u128 b);              // carry-less product, deg a + deg b <= 127
u128 mod(u128 a, u128 m);
u128 mulmod(u128 a, u128 b, u128 m);
u128 gcd(u128 a, u128 b);              // 0 if both zero
u128 pow2k_x_mod(int e, u128 m);       // x^(2^e) mod m
bool irreducible(u128 f);              // Rabin's test
u128 smallest_irreducible(int k);      // smallest encoding among monic irreducibles of degree k

}  // namespace asforge::gf2x

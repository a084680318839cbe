#include "asforge/gf2x.hpp"

#include <vector>

namespace asforge::gf2x {

int deg(u128 p) {
    if (p == 0) return -1;
    int d = 0;
    if (p >> 64) { d += 64; p >>= 64; }
    u64 w = (u64)p;
    return d + 63 - __builtin_clzll(w);
}

u128 mul(u128 a, u128 b) {
    u128 r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

u128 mod(u128 a, u128 m) {
    int dm = deg(m);
    if (dm < 0) throw std::invalid_argument("gf2x::mod by zero");
    int da = deg(a);
    while (da >= dm) {
        a ^= m << (da - dm);
        da = deg(a);
    }
    return a;
}

u128 mulmod(u128 a, u128 b, u128 m) { return mod(mul(a, b), m); }

u128 gcd(u128 a, u128 b) {
    while (b) {
        u128 t = mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

u128 pow2k_x_mod(int e, u128 m) {
    u128 r = mod((u128)2, m);  // x
    for (int i = 0; i < e; i++) r = mulmod(r, r, m);
    return r;
}

bool irreducible(u128 f) {
    int n = deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    if ((f & 1) == 0) return false;  // divisible by x
    // x^(2^n) == x mod f
    if (pow2k_x_mod(n, f) != 2) return false;
    // gcd(x^(2^(n/p)) - x, f) == 1 for prime p | n
    std::vector<int> primes;
    int m = n;
    for (int p = 2; p * p <= m; p++)
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) primes.push_back(m);
    for (int p : primes) {
        u128 h = pow2k_x_mod(n / p, f) ^ 2;
        if (deg(gcd(h, f)) != 0) return false;
    }
    return true;
}

u128 smallest_irreducible(int k) {
    if (k < 1 || k > 64) throw std::invalid_argument("smallest_irreducible: degree out of range");
    for (u128 e = (u128)1 << k; e < (u128)2 << k; e++)
        if (irreducible(e)) return e;
    throw std::logic_error("unreachable: no irreducible found");
}

}  // namespace asforge::gf2x

#include "asforge/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "asforge/gf2.hpp"

namespace asforge {

std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = p.deg(); d >= 0; d--) {
        FieldElem c = p.coeff(d);
        if (c.is_zero()) continue;
        if (!first) out << "+";
        first = false;
        if (!c.is_one()) out << "[" << fe_hex(c) << "]";
        if (d == 0) {
            if (c.is_one()) out << "1";
        } else if (d == 1) {
            out << "x";
        } else {
            out << "x^" << d;
        }
    }
    return out.str();
}

std::string poly_hex(const Poly& p) {
    u128 bits = p.bits();
    u64 hi = (u64)(bits >> 64), lo = (u64)bits;
    std::ostringstream out;
    out << std::hex;
    if (hi) {
        out << hi;
        out.width(16);
        out.fill('0');
    }
    out << lo;
    return out.str();
}

namespace {

[[noreturn]] void bad(const std::string& s) {
    throw std::invalid_argument("cannot parse polynomial \"" + s + "\"");
}

}  // namespace

Poly parse_poly(const std::string& raw) {
    const FieldCtx* c = ctx_create(1);
    std::string s;
    for (char ch : raw)
        if (!std::isspace((unsigned char)ch)) s += ch;
    if (s.empty()) bad(raw);
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        u128 bits = 0;
        if (s.size() - 2 > 32) bad(raw);
        for (size_t i = 2; i < s.size(); i++) {
            int d;
            char ch = (char)std::tolower((unsigned char)s[i]);
            if (ch >= '0' && ch <= '9')
                d = ch - '0';
            else if (ch >= 'a' && ch <= 'f')
                d = ch - 'a' + 10;
            else
                bad(raw);
            bits = (bits << 4) | (u128)d;
        }
        return Poly::from_bits(c, bits);
    }
    Poly p = Poly::zero(c);
    size_t i = 0;
    while (i < s.size()) {
        size_t j = s.find('+', i);
        if (j == std::string::npos) j = s.size();
        std::string term = s.substr(i, j - i);
        if (term == "0") {
        } else if (term == "1") {
            p = p + Poly::one(c);
        } else if (term == "x") {
            p = p + Poly::x(c);
        } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            int d = 0;
            for (size_t t = 2; t < term.size(); t++) {
                if (!std::isdigit((unsigned char)term[t])) bad(raw);
                d = d * 10 + (term[t] - '0');
                if (d > 4096) bad(raw);
            }
            p = p + Poly::monomial(c, d);
        } else {
            bad(raw);
        }
        i = j + 1;
        if (i == s.size() && j != s.size()) bad(raw);  // trailing '+'
    }
    return p;
}

}  // namespace asforge

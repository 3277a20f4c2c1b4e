#include "cubix/eisenstein.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace cubix {

const std::array<Eisenstein, 6>& eisenstein_units() {
    static const std::array<Eisenstein, 6> units = {{
        {1, 0},   // 1
        {0, 1},   // w
        {-1, -1}, // w^2
        {-1, 0},  // -1
        {0, -1},  // -w
        {1, 1},   // -w^2
    }};
    return units;
}

Eisenstein divide_exact(const Eisenstein& x, const Eisenstein& d) {
    const std::int64_t n = norm(d);
    if (n == 0) throw DivisionByZero("division by zero Eisenstein integer");
    // x/d = x * conj(d) / norm(d); the quotient is integral iff both
    // components of the numerator are multiples of norm(d).
    const Eisenstein num = x * conj(d);
    if (num.a % n != 0 || num.b % n != 0)
        throw NotDivisible(to_string(d) + " does not divide " + to_string(x));
    return {num.a / n, num.b / n};
}

bool divides(const Eisenstein& d, const Eisenstein& x) {
    const std::int64_t n = norm(d);
    if (n == 0) return x.is_zero();
    const Eisenstein num = x * conj(d);
    return num.a % n == 0 && num.b % n == 0;
}

std::string to_string(const Eisenstein& x) {
    std::ostringstream os;
    if (x.b == 0) {
        os << x.a;
    } else if (x.a == 0) {
        if (x.b == 1) os << "w";
        else if (x.b == -1) os << "-w";
        else os << x.b << "w";
    } else {
        os << x.a;
        if (x.b == 1) os << "+w";
        else if (x.b == -1) os << "-w";
        else if (x.b > 0) os << "+" << x.b << "w";
        else os << x.b << "w";
    }
    return os.str();
}

namespace {

// Parses an optionally signed decimal integer starting at pos; pos advances
// past it. A missing digit string with a sign present means coefficient 1
// handling is left to the caller (e.g. "+w"), signalled by digits=false.
struct ParsedInt {
    std::int64_t value = 0;
    bool negative = false;
    bool digits = false;
};

ParsedInt parse_int(std::string_view s, std::size_t& pos) {
    ParsedInt out;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        out.negative = s[pos] == '-';
        ++pos;
    }
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        out.digits = true;
        const std::int64_t digit = s[pos] - '0';
        out.value = checked_add(checked_mul(out.value, 10), digit);
        ++pos;
    }
    if (out.negative) out.value = checked_neg(out.value);
    return out;
}

} // namespace

Eisenstein parse_eisenstein(std::string_view text) {
    // Strip all whitespace up front so "1 + 2w" parses like "1+2w".
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty Eisenstein literal");

    std::size_t pos = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    bool saw_term = false;

    while (pos < s.size()) {
        const std::size_t start = pos;
        ParsedInt n = parse_int(s, pos);
        const bool has_omega = pos < s.size() && (s[pos] == 'w' || s[pos] == 'W');
        if (has_omega) {
            ++pos;
            std::int64_t coeff = n.digits ? n.value : (n.negative ? -1 : 1);
            b = checked_add(b, coeff);
        } else {
            if (!n.digits)
                throw ParseError("bad Eisenstein literal: '" + std::string(text) +
                                 "' (unexpected character at offset " + std::to_string(start) + ")");
            a = checked_add(a, n.value);
        }
        saw_term = true;
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
            throw ParseError("bad Eisenstein literal: '" + std::string(text) + "'");
    }
    if (!saw_term) throw ParseError("bad Eisenstein literal: '" + std::string(text) + "'");
    return {a, b};
}

std::ostream& operator<<(std::ostream& os, const Eisenstein& x) {
    return os << to_string(x);
}

} // namespace cubix

#include "cubix/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

namespace cubix {

namespace {

std::string strip(std::string_view text) {
    std::string out;
    for (const char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

// Parses a decimal with optional sign.  The imaginary part may be a bare
// sign or empty ("i", "-i", "1+i"); the real part may not.
double parse_part(const std::string& s, std::string_view whole,
                  bool allow_bare_sign = false) {
    if (allow_bare_sign) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
    }
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ParseError("cannot read complex number from \"" + std::string(whole) +
                         "\"");
    }
    if (used != s.size())
        throw ParseError("cannot read complex number from \"" + std::string(whole) +
                         "\"");
    return value;
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace

Complex parse_complex(std::string_view text) {
    const std::string s = strip(text);
    if (s.empty()) throw ParseError("empty complex number");
    if (s.back() != 'i') return Complex(parse_part(s, text), 0.0);

    const std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that starts the imaginary part; signs directly
    // after an exponent marker belong to the exponent.
    for (std::size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') &&
            body[p - 1] != 'e' && body[p - 1] != 'E') {
            return Complex(parse_part(body.substr(0, p), text),
                           parse_part(body.substr(p), text, true));
        }
    }
    return Complex(0.0, parse_part(body, text, true));
}

std::string format_complex(const Complex& z) {
    if (z.imag() == 0.0) return format_real(z.real());
    const std::string im = format_real(std::abs(z.imag())) + "i";
    const std::string sign = std::signbit(z.imag()) ? "-" : "+";
    if (z.real() == 0.0) return (std::signbit(z.imag()) ? "-" : "") + im;
    return format_real(z.real()) + sign + im;
}

ComplexVector parse_complex_vector(std::string_view text) {
    const std::string s = strip(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("vector must be bracketed: \"" + std::string(text) + "\"");
    ComplexVector v{};
    std::size_t start = 0, found = 0;
    const std::string body = s.substr(1, s.size() - 2) + ",";
    for (std::size_t p = 0; p < body.size(); ++p) {
        if (body[p] != ',') continue;
        if (found == 5) throw ParseError("vector needs exactly 5 entries");
        v[found++] = parse_complex(body.substr(start, p - start));
        start = p + 1;
    }
    if (found != 5) throw ParseError("vector needs exactly 5 entries");
    return v;
}

std::string to_string(const ComplexVector& v) {
    std::string out = "[";
    for (std::size_t k = 0; k < 5; ++k) {
        if (k) out += ", ";
        out += format_complex(v[k]);
    }
    return out + "]";
}

std::string format_fixed12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

} // namespace cubix

#pragma once

#include <string>
#include <string_view>

#include "cubix/ball.hpp"
#include "cubix/errors.hpp"

namespace cubix {

// Complex scalars in the text form "re", "imi" or "re+imi", e.g. "1",
// "-0.5", "0.41i", "1+2i", "1.5-0.25i".
Complex parse_complex(std::string_view text);
std::string format_complex(const Complex& z);

// "[z1, z2, z3, z4, z5]" with complex entries.
ComplexVector parse_complex_vector(std::string_view text);
std::string to_string(const ComplexVector& v);

// Fixed-point with 12 digits after the decimal, the report form for
// distances and gaps.
std::string format_fixed12(double x);

} // namespace cubix

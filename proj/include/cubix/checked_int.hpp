#pragma once

#include <cstdint>

#include "cubix/errors.hpp"

namespace cubix {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer addition overflowed");
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer subtraction overflowed");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer multiplication overflowed");
    return r;
}

inline std::int64_t checked_neg(std::int64_t x) {
    return checked_sub(0, x);
}

} // namespace cubix

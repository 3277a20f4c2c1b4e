#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cubix/checked_int.hpp"
#include "cubix/errors.hpp"

namespace cubix {

// The field of three elements, the residue ring of the Eisenstein integers
// modulo theta = sqrt(-3).
class F3 {
public:
    constexpr F3() = default;
    constexpr explicit F3(std::int64_t v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

    constexpr int value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr F3 operator+(F3 x, F3 y) { return F3(x.v_ + y.v_); }
    friend constexpr F3 operator-(F3 x, F3 y) { return F3(3 + x.v_ - y.v_); }
    friend constexpr F3 operator*(F3 x, F3 y) { return F3(x.v_ * y.v_); }
    friend constexpr F3 operator-(F3 x) { return F3(3 - x.v_); }

    // Every nonzero element is its own inverse: 1*1 = 1, 2*2 = 4 = 1.
    F3 inverse() const {
        if (v_ == 0) throw DivisionByZero("0 has no inverse in F3");
        return *this;
    }

    friend constexpr bool operator==(F3 x, F3 y) { return x.v_ == y.v_; }
    friend constexpr bool operator!=(F3 x, F3 y) { return x.v_ != y.v_; }
    friend constexpr bool operator<(F3 x, F3 y) { return x.v_ < y.v_; }

private:
    std::uint8_t v_ = 0;
};

// An Eisenstein integer a + b*omega, omega = (-1+sqrt(-3))/2, omega^2 = -1-omega.
// Components use checked 64-bit arithmetic; overflow raises, never wraps.
struct Eisenstein {
    std::int64_t a = 0; // coefficient of 1
    std::int64_t b = 0; // coefficient of omega

    constexpr Eisenstein() = default;
    constexpr Eisenstein(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {}

    static constexpr Eisenstein omega() { return {0, 1}; }
    static constexpr Eisenstein omega_sq() { return {-1, -1}; }
    // theta = omega - conj(omega) = sqrt(-3); the ramified prime above 3.
    static constexpr Eisenstein theta() { return {1, 2}; }

    constexpr bool is_zero() const { return a == 0 && b == 0; }

    friend constexpr bool operator==(const Eisenstein& x, const Eisenstein& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend constexpr bool operator!=(const Eisenstein& x, const Eisenstein& y) {
        return !(x == y);
    }
    // Lexicographic on (a, b); the order used for canonical representatives.
    friend constexpr bool operator<(const Eisenstein& x, const Eisenstein& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

inline Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

inline Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

inline Eisenstein operator-(const Eisenstein& x) {
    return {checked_neg(x.a), checked_neg(x.b)};
}

// (a+bw)(c+dw) = ac - bd + (ad + bc - bd) w, using w^2 = -1-w.
inline Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
    const std::int64_t ac = checked_mul(x.a, y.a);
    const std::int64_t bd = checked_mul(x.b, y.b);
    const std::int64_t ad = checked_mul(x.a, y.b);
    const std::int64_t bc = checked_mul(x.b, y.a);
    return {checked_sub(ac, bd), checked_sub(checked_add(ad, bc), bd)};
}

// conj(a+bw) = (a-b) - bw, since conj(w) = w^2 = -1-w.
inline Eisenstein conj(const Eisenstein& x) {
    return {checked_sub(x.a, x.b), checked_neg(x.b)};
}

// norm(a+bw) = a^2 - ab + b^2 = x * conj(x); nonnegative, zero only at zero.
inline std::int64_t norm(const Eisenstein& x) {
    const std::int64_t aa = checked_mul(x.a, x.a);
    const std::int64_t ab = checked_mul(x.a, x.b);
    const std::int64_t bb = checked_mul(x.b, x.b);
    return checked_add(checked_sub(aa, ab), bb);
}

inline bool is_unit(const Eisenstein& x) { return norm(x) == 1; }

// The six units {1, -1, w, -w, w^2, -w^2}, a cyclic group of order 6.
const std::array<Eisenstein, 6>& eisenstein_units();

// Residue modulo theta: a + bw = a + b (mod theta) because w = 1 + w^2 * theta.
inline F3 reduce_mod_theta(const Eisenstein& x) {
    return F3((x.a % 3) + (x.b % 3));
}

// Exact quotient x / d; throws NotDivisible when d does not divide x,
// DivisionByZero when d = 0.
Eisenstein divide_exact(const Eisenstein& x, const Eisenstein& d);

bool divides(const Eisenstein& d, const Eisenstein& x);

// Scalar text format: "a", "bw", "a+bw", "a-bw" (e.g. "1+2w").
std::string to_string(const Eisenstein& x);
Eisenstein parse_eisenstein(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Eisenstein& x);

} // namespace cubix

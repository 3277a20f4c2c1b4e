#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubix/errors.hpp"

namespace cubix {

// Exponents (a_1, ..., a_n) of a Brieskorn polynomial x1^a1 + ... + xn^an.
using ExponentVector = std::vector<std::int64_t>;

// e^{2*pi*i*k/m} stored as the angle fraction k/m in lowest terms, 0 <= k < m.
class RootOfUnity {
public:
    RootOfUnity(std::int64_t numerator, std::int64_t denominator);

    std::int64_t numerator() const { return k_; }
    std::int64_t denominator() const { return m_; }

    // Multiplicative order; equals the reduced denominator.
    std::int64_t order() const { return m_; }

    RootOfUnity conj() const;

    friend RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y);
    friend bool operator==(const RootOfUnity& x, const RootOfUnity& y) {
        return x.k_ == y.k_ && x.m_ == y.m_;
    }
    friend bool operator!=(const RootOfUnity& x, const RootOfUnity& y) {
        return !(x == y);
    }
    // Angle order, so sorting a multiset walks the unit circle once.
    friend bool operator<(const RootOfUnity& x, const RootOfUnity& y);

private:
    std::int64_t k_;
    std::int64_t m_;
};

std::string to_string(const RootOfUnity& z);

std::int64_t milnor_number(const ExponentVector& e);

// Pham's multiset { prod_i zeta_i : zeta_i^{a_i} = 1, zeta_i != 1 }, sorted.
std::vector<RootOfUnity> monodromy_eigenvalues(const ExponentVector& e);

std::int64_t monodromy_order(const ExponentVector& e);

} // namespace cubix

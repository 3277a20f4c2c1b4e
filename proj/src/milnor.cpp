#include "cubix/milnor.hpp"

#include <algorithm>
#include <numeric>

#include "cubix/checked_int.hpp"

namespace cubix {

namespace {

void check_exponents(const ExponentVector& e) {
    if (e.empty()) throw BadExponent("exponent vector must be nonempty");
    for (const auto a : e)
        if (a < 2)
            throw BadExponent("exponents must be at least 2, got " +
                              std::to_string(a));
}

} // namespace

RootOfUnity::RootOfUnity(std::int64_t numerator, std::int64_t denominator)
    : k_(numerator), m_(denominator) {
    if (m_ <= 0) throw Error("root of unity needs a positive denominator");
    k_ %= m_;
    if (k_ < 0) k_ += m_;
    const std::int64_t g = std::gcd(k_, m_);
    if (g > 1) {
        k_ /= g;
        m_ /= g;
    }
}

RootOfUnity RootOfUnity::conj() const { return RootOfUnity(m_ - k_, m_); }

RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y) {
    // k1/m1 + k2/m2 over the common denominator, reduced by the constructor.
    const std::int64_t m = checked_mul(x.m_, y.m_);
    return RootOfUnity(checked_add(checked_mul(x.k_, y.m_), checked_mul(y.k_, x.m_)),
                       m);
}

bool operator<(const RootOfUnity& x, const RootOfUnity& y) {
    return checked_mul(x.k_, y.m_) < checked_mul(y.k_, x.m_);
}

std::string to_string(const RootOfUnity& z) {
    return std::to_string(z.numerator()) + "/" + std::to_string(z.denominator());
}

std::int64_t milnor_number(const ExponentVector& e) {
    check_exponents(e);
    std::int64_t mu = 1;
    for (const auto a : e) mu = checked_mul(mu, a - 1);
    return mu;
}

std::vector<RootOfUnity> monodromy_eigenvalues(const ExponentVector& e) {
    std::vector<RootOfUnity> out;
    out.reserve(static_cast<std::size_t>(milnor_number(e)));

    // Odometer over (j_1, ..., j_n) with 1 <= j_i < a_i; the eigenvalue is
    // the product of the e^{2*pi*i*j_i/a_i}.
    std::vector<std::int64_t> j(e.size(), 1);
    for (;;) {
        RootOfUnity z(0, 1);
        for (std::size_t i = 0; i < e.size(); ++i) z = z * RootOfUnity(j[i], e[i]);
        out.push_back(z);

        std::size_t i = 0;
        while (i < j.size() && j[i] == e[i] - 1) j[i++] = 1;
        if (i == j.size()) break;
        ++j[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t monodromy_order(const ExponentVector& e) {
    std::int64_t order = 1;
    for (const auto& z : monodromy_eigenvalues(e)) {
        const std::int64_t g = std::gcd(order, z.order());
        order = checked_mul(order / g, z.order());
    }
    return order;
}

} // namespace cubix

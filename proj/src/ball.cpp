#include "cubix/ball.hpp"

#include <cmath>

namespace cubix {

namespace {
const Complex kOmegaC(-0.5, std::sqrt(3.0) / 2.0);
}

Complex herm_c(const ComplexVector& v, const ComplexVector& w) {
    Complex s = -v[0] * std::conj(w[0]);
    for (std::size_t k = 1; k < 5; ++k) s += v[k] * std::conj(w[k]);
    return s;
}

ComplexVector embed(const LatticeVector& v) {
    ComplexVector out;
    for (std::size_t k = 0; k < 5; ++k)
        out[k] = Complex(static_cast<double>(v[k].a), 0.0) +
                 Complex(static_cast<double>(v[k].b), 0.0) * kOmegaC;
    return out;
}

namespace {

double herm_self(const ComplexVector& z) {
    double s = -std::norm(z[0]);
    for (std::size_t k = 1; k < 5; ++k) s += std::norm(z[k]);
    return s;
}

} // namespace

BallPoint make_point(const ComplexVector& raw) {
    const double h = herm_self(raw);
    if (h >= -tolerances::kBallMargin)
        throw NotInBall("representative has h(z,z) = " + std::to_string(h) +
                        ", not inside the ball");
    const double scale = 1.0 / std::sqrt(-h);
    ComplexVector z;
    for (std::size_t k = 0; k < 5; ++k) z[k] = raw[k] * scale;
    // Phase gauge: z1 real positive.  |z1|^2 = 1 + sum |z_k|^2 >= 1 > 0.
    const Complex phase = std::conj(z[0]) / std::abs(z[0]);
    for (auto& c : z) c *= phase;
    return BallPoint{z};
}

BallPoint center() {
    ComplexVector c{};
    c[0] = 1.0;
    return BallPoint{c};
}

double dist(const BallPoint& x, const BallPoint& y) {
    const Complex xy = herm_c(x.z, y.z);
    const Complex yx = herm_c(y.z, x.z);
    const double num = (xy * yx).real();
    const double den = herm_self(x.z) * herm_self(y.z);
    const double c = std::sqrt(std::max(1.0, num / den));
    return 2.0 * std::acosh(c);
}

HyperplaneNormal make_normal(const LatticeVector& v) {
    if (herm(v, v) != Eisenstein(1, 0))
        throw BadNorm("hyperplane normal must have h(v,v) = 1");
    return HyperplaneNormal{v, embed(v)};
}

double hyperplane_gap(const BallPoint& x, const HyperplaneNormal& n) {
    const Complex xv = herm_c(x.z, n.embedded);
    const Complex vx = herm_c(n.embedded, x.z);
    const double num = -(xv * vx).real();
    const double den = herm_self(x.z) * herm_self(n.embedded);
    const double s = std::sqrt(std::max(0.0, num / den));
    return 2.0 * std::asinh(s);
}

std::optional<HyperplaneNormal> in_arrangement(const BallPoint& x,
                                               std::int64_t height_bound, double tol) {
    for (const auto& v : enumerate_vectors(1, height_bound)) {
        const HyperplaneNormal n = make_normal(v);
        if (hyperplane_gap(x, n) < tol) return n;
    }
    return std::nullopt;
}

BallPoint apply(const Isometry& M, const BallPoint& x) {
    ComplexVector out{};
    for (int i = 0; i < 5; ++i) {
        Complex s = 0.0;
        for (int j = 0; j < 5; ++j) {
            const Eisenstein& e = M.at(i, j);
            s += (static_cast<double>(e.a) + static_cast<double>(e.b) * kOmegaC) *
                 x.z[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = s;
    }
    return make_point(out);
}

F3Vector cusp_class(const LatticeVector& n) {
    if (herm(n, n) != Eisenstein(0, 0))
        throw NotNull("cusp classes attach to null vectors only, h(n,n) = " +
                      to_string(herm(n, n)));
    bool divisible = true;
    for (const auto& c : n) divisible = divisible && divides(Eisenstein::theta(), c);
    if (divisible)
        throw Imprimitive("vector is divisible by theta; scale it down first");
    return projective_canonical(reduce_vector(n));
}

} // namespace cubix

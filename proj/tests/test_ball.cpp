#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "cubix/ball.hpp"

using cubix::BallPoint;
using cubix::Complex;
using cubix::ComplexVector;
using cubix::Eisenstein;
using cubix::Isometry;
using cubix::LatticeVector;

namespace {

const Eisenstein kOmega(0, 1);
const Eisenstein kMinusOne(-1, 0);
const double kTwoLn2 = 2.0 * std::log(2.0);

LatticeVector basis(int k) {
    LatticeVector v{};
    v[static_cast<std::size_t>(k)] = Eisenstein(1, 0);
    return v;
}

ComplexVector cvec(Complex a, Complex b, Complex c, Complex d, Complex e) {
    return {a, b, c, d, e};
}

BallPoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-0.4, 0.4);
    ComplexVector raw{};
    raw[0] = 1.0;
    for (std::size_t k = 1; k < 5; ++k) raw[k] = Complex(d(rng), d(rng)) * 0.5;
    return cubix::make_point(raw);
}

const std::vector<Isometry>& word_pool() {
    static const std::vector<Isometry> pool = [] {
        std::vector<Isometry> out;
        for (const auto& v : cubix::enumerate_vectors(1, 1)) {
            out.push_back(cubix::reflection(v, kOmega));
            out.push_back(cubix::reflection(v, kMinusOne));
        }
        for (const auto& v : cubix::enumerate_vectors(2, 1))
            out.push_back(cubix::reflection(v, kMinusOne));
        return out;
    }();
    return pool;
}

Isometry random_word(std::mt19937_64& rng, int max_len = 5) {
    const auto& pool = word_pool();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> len(1, max_len);
    Isometry M = Isometry::identity();
    const int n = len(rng);
    for (int i = 0; i < n; ++i) M = M * pool[pick(rng)];
    return M;
}

double point_gap(const BallPoint& a, const BallPoint& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < 5; ++k) worst = std::max(worst, std::abs(a.z[k] - b.z[k]));
    return worst;
}

} // namespace

TEST_CASE("point normalization") {
    const BallPoint c = cubix::center();
    CHECK(point_gap(cubix::make_point(cvec(1, 0, 0, 0, 0)), c) == 0.0);
    CHECK(point_gap(cubix::make_point(cvec(2, 0, 0, 0, 0)), c) <= 1e-15);

    // Scaling by any nonzero complex number gives the same stored point.
    const ComplexVector raw = cvec(1.0, Complex(0.2, 0.1), 0.3, Complex(0, 0.25), 0.05);
    const BallPoint p = cubix::make_point(raw);
    ComplexVector scaled;
    for (std::size_t k = 0; k < 5; ++k) scaled[k] = raw[k] * Complex(-0.7, 1.3);
    CHECK(point_gap(cubix::make_point(scaled), p) <= 1e-12);

    // Stored invariants: h(z,z) = -1, first coordinate real positive.
    CHECK(std::abs(cubix::herm_c(p.z, p.z).real() + 1.0) <=
          cubix::tolerances::kNormalization);
    CHECK(std::abs(p.z[0].imag()) <= 1e-12);
    CHECK(p.z[0].real() >= 1.0);

    CHECK_THROWS_AS(cubix::make_point(cvec(1, 1, 0, 0, 0)), cubix::NotInBall);
    CHECK_THROWS_AS(cubix::make_point(cvec(0, 1, 0, 0, 0)), cubix::NotInBall);
    CHECK_THROWS_AS(cubix::make_point(cvec(1, 0.99999999999999, 0, 0, 0)),
                    cubix::NotInBall);
}

TEST_CASE("distance") {
    const BallPoint c = cubix::center();
    CHECK(cubix::dist(c, c) == 0.0);

    const BallPoint p = cubix::make_point(cvec(1, 0.6, 0, 0, 0));
    CHECK(cubix::dist(c, p) == doctest::Approx(kTwoLn2).epsilon(1e-12));
    CHECK(cubix::dist(p, c) == cubix::dist(c, p));

    // Same projective point, different representative: distance zero.
    ComplexVector rep = cvec(1, 0.6, 0, 0, 0);
    for (auto& x : rep) x *= Complex(0.5, 0.25);
    CHECK(cubix::dist(p, cubix::make_point(rep)) <= 1e-7);

    std::mt19937_64 rng(20260830);
    for (int t = 0; t < 200; ++t) {
        const BallPoint x = random_point(rng);
        const BallPoint y = random_point(rng);
        CHECK(cubix::dist(x, y) >= 0.0);
        CHECK(std::abs(cubix::dist(x, y) - cubix::dist(y, x)) <= 1e-14);
    }
}

TEST_CASE("triangle inequality") {
    std::mt19937_64 rng(20260831);
    for (int t = 0; t < 1000; ++t) {
        const BallPoint x = random_point(rng);
        const BallPoint y = random_point(rng);
        const BallPoint z = random_point(rng);
        CHECK(cubix::dist(x, z) <=
              cubix::dist(x, y) + cubix::dist(y, z) + cubix::tolerances::kTriangleSlack);
    }
}

TEST_CASE("hyperplane gap") {
    const auto n2 = cubix::make_normal(basis(1));
    CHECK(cubix::hyperplane_gap(cubix::center(), n2) == 0.0);

    const BallPoint p = cubix::make_point(cvec(1, 0.6, 0, 0, 0));
    // sinh^2(d/2) = 0.36/0.64, so d = 2 asinh(0.75) = 2 ln 2.
    CHECK(cubix::hyperplane_gap(p, n2) == doctest::Approx(kTwoLn2).epsilon(1e-12));
    CHECK(cubix::hyperplane_gap(p, n2) ==
          doctest::Approx(2.0 * std::asinh(0.75)).epsilon(1e-14));

    // The gap vanishes exactly on the hyperplane.
    const BallPoint on_plane = cubix::make_point(cvec(1, 0, 0.3, Complex(0, 0.2), 0.1));
    CHECK(cubix::hyperplane_gap(on_plane, n2) <= 1e-12);

    CHECK_THROWS_AS(cubix::make_normal(basis(0)), cubix::BadNorm);
    LatticeVector null_vec{};
    null_vec[0] = null_vec[1] = Eisenstein(1, 0);
    CHECK_THROWS_AS(cubix::make_normal(null_vec), cubix::BadNorm);
}

TEST_CASE("isometry invariance of the metric") {
    std::mt19937_64 rng(20260832);
    const auto norms = cubix::enumerate_vectors(1, 1);
    std::uniform_int_distribution<std::size_t> pick(0, norms.size() - 1);
    for (int t = 0; t < 100; ++t) {
        const Isometry M = random_word(rng);
        const BallPoint x = random_point(rng);
        const BallPoint y = random_point(rng);
        CHECK(std::abs(cubix::dist(cubix::apply(M, x), cubix::apply(M, y)) -
                       cubix::dist(x, y)) <= cubix::tolerances::kInvariance);

        const LatticeVector v = norms[pick(rng)];
        const auto n = cubix::make_normal(v);
        const auto Mn = cubix::make_normal(M * v);
        CHECK(std::abs(cubix::hyperplane_gap(cubix::apply(M, x), Mn) -
                       cubix::hyperplane_gap(x, n)) <= cubix::tolerances::kInvariance);
    }
}

TEST_CASE("reflections stabilize their hyperplane") {
    const LatticeVector g2 = basis(1);
    const auto n = cubix::make_normal(g2);
    const Isometry R = cubix::reflection(g2, kOmega);

    // Points of v-perp are fixed...
    std::mt19937_64 rng(20260833);
    for (int t = 0; t < 50; ++t) {
        BallPoint x = random_point(rng);
        x.z[1] = 0.0; // lies on the hyperplane of gamma_2
        const BallPoint fixed = cubix::make_point(x.z);
        CHECK(point_gap(cubix::apply(R, fixed), fixed) <= 1e-12);
        CHECK(cubix::hyperplane_gap(fixed, n) <= 1e-12);
    }
    // ...and gaps to the mirror are preserved off it.
    for (int t = 0; t < 50; ++t) {
        const BallPoint x = random_point(rng);
        CHECK(std::abs(cubix::hyperplane_gap(cubix::apply(R, x), n) -
                       cubix::hyperplane_gap(x, n)) <= cubix::tolerances::kInvariance);
    }
}

TEST_CASE("arrangement membership scan") {
    const auto hit = cubix::in_arrangement(cubix::center(), 1, 1e-8);
    REQUIRE(hit.has_value());
    // First canonical norm-1 vector orthogonal to the center.
    LatticeVector expect{};
    expect[1] = Eisenstein(-1, -1); // omega^2, the canonical unit
    CHECK(hit->v == expect);
    CHECK(cubix::hyperplane_gap(cubix::center(), *hit) <= 1e-12);

    // A generic point: every height-1 normal has |h(x,v)| >= 1 - 0.72 > 0.
    const BallPoint generic =
        cubix::make_point(cvec(1, 0.31, 0.17, 0.05, Complex(0, 0.41)));
    CHECK_FALSE(cubix::in_arrangement(generic, 1, 1e-8).has_value());

    // Strict comparison: tolerance zero never fires.
    CHECK_FALSE(cubix::in_arrangement(cubix::center(), 1, 0.0).has_value());
}

TEST_CASE("group action on the ball") {
    const BallPoint c = cubix::center();
    CHECK(point_gap(cubix::apply(Isometry::identity(), c), c) <= 1e-15);
    CHECK(point_gap(cubix::apply(cubix::reflection(basis(1), kOmega), c), c) <= 1e-15);

    std::mt19937_64 rng(20260834);
    for (int t = 0; t < 100; ++t) {
        const Isometry M = random_word(rng, 3);
        const Isometry N = random_word(rng, 3);
        const BallPoint x = random_point(rng);
        // apply never leaves the ball (h-invariance) and is a group action.
        // Renormalization near the boundary costs a few digits, hence 1e-7.
        const BallPoint mnx = cubix::apply(M * N, x);
        const BallPoint m_nx = cubix::apply(M, cubix::apply(N, x));
        CHECK(point_gap(mnx, m_nx) <= 1e-7);
    }
}

TEST_CASE("cusp classes") {
    LatticeVector n{};
    n[0] = n[1] = Eisenstein(1, 0);
    cubix::F3Vector expect{};
    expect[0] = expect[1] = cubix::F3(1);
    CHECK(cubix::cusp_class(n) == expect);

    LatticeVector nw{};
    nw[0] = Eisenstein(1, 0);
    nw[1] = kOmega;
    CHECK(cubix::cusp_class(nw) == expect);

    LatticeVector scaled{};
    scaled[0] = scaled[1] = Eisenstein::theta();
    CHECK_THROWS_AS(cubix::cusp_class(scaled), cubix::Imprimitive);
    CHECK_THROWS_AS(cubix::cusp_class(LatticeVector{}), cubix::Imprimitive);
    CHECK_THROWS_AS(cubix::cusp_class(basis(1)), cubix::NotNull);

    // Invariance under the kernel group: triflection words fix every class.
    std::mt19937_64 rng(20260835);
    const auto nulls = cubix::enumerate_vectors(0, 1);
    const auto norm1 = cubix::enumerate_vectors(1, 1);
    std::uniform_int_distribution<std::size_t> pick_null(0, nulls.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_v(0, norm1.size() - 1);
    for (int t = 0; t < 100; ++t) {
        Isometry K = Isometry::identity();
        for (int i = 0; i < 4; ++i) K = K * cubix::reflection(norm1[pick_v(rng)], kOmega);
        REQUIRE(cubix::in_gamma0(K));
        const LatticeVector v = nulls[pick_null(rng)];
        CHECK(cubix::cusp_class(K * v) == cubix::cusp_class(v));
    }
}

TEST_CASE("cusp surjectivity at the wide height bound") {
    const auto pts = cubix::null_points();
    std::set<cubix::F3Vector> seen;
    int imprimitive = 0;
    for (const auto& v : cubix::enumerate_vectors(0, 4)) {
        try {
            seen.insert(cubix::cusp_class(v));
        } catch (const cubix::Imprimitive&) {
            ++imprimitive;
        }
    }
    CHECK(seen.size() == 40);
    CHECK(imprimitive == 24);
    for (const auto& p : seen)
        CHECK(std::count(pts.begin(), pts.end(), p) == 1);
}

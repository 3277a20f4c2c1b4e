#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cubix/hermitian.hpp"

using cubix::Eisenstein;
using cubix::F3;
using cubix::Isometry;
using cubix::LatticeVector;

namespace {

const Eisenstein kOne(1, 0);
const Eisenstein kOmega(0, 1);
const Eisenstein kOmegaSq(-1, -1);
const Eisenstein kMinusOne(-1, 0);

LatticeVector basis(int k) {
    LatticeVector v{};
    v[static_cast<std::size_t>(k)] = kOne;
    return v;
}

LatticeVector random_vector(std::mt19937_64& rng, std::int64_t box = 5) {
    std::uniform_int_distribution<std::int64_t> d(-box, box);
    LatticeVector v;
    for (auto& x : v) x = Eisenstein(d(rng), d(rng));
    return v;
}

// A pool of reflections to build pseudorandom isometry words from.
const std::vector<Isometry>& reflection_pool() {
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

Isometry random_isometry(std::mt19937_64& rng, int length = 8) {
    const auto& pool = reflection_pool();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    Isometry M = Isometry::identity();
    for (int i = 0; i < length; ++i) M = M * pool[pick(rng)];
    return M;
}

} // namespace

TEST_CASE("hermitian form on basis vectors") {
    CHECK(herm(basis(0), basis(0)) == Eisenstein(-1, 0));
    CHECK(herm(basis(1), basis(1)) == kOne);
    CHECK(herm(basis(0), basis(1)) == Eisenstein(0, 0));

    std::mt19937_64 rng(20260810);
    for (int t = 0; t < 200; ++t) {
        const LatticeVector v = random_vector(rng);
        const LatticeVector w = random_vector(rng);
        CHECK(herm(w, v) == conj(herm(v, w)));
        CHECK(herm(v, v).b == 0); // h(v,v) is a rational integer
        // Linearity in the first slot: h(v+w, u) = h(v,u) + h(w,u).
        const LatticeVector u = random_vector(rng);
        LatticeVector vw;
        for (std::size_t k = 0; k < 5; ++k) vw[k] = v[k] + w[k];
        CHECK(herm(vw, u) == herm(v, u) + herm(w, u));
        // Conjugate-linearity in the second: h(u, omega*v) = conj(omega) h(u,v).
        LatticeVector ov;
        for (std::size_t k = 0; k < 5; ++k) ov[k] = kOmega * v[k];
        CHECK(herm(u, ov) == kOmegaSq * herm(u, v));
    }
}

TEST_CASE("signature and self-duality") {
    CHECK(cubix::signature() == std::pair<int, int>(4, 1));
    CHECK(cubix::verify_self_dual());

    using Gram = std::vector<std::vector<Eisenstein>>;
    auto diag = [](std::vector<std::int64_t> d) {
        Gram g(d.size(), std::vector<Eisenstein>(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i) g[i][i] = Eisenstein(d[i], 0);
        return g;
    };
    CHECK(cubix::gram_determinant(diag({-1, 1, 1, 1, 1})) == Eisenstein(-1, 0));
    CHECK(cubix::is_unimodular_gram(diag({1})));
    CHECK_FALSE(cubix::is_unimodular_gram(diag({-1, 1, 1, 1, 3})));
    // Hyperbolic plane: det = -1, unimodular without being diagonal.
    Gram hyp(2, std::vector<Eisenstein>(2));
    hyp[0][1] = kOne;
    hyp[1][0] = kOne;
    CHECK(cubix::gram_determinant(hyp) == Eisenstein(-1, 0));
    CHECK(cubix::is_unimodular_gram(hyp));

    std::mt19937_64 rng(20260811);
    std::uniform_int_distribution<std::int64_t> d(-4, 4);
    for (int t = 0; t < 100; ++t) {
        Gram g(2, std::vector<Eisenstein>(2));
        for (auto& row : g)
            for (auto& x : row) x = Eisenstein(d(rng), d(rng));
        CHECK(cubix::gram_determinant(g) == g[0][0] * g[1][1] - g[0][1] * g[1][0]);
    }
}

TEST_CASE("triflection in a norm-1 basis vector") {
    const Isometry R = cubix::reflection(basis(1), kOmega);
    Isometry expected = Isometry::identity();
    expected.at(1, 1) = kOmega;
    CHECK(R == expected);

    LatticeVector wg2{};
    wg2[1] = kOmega;
    CHECK(R * basis(1) == wg2);
    CHECK(R * basis(0) == basis(0));
    CHECK(R * R * R == Isometry::identity());
    CHECK(cubix::is_isometry(R));
    CHECK(R * cubix::reflection(basis(1), kOmegaSq) == Isometry::identity());

    const Isometry S = cubix::reflection(basis(1), kMinusOne);
    CHECK(S * S == Isometry::identity());
}

TEST_CASE("reflection preconditions") {
    LatticeVector theta_vec{};
    theta_vec[1] = Eisenstein::theta(); // norm 3
    CHECK_THROWS_AS(cubix::reflection(theta_vec, kMinusOne), cubix::BadNorm);
    CHECK_THROWS_AS(cubix::reflection(basis(0), kOmega), cubix::BadNorm); // h = -1

    LatticeVector norm2{};
    norm2[1] = kOne;
    norm2[2] = kOne;
    CHECK(herm(norm2, norm2) == Eisenstein(2, 0));
    CHECK(cubix::is_isometry(cubix::reflection(norm2, kMinusOne)));
    CHECK_THROWS_AS(cubix::reflection(norm2, kOmega), cubix::NonIntegral);

    CHECK_THROWS_AS(cubix::reflection(basis(1), kOne), cubix::NotAnIsometry);
    CHECK_THROWS_AS(cubix::reflection(basis(1), Eisenstein::theta()), cubix::NotAnIsometry);
}

TEST_CASE("reflections preserve the form") {
    std::mt19937_64 rng(20260812);
    const auto& pool = reflection_pool();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int t = 0; t < 100; ++t) {
        const Isometry& R = pool[pick(rng)];
        const LatticeVector v = random_vector(rng);
        const LatticeVector w = random_vector(rng);
        CHECK(herm(R * v, R * w) == herm(v, w));
    }
}

TEST_CASE("isometry algebra") {
    CHECK(cubix::is_isometry(Isometry::identity()));
    CHECK(cubix::is_isometry(Isometry::scalar(kOmega)));
    CHECK_FALSE(cubix::is_isometry(Isometry::scalar(Eisenstein(2, 0))));
    CHECK_FALSE(cubix::is_isometry(Isometry{}));

    CHECK(cubix::reflection(basis(1), kOmega).inverse() ==
          cubix::reflection(basis(1), kOmegaSq));
    CHECK_THROWS_AS(Isometry::scalar(Eisenstein(2, 0)).inverse(), cubix::NotAnIsometry);

    std::mt19937_64 rng(20260813);
    for (int t = 0; t < 50; ++t) {
        const Isometry M = random_isometry(rng);
        CHECK(cubix::is_isometry(M));
        CHECK(M * M.inverse() == Isometry::identity());
        CHECK(M.inverse() * M == Isometry::identity());
    }
}

TEST_CASE("reduction modulo theta") {
    CHECK(cubix::reduce_isometry(Isometry::identity()).is_identity());
    CHECK(cubix::reduce_isometry(cubix::reflection(basis(1), kOmega)).is_identity());

    cubix::F3Vector e2{};
    e2[1] = F3(1);
    CHECK(cubix::reduce_isometry(cubix::reflection(basis(1), kMinusOne)) ==
          cubix::f3_reflection(e2));

    CHECK_THROWS_AS(cubix::reduce_isometry(Isometry{}), cubix::NotAnIsometry);

    std::mt19937_64 rng(20260814);
    for (int t = 0; t < 100; ++t) {
        const Isometry M = random_isometry(rng, 5);
        const Isometry N = random_isometry(rng, 5);
        CHECK(cubix::reduce_isometry(M * N) ==
              cubix::reduce_isometry(M) * cubix::reduce_isometry(N));
        CHECK(preserves_q(cubix::reduce_isometry(M)));
    }
}

TEST_CASE("reduction is compatible with the quadratic form") {
    std::mt19937_64 rng(20260815);
    for (int t = 0; t < 1000; ++t) {
        const LatticeVector v = random_vector(rng);
        const LatticeVector w = random_vector(rng);
        CHECK(q_value(cubix::reduce_vector(v)) == reduce_mod_theta(herm(v, v)));
        // Polarization: B(rv, rw) = 2^{-1} (h(v,w) + h(w,v)) mod theta.
        CHECK(bilinear(cubix::reduce_vector(v), cubix::reduce_vector(w)) ==
              F3(2) * reduce_mod_theta(herm(v, w) + herm(w, v)));
    }
}

TEST_CASE("membership in the reflection-group kernel") {
    CHECK(cubix::in_gamma0(cubix::reflection(basis(1), kOmega)));
    CHECK_FALSE(cubix::in_gamma0(cubix::reflection(basis(1), kMinusOne)));
    CHECK(cubix::in_gamma0(Isometry::scalar(kOmega)));
    CHECK(cubix::in_gamma0(Isometry::scalar(kMinusOne)));

    // Normal-subgroup predicate: conjugates of kernel elements stay inside.
    std::mt19937_64 rng(20260816);
    for (int t = 0; t < 100; ++t) {
        const Isometry A = random_isometry(rng, 6);
        const auto norm1 = cubix::enumerate_vectors(1, 1);
        std::uniform_int_distribution<std::size_t> pick(0, norm1.size() - 1);
        const Isometry K = cubix::reflection(norm1[pick(rng)], kOmega);
        REQUIRE(cubix::in_gamma0(K));
        CHECK(cubix::in_gamma0(A * K * A.inverse()));
    }
}

TEST_CASE("vector enumeration") {
    const auto unit_norm = cubix::enumerate_vectors(1, 1);
    CHECK(unit_norm.size() == 220);

    LatticeVector g2 = basis(1);
    CHECK(std::binary_search(unit_norm.begin(), unit_norm.end(),
                             cubix::canonical_unit_rep(g2)));
    LatticeVector v111{};
    v111[0] = v111[1] = v111[2] = kOne;
    CHECK(std::binary_search(unit_norm.begin(), unit_norm.end(),
                             cubix::canonical_unit_rep(v111)));

    const auto null_h1 = cubix::enumerate_vectors(0, 1);
    CHECK(null_h1.size() == 24);
    LatticeVector v110{};
    v110[0] = v110[1] = kOne;
    CHECK(std::binary_search(null_h1.begin(), null_h1.end(),
                             cubix::canonical_unit_rep(v110)));

    CHECK(cubix::enumerate_vectors(2, 1).size() == 900);

    for (const auto& list : {unit_norm, null_h1}) {
        CHECK(std::is_sorted(list.begin(), list.end()));
        CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
        for (const auto& v : list) {
            CHECK(cubix::canonical_unit_rep(v) == v);
            for (const auto& x : v) CHECK(norm(x) <= 1);
            // Each class carries exactly six representatives.
            std::set<LatticeVector> orbit;
            for (const auto& u : cubix::eisenstein_units()) {
                LatticeVector w;
                for (std::size_t k = 0; k < 5; ++k) w[k] = u * v[k];
                orbit.insert(w);
            }
            CHECK(orbit.size() == 6);
        }
    }
    for (const auto& v : unit_norm) CHECK(herm(v, v) == kOne);
    for (const auto& v : null_h1) CHECK(herm(v, v) == Eisenstein(0, 0));

    // Job count must not change the result.
    CHECK(cubix::enumerate_vectors(1, 1, 3) == unit_norm);
    CHECK(cubix::enumerate_vectors(0, 1, 4) == null_h1);
}

TEST_CASE("enumeration at the wider height bound") {
    const auto null_h4 = cubix::enumerate_vectors(0, 4);
    CHECK(null_h4.size() == 2664);
    // Reductions of the primitive ones hit all 40 null points.
    std::set<cubix::F3Vector> classes;
    int imprimitive = 0;
    for (const auto& v : null_h4) {
        const cubix::F3Vector r = cubix::reduce_vector(v);
        bool zero = true;
        for (const auto& c : r) zero = zero && c.is_zero();
        if (zero) {
            ++imprimitive;
            continue;
        }
        classes.insert(cubix::projective_canonical(r));
    }
    CHECK(classes.size() == 40);
    CHECK(imprimitive == 24);
}

TEST_CASE("vector text format") {
    LatticeVector v{};
    v[0] = Eisenstein(1, 2);
    v[1] = Eisenstein(0, -1);
    v[4] = Eisenstein(-3, 0);
    CHECK(cubix::to_string(v) == "[1+2w, -w, 0, 0, -3]");
    CHECK(cubix::parse_lattice_vector("[1+2w, -w, 0, 0, -3]") == v);
    CHECK(cubix::parse_lattice_vector("[ 1 + 2w , -w , 0 , 0 , -3 ]") == v);
    CHECK_THROWS_AS(cubix::parse_lattice_vector("1, 2, 3, 4, 5"), cubix::ParseError);
    CHECK_THROWS_AS(cubix::parse_lattice_vector("[1, 2, 3]"), cubix::ParseError);
    CHECK_THROWS_AS(cubix::parse_lattice_vector("[1, 2, 3, 4, 5, 6]"), cubix::ParseError);

    std::mt19937_64 rng(20260817);
    for (int t = 0; t < 200; ++t) {
        const LatticeVector w = random_vector(rng, 30);
        CHECK(cubix::parse_lattice_vector(cubix::to_string(w)) == w);
    }
}

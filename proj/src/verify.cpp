#include "cubix/verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "cubix/ball.hpp"
#include "cubix/hermitian.hpp"
#include "cubix/milnor.hpp"

namespace cubix {

bool SuiteResult::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.passed; });
}

namespace {

class Suite {
public:
    explicit Suite(std::string name) { result_.suite = std::move(name); }

    void check(const std::string& name, bool passed, const std::string& detail = "") {
        result_.checks.push_back({name, passed, detail});
    }

    template <typename T, typename U>
    void equals(const std::string& name, const T& actual, const U& expected) {
        std::ostringstream os;
        const bool passed = actual == static_cast<T>(expected);
        if (!passed) os << "expected " << expected << ", got " << actual;
        check(name, passed, os.str());
    }

    void near(const std::string& name, double actual, double expected, double tol) {
        std::ostringstream os;
        const bool passed = std::abs(actual - expected) <= tol;
        if (!passed)
            os << "expected " << expected << " within " << tol << ", got " << actual;
        check(name, passed, os.str());
    }

    void count(const std::string& key, std::int64_t value) {
        result_.counts[key] = value;
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

const Eisenstein kOmega(0, 1);
const Eisenstein kMinusOne(-1, 0);

LatticeVector basis_vector(int k) {
    LatticeVector v{};
    v[static_cast<std::size_t>(k)] = Eisenstein(1, 0);
    return v;
}

std::vector<Isometry> reflection_pool() {
    std::vector<Isometry> pool;
    for (const auto& v : enumerate_vectors(1, 1)) {
        pool.push_back(reflection(v, kOmega));
        pool.push_back(reflection(v, kMinusOne));
    }
    for (const auto& v : enumerate_vectors(2, 1)) pool.push_back(reflection(v, kMinusOne));
    return pool;
}

Isometry random_word(const std::vector<Isometry>& pool, std::mt19937_64& rng,
                     int length) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    Isometry M = Isometry::identity();
    for (int i = 0; i < length; ++i) M = M * pool[pick(rng)];
    return M;
}

SuiteResult run_lattice(const VerifyContext& ctx) {
    Suite s("lattice");

    s.check("signature is (4,1)", signature() == std::make_pair(4, 1));
    s.check("standard lattice is self-dual", verify_self_dual());

    const Isometry tri = reflection(basis_vector(1), kOmega);
    s.check("triflection cubes to the identity", tri * tri * tri == Isometry::identity());
    s.check("triflection is congruent to a scalar mod theta", in_gamma0(tri));
    const Isometry invol = reflection(basis_vector(1), kMinusOne);
    s.check("order-2 reflection squares to the identity",
            invol * invol == Isometry::identity());
    s.check("order-2 reflection is not in the kernel subgroup", !in_gamma0(invol));

    const auto pool = reflection_pool();
    std::mt19937_64 rng(20260850);
    bool conjugation_stable = true;
    for (int t = 0; t < 25 && conjugation_stable; ++t) {
        const Isometry w = random_word(pool, rng, 6);
        conjugation_stable = in_gamma0(w * tri * w.inverse());
    }
    s.check("kernel subgroup is stable under 25 random conjugations",
            conjugation_stable);

    const auto norm1 = enumerate_vectors(1, 1, ctx.jobs);
    const auto norm0 = enumerate_vectors(0, 1, ctx.jobs);
    const auto norm2 = enumerate_vectors(2, 1, ctx.jobs);
    s.equals("norm-1 classes at height 1", norm1.size(), 220u);
    s.equals("null classes at height 1", norm0.size(), 24u);
    s.equals("norm-2 classes at height 1", norm2.size(), 900u);
    s.count("norm1_height1", static_cast<std::int64_t>(norm1.size()));
    s.count("norm0_height1", static_cast<std::int64_t>(norm0.size()));
    s.count("norm2_height1", static_cast<std::int64_t>(norm2.size()));

    bool reductions_preserve_q = true;
    for (int t = 0; t < 25 && reductions_preserve_q; ++t)
        reductions_preserve_q = preserves_q(reduce_isometry(random_word(pool, rng, 5)));
    s.check("isometry reductions preserve the finite form (25 random words)",
            reductions_preserve_q);

    return s.take();
}

SuiteResult run_finite(const VerifyContext& ctx) {
    Suite s("finite");

    std::optional<GroupEnumeration> computed;
    const GroupEnumeration& O =
        ctx.orthogonal ? *ctx.orthogonal : computed.emplace(orthogonal_group());

    s.equals("orthogonal group order", O.order(), 103680u);
    s.equals("projective order", O.projective_order(), 51840u);

    const auto nulls = null_points();
    s.equals("projective null points", nulls.size(), 40u);
    const auto split = nonisotropic_split();
    s.equals("points with q=1", split.first, 36);
    s.equals("points with q=2", split.second, 45);
    s.equals("projective point classes", 40 + split.first + split.second, 121);

    std::set<std::uint64_t> distinct;
    bool reflections_in_group = true;
    for (const auto& v : nonisotropic_points()) {
        const F3Matrix R = f3_reflection(v);
        distinct.insert(pack(R));
        reflections_in_group = reflections_in_group && O.contains(R) &&
                               (R * R).is_identity() && preserves_q(R);
    }
    s.equals("distinct reflections", distinct.size(), 81u);
    s.check("every reflection is an involution inside the group",
            reflections_in_group);

    bool all_preserve = true;
    for (const auto key : O.elements)
        if (!preserves_q(unpack(key))) {
            all_preserve = false;
            break;
        }
    s.check("every group element preserves q", all_preserve);

    s.count("null_points", static_cast<std::int64_t>(nulls.size()));
    s.count("order", static_cast<std::int64_t>(O.order()));
    s.count("projective_order", static_cast<std::int64_t>(O.projective_order()));
    s.count("q1_points", split.first);
    s.count("q2_points", split.second);
    return s.take();
}

SuiteResult run_weyl(const VerifyContext& ctx) {
    Suite s("weyl");

    std::optional<WeylGroup> computed_w;
    const WeylGroup& W = ctx.weyl ? *ctx.weyl : computed_w.emplace(weyl_group());
    std::optional<GroupEnumeration> computed_o;
    const GroupEnumeration& O =
        ctx.orthogonal ? *ctx.orthogonal : computed_o.emplace(orthogonal_group());

    s.equals("Weyl group order", W.order(), 51840u);
    s.equals("roots", roots().size(), 72u);
    s.equals("lines", lines().size(), 27u);
    s.equals("tritangent planes", tritangents().size(), 45u);
    s.equals("double sixes", double_sixes().size(), 36u);
    s.equals("sixers", sixers().size(), 72u);

    // Skew-line graph is strongly regular (27,16,10,8).
    bool srg = true;
    const auto& L = lines();
    for (int i = 0; i < 27 && srg; ++i) {
        int deg = 0;
        for (int j = 0; j < 27; ++j)
            if (j != i && !incidence(L[static_cast<std::size_t>(i)],
                                     L[static_cast<std::size_t>(j)]))
                ++deg;
        srg = deg == 16;
    }
    s.check("skew graph is 16-regular", srg);

    const Mod3Map map = mod3_map(W);
    s.equals("simple-root Gram determinant", map.gram_det, 3);
    s.equals("radical dimension", map.radical_dimension, 1);
    s.equals("form scale", map.scale, 1);
    s.equals("image order", map.image.order(), 51840u);
    s.check("image avoids -I", !map.contains_minus_identity);
    s.check("reduction map is injective", map.injective);
    s.equals("image order equals projective orthogonal order", map.image.order(),
             O.projective_order());

    std::mt19937_64 rng(20260851);
    std::uniform_int_distribution<std::size_t> pick(0, W.order() - 1);
    bool hom = true;
    for (int t = 0; t < 40 && hom; ++t) {
        const WeylElement a = W.element(pick(rng));
        const WeylElement b = W.element(pick(rng));
        const MarkingMatrix ab = mat_mul(a.matrix, b.matrix);
        hom = map.push(ab) == map.push(a) * map.push(b) && O.contains(map.push(ab));
    }
    s.check("reduction is a homomorphism into the orthogonal group (40 samples)",
            hom);

    s.count("weyl_order", static_cast<std::int64_t>(W.order()));
    s.count("po_order", static_cast<std::int64_t>(O.projective_order()));
    s.count("roots", 72);
    s.count("lines", 27);
    s.count("tritangents", 45);
    s.count("double_sixes", 36);
    return s.take();
}

SuiteResult run_ball(const VerifyContext& ctx) {
    Suite s("ball");
    const double two_ln2 = 2.0 * std::log(2.0);

    const BallPoint c = center();
    const BallPoint p = make_point({1.0, 0.6, 0.0, 0.0, 0.0});
    s.near("distance from the center to the reference point is 2 ln 2",
           dist(c, p), two_ln2, 1e-10);

    const auto n2 = make_normal(basis_vector(1));
    s.near("gap from the reference point to the mirror is 2 ln 2",
           hyperplane_gap(p, n2), two_ln2, 1e-10);
    s.near("the center lies on the mirror", hyperplane_gap(c, n2), 0.0, 1e-12);

    std::mt19937_64 rng(20260852);
    std::uniform_real_distribution<double> coord(-0.2, 0.2);
    const auto rand_point = [&] {
        ComplexVector raw{};
        raw[0] = 1.0;
        for (std::size_t k = 1; k < 5; ++k) raw[k] = Complex(coord(rng), coord(rng));
        return make_point(raw);
    };

    bool triangle = true;
    for (int t = 0; t < 300 && triangle; ++t) {
        const BallPoint x = rand_point(), y = rand_point(), z = rand_point();
        triangle = dist(x, z) <=
                   dist(x, y) + dist(y, z) + tolerances::kTriangleSlack;
    }
    s.check("triangle inequality on 300 random triples", triangle);

    const auto pool = reflection_pool();
    const auto norm1 = enumerate_vectors(1, 1);
    std::uniform_int_distribution<std::size_t> pick(0, norm1.size() - 1);
    bool invariant = true;
    for (int t = 0; t < 50 && invariant; ++t) {
        const Isometry M = random_word(pool, rng, 4);
        const BallPoint x = rand_point(), y = rand_point();
        invariant = std::abs(dist(apply(M, x), apply(M, y)) - dist(x, y)) <=
                    tolerances::kInvariance;
        if (invariant) {
            const LatticeVector v = norm1[pick(rng)];
            invariant = std::abs(hyperplane_gap(apply(M, x), make_normal(M * v)) -
                                 hyperplane_gap(x, make_normal(v))) <=
                        tolerances::kInvariance;
        }
    }
    s.check("metric and gaps are invariant under 50 random words", invariant);

    s.check("the center lies on a height-1 mirror",
            in_arrangement(c, 1).has_value());

    std::set<F3Vector> classes;
    int imprimitive = 0;
    for (const auto& v : enumerate_vectors(0, 4, ctx.jobs)) {
        try {
            classes.insert(cusp_class(v));
        } catch (const Imprimitive&) {
            ++imprimitive;
        }
    }
    s.equals("cusp classes covered by height-4 null vectors", classes.size(), 40u);
    s.equals("imprimitive height-4 null vectors", imprimitive, 24);

    s.count("cusp_classes", static_cast<std::int64_t>(classes.size()));
    s.count("imprimitive_null_vectors", imprimitive);
    return s.take();
}

SuiteResult run_milnor(const VerifyContext&) {
    Suite s("milnor");

    const auto nodal = monodromy_eigenvalues({2, 2, 2, 3});
    s.equals("nodal threefold Milnor number", milnor_number({2, 2, 2, 3}), 2);
    s.check("nodal threefold eigenvalues are the primitive sixth roots",
            nodal == std::vector<RootOfUnity>{{1, 6}, {5, 6}});
    s.equals("nodal threefold monodromy order", monodromy_order({2, 2, 2, 3}), 6);

    const auto node = monodromy_eigenvalues({2, 2, 2});
    s.check("ordinary node eigenvalue is -1",
            node == std::vector<RootOfUnity>{{1, 2}});
    s.equals("ordinary node monodromy order", monodromy_order({2, 2, 2}), 2);

    s.equals("A2xA2 Milnor number", milnor_number({2, 2, 3, 3}), 4);
    s.equals("A2xA2 monodromy order", monodromy_order({2, 2, 3, 3}), 3);

    bool structural = true;
    for (std::int64_t a = 2; a <= 5 && structural; ++a)
        for (std::int64_t b = 2; b <= 5 && structural; ++b) {
            const ExponentVector e = {a, b, 2};
            const auto eigs = monodromy_eigenvalues(e);
            structural =
                static_cast<std::int64_t>(eigs.size()) == milnor_number(e);
            if (structural) {
                auto conj = eigs;
                for (auto& z : conj) z = z.conj();
                std::sort(conj.begin(), conj.end());
                structural = conj == eigs;
            }
        }
    s.check("eigenvalue multisets have size mu and close under conjugation",
            structural);

    s.count("mu_2223", 2);
    s.count("order_2223", 6);
    s.count("mu_222", 1);
    s.count("order_222", 2);
    return s.take();
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"lattice", "finite", "weyl",
                                                   "ball", "milnor"};
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyContext& ctx) {
    if (name == "lattice") return run_lattice(ctx);
    if (name == "finite") return run_finite(ctx);
    if (name == "weyl") return run_weyl(ctx);
    if (name == "ball") return run_ball(ctx);
    if (name == "milnor") return run_milnor(ctx);
    throw Error("unknown verification suite: " + name);
}

} // namespace cubix

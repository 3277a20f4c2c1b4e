#include "cubix/e6_weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "cubix/hermitian.hpp"

namespace cubix {

std::int64_t dot(const MarkingVector& u, const MarkingVector& v) {
    std::int64_t s = u[0] * v[0];
    for (std::size_t k = 1; k < 7; ++k) s -= u[k] * v[k];
    return s;
}

MarkingVector eta() { return {3, -1, -1, -1, -1, -1, -1}; }

bool is_root(const MarkingVector& v) { return dot(v, v) == -2 && dot(v, eta()) == 0; }

bool is_line(const MarkingVector& v) { return dot(v, v) == -1 && dot(v, eta()) == 1; }

namespace {

// Box bounds for the exhaustive searches.  A root r has 3r0 = sum r_k and
// r0^2 - sum r_k^2 = -2, so by Cauchy-Schwarz 9r0^2 <= 6(r0^2 + 2), giving
// |r0| <= 2 and then r_k^2 <= sum r_k^2 = r0^2 + 2 <= 6, |r_k| <= 2.  A line
// e has sum e_k = 3e0 - 1 and sum e_k^2 = e0^2 + 1, so (3e0-1)^2 <= 6(e0^2+1)
// forces e0 in {0,1,2} and |e_k| <= 2.  Hence [-2,2]^7 suffices for both.
template <typename Pred>
std::vector<MarkingVector> box_search(Pred&& pred) {
    std::vector<MarkingVector> out;
    MarkingVector v;
    const auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == 7) {
            if (pred(v)) out.push_back(v);
            return;
        }
        for (std::int64_t c = -2; c <= 2; ++c) {
            v[depth] = c;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

const std::vector<MarkingVector>& roots() {
    static const std::vector<MarkingVector> cache = box_search(is_root);
    return cache;
}

const std::vector<MarkingVector>& lines() {
    static const std::vector<MarkingVector> cache = box_search(is_line);
    return cache;
}

int line_index(const MarkingVector& e) {
    const auto& all = lines();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == e) return static_cast<int>(i);
    throw NotALine("not one of the 27 lines");
}

bool incidence(const MarkingVector& e, const MarkingVector& f) {
    if (!is_line(e) || !is_line(f)) throw NotALine("incidence is defined on lines only");
    if (e == f) throw NotALine("incidence requires two distinct lines");
    return dot(e, f) == 1;
}

std::vector<std::array<int, 3>> tritangents() {
    const auto& L = lines();
    const MarkingVector target = eta();
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < 27; ++i)
        for (int j = i + 1; j < 27; ++j) {
            if (dot(L[static_cast<std::size_t>(i)], L[static_cast<std::size_t>(j)]) != 1)
                continue;
            for (int k = j + 1; k < 27; ++k) {
                const auto& a = L[static_cast<std::size_t>(i)];
                const auto& b = L[static_cast<std::size_t>(j)];
                const auto& c = L[static_cast<std::size_t>(k)];
                if (dot(a, c) != 1 || dot(b, c) != 1) continue;
                bool sums = true;
                for (std::size_t t = 0; t < 7; ++t)
                    sums = sums && a[t] + b[t] + c[t] == target[t];
                if (sums) out.push_back({i, j, k});
            }
        }
    return out;
}

namespace {

std::array<std::array<bool, 27>, 27> skew_table() {
    std::array<std::array<bool, 27>, 27> skew{};
    const auto& L = lines();
    for (int i = 0; i < 27; ++i)
        for (int j = 0; j < 27; ++j)
            skew[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                i != j &&
                dot(L[static_cast<std::size_t>(i)], L[static_cast<std::size_t>(j)]) == 0;
    return skew;
}

} // namespace

std::vector<std::array<int, 6>> sixers() {
    const auto skew = skew_table();
    std::vector<std::array<int, 6>> out;
    std::array<int, 6> clique{};
    const auto rec = [&](auto&& self, int depth, int next) -> void {
        if (depth == 6) {
            out.push_back(clique);
            return;
        }
        for (int c = next; c < 27; ++c) {
            bool ok = true;
            for (int t = 0; t < depth; ++t)
                ok = ok && skew[static_cast<std::size_t>(clique[static_cast<std::size_t>(t)])]
                               [static_cast<std::size_t>(c)];
            if (!ok) continue;
            clique[static_cast<std::size_t>(depth)] = c;
            self(self, depth + 1, c + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<std::array<std::array<int, 6>, 2>> double_sixes() {
    const auto six = sixers();
    const auto& L = lines();
    std::vector<std::array<std::array<int, 6>, 2>> out;
    for (std::size_t a = 0; a < six.size(); ++a)
        for (std::size_t b = a + 1; b < six.size(); ++b) {
            bool disjoint = true;
            for (int x : six[a])
                for (int y : six[b]) disjoint = disjoint && x != y;
            if (!disjoint) continue;
            // Crosswise pattern: each line of A meets exactly 5 of B.
            bool pattern = true;
            for (int x : six[a]) {
                int met = 0;
                for (int y : six[b])
                    if (dot(L[static_cast<std::size_t>(x)], L[static_cast<std::size_t>(y)]) == 1)
                        ++met;
                pattern = pattern && met == 5;
            }
            if (pattern) out.push_back({six[a], six[b]});
        }
    return out;
}

MarkingMatrix identity_matrix() {
    MarkingMatrix m{};
    for (std::size_t i = 0; i < 7; ++i) m[i][i] = 1;
    return m;
}

MarkingMatrix mat_mul(const MarkingMatrix& a, const MarkingMatrix& b) {
    MarkingMatrix r{};
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < 7; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

MarkingVector mat_apply(const MarkingMatrix& m, const MarkingVector& v) {
    MarkingVector r{};
    for (std::size_t i = 0; i < 7; ++i) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < 7; ++k) s += m[i][k] * v[k];
        r[i] = s;
    }
    return r;
}

bool preserves_dot(const MarkingMatrix& m) {
    // Columns are the images of the basis; check all pairwise dots.
    std::array<MarkingVector, 7> cols;
    for (std::size_t j = 0; j < 7; ++j)
        for (std::size_t i = 0; i < 7; ++i) cols[j][i] = m[i][j];
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            const std::int64_t expect = i != j ? 0 : (i == 0 ? 1 : -1);
            if (dot(cols[i], cols[j]) != expect) return false;
        }
    return true;
}

bool fixes_eta(const MarkingMatrix& m) { return mat_apply(m, eta()) == eta(); }

MarkingMatrix reflection_matrix(const MarkingVector& root) {
    if (!is_root(root))
        throw BadNorm("reflection requires a root: dot(r,r) = -2 and r orthogonal to eta");
    MarkingMatrix m{};
    for (std::size_t j = 0; j < 7; ++j) {
        MarkingVector ej{};
        ej[j] = 1;
        const std::int64_t c = dot(ej, root);
        for (std::size_t i = 0; i < 7; ++i) m[i][j] = ej[i] + c * root[i];
    }
    return m;
}

LinePerm identity_perm() {
    LinePerm p{};
    for (std::size_t i = 0; i < 27; ++i) p[i] = static_cast<std::uint8_t>(i);
    return p;
}

LinePerm compose(const LinePerm& a, const LinePerm& b) {
    LinePerm r{};
    for (std::size_t i = 0; i < 27; ++i) r[i] = a[b[i]];
    return r;
}

LinePerm perm_of_matrix(const MarkingMatrix& m) {
    if (!preserves_dot(m) || !fixes_eta(m))
        throw NotAnIsometry("matrix does not preserve the form and fix eta");
    LinePerm p{};
    std::array<bool, 27> hit{};
    const auto& L = lines();
    for (std::size_t i = 0; i < 27; ++i) {
        const MarkingVector img = mat_apply(m, L[i]);
        const int idx = line_index(img);
        p[i] = static_cast<std::uint8_t>(idx);
        if (hit[static_cast<std::size_t>(idx)])
            throw NotAnIsometry("line images collide; matrix is singular on lines");
        hit[static_cast<std::size_t>(idx)] = true;
    }
    return p;
}

MarkingMatrix matrix_of_perm(const LinePerm& p) {
    const auto& L = lines();
    MarkingMatrix m{};
    // Columns 1..6 are the images of the basis lines e1..e6.
    MarkingVector sum = eta();
    for (std::size_t k = 1; k < 7; ++k) {
        MarkingVector ek{};
        ek[k] = 1;
        const std::size_t idx = static_cast<std::size_t>(line_index(ek));
        if (p[idx] >= 27) throw NotAnIsometry("permutation symbol out of range");
        const MarkingVector img = L[p[idx]];
        for (std::size_t i = 0; i < 7; ++i) {
            m[i][k] = img[i];
            sum[i] += img[i];
        }
    }
    // e0 = (eta + e1 + ... + e6)/3 and the image fixes eta.
    for (std::size_t i = 0; i < 7; ++i) {
        if (sum[i] % 3 != 0)
            throw NotAnIsometry("permutation is not induced by a lattice isometry");
        m[i][0] = sum[i] / 3;
    }
    if (perm_of_matrix(m) != p)
        throw NotAnIsometry("permutation is not induced by a lattice isometry");
    return m;
}

bool WeylGroup::contains(const LinePerm& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

WeylElement WeylGroup::element(std::size_t i) const {
    return {elements[i], matrix_of_perm(elements[i])};
}

namespace {

struct PermHash {
    std::size_t operator()(const LinePerm& p) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint8_t c : p) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

std::vector<LinePerm> reflection_perms() {
    std::set<LinePerm> gens;
    for (const auto& r : roots()) gens.insert(perm_of_matrix(reflection_matrix(r)));
    return {gens.begin(), gens.end()};
}

} // namespace

WeylGroup weyl_group(std::size_t cap) {
    const std::vector<LinePerm> gens = reflection_perms();
    std::unordered_set<LinePerm, PermHash> seen;
    std::deque<LinePerm> frontier;
    seen.insert(identity_perm());
    frontier.push_back(identity_perm());
    for (const auto& g : gens)
        if (seen.insert(g).second) frontier.push_back(g);

    while (!frontier.empty()) {
        const LinePerm x = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            const LinePerm y = compose(x, g);
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    throw ResourceCap("group closure exceeded cap of " +
                                      std::to_string(cap) + " elements");
                frontier.push_back(y);
            }
        }
    }

    WeylGroup W;
    W.elements.assign(seen.begin(), seen.end());
    std::sort(W.elements.begin(), W.elements.end());
    return W;
}

namespace {

// Exact integer determinant, reusing the ring-exact expansion.
std::int64_t int_determinant(const std::vector<std::vector<std::int64_t>>& m) {
    std::vector<std::vector<Eisenstein>> g(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::int64_t x : m[i]) g[i].push_back(Eisenstein(x, 0));
    return gram_determinant(g).a;
}

using F3Vec6 = std::array<F3, 6>;
using F3Mat6 = std::array<F3Vec6, 6>;

// Kernel basis of a 6x6 matrix over F3 by Gauss-Jordan elimination.
std::vector<F3Vec6> kernel6(F3Mat6 m) {
    std::array<int, 6> pivot_col{};
    int rank = 0;
    for (int col = 0; col < 6 && rank < 6; ++col) {
        int piv = -1;
        for (int r = rank; r < 6; ++r)
            if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(rank)]);
        const F3 inv = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)].inverse();
        for (auto& x : m[static_cast<std::size_t>(rank)]) x = inv * x;
        for (int r = 0; r < 6; ++r) {
            if (r == rank) continue;
            const F3 f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int c = 0; c < 6; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                    f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        }
        pivot_col[static_cast<std::size_t>(rank)] = col;
        ++rank;
    }

    std::vector<bool> is_pivot(6, false);
    for (int r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = true;
    std::vector<F3Vec6> basis;
    for (int free = 0; free < 6; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        F3Vec6 v{};
        v[static_cast<std::size_t>(free)] = F3(1);
        for (int r = 0; r < rank; ++r)
            v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
                -m[static_cast<std::size_t>(r)][static_cast<std::size_t>(free)];
        basis.push_back(v);
    }
    return basis;
}

F3Matrix invert5(const F3Matrix& a) {
    F3Matrix m = a;
    F3Matrix inv = F3Matrix::identity();
    for (int col = 0; col < 5; ++col) {
        int piv = -1;
        for (int r = col; r < 5; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw IsometryNotFound("quotient isometry matrix is singular");
        std::swap(m.m[static_cast<std::size_t>(piv)], m.m[static_cast<std::size_t>(col)]);
        std::swap(inv.m[static_cast<std::size_t>(piv)], inv.m[static_cast<std::size_t>(col)]);
        const F3 s = m.at(col, col).inverse();
        for (int c = 0; c < 5; ++c) {
            m.at(col, c) = s * m.at(col, c);
            inv.at(col, c) = s * inv.at(col, c);
        }
        for (int r = 0; r < 5; ++r) {
            if (r == col) continue;
            const F3 f = m.at(r, col);
            if (f.is_zero()) continue;
            for (int c = 0; c < 5; ++c) {
                m.at(r, c) = m.at(r, c) - f * m.at(col, c);
                inv.at(r, c) = inv.at(r, c) - f * inv.at(col, c);
            }
        }
    }
    return inv;
}

F3Vector nth_vector(int n) {
    F3Vector v;
    for (int i = 4; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = F3(n % 3);
        n /= 3;
    }
    return v;
}

} // namespace

F3Matrix Mod3Map::push(const MarkingMatrix& weyl_matrix) const {
    // Express the action on eta-perp in simple-root coordinates:
    // d[i][j] = dot(alpha_i, M alpha_j) and c = adj(C) d / det(C).
    std::array<std::array<std::int64_t, 6>, 6> d{};
    for (std::size_t j = 0; j < 6; ++j) {
        const MarkingVector img = mat_apply(weyl_matrix, simple_roots[j]);
        for (std::size_t i = 0; i < 6; ++i) d[i][j] = dot(simple_roots[i], img);
    }
    std::array<std::array<F3, 6>, 6> reduced{};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < 6; ++k) s += adjugate[i][k] * d[k][j];
            if (s % gram_det != 0)
                throw Error("internal: Weyl action is not integral on the root basis");
            reduced[i][j] = F3(s / gram_det);
        }

    // The radical must be preserved (the action respects the form mod 3).
    F3Vec6 rad_img{};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t k = 0; k < 6; ++k)
            rad_img[i] = rad_img[i] + reduced[i][k] * radical[k];
    const F3 lambda = rad_img[static_cast<std::size_t>(pivot)];
    for (std::size_t i = 0; i < 6; ++i)
        if (rad_img[i] != lambda * radical[i])
            throw Error("internal: radical not preserved by reduced Weyl action");

    // Quotient to the five non-pivot coordinates, then conjugate by T.
    F3Matrix a5;
    int jq = 0;
    for (int j = 0; j < 6; ++j) {
        if (j == pivot) continue;
        F3Vec6 w{};
        for (std::size_t i = 0; i < 6; ++i) w[i] = reduced[i][static_cast<std::size_t>(j)];
        const F3 wp = w[static_cast<std::size_t>(pivot)];
        for (std::size_t i = 0; i < 6; ++i) w[i] = w[i] - wp * radical[i];
        int iq = 0;
        for (int i = 0; i < 6; ++i) {
            if (i == pivot) continue;
            a5.at(iq, jq) = w[static_cast<std::size_t>(i)];
            ++iq;
        }
        ++jq;
    }

    const F3Matrix out = iso * a5 * iso_inv;
    if (!preserves_q(out)) throw Error("internal: pushed matrix fails to preserve q");
    return out;
}

Mod3Map mod3_map(const WeylGroup& group) {
    Mod3Map map;
    // Simple roots: e1-e2, ..., e5-e6 and e0-e1-e2-e3.
    for (std::size_t i = 0; i < 5; ++i) {
        MarkingVector v{};
        v[i + 1] = 1;
        v[i + 2] = -1;
        map.simple_roots[i] = v;
    }
    map.simple_roots[5] = {1, -1, -1, -1, 0, 0, 0};

    std::vector<std::vector<std::int64_t>> gram_rows(6, std::vector<std::int64_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            map.gram[i][j] = dot(map.simple_roots[i], map.simple_roots[j]);
            gram_rows[i][j] = map.gram[i][j];
        }
    map.gram_det = int_determinant(gram_rows);

    // Adjugate via cofactors; gram * adjugate = det * id.
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::vector<std::vector<std::int64_t>> minor;
            for (std::size_t r = 0; r < 6; ++r) {
                if (r == i) continue;
                std::vector<std::int64_t> row;
                for (std::size_t c = 0; c < 6; ++c)
                    if (c != j) row.push_back(gram_rows[r][c]);
                minor.push_back(row);
            }
            const std::int64_t cof = ((i + j) % 2 == 0 ? 1 : -1) * int_determinant(minor);
            map.adjugate[j][i] = cof;
        }
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < 6; ++k) s += map.gram[i][k] * map.adjugate[k][j];
            if (s != (i == j ? map.gram_det : 0))
                throw Error("internal: adjugate identity failed");
        }

    F3Mat6 gram3{};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) gram3[i][j] = F3(map.gram[i][j]);

    const std::vector<F3Vec6> rad = kernel6(gram3);
    map.radical_dimension = static_cast<int>(rad.size());
    if (map.radical_dimension != 1)
        throw IsometryNotFound("radical of the reduced Gram form is not one-dimensional");

    map.radical = rad[0];
    map.pivot = -1;
    for (int i = 0; i < 6; ++i)
        if (!map.radical[static_cast<std::size_t>(i)].is_zero()) {
            map.pivot = i;
            break;
        }
    const F3 scale_fix = map.radical[static_cast<std::size_t>(map.pivot)].inverse();
    for (auto& x : map.radical) x = scale_fix * x;

    std::array<int, 5> idx{};
    {
        int t = 0;
        for (int i = 0; i < 6; ++i)
            if (i != map.pivot) idx[static_cast<std::size_t>(t++)] = i;
    }
    // Source bilinear form on the quotient in the dropped-coordinate basis.
    F3Matrix source;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            source.at(i, j) = gram3[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]
                                   [static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];

    // Backtracking search for T with <T x, T y> = s <x, y>, s in {1,2}.
    map.scale = 0;
    for (int s = 1; s <= 2 && map.scale == 0; ++s) {
        std::array<F3Vector, 5> cols{};
        const auto search = [&](auto&& self, int depth) -> bool {
            if (depth == 5) return true;
            for (int n = 1; n < 243; ++n) {
                const F3Vector w = nth_vector(n);
                if (bilinear(w, w) != F3(s) * source.at(depth, depth)) continue;
                bool ok = true;
                for (int j = 0; j < depth; ++j)
                    ok = ok && bilinear(w, cols[static_cast<std::size_t>(j)]) ==
                                   F3(s) * source.at(depth, j);
                if (!ok) continue;
                cols[static_cast<std::size_t>(depth)] = w;
                if (self(self, depth + 1)) return true;
            }
            return false;
        };
        if (search(search, 0)) {
            map.scale = s;
            for (int j = 0; j < 5; ++j)
                for (int i = 0; i < 5; ++i)
                    map.iso.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
    }
    if (map.scale == 0)
        throw IsometryNotFound("no isometry onto (F_3^5, q) or (F_3^5, 2q) exists");
    map.iso_inv = invert5(map.iso);

    // Push the 36 distinct reflection generators and close them up.
    std::set<MarkingMatrix> gen_matrices;
    for (const auto& r : roots()) gen_matrices.insert(reflection_matrix(r));
    std::vector<F3Matrix> images;
    for (const auto& g : gen_matrices) images.push_back(map.push(g));
    map.image = GroupEnumeration{close_under_products(images)};

    F3Matrix minus_id;
    for (int i = 0; i < 5; ++i) minus_id.at(i, i) = F3(2);
    map.contains_minus_identity = map.image.contains(minus_id);
    map.injective = map.image.order() == group.order();
    return map;
}

} // namespace cubix

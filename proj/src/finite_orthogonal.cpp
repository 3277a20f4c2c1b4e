#include "cubix/finite_orthogonal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace cubix {

namespace {

// Hot-loop representation: entries as raw 0/1/2 bytes, one mod per entry.
using RawMat = std::array<std::uint8_t, 25>;

RawMat to_raw(const F3Matrix& M) {
    RawMat r{};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            r[static_cast<std::size_t>(5 * i + j)] =
                static_cast<std::uint8_t>(M.at(i, j).value());
    return r;
}

F3Matrix from_raw(const RawMat& r) {
    F3Matrix M;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            M.at(i, j) = F3(r[static_cast<std::size_t>(5 * i + j)]);
    return M;
}

RawMat raw_mul(const RawMat& x, const RawMat& y) {
    RawMat r{};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            unsigned s = 0;
            for (int k = 0; k < 5; ++k)
                s += static_cast<unsigned>(x[static_cast<std::size_t>(5 * i + k)]) *
                     y[static_cast<std::size_t>(5 * k + j)];
            r[static_cast<std::size_t>(5 * i + j)] = static_cast<std::uint8_t>(s % 3);
        }
    return r;
}

std::uint64_t raw_pack(const RawMat& r) {
    std::uint64_t key = 0;
    for (int i = 24; i >= 0; --i) key = key * 3 + r[static_cast<std::size_t>(i)];
    return key;
}

// Iterates over all 3^5 vectors in lexicographic order of (v0,...,v4).
template <typename Fn>
void for_each_vector(Fn&& fn) {
    F3Vector v;
    for (int d0 = 0; d0 < 3; ++d0)
        for (int d1 = 0; d1 < 3; ++d1)
            for (int d2 = 0; d2 < 3; ++d2)
                for (int d3 = 0; d3 < 3; ++d3)
                    for (int d4 = 0; d4 < 3; ++d4) {
                        v = {F3(d0), F3(d1), F3(d2), F3(d3), F3(d4)};
                        fn(v);
                    }
}

bool is_canonical_rep(const F3Vector& v) {
    for (const F3& c : v) {
        if (c.is_zero()) continue;
        return c == F3(1);
    }
    return false; // zero vector
}

} // namespace

F3Matrix F3Matrix::identity() {
    F3Matrix M;
    for (int i = 0; i < 5; ++i) M.at(i, i) = F3(1);
    return M;
}

bool F3Matrix::is_identity() const { return *this == identity(); }

bool F3Matrix::is_scalar() const {
    const F3 c = at(0, 0);
    if (c.is_zero()) return false;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (at(i, j) != (i == j ? c : F3(0))) return false;
    return true;
}

F3Matrix operator*(const F3Matrix& x, const F3Matrix& y) {
    F3Matrix r;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            F3 s(0);
            for (int k = 0; k < 5; ++k) s = s + x.at(i, k) * y.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

F3Vector operator*(const F3Matrix& x, const F3Vector& v) {
    F3Vector r{};
    for (int i = 0; i < 5; ++i) {
        F3 s(0);
        for (int k = 0; k < 5; ++k) s = s + x.at(i, k) * v[static_cast<std::size_t>(k)];
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

F3 q_value(const F3Vector& v) { return bilinear(v, v); }

F3 bilinear(const F3Vector& v, const F3Vector& w) {
    F3 s = F3(2) * v[0] * w[0];
    for (std::size_t k = 1; k < 5; ++k) s = s + v[k] * w[k];
    return s;
}

bool preserves_q(const F3Matrix& M) {
    // M^T G M = G with G = diag(2,1,1,1,1), checked entrywise.
    const std::array<F3, 5> g = {F3(2), F3(1), F3(1), F3(1), F3(1)};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            F3 s(0);
            for (int k = 0; k < 5; ++k)
                s = s + M.at(k, i) * g[static_cast<std::size_t>(k)] * M.at(k, j);
            if (s != (i == j ? g[static_cast<std::size_t>(i)] : F3(0))) return false;
        }
    return true;
}

F3Vector projective_canonical(const F3Vector& v) {
    for (const F3& c : v) {
        if (c.is_zero()) continue;
        if (c == F3(1)) return v;
        F3Vector w = v;
        for (F3& x : w) x = F3(2) * x;
        return w;
    }
    throw Error("zero vector has no projective class");
}

std::vector<F3Vector> null_points() {
    std::vector<F3Vector> out;
    for_each_vector([&](const F3Vector& v) {
        if (is_canonical_rep(v) && q_value(v).is_zero()) out.push_back(v);
    });
    return out;
}

std::vector<F3Vector> nonisotropic_points() {
    std::vector<F3Vector> out;
    for_each_vector([&](const F3Vector& v) {
        if (is_canonical_rep(v) && !q_value(v).is_zero()) out.push_back(v);
    });
    return out;
}

F3Matrix f3_reflection(const F3Vector& v) {
    const F3 q = q_value(v);
    if (q.is_zero()) throw IsotropicVector("reflection in an isotropic vector");
    const F3 qinv = q.inverse();
    F3Matrix M = F3Matrix::identity();
    // Column j of the map x |-> x - 2 B(x,v) q^{-1} v is e_j - 2 B(e_j,v) q^{-1} v.
    for (int j = 0; j < 5; ++j) {
        F3Vector ej{};
        ej[static_cast<std::size_t>(j)] = F3(1);
        const F3 coeff = F3(2) * bilinear(ej, v) * qinv;
        for (int i = 0; i < 5; ++i)
            M.at(i, j) = M.at(i, j) - coeff * v[static_cast<std::size_t>(i)];
    }
    return M;
}

std::uint64_t pack(const F3Matrix& M) { return raw_pack(to_raw(M)); }

F3Matrix unpack(std::uint64_t key) {
    RawMat r{};
    for (int i = 0; i < 25; ++i) {
        r[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(key % 3);
        key /= 3;
    }
    return from_raw(r);
}

std::vector<std::uint64_t> close_under_products(const std::vector<F3Matrix>& gens,
                                                std::size_t cap) {
    std::vector<RawMat> raw_gens;
    raw_gens.reserve(gens.size());
    for (const auto& g : gens) raw_gens.push_back(to_raw(g));

    std::unordered_set<std::uint64_t> seen;
    std::deque<RawMat> frontier;
    const RawMat id = to_raw(F3Matrix::identity());
    seen.insert(raw_pack(id));
    frontier.push_back(id);
    for (const auto& g : raw_gens)
        if (seen.insert(raw_pack(g)).second) frontier.push_back(g);

    while (!frontier.empty()) {
        const RawMat x = frontier.front();
        frontier.pop_front();
        for (const auto& g : raw_gens) {
            const RawMat y = raw_mul(x, g);
            if (seen.insert(raw_pack(y)).second) {
                if (seen.size() > cap)
                    throw ResourceCap("group closure exceeded cap of " + std::to_string(cap) +
                                      " elements");
                frontier.push_back(y);
            }
        }
    }

    std::vector<std::uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t GroupEnumeration::projective_order() const {
    F3Matrix minus_id;
    for (int i = 0; i < 5; ++i) minus_id.at(i, i) = F3(2);
    const bool has_center = std::binary_search(elements.begin(), elements.end(), pack(minus_id));
    return has_center ? elements.size() / 2 : elements.size();
}

bool GroupEnumeration::contains(const F3Matrix& M) const {
    return std::binary_search(elements.begin(), elements.end(), pack(M));
}

GroupEnumeration orthogonal_group(std::size_t cap) {
    // Reflections in v and -v coincide, so canonical points suffice.
    std::vector<F3Matrix> gens;
    for (const auto& v : nonisotropic_points()) gens.push_back(f3_reflection(v));
    return GroupEnumeration{close_under_products(gens, cap)};
}

std::pair<int, int> nonisotropic_split() {
    int n1 = 0;
    int n2 = 0;
    for (const auto& v : nonisotropic_points()) {
        if (q_value(v) == F3(1)) ++n1;
        else ++n2;
    }
    return {n1, n2};
}

} // namespace cubix

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cubix/eisenstein.hpp"
#include "cubix/errors.hpp"

namespace cubix {

// The quadratic space (F_3^5, q) with q(v) = 2 v_1^2 + v_2^2 + ... + v_5^2,
// the reduction of the hermitian form diag(-1,1,1,1,1) modulo theta.

using F3Vector = std::array<F3, 5>;

struct F3Matrix {
    // Row-major; m[r][c] multiplies coordinate c into row r.
    std::array<std::array<F3, 5>, 5> m{};

    static F3Matrix identity();

    F3& at(int r, int c) { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const F3& at(int r, int c) const {
        return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

    bool is_identity() const;
    // c*I with c in {1,2}; the projectively trivial elements.
    bool is_scalar() const;

    friend F3Matrix operator*(const F3Matrix& x, const F3Matrix& y);
    friend F3Vector operator*(const F3Matrix& x, const F3Vector& v);
    friend bool operator==(const F3Matrix& x, const F3Matrix& y) { return x.m == y.m; }
    friend bool operator!=(const F3Matrix& x, const F3Matrix& y) { return !(x == y); }
};

F3 q_value(const F3Vector& v);

// Polarization of q: symmetric, bilinear(v,v) = q_value(v).
F3 bilinear(const F3Vector& v, const F3Vector& w);

// True iff M preserves the bilinear form (equivalently q, char != 2).
bool preserves_q(const F3Matrix& M);

// Scales a nonzero vector so its first nonzero coordinate is 1 — the
// canonical representative of the projective class {v, 2v}.
F3Vector projective_canonical(const F3Vector& v);

// The 40 projective null points, canonical representatives in lexicographic
// order. These index the cusps of the ball quotient.
std::vector<F3Vector> null_points();

// All 81 canonical projective points with q != 0 (36 with q=1, 45 with q=2).
std::vector<F3Vector> nonisotropic_points();

// Orthogonal reflection in a non-isotropic vector:
//   x |-> x - 2 bilinear(x,v) q(v)^{-1} v,
// an involution fixing v-perp and negating v.
F3Matrix f3_reflection(const F3Vector& v);

// Base-3 packing of the 25 entries; a total order on matrices.
std::uint64_t pack(const F3Matrix& M);
F3Matrix unpack(std::uint64_t key);

// Breadth-first closure of a generator set under multiplication.  Returns
// the packed keys of every product word, sorted.  Throws ResourceCap when
// the closure exceeds `cap` elements.
std::vector<std::uint64_t> close_under_products(const std::vector<F3Matrix>& gens,
                                                std::size_t cap = 200000);

struct GroupEnumeration {
    std::vector<std::uint64_t> elements; // sorted packed keys

    std::size_t order() const { return elements.size(); }
    // Order of the quotient by {+-I}.
    std::size_t projective_order() const;
    bool contains(const F3Matrix& M) const;
};

// The full orthogonal group O(F_3^5, q), generated by the reflections in all
// non-isotropic vectors; order 103680, projective order 51840.
GroupEnumeration orthogonal_group(std::size_t cap = 200000);

// (number of projective points with q=1, number with q=2); with the 40 null
// points these exhaust the 121 points of P(F_3^5).
std::pair<int, int> nonisotropic_split();

} // namespace cubix

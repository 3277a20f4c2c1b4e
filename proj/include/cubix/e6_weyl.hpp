#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cubix/errors.hpp"
#include "cubix/finite_orthogonal.hpp"

namespace cubix {

// The lattice Z^{1,6} with dot(u,v) = u0 v0 - u1 v1 - ... - u6 v6, the class
// eta = 3 e0 - (e1 + ... + e6), the 72 roots and 27 lines, their Schlafli
// combinatorics, the Weyl group W(E6) acting as permutations of the lines,
// and the identification of the mod-3 quotient of eta-perp with (F_3^5, q).

using MarkingVector = std::array<std::int64_t, 7>;
using MarkingMatrix = std::array<std::array<std::int64_t, 7>, 7>; // column action

std::int64_t dot(const MarkingVector& u, const MarkingVector& v);
MarkingVector eta();

// {r : dot(r,r) = -2, dot(r,eta) = 0}; exactly 72, closed under negation.
const std::vector<MarkingVector>& roots();

// {e : dot(e,e) = -1, dot(e,eta) = 1}; exactly 27, in lexicographic order.
const std::vector<MarkingVector>& lines();

bool is_root(const MarkingVector& v);
bool is_line(const MarkingVector& v);
int line_index(const MarkingVector& e); // NotALine if absent

// Two distinct lines meet iff dot = 1 (else dot = 0: skew).
bool incidence(const MarkingVector& e, const MarkingVector& f);

// Coplanar triples {e,f,g}: pairwise incident, e+f+g = eta; 45 of them.
// Entries are indices into lines(), each triple sorted, list sorted.
std::vector<std::array<int, 3>> tritangents();

// Sextuples of pairwise-skew lines; 72 of them.
std::vector<std::array<int, 6>> sixers();

// Unordered pairs {A,B} of disjoint sixers where each line of A meets
// exactly five lines of B; 36 of them.
std::vector<std::array<std::array<int, 6>, 2>> double_sixes();

MarkingMatrix identity_matrix();
MarkingMatrix mat_mul(const MarkingMatrix& a, const MarkingMatrix& b);
MarkingVector mat_apply(const MarkingMatrix& m, const MarkingVector& v);
bool preserves_dot(const MarkingMatrix& m);
bool fixes_eta(const MarkingMatrix& m);

// s_r(x) = x + dot(x,r) r for a root r (valid since dot(r,r) = -2).
MarkingMatrix reflection_matrix(const MarkingVector& root);

// W(E6) elements as permutations of the canonical lines() list; the
// representation is faithful and composition is cheap on 27 symbols.
using LinePerm = std::array<std::uint8_t, 27>;

LinePerm identity_perm();
LinePerm compose(const LinePerm& a, const LinePerm& b); // a after b
LinePerm perm_of_matrix(const MarkingMatrix& m);        // NotAnIsometry checks

// Reconstructs the 7x7 matrix from the line permutation: the images of
// e1..e6 are read off the permutation and e0 = (eta + e1 + ... + e6)/3.
MarkingMatrix matrix_of_perm(const LinePerm& p);

struct WeylElement {
    LinePerm perm;
    MarkingMatrix matrix;
};

struct WeylGroup {
    std::vector<LinePerm> elements; // sorted

    std::size_t order() const { return elements.size(); }
    bool contains(const LinePerm& p) const;
    WeylElement element(std::size_t i) const;
};

// Closure of the 36 root reflections under composition; order 51840.
WeylGroup weyl_group(std::size_t cap = 200000);

// The identification of (eta-perp tensor F3)/radical with (F_3^5, s*q):
// Gram of the simple roots reduced mod 3, its 1-dimensional radical, an
// explicit isometry T found by backtracking, and the induced injection of
// W(E6) into the orthogonal group with image of order 51840 avoiding -I.
struct Mod3Map {
    std::array<MarkingVector, 6> simple_roots;
    std::array<std::array<std::int64_t, 6>, 6> gram; // dot products, det 3
    int radical_dimension;                           // 1
    int scale;                                       // s with q(T x) = s Q(x)
    GroupEnumeration image;                          // pushed W(E6) inside O(5,3)
    bool contains_minus_identity;                    // false
    bool injective;                                  // image order == |W(E6)|

    // The homomorphism: reduction of the action on eta-perp, pushed through
    // the radical quotient and conjugated by the isometry T.
    F3Matrix push(const MarkingMatrix& weyl_matrix) const;
    F3Matrix push(const WeylElement& g) const { return push(g.matrix); }

    // Internals of the quotient identification, exposed for verification.
    std::array<std::array<std::int64_t, 6>, 6> adjugate; // adj(gram)
    std::int64_t gram_det;
    std::array<F3, 6> radical; // normalized so radical[pivot] = 1
    int pivot;
    F3Matrix iso;     // T: quotient coords -> F_3^5
    F3Matrix iso_inv; // T^{-1}
};

Mod3Map mod3_map(const WeylGroup& group);

} // namespace cubix

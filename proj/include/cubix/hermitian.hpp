#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubix/eisenstein.hpp"
#include "cubix/errors.hpp"
#include "cubix/finite_orthogonal.hpp"

namespace cubix {

// The rank-5 Eisenstein lattice with hermitian form
//   h(v,w) = -v1 conj(w1) + v2 conj(w2) + ... + v5 conj(w5),
// signature (4,1), self-dual.  h is linear in the first argument and
// conjugate-linear in the second.

using LatticeVector = std::array<Eisenstein, 5>;

Eisenstein herm(const LatticeVector& v, const LatticeVector& w);

// (positive, negative) eigenvalue counts of the diagonal form: (4,1).
std::pair<int, int> signature();

// Exact determinant of a square Gram matrix over the Eisenstein integers.
Eisenstein gram_determinant(const std::vector<std::vector<Eisenstein>>& gram);

// Self-duality of a lattice with the given Gram matrix: |det| is a unit.
bool is_unimodular_gram(const std::vector<std::vector<Eisenstein>>& gram);

// Self-duality of the standard lattice (det of diag(-1,1,1,1,1) is -1).
bool verify_self_dual();

struct Isometry {
    // Acts on column vectors; preserves h exactly: M* G M = G.
    std::array<std::array<Eisenstein, 5>, 5> m{};

    static Isometry identity();
    static Isometry scalar(const Eisenstein& c);

    Eisenstein& at(int r, int c) {
        return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    const Eisenstein& at(int r, int c) const {
        return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

    // G M* G; exact, no general matrix inversion.  Throws NotAnIsometry if
    // the result fails to invert M (i.e. M was not an isometry).
    Isometry inverse() const;

    friend Isometry operator*(const Isometry& x, const Isometry& y);
    friend LatticeVector operator*(const Isometry& x, const LatticeVector& v);
    friend bool operator==(const Isometry& x, const Isometry& y) { return x.m == y.m; }
    friend bool operator!=(const Isometry& x, const Isometry& y) { return !(x == y); }
};

bool is_isometry(const Isometry& M);

// Complex reflection in v: x |-> x - (1-zeta) h(x,v)/h(v,v) v.  Requires
// h(v,v) in {1,2} (BadNorm otherwise) and a unit zeta != 1 whose reflection
// preserves the lattice (norm 1: any unit; norm 2: only zeta = -1, else
// NonIntegral).
Isometry reflection(const LatticeVector& v, const Eisenstein& zeta);

// Coordinatewise reduction modulo theta.
F3Vector reduce_vector(const LatticeVector& v);

// Entrywise reduction modulo theta; the image provably preserves q, and the
// implementation checks this.
F3Matrix reduce_isometry(const Isometry& M);

// Projective triviality mod theta: the reduction is cI with c in {1,2}.
bool in_gamma0(const Isometry& M);

// Lexicographically least of the six unit multiples of v.
LatticeVector canonical_unit_rep(const LatticeVector& v);

// All nonzero v with herm(v,v) = norm_target and every coordinate of
// Eisenstein norm <= height_bound, one canonical representative per unit
// class, sorted.  `jobs` > 1 partitions the search box across threads; the
// result is identical for any job count.
std::vector<LatticeVector> enumerate_vectors(std::int64_t norm_target,
                                             std::int64_t height_bound, int jobs = 1);

// Text formats: vector "[a+bw, a+bw, a+bw, a+bw, a+bw]".
std::string to_string(const LatticeVector& v);
LatticeVector parse_lattice_vector(std::string_view text);

} // namespace cubix

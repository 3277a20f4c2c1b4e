#include "cubix/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace cubix {

namespace {

constexpr std::array<int, 5> kFormSigns = {-1, 1, 1, 1, 1};

Eisenstein signed_scale(int sign, const Eisenstein& x) { return sign < 0 ? -x : x; }

} // namespace

Eisenstein herm(const LatticeVector& v, const LatticeVector& w) {
    Eisenstein s;
    for (std::size_t k = 0; k < 5; ++k)
        s = s + signed_scale(kFormSigns[k], v[k] * conj(w[k]));
    return s;
}

std::pair<int, int> signature() {
    int pos = 0;
    int neg = 0;
    for (int g : kFormSigns) (g > 0 ? pos : neg) += 1;
    return {pos, neg};
}

Eisenstein gram_determinant(const std::vector<std::vector<Eisenstein>>& gram) {
    const std::size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw Error("Gram matrix is not square");
    if (n == 0) return Eisenstein(1, 0);

    // Cofactor expansion along the first row; n <= 5 in every caller.
    if (n == 1) return gram[0][0];
    Eisenstein det;
    for (std::size_t j = 0; j < n; ++j) {
        if (gram[0][j].is_zero()) continue;
        std::vector<std::vector<Eisenstein>> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1].push_back(gram[r][c]);
        const Eisenstein term = gram[0][j] * gram_determinant(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

bool is_unimodular_gram(const std::vector<std::vector<Eisenstein>>& gram) {
    return norm(gram_determinant(gram)) == 1;
}

bool verify_self_dual() {
    std::vector<std::vector<Eisenstein>> gram(5, std::vector<Eisenstein>(5));
    for (int i = 0; i < 5; ++i)
        gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            Eisenstein(kFormSigns[static_cast<std::size_t>(i)], 0);
    return is_unimodular_gram(gram);
}

Isometry Isometry::identity() { return scalar(Eisenstein(1, 0)); }

Isometry Isometry::scalar(const Eisenstein& c) {
    Isometry M;
    for (int i = 0; i < 5; ++i) M.at(i, i) = c;
    return M;
}

Isometry Isometry::inverse() const {
    // For an isometry, M^{-1} = G M* G with G = diag(-1,1,1,1,1) = G^{-1}.
    Isometry inv;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const int sign = kFormSigns[static_cast<std::size_t>(i)] *
                             kFormSigns[static_cast<std::size_t>(j)];
            inv.at(i, j) = signed_scale(sign, conj(at(j, i)));
        }
    if (*this * inv != identity())
        throw NotAnIsometry("inverse requested for a matrix that is not an isometry");
    return inv;
}

Isometry operator*(const Isometry& x, const Isometry& y) {
    Isometry r;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            Eisenstein s;
            for (int k = 0; k < 5; ++k) s = s + x.at(i, k) * y.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

LatticeVector operator*(const Isometry& x, const LatticeVector& v) {
    LatticeVector r{};
    for (int i = 0; i < 5; ++i) {
        Eisenstein s;
        for (int k = 0; k < 5; ++k) s = s + x.at(i, k) * v[static_cast<std::size_t>(k)];
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

bool is_isometry(const Isometry& M) {
    // (M* G M)[i][j] = sum_k conj(M[k][i]) g_k M[k][j] must equal G.
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            Eisenstein s;
            for (int k = 0; k < 5; ++k)
                s = s + signed_scale(kFormSigns[static_cast<std::size_t>(k)],
                                     conj(M.at(k, i)) * M.at(k, j));
            const Eisenstein expect =
                i == j ? Eisenstein(kFormSigns[static_cast<std::size_t>(i)], 0) : Eisenstein();
            if (s != expect) return false;
        }
    return true;
}

Isometry reflection(const LatticeVector& v, const Eisenstein& zeta) {
    const Eisenstein hv = herm(v, v);
    if (hv != Eisenstein(1, 0) && hv != Eisenstein(2, 0))
        throw BadNorm("reflection vector must have norm 1 or 2, got " + to_string(hv));
    if (!is_unit(zeta) || zeta == Eisenstein(1, 0))
        throw NotAnIsometry("reflection multiplier must be a unit different from 1");

    Eisenstein c;
    try {
        c = divide_exact(Eisenstein(1, 0) - zeta, hv);
    } catch (const NotDivisible&) {
        throw NonIntegral("reflection in a norm-" + to_string(hv) +
                          " vector with multiplier " + to_string(zeta) +
                          " does not preserve the lattice");
    }

    // R(e_j) = e_j - c h(e_j, v) v with h(e_j, v) = g_j conj(v_j).
    Isometry M = Isometry::identity();
    for (int j = 0; j < 5; ++j) {
        const Eisenstein coeff =
            c * signed_scale(kFormSigns[static_cast<std::size_t>(j)],
                             conj(v[static_cast<std::size_t>(j)]));
        for (int i = 0; i < 5; ++i)
            M.at(i, j) = M.at(i, j) - coeff * v[static_cast<std::size_t>(i)];
    }
    if (!is_isometry(M)) throw NotAnIsometry("constructed reflection fails the form check");
    return M;
}

F3Vector reduce_vector(const LatticeVector& v) {
    F3Vector r;
    for (std::size_t k = 0; k < 5; ++k) r[k] = reduce_mod_theta(v[k]);
    return r;
}

F3Matrix reduce_isometry(const Isometry& M) {
    if (!is_isometry(M)) throw NotAnIsometry("reduce_isometry requires an isometry");
    F3Matrix R;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) R.at(i, j) = reduce_mod_theta(M.at(i, j));
    if (!preserves_q(R))
        throw Error("internal: reduction of an isometry fails to preserve q");
    return R;
}

bool in_gamma0(const Isometry& M) { return reduce_isometry(M).is_scalar(); }

LatticeVector canonical_unit_rep(const LatticeVector& v) {
    LatticeVector best = v;
    for (const Eisenstein& u : eisenstein_units()) {
        LatticeVector w;
        for (std::size_t k = 0; k < 5; ++k) w[k] = u * v[k];
        if (w < best) best = w;
    }
    return best;
}

namespace {

std::vector<Eisenstein> scalars_of_norm_at_most(std::int64_t bound) {
    std::vector<Eisenstein> out;
    const auto box = static_cast<std::int64_t>(std::sqrt(static_cast<double>(2 * bound))) + 2;
    for (std::int64_t a = -box; a <= box; ++a)
        for (std::int64_t b = -box; b <= box; ++b) {
            const Eisenstein x(a, b);
            if (norm(x) <= bound) out.push_back(x);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Depth-first fill of coordinates depth..4 given the partial herm value.
void enumerate_from(const std::vector<Eisenstein>& scalars,
                    const std::vector<std::int64_t>& norms, std::int64_t target,
                    std::int64_t height_bound, std::size_t depth, LatticeVector& v,
                    std::int64_t partial, std::vector<LatticeVector>& out) {
    if (depth == 5) {
        if (partial != target) return;
        bool zero = true;
        for (const auto& x : v) zero = zero && x.is_zero();
        if (zero) return;
        if (canonical_unit_rep(v) == v) out.push_back(v);
        return;
    }
    const auto remaining = static_cast<std::int64_t>(5 - depth);
    for (std::size_t i = 0; i < scalars.size(); ++i) {
        const std::int64_t contrib = depth == 0 ? -norms[i] : norms[i];
        const std::int64_t next = partial + contrib;
        // Coordinates after this one contribute in [0, (remaining-1)*height_bound]
        // (or [-height_bound, ...] when the sign coordinate is still to come,
        // which only happens at depth 0 where partial = 0 anyway).
        const std::int64_t lo = next;
        const std::int64_t hi = next + (remaining - 1) * height_bound;
        if (target < lo || target > hi) continue;
        v[depth] = scalars[i];
        enumerate_from(scalars, norms, target, height_bound, depth + 1, v, next, out);
    }
    v[depth] = Eisenstein();
}

} // namespace

std::vector<LatticeVector> enumerate_vectors(std::int64_t norm_target,
                                             std::int64_t height_bound, int jobs) {
    if (height_bound < 1) throw Error("height bound must be at least 1");
    const std::vector<Eisenstein> scalars = scalars_of_norm_at_most(height_bound);
    std::vector<std::int64_t> norms;
    norms.reserve(scalars.size());
    for (const auto& s : scalars) norms.push_back(norm(s));

    const int workers = std::max(1, jobs);
    std::vector<std::vector<LatticeVector>> results(static_cast<std::size_t>(workers));

    auto run = [&](int worker) {
        LatticeVector v{};
        auto& out = results[static_cast<std::size_t>(worker)];
        for (std::size_t i = static_cast<std::size_t>(worker); i < scalars.size();
             i += static_cast<std::size_t>(workers)) {
            v[0] = scalars[i];
            enumerate_from(scalars, norms, norm_target, height_bound, 1, v, -norms[i], out);
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    std::vector<LatticeVector> out;
    for (auto& part : results)
        out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const LatticeVector& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < 5; ++k) {
        if (k) os << ", ";
        os << to_string(v[k]);
    }
    os << "]";
    return os.str();
}

LatticeVector parse_lattice_vector(std::string_view text) {
    std::size_t first = text.find('[');
    std::size_t last = text.rfind(']');
    if (first == std::string_view::npos || last == std::string_view::npos || last < first)
        throw ParseError("lattice vector must be bracketed: '" + std::string(text) + "'");
    std::string_view body = text.substr(first + 1, last - first - 1);

    LatticeVector v{};
    std::size_t k = 0;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = body.find(',', pos);
        const std::string_view part =
            comma == std::string_view::npos ? body.substr(pos) : body.substr(pos, comma - pos);
        if (k >= 5) throw ParseError("lattice vector needs exactly 5 coordinates");
        v[k++] = parse_eisenstein(part);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (k != 5) throw ParseError("lattice vector needs exactly 5 coordinates");
    return v;
}

} // namespace cubix

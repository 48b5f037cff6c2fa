#pragma once

/**
 * @file braiding.hpp
 * @brief Braiding matrices of diagonal type and their reflections.
 *
 * A braided vector space of diagonal type is given by a matrix (q_ij) of
 * nonzero scalars. For a vertex i the Cartan-type integers m_ij decide
 * whether the pseudo-reflection s_i exists; if it does, the reflected
 * braiding matrix is the bicharacter restricted to the new basis
 * (e_j + m_ij e_i)_j, with the convention m_ii = -2.
 *
 * Vertex indices are zero-based throughout the library.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <map>
#include <limits>
#include <vector>

#include "weyl/errors.hpp"
#include "weyl/int_matrix.hpp"
#include "weyl/scalar.hpp"

namespace weyl {

/// Largest rank for which canonicalize() enumerates all n! permutations.
inline constexpr std::size_t max_canonical_rank = 8;

class BraidingMatrix {
public:
    BraidingMatrix() = default;

    /// n x n matrix with every entry equal to 1.
    explicit BraidingMatrix(std::size_t n) : n_(n), q_(n * n) {}

    BraidingMatrix(std::size_t n, std::vector<Scalar> row_major) : n_(n), q_(std::move(row_major)) {
        if (q_.size() != n * n)
            throw dimension_mismatch("braiding matrix of rank " + std::to_string(n) + " needs " +
                                     std::to_string(n * n) + " entries, got " + std::to_string(q_.size()));
    }

    std::size_t rank() const noexcept { return n_; }
    const std::vector<Scalar>& entries() const noexcept { return q_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return q_[i * n_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return q_[i * n_ + j]; }

    const Scalar& at(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        return (*this)(i, j);
    }

    /// q_ij * q_ji
    Scalar product(std::size_t i, std::size_t j) const { return (*this)(i, j) * (*this)(j, i); }

    void check_index(std::size_t i) const {
        if (i >= n_)
            throw index_out_of_range("vertex " + std::to_string(i + 1) + " out of range for rank " +
                                     std::to_string(n_));
    }

    friend bool operator==(const BraidingMatrix&, const BraidingMatrix&) = default;

    /// Renders as "q11, q12; q21, q22", the inline matrix syntax.
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i) out += "; ";
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) out += ", ";
                out += (*this)(i, j).to_string();
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BraidingMatrix& m) { return os << m.to_string(); }

private:
    std::size_t n_ = 0;
    std::vector<Scalar> q_;
};

/// Canonical representative of a twist-equivalence class: the diagonal and
/// the products q_ij q_ji for i < j, minimal over simultaneous index
/// permutations.
struct TwistClass {
    std::size_t rank = 0;
    std::vector<Scalar> diagonal;
    /// Products for pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... in that order.
    std::vector<Scalar> products;

    static std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }

    const Scalar& product(std::size_t i, std::size_t j) const { return products[pair_index(rank, i, j)]; }

    friend bool operator==(const TwistClass&, const TwistClass&) = default;
    friend std::strong_ordering operator<=>(const TwistClass&, const TwistClass&) = default;

    /// "[q11, q22 | q12q21]"; rank 1 renders as "[q11]".
    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < diagonal.size(); ++i) {
            if (i) out += ", ";
            out += diagonal[i].to_string();
        }
        if (!products.empty()) {
            out += " |";
            for (std::size_t k = 0; k < products.size(); ++k) out += (k ? ", " : " ") + products[k].to_string();
        }
        return out + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const TwistClass& c) { return os << c.to_string(); }
};

struct ReflectionData {
    std::size_t vertex = 0;
    /// m_ij for every j, with m_ii = -2.
    std::vector<std::int64_t> m_row;
    /// Columns are the images s(e_j): s(e_i) = -e_i, s(e_j) = e_j + m_ij e_i.
    IntMatrix s_matrix;
    /// p_ij for j != i; the entry at the reflected vertex is 1 and unused.
    std::vector<Scalar> p_row;
    BraidingMatrix reflected;
};

namespace detail {

/// min { m >= 0 : [m+1]_q (q^m c - 1) = 0 }, solved exactly.
inline std::optional<std::int64_t> solve_m(const Scalar& q, const Scalar& c) {
    std::optional<std::int64_t> best;

    // q^m c = 1: each parameter exponent gives a linear condition on m.
    bool possible = true;
    std::optional<std::int64_t> pinned;
    auto constrain = [&](std::int64_t eq, std::int64_t ec) {
        if (eq == 0) {
            if (ec != 0) possible = false;
            return;
        }
        if ((-ec) % eq != 0) {
            possible = false;
            return;
        }
        const std::int64_t m = -ec / eq;
        if (m < 0 || (pinned && *pinned != m)) {
            possible = false;
            return;
        }
        pinned = m;
    };
    for (const auto& [name, eq] : q.exponents()) constrain(eq, c.exponent_of(name));
    for (const auto& [name, ec] : c.exponents())
        if (q.exponent_of(name) == 0) constrain(0, ec);

    if (possible) {
        const Scalar q_root = q.root_part();
        const Scalar c_root = c.root_part();
        if (pinned) {
            if ((q_root.pow(*pinned) * c_root).is_identity()) best = *pinned;
        } else {
            // q's root part has period den(q), so one period suffices.
            for (std::int64_t m = 0; m < q.root_denominator(); ++m)
                if ((q_root.pow(m) * c_root).is_identity()) {
                    best = m;
                    break;
                }
        }
    }

    // [m+1]_q = 0 first happens at m + 1 = ord(q) when 2 <= ord(q) < infinity.
    if (const Order r = q.order(); r && *r >= 2) {
        if (!best || *r - 1 < *best) best = *r - 1;
    }
    return best;
}

} // namespace detail

/// m_ij, or std::nullopt when no m satisfies the defining condition.
inline std::optional<std::int64_t> m_exponent(const BraidingMatrix& M, std::size_t i, std::size_t j) {
    M.check_index(i);
    M.check_index(j);
    if (i == j) throw diagonal_query("m_exponent is defined only for i != j");
    return detail::solve_m(M(i, i), M.product(i, j));
}

inline bool is_reflectable(const BraidingMatrix& M, std::size_t i) {
    M.check_index(i);
    for (std::size_t j = 0; j < M.rank(); ++j)
        if (j != i && !m_exponent(M, i, j)) return false;
    return true;
}

inline Scalar p_factor(const BraidingMatrix& M, std::size_t i, std::size_t j) {
    const auto m = m_exponent(M, i, j);
    if (!m) throw not_reflectable(i);
    const Scalar& qii = M(i, i);
    const Scalar prod = M.product(i, j);
    if ((qii.pow(*m) * prod).is_identity()) return Scalar{};
    return qii.inverse() * prod;
}

inline ReflectionData reflect(const BraidingMatrix& M, std::size_t i) {
    M.check_index(i);
    const std::size_t n = M.rank();

    ReflectionData r;
    r.vertex = i;
    r.m_row.assign(n, -2);
    r.p_row.assign(n, Scalar{});
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const auto m = m_exponent(M, i, j);
        if (!m) throw not_reflectable(i);
        r.m_row[j] = *m;
        r.p_row[j] = p_factor(M, i, j);
    }

    r.s_matrix = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) r.s_matrix(i, j) = j == i ? -1 : r.m_row[j];

    // q'_jl = q_ii^(m_ij m_il) q_il^(m_ij) q_ji^(m_il) q_jl
    r.reflected = BraidingMatrix(n);
    const Scalar& qii = M(i, i);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
            const std::int64_t mj = r.m_row[j];
            const std::int64_t ml = r.m_row[l];
            r.reflected(j, l) = qii.pow(mj * ml) * M(i, l).pow(mj) * M(j, i).pow(ml) * M(j, l);
        }
    return r;
}

/// Diagonal and pair products in the given index order, not minimized.
inline TwistClass twist_invariants(const BraidingMatrix& M) {
    const std::size_t n = M.rank();
    TwistClass c;
    c.rank = n;
    c.diagonal.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.diagonal.push_back(M(i, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) c.products.push_back(M.product(i, j));
    return c;
}

struct CanonicalForm {
    TwistClass twist_class;
    /// position[i] is the index that vertex i of the input occupies in the class.
    std::vector<std::size_t> position;
};

inline CanonicalForm canonicalize_with_permutation(const BraidingMatrix& M) {
    const std::size_t n = M.rank();
    if (n > max_canonical_rank)
        throw dimension_mismatch("canonicalization supports rank <= " + std::to_string(max_canonical_rank));
    const TwistClass raw = twist_invariants(M);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    CanonicalForm best{raw, perm};
    TwistClass candidate = raw;
    while (std::next_permutation(perm.begin(), perm.end())) {
        for (std::size_t i = 0; i < n; ++i) {
            candidate.diagonal[perm[i]] = raw.diagonal[i];
            for (std::size_t j = i + 1; j < n; ++j)
                candidate.products[TwistClass::pair_index(n, perm[i], perm[j])] =
                    raw.products[TwistClass::pair_index(n, i, j)];
        }
        if (candidate < best.twist_class) {
            best.twist_class = candidate;
            best.position = perm;
        }
    }
    return best;
}

inline TwistClass canonicalize(const BraidingMatrix& M) { return canonicalize_with_permutation(M).twist_class; }

/// Representative with q_ij = 1 for i < j and q_ji = q_ij q_ji.
inline BraidingMatrix rep_matrix(const TwistClass& C) {
    BraidingMatrix M(C.rank);
    for (std::size_t i = 0; i < C.rank; ++i) {
        M(i, i) = C.diagonal[i];
        for (std::size_t j = i + 1; j < C.rank; ++j) M(j, i) = C.product(i, j);
    }
    return M;
}

/// Generalized Cartan matrix: a_ii = 2, a_ij = -m_ij.
inline IntMatrix cartan_matrix(const BraidingMatrix& M) {
    const std::size_t n = M.rank();
    IntMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = 2;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const auto m = m_exponent(M, i, j);
            if (!m) throw not_reflectable(i);
            a(i, j) = -*m;
        }
    }
    return a;
}

/// chi(d, e) = prod_{i,j} q_ij^(d_i e_j)
inline Scalar bicharacter_eval(const BraidingMatrix& M, std::span<const std::int64_t> d,
                               std::span<const std::int64_t> e) {
    const std::size_t n = M.rank();
    if (d.size() != n || e.size() != n)
        throw dimension_mismatch("degree vectors must have length " + std::to_string(n));
    // Intermediate exponents may leave int64 even when the total does not.
    Scalar out;
    std::map<std::string, __int128> exps;
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (e[j] == 0) continue;
            out *= M(i, j).root_part().pow(d[i]).pow(e[j]);
            for (const auto& [name, x] : M(i, j).exponents())
                exps[name] += static_cast<__int128>(d[i]) * e[j] * x;
        }
    }
    for (const auto& [name, x] : exps) {
        if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
            throw arithmetic_overflow("parameter exponent");
        out *= Scalar::parameter(name, static_cast<std::int64_t>(x));
    }
    return out;
}

} // namespace weyl

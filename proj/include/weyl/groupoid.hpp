#pragma once

/**
 * @file groupoid.hpp
 * @brief The Weyl-Brandt groupoid: orbits of twist classes under reflections,
 * partial composition of groupoid elements, Weyl equivalence, real roots.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weyl/braiding.hpp"
#include "weyl/errors.hpp"
#include "weyl/int_matrix.hpp"
#include "weyl/scalar.hpp"

namespace weyl {

inline constexpr std::size_t default_orbit_bound = 1000;

namespace detail {

inline IntMatrix minor_of(const IntMatrix& a, std::size_t row, std::size_t col) {
    const std::size_t n = a.size();
    IntMatrix m(n - 1);
    for (std::size_t i = 0, r = 0; i < n; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, c = 0; j < n; ++j) {
            if (j == col) continue;
            m(r, c++) = a(i, j);
        }
        ++r;
    }
    return m;
}

} // namespace detail

/// Inverse of an integer matrix with determinant +-1, via the adjugate.
inline IntMatrix inverse_unimodular(const IntMatrix& a) {
    const std::int64_t det = a.determinant();
    if (det != 1 && det != -1) throw error("matrix is not unimodular");
    const std::size_t n = a.size();
    if (n == 1) return IntMatrix::from_rows({{det}});
    IntMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t cof = ((i + j) % 2 ? -1 : 1) * detail::minor_of(a, j, i).determinant();
            inv(i, j) = cof * det;
        }
    return inv;
}

/// An element (s, E) of the groupoid: an automorphism s of Z^n together
/// with its source object, an ordered basis E (columns) of Z^n.
class GroupoidElement {
public:
    GroupoidElement(IntMatrix s, IntMatrix source_basis) : s_(std::move(s)), source_(std::move(source_basis)) {
        if (s_.size() != source_.size()) throw dimension_mismatch("groupoid element parts differ in size");
        const auto ds = s_.determinant();
        const auto de = source_.determinant();
        if ((ds != 1 && ds != -1) || (de != 1 && de != -1))
            throw error("groupoid element needs unimodular s and source basis");
    }

    static GroupoidElement identity_at(const IntMatrix& basis) {
        return GroupoidElement(IntMatrix::identity(basis.size()), basis);
    }

    const IntMatrix& s() const noexcept { return s_; }
    const IntMatrix& source_basis() const noexcept { return source_; }
    /// s(E), the object this element maps to.
    IntMatrix target_basis() const { return s_ * source_; }

    friend bool operator==(const GroupoidElement&, const GroupoidElement&) = default;

private:
    IntMatrix s_;
    IntMatrix source_;
};

/// (s, E) o (t, F) = (st, F), defined only when t(F) = E.
inline std::optional<GroupoidElement> compose(const GroupoidElement& g, const GroupoidElement& h) {
    if (g.s().size() != h.s().size()) return std::nullopt;
    if (h.target_basis() != g.source_basis()) return std::nullopt;
    return GroupoidElement(g.s() * h.s(), h.source_basis());
}

/// The element (s_{i,E}, E) in standard coordinates, where `at_basis` is the
/// braiding matrix of the module of degree E. Its target is E * s_i.
inline GroupoidElement reflection_element(const BraidingMatrix& at_basis, const IntMatrix& basis, std::size_t i) {
    const ReflectionData r = reflect(at_basis, i);
    return GroupoidElement(basis * r.s_matrix * inverse_unimodular(basis), basis);
}

enum class OrbitStatus { complete, bound_exceeded };

inline const char* to_string(OrbitStatus s) { return s == OrbitStatus::complete ? "complete" : "bound_exceeded"; }

struct OrbitNode {
    std::size_t index = 0;
    TwistClass twist_class;
    BraidingMatrix representative;
};

struct OrbitEdge {
    std::size_t from = 0;
    std::size_t vertex = 0;
    std::size_t to = 0;
    IntMatrix s;
    /// Index of `vertex` in the representative of `to`; reflecting there leads back to `from`.
    std::size_t target_vertex = 0;
};

struct DeadEnd {
    std::size_t node = 0;
    std::size_t vertex = 0;
    friend bool operator==(const DeadEnd&, const DeadEnd&) = default;
};

struct OrbitGraph {
    std::vector<OrbitNode> nodes;
    std::vector<OrbitEdge> edges;
    OrbitStatus status = OrbitStatus::complete;
    std::vector<DeadEnd> dead_ends;

    std::optional<std::size_t> find(const TwistClass& c) const {
        for (const auto& node : nodes)
            if (node.twist_class == c) return node.index;
        return std::nullopt;
    }

    std::set<TwistClass> class_set() const {
        std::set<TwistClass> out;
        for (const auto& node : nodes) out.insert(node.twist_class);
        return out;
    }
};

/// Breadth-first closure of the twist class of M under all defined
/// reflections. Nodes are numbered in discovery order.
inline OrbitGraph enumerate_orbit(const BraidingMatrix& M, std::size_t bound = default_orbit_bound) {
    if (bound == 0) throw error("orbit bound must be at least 1");
    OrbitGraph g;
    std::map<TwistClass, std::size_t> index;

    const TwistClass start = canonicalize(M);
    g.nodes.push_back({0, start, rep_matrix(start)});
    index.emplace(start, 0);

    for (std::size_t cur = 0; cur < g.nodes.size(); ++cur) {
        const BraidingMatrix rep = g.nodes[cur].representative;
        for (std::size_t i = 0; i < rep.rank(); ++i) {
            if (!is_reflectable(rep, i)) {
                g.dead_ends.push_back({cur, i});
                continue;
            }
            ReflectionData r;
            CanonicalForm cf;
            try {
                r = reflect(rep, i);
                cf = canonicalize_with_permutation(r.reflected);
            } catch (const arithmetic_overflow&) {
                // exponents this large only come from an orbit far past any usable bound
                g.status = OrbitStatus::bound_exceeded;
                return g;
            }
            auto it = index.find(cf.twist_class);
            if (it == index.end()) {
                if (g.nodes.size() >= bound) {
                    g.status = OrbitStatus::bound_exceeded;
                    return g;
                }
                const std::size_t id = g.nodes.size();
                g.nodes.push_back({id, cf.twist_class, rep_matrix(cf.twist_class)});
                it = index.emplace(cf.twist_class, id).first;
            }
            g.edges.push_back({cur, i, it->second, std::move(r.s_matrix), cf.position[i]});
        }
    }
    return g;
}

enum class Equivalence { equivalent, not_equivalent, inconclusive };

inline const char* to_string(Equivalence e) {
    switch (e) {
    case Equivalence::equivalent: return "equivalent";
    case Equivalence::not_equivalent: return "not_equivalent";
    default: return "inconclusive";
    }
}

inline Equivalence weyl_equivalent(const BraidingMatrix& A, const BraidingMatrix& B,
                                   std::size_t bound = default_orbit_bound) {
    if (A.rank() != B.rank())
        throw rank_mismatch("ranks differ: " + std::to_string(A.rank()) + " vs " + std::to_string(B.rank()));
    const OrbitGraph g = enumerate_orbit(A, bound);
    if (g.find(canonicalize(B))) return Equivalence::equivalent;
    return g.status == OrbitStatus::complete ? Equivalence::not_equivalent : Equivalence::inconclusive;
}

/// Height of a root; std::nullopt means infinite.
using Height = std::optional<std::int64_t>;

struct RealRoot {
    std::vector<std::int64_t> root;
    Height height;
};

/// Finite height iff 2 <= ord chi(d,d) < infinity, and then it equals the order.
inline Height root_height(const BraidingMatrix& M, std::span<const std::int64_t> d) {
    const Order ord = bicharacter_eval(M, d, d).order();
    if (ord && *ord >= 2) return ord;
    return std::nullopt;
}

/// Result of a basis-level walk: every reached ordered basis with the
/// braiding matrix of the module of that degree.
struct BasisWalk {
    std::vector<std::pair<IntMatrix, BraidingMatrix>> bases;
    bool complete = true;
};

inline BasisWalk walk_bases(const BraidingMatrix& M, std::size_t bound) {
    if (bound == 0) throw error("bound must be at least 1");
    BasisWalk w;
    std::set<IntMatrix> seen;
    const IntMatrix e0 = IntMatrix::identity(M.rank());
    w.bases.emplace_back(e0, M);
    seen.insert(e0);
    for (std::size_t cur = 0; cur < w.bases.size(); ++cur) {
        const IntMatrix basis = w.bases[cur].first;
        const BraidingMatrix at = w.bases[cur].second;
        for (std::size_t i = 0; i < at.rank(); ++i) {
            if (!is_reflectable(at, i)) continue;
            ReflectionData r;
            IntMatrix next;
            try {
                r = reflect(at, i);
                next = basis * r.s_matrix;
            } catch (const arithmetic_overflow&) {
                w.complete = false;
                return w;
            }
            if (seen.contains(next)) continue;
            if (w.bases.size() >= bound) {
                w.complete = false;
                return w;
            }
            seen.insert(next);
            w.bases.emplace_back(std::move(next), std::move(r.reflected));
        }
    }
    return w;
}

/// Real roots reachable through the groupoid: all basis vectors with
/// nonnegative coordinates over every ordered basis reached from the
/// standard one. std::nullopt when more than `bound` bases are reached.
inline std::optional<std::vector<RealRoot>> enumerate_real_roots(const BraidingMatrix& M,
                                                                 std::size_t bound = default_orbit_bound) {
    const BasisWalk w = walk_bases(M, bound);
    if (!w.complete) return std::nullopt;

    std::set<std::vector<std::int64_t>> found;
    for (const auto& [basis, at] : w.bases)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto col = basis.column(j);
            if (std::all_of(col.begin(), col.end(), [](std::int64_t x) { return x >= 0; }))
                found.insert(std::move(col));
        }

    std::vector<RealRoot> roots;
    for (const auto& d : found) roots.push_back({d, root_height(M, d)});
    std::stable_sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) {
        std::int64_t sa = 0, sb = 0;
        for (auto x : a.root) sa += x;
        for (auto x : b.root) sb += x;
        if (sa != sb) return sa < sb;
        return a.root > b.root;
    });
    return roots;
}

} // namespace weyl

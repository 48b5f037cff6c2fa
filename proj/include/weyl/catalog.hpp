#pragma once

/**
 * @file catalog.hpp
 * @brief The rank 2 Weyl equivalence table and its mechanical verification.
 *
 * Each row lists a few forms (q11, q21, q22) with q12 = 1, optionally a free
 * parameter that ranges over a short list of values, and fixed parameters
 * that range over a domain (primitive roots of unity of given orders, or a
 * generic transcendental). A row is verified for one assignment of its fixed
 * parameters by checking that the groupoid orbit of any member is exactly
 * the set of instantiated forms.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "weyl/braiding.hpp"
#include "weyl/errors.hpp"
#include "weyl/groupoid.hpp"
#include "weyl/parse.hpp"
#include "weyl/scalar.hpp"

namespace weyl {

/// Orbit bound used for verification and classification.
inline constexpr std::size_t catalog_orbit_bound = 64;

using Assignment = std::map<std::string, Scalar>;

inline std::string to_string(const Assignment& a) {
    std::string out;
    for (const auto& [name, value] : a) {
        if (!out.empty()) out += ", ";
        out += name + "=" + value.to_string();
    }
    return out;
}

struct ParamDomain {
    enum class Kind { transcendental, roots_of_unity };
    Kind kind = Kind::transcendental;
    /// Primitive orders allowed for roots_of_unity.
    std::vector<std::int64_t> orders;
    /// Values a transcendental parameter must avoid; may mention other fixed symbols.
    std::vector<Scalar> exclude;
    /// Orders of roots of unity a transcendental parameter must avoid.
    std::vector<std::int64_t> exclude_orders;
};

struct FixedParam {
    std::string symbol;
    ParamDomain domain;
};

struct FreeParam {
    std::string symbol;
    /// Expressions in the fixed symbols.
    std::vector<Scalar> values;
};

struct CatalogRow {
    int row_id = 0;
    /// (q11, q21, q22) expressions, q12 = 1.
    std::vector<std::array<Scalar, 3>> forms;
    std::optional<FreeParam> free;
    std::vector<FixedParam> fixed;
    std::vector<std::string> tree_tags;
};

using Catalog = std::vector<CatalogRow>;

// ---------------------------------------------------------------------------
// Loading

inline Catalog load_catalog(const nlohmann::json& doc) {
    const auto expr = [](const nlohmann::json& j) { return parse_scalar(j.get<std::string>()); };
    Catalog rows;
    for (const auto& r : doc.at("rows")) {
        CatalogRow row;
        row.row_id = r.at("row").get<int>();
        for (const auto& f : r.at("forms")) {
            if (f.size() != 3) throw error("catalog row " + std::to_string(row.row_id) + ": form needs 3 entries");
            row.forms.push_back({expr(f[0]), expr(f[1]), expr(f[2])});
        }
        if (r.contains("free") && !r.at("free").is_null()) {
            FreeParam fp;
            fp.symbol = r.at("free").at("symbol").get<std::string>();
            for (const auto& v : r.at("free").at("values")) fp.values.push_back(expr(v));
            row.free = std::move(fp);
        }
        for (const auto& f : r.at("fixed")) {
            FixedParam p;
            p.symbol = f.at("symbol").get<std::string>();
            const auto& d = f.at("domain");
            const auto kind = d.at("kind").get<std::string>();
            if (kind == "transcendental") {
                p.domain.kind = ParamDomain::Kind::transcendental;
                for (const auto& e : d.value("exclude", nlohmann::json::array())) p.domain.exclude.push_back(expr(e));
                p.domain.exclude_orders = d.value("exclude_orders", std::vector<std::int64_t>{});
            } else if (kind == "roots_of_unity") {
                p.domain.kind = ParamDomain::Kind::roots_of_unity;
                p.domain.orders = d.at("orders").get<std::vector<std::int64_t>>();
            } else {
                throw error("catalog row " + std::to_string(row.row_id) + ": unknown domain kind '" + kind + "'");
            }
            row.fixed.push_back(std::move(p));
        }
        if (r.contains("trees")) row.tree_tags = r.at("trees").get<std::vector<std::string>>();
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.row_id < b.row_id; });
    return rows;
}

inline Catalog parse_catalog(std::string_view json_text) { return load_catalog(nlohmann::json::parse(json_text)); }

inline const CatalogRow& find_row(const Catalog& catalog, int row_id) {
    for (const auto& row : catalog)
        if (row.row_id == row_id) return row;
    throw error("no catalog row " + std::to_string(row_id));
}

// ---------------------------------------------------------------------------
// Instantiation

inline std::vector<Scalar> primitive_roots(std::int64_t order) {
    std::vector<Scalar> out;
    for (std::int64_t p = order == 1 ? 0 : 1; p < order; ++p)
        if (std::gcd(p, order) == 1) out.push_back(Scalar::root(p, order));
    return out;
}

inline void check_assignment(const CatalogRow& row, const Assignment& assignment) {
    const std::string where = "row " + std::to_string(row.row_id) + ": ";
    for (const auto& [name, value] : assignment) {
        const bool known = std::any_of(row.fixed.begin(), row.fixed.end(),
                                       [&](const FixedParam& p) { return p.symbol == name; });
        if (!known) throw domain_violation(where + "'" + name + "' is not a fixed parameter");
    }
    for (const auto& p : row.fixed) {
        const auto it = assignment.find(p.symbol);
        if (it == assignment.end()) throw domain_violation(where + "no value for '" + p.symbol + "'");
        const Scalar& v = it->second;
        const Order ord = v.order();
        if (p.domain.kind == ParamDomain::Kind::roots_of_unity) {
            if (!ord || std::find(p.domain.orders.begin(), p.domain.orders.end(), *ord) == p.domain.orders.end())
                throw domain_violation(where + p.symbol + " = " + v.to_string() +
                                       " is not a primitive root of a listed order");
        } else {
            if (ord)
                throw domain_violation(where + p.symbol + " = " + v.to_string() +
                                       " must be transcendental (a formal parameter monomial)");
            for (const auto& ex : p.domain.exclude)
                if (substitute(ex, assignment) == v)
                    throw domain_violation(where + p.symbol + " = " + v.to_string() + " is excluded");
        }
    }
}

struct RowMember {
    std::size_t form_index = 0;
    /// Index into the free parameter's values; 0 when the row has none.
    std::size_t free_index = 0;
    BraidingMatrix matrix;
    TwistClass twist_class;
};

struct RowInstantiation {
    int row_id = 0;
    Assignment fixed_assignment;
    std::set<TwistClass> class_set;
    std::vector<RowMember> members;
};

inline BraidingMatrix form_matrix(const Scalar& q11, const Scalar& q21, const Scalar& q22) {
    return BraidingMatrix(2, {q11, Scalar{}, q21, q22});
}

inline RowInstantiation instantiate_row(const CatalogRow& row, const Assignment& assignment) {
    check_assignment(row, assignment);
    RowInstantiation inst;
    inst.row_id = row.row_id;
    inst.fixed_assignment = assignment;

    const std::size_t n_free = row.free ? row.free->values.size() : 1;
    for (std::size_t fi = 0; fi < n_free; ++fi) {
        Assignment full = assignment;
        if (row.free) full[row.free->symbol] = substitute(row.free->values[fi], assignment);
        for (std::size_t k = 0; k < row.forms.size(); ++k) {
            const auto& f = row.forms[k];
            RowMember m;
            m.form_index = k;
            m.free_index = fi;
            m.matrix = form_matrix(substitute(f[0], full), substitute(f[1], full), substitute(f[2], full));
            m.twist_class = canonicalize(m.matrix);
            inst.class_set.insert(m.twist_class);
            inst.members.push_back(std::move(m));
        }
    }
    return inst;
}

/// Every assignment verify_all checks: each root-of-unity symbol ranges over
/// all primitive roots of its orders (ascending), each transcendental symbol
/// gets the next name from `formal_names`.
inline std::vector<Assignment> admissible_assignments(const CatalogRow& row,
                                                      const std::vector<std::string>& formal_names = {"t", "s", "r"}) {
    std::vector<Assignment> out{Assignment{}};
    std::size_t next_formal = 0;
    for (const auto& p : row.fixed) {
        std::vector<Scalar> values;
        if (p.domain.kind == ParamDomain::Kind::roots_of_unity) {
            for (auto ord : p.domain.orders)
                for (auto& v : primitive_roots(ord)) values.push_back(std::move(v));
        } else {
            if (next_formal >= formal_names.size()) throw error("not enough formal parameter names");
            values.push_back(Scalar::parameter(formal_names[next_formal++]));
        }
        std::vector<Assignment> expanded;
        for (const auto& a : out)
            for (const auto& v : values) {
                Assignment b = a;
                b[p.symbol] = v;
                expanded.push_back(std::move(b));
            }
        out = std::move(expanded);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verification

enum class Verdict { pass, fail, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    default: return "INCONCLUSIVE";
    }
}

struct RowVerdict {
    Verdict verdict = Verdict::fail;
    std::size_t class_count = 0;
    std::size_t orbit_size = 0;
    /// Row classes the orbit did not reach.
    std::vector<TwistClass> missing;
    /// Orbit classes outside the row.
    std::vector<TwistClass> extra;
    std::vector<DeadEnd> dead_ends;
    std::string detail;
};

/// Pass iff the orbit of a member is complete, has no undefined reflection
/// and its node set equals the instantiated class set.
inline RowVerdict verify_instantiation(const RowInstantiation& inst, std::size_t bound = catalog_orbit_bound) {
    RowVerdict v;
    v.class_count = inst.class_set.size();
    const OrbitGraph g = enumerate_orbit(inst.members.front().matrix, bound);
    v.orbit_size = g.nodes.size();
    v.dead_ends = g.dead_ends;
    const auto orbit = g.class_set();
    std::set_difference(inst.class_set.begin(), inst.class_set.end(), orbit.begin(), orbit.end(),
                        std::back_inserter(v.missing));
    std::set_difference(orbit.begin(), orbit.end(), inst.class_set.begin(), inst.class_set.end(),
                        std::back_inserter(v.extra));

    if (!v.extra.empty()) {
        v.verdict = Verdict::fail;
        v.detail = "orbit reaches " + v.extra.front().to_string() + " outside the row";
    } else if (!v.dead_ends.empty()) {
        const auto& d = v.dead_ends.front();
        v.verdict = Verdict::fail;
        v.detail = "reflection at vertex " + std::to_string(d.vertex + 1) + " undefined for " +
                   g.nodes[d.node].twist_class.to_string();
    } else if (g.status == OrbitStatus::bound_exceeded) {
        v.verdict = Verdict::inconclusive;
        v.detail = "orbit exceeded bound " + std::to_string(bound);
    } else if (!v.missing.empty()) {
        v.verdict = Verdict::fail;
        v.detail = "row class " + v.missing.front().to_string() + " not reached";
    } else {
        v.verdict = Verdict::pass;
        v.detail = std::to_string(v.class_count) + " classes";
    }
    return v;
}

inline RowVerdict verify_row(const CatalogRow& row, const Assignment& assignment,
                             std::size_t bound = catalog_orbit_bound) {
    return verify_instantiation(instantiate_row(row, assignment), bound);
}

struct RowResult {
    int row_id = 0;
    Assignment assignment;
    RowVerdict verdict;
    std::set<TwistClass> class_set;
};

struct VerifyReport {
    std::vector<RowResult> results;
    std::size_t disjoint_pairs_checked = 0;
    /// Pairs from different rows whose class sets intersect.
    std::vector<std::pair<std::size_t, std::size_t>> overlaps;
    /// Pairs of assignments within one row: identical or disjoint class sets.
    std::size_t conjugate_pairs_equal = 0;
    std::size_t conjugate_pairs_disjoint = 0;
    std::size_t conjugate_pairs_partial = 0;

    std::size_t count(Verdict v) const {
        return static_cast<std::size_t>(
            std::count_if(results.begin(), results.end(), [&](const RowResult& r) { return r.verdict.verdict == v; }));
    }

    /// Verdict of one row over all its assignments.
    Verdict row_verdict(int row_id) const {
        Verdict out = Verdict::pass;
        for (const auto& r : results) {
            if (r.row_id != row_id) continue;
            if (r.verdict.verdict == Verdict::fail) return Verdict::fail;
            if (r.verdict.verdict == Verdict::inconclusive) out = Verdict::inconclusive;
        }
        return out;
    }

    Verdict overall() const {
        if (count(Verdict::fail) > 0 || !overlaps.empty()) return Verdict::fail;
        if (count(Verdict::inconclusive) > 0) return Verdict::inconclusive;
        return Verdict::pass;
    }
};

inline std::set<std::string> scalar_universe(const std::set<TwistClass>& classes) {
    std::set<std::string> names;
    for (const auto& c : classes) {
        for (const auto& s : c.diagonal)
            for (const auto& [n, e] : s.exponents()) names.insert(n);
        for (const auto& s : c.products)
            for (const auto& [n, e] : s.exponents()) names.insert(n);
    }
    return names;
}

struct VerifyOptions {
    std::size_t bound = catalog_orbit_bound;
    /// Empty means every row.
    std::vector<int> rows;
};

inline VerifyReport verify_all(const Catalog& catalog, const VerifyOptions& options = {}) {
    VerifyReport report;
    for (const auto& row : catalog) {
        if (!options.rows.empty() &&
            std::find(options.rows.begin(), options.rows.end(), row.row_id) == options.rows.end())
            continue;
        for (const auto& a : admissible_assignments(row)) {
            const RowInstantiation inst = instantiate_row(row, a);
            report.results.push_back({row.row_id, a, verify_instantiation(inst, options.bound), inst.class_set});
        }
    }

    std::vector<std::set<std::string>> universes;
    for (const auto& r : report.results) universes.push_back(scalar_universe(r.class_set));

    for (std::size_t i = 0; i < report.results.size(); ++i)
        for (std::size_t j = i + 1; j < report.results.size(); ++j) {
            const auto& a = report.results[i].class_set;
            const auto& b = report.results[j].class_set;
            std::vector<TwistClass> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (report.results[i].row_id == report.results[j].row_id) {
                if (a == b)
                    ++report.conjugate_pairs_equal;
                else if (common.empty())
                    ++report.conjugate_pairs_disjoint;
                else
                    ++report.conjugate_pairs_partial;
                continue;
            }
            if (universes[i] != universes[j]) continue;
            ++report.disjoint_pairs_checked;
            if (!common.empty()) report.overlaps.emplace_back(i, j);
        }
    return report;
}

// ---------------------------------------------------------------------------
// Classification

struct Classification {
    enum class Kind { match, no_match, inconclusive };
    Kind kind = Kind::no_match;
    int row_id = 0;
    Assignment assignment;
    /// The row member whose class lies in the orbit of the input.
    std::optional<RowMember> member;
    /// Value of the free parameter for that member, if the row has one.
    std::optional<std::pair<std::string, Scalar>> free_value;
};

namespace detail {

/// Candidate values of transcendental fixed symbols, found by matching a
/// form entry with a single such symbol to exponent +-1 against a target.
inline void collect_candidates(const CatalogRow& row, const Assignment& known, const OrbitGraph& orbit,
                               std::map<std::string, std::set<Scalar>>& out) {
    std::vector<std::string> unknown;
    for (const auto& p : row.fixed)
        if (p.domain.kind == ParamDomain::Kind::transcendental) unknown.push_back(p.symbol);
    if (unknown.empty()) return;

    const std::size_t n_free = row.free ? row.free->values.size() : 1;
    for (const auto& node : orbit.nodes) {
        const auto& c = node.twist_class;
        const std::array<std::array<Scalar, 3>, 2> targets{{{c.diagonal[0], c.products[0], c.diagonal[1]},
                                                            {c.diagonal[1], c.products[0], c.diagonal[0]}}};
        for (std::size_t fi = 0; fi < n_free; ++fi) {
            Assignment env = known;
            if (row.free) env[row.free->symbol] = substitute(row.free->values[fi], known);
            for (const auto& form : row.forms)
                for (const auto& target : targets)
                    for (std::size_t k = 0; k < 3; ++k) {
                        const Scalar e = substitute(form[k], env);
                        for (const auto& sym : unknown) {
                            const std::int64_t x = e.exponent_of(sym);
                            if (x != 1 && x != -1) continue;
                            const bool only = std::all_of(unknown.begin(), unknown.end(), [&](const std::string& o) {
                                return o == sym || e.exponent_of(o) == 0;
                            });
                            if (!only) continue;
                            const Scalar rest = e / Scalar::parameter(sym, x);
                            out[sym].insert((target[k] / rest).pow(x));
                        }
                    }
        }
    }
}

} // namespace detail

/// Finds the first row (ascending id) and admissible assignment whose
/// instantiated classes meet the orbit of M.
inline Classification classify(const Catalog& catalog, const BraidingMatrix& M,
                               std::size_t bound = catalog_orbit_bound) {
    if (M.rank() != 2) throw rank_mismatch("classification needs a rank 2 matrix");
    const OrbitGraph orbit = enumerate_orbit(M, bound);
    const std::set<TwistClass> reached = orbit.class_set();

    for (const auto& row : catalog) {
        // Root-of-unity symbols: all primitive roots.
        std::vector<Assignment> partial{Assignment{}};
        for (const auto& p : row.fixed) {
            if (p.domain.kind != ParamDomain::Kind::roots_of_unity) continue;
            std::vector<Assignment> next;
            for (const auto& a : partial)
                for (auto ord : p.domain.orders)
                    for (const auto& v : primitive_roots(ord)) {
                        Assignment b = a;
                        b[p.symbol] = v;
                        next.push_back(std::move(b));
                    }
            partial = std::move(next);
        }

        for (const auto& base : partial) {
            std::map<std::string, std::set<Scalar>> candidates;
            detail::collect_candidates(row, base, orbit, candidates);

            std::vector<Assignment> full{base};
            for (const auto& p : row.fixed) {
                if (p.domain.kind != ParamDomain::Kind::transcendental) continue;
                std::vector<Assignment> next;
                for (const auto& a : full)
                    for (const auto& v : candidates[p.symbol]) {
                        Assignment b = a;
                        b[p.symbol] = v;
                        next.push_back(std::move(b));
                    }
                full = std::move(next);
            }

            for (const auto& a : full) {
                RowInstantiation inst;
                try {
                    inst = instantiate_row(row, a);
                } catch (const domain_violation&) {
                    continue;
                }
                for (const auto& m : inst.members) {
                    if (!reached.contains(m.twist_class)) continue;
                    Classification out;
                    out.kind = Classification::Kind::match;
                    out.row_id = row.row_id;
                    out.assignment = a;
                    out.member = m;
                    if (row.free) {
                        Assignment env = a;
                        out.free_value.emplace(row.free->symbol, substitute(row.free->values[m.free_index], env));
                    }
                    return out;
                }
            }
        }
    }
    Classification out;
    out.kind = orbit.status == OrbitStatus::complete ? Classification::Kind::no_match
                                                     : Classification::Kind::inconclusive;
    return out;
}

} // namespace weyl

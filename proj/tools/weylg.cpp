// weylg: reflections, Weyl-Brandt groupoid orbits and the rank 2 table from
// the command line.
//
// Exit codes: 0 success / pass, 1 fail / not equivalent / no match /
// reflection undefined, 2 inconclusive / bound exceeded, 64 usage or parse error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "weyl/weyl.hpp"

namespace {

using nlohmann::json;
using namespace weyl;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_usage = 64;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string matrix;
    std::string file;
    std::string second;
    std::string catalog;
    std::optional<std::size_t> bound;
    std::size_t vertex = 0;
    std::vector<int> rows;
    std::string format = "text";
};

BraidingMatrix load_input(const Options& o) {
    if (!o.matrix.empty() && !o.file.empty()) throw usage_error("give either --matrix or --file, not both");
    if (!o.matrix.empty()) return parse_matrix(o.matrix);
    if (!o.file.empty()) return read_matrix_file(o.file);
    throw usage_error("an input matrix is required (--matrix or --file)");
}

BraidingMatrix load_second(const std::string& text) {
    if (text.empty()) throw usage_error("--second is required");
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) return read_matrix_file(text);
    return parse_matrix(text);
}

Catalog load_catalog_option(const Options& o) {
    if (o.catalog.empty()) return builtin_catalog();
    std::ifstream in(o.catalog);
    if (!in) throw usage_error("cannot open catalog '" + o.catalog + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

std::size_t bound_or(const Options& o, std::size_t fallback) { return o.bound.value_or(fallback); }

std::string format_height(const Height& h) { return h ? std::to_string(*h) : "inf"; }

std::string format_m(const std::optional<std::int64_t>& m) { return m ? std::to_string(*m) : "undefined"; }

json int_vector(const std::vector<std::int64_t>& v) { return json(v); }

json base_json(const char* command) { return {{"schema", json_schema_version}, {"command", command}}; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_reflect(const Options& o) {
    const BraidingMatrix M = load_input(o);
    if (o.vertex < 1 || o.vertex > M.rank())
        throw usage_error("--i must be between 1 and " + std::to_string(M.rank()));
    const std::size_t i = o.vertex - 1;
    const ReflectionData r = reflect(M, i);
    const TwistClass cls = canonicalize(r.reflected);

    if (o.format == "json") {
        json j = base_json("reflect");
        json p = json::array();
        for (std::size_t k = 0; k < r.p_row.size(); ++k) p.push_back(k == i ? json(nullptr) : json(r.p_row[k].to_string()));
        j["vertex"] = o.vertex;
        j["m_row"] = int_vector(r.m_row);
        j["p_row"] = p;
        j["s"] = to_json(r.s_matrix);
        j["reflected"] = to_json(r.reflected);
        j["class"] = to_json(cls);
        print_json(j);
        return exit_ok;
    }
    std::cout << "vertex: " << o.vertex << "\n";
    std::cout << "m:";
    for (std::size_t k = 0; k < r.m_row.size(); ++k)
        std::cout << " m" << o.vertex << k + 1 << "=" << r.m_row[k];
    std::cout << "\np:";
    for (std::size_t k = 0; k < r.p_row.size(); ++k)
        if (k != i) std::cout << " p" << o.vertex << k + 1 << "=" << r.p_row[k];
    std::cout << "\ns: " << r.s_matrix << "  (column j is s(e_j))\n";
    std::cout << "reflected: " << r.reflected << "\n";
    std::cout << "class: " << cls << "\n";
    return exit_ok;
}

int cmd_mij(const Options& o) {
    const BraidingMatrix M = load_input(o);
    const std::size_t n = M.rank();
    if (o.format == "json") {
        json entries = json::array();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const auto m = m_exponent(M, i, j);
                entries.push_back({{"i", i + 1}, {"j", j + 1}, {"m", m ? json(*m) : json(nullptr)}});
            }
        json out = base_json("mij");
        out["m"] = entries;
        print_json(out);
        return exit_ok;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) std::cout << "m" << i + 1 << j + 1 << " = " << format_m(m_exponent(M, i, j)) << "\n";
    return exit_ok;
}

int cmd_cartan(const Options& o) {
    const BraidingMatrix M = load_input(o);
    const IntMatrix a = cartan_matrix(M);
    if (o.format == "json") {
        json out = base_json("cartan");
        out["cartan"] = to_json(a);
        print_json(out);
    } else {
        std::cout << a << "\n";
    }
    return exit_ok;
}

int cmd_canon(const Options& o) {
    const BraidingMatrix M = load_input(o);
    const CanonicalForm cf = canonicalize_with_permutation(M);
    const BraidingMatrix rep = rep_matrix(cf.twist_class);
    if (o.format == "json") {
        json out = base_json("canon");
        out["class"] = to_json(cf.twist_class);
        out["representative"] = to_json(rep);
        json pos = json::array();
        for (auto p : cf.position) pos.push_back(p + 1);
        out["position"] = pos;
        print_json(out);
    } else {
        std::cout << "class: " << cf.twist_class << "\n";
        std::cout << "representative: " << rep << "\n";
        std::cout << "position:";
        for (auto p : cf.position) std::cout << " " << p + 1;
        std::cout << "\n";
    }
    return exit_ok;
}

int cmd_orbit(const Options& o) {
    const BraidingMatrix M = load_input(o);
    const OrbitGraph g = enumerate_orbit(M, bound_or(o, default_orbit_bound));
    if (o.format == "json") {
        json out = to_json(g);
        out["command"] = "orbit";
        print_json(out);
    } else if (o.format == "dot") {
        std::cout << to_dot(g);
    } else {
        std::cout << "status: " << to_string(g.status) << "\n";
        std::cout << "nodes: " << g.nodes.size() << "\n";
        for (const auto& n : g.nodes)
            std::cout << "  " << n.index << ": " << n.twist_class << "  rep: " << n.representative << "\n";
        std::cout << "edges:\n";
        for (const auto& e : g.edges)
            std::cout << "  " << e.from << " --s" << e.vertex + 1 << "--> " << e.to << "  s=" << e.s << "\n";
        if (!g.dead_ends.empty()) {
            std::cout << "dead ends:\n";
            for (const auto& d : g.dead_ends) std::cout << "  " << d.node << " at vertex " << d.vertex + 1 << "\n";
        }
    }
    return g.status == OrbitStatus::complete ? exit_ok : exit_inconclusive;
}

int cmd_roots(const Options& o) {
    const BraidingMatrix M = load_input(o);
    const auto roots = enumerate_real_roots(M, bound_or(o, default_orbit_bound));
    if (o.format == "json") {
        json out = base_json("roots");
        out["status"] = roots ? "complete" : "inconclusive";
        json list = json::array();
        if (roots)
            for (const auto& r : *roots)
                list.push_back({{"root", r.root}, {"height", r.height ? json(*r.height) : json("inf")}});
        out["roots"] = list;
        print_json(out);
    } else if (roots) {
        std::cout << "roots: " << roots->size() << "\n";
        for (const auto& r : *roots) {
            std::cout << "  (";
            for (std::size_t k = 0; k < r.root.size(); ++k) std::cout << (k ? "," : "") << r.root[k];
            std::cout << ")  height " << format_height(r.height) << "\n";
        }
    } else {
        std::cout << "inconclusive: more than " << bound_or(o, default_orbit_bound) << " bases reached\n";
    }
    return roots ? exit_ok : exit_inconclusive;
}

int cmd_equiv(const Options& o) {
    const BraidingMatrix A = load_input(o);
    const BraidingMatrix B = load_second(o.second);
    const Equivalence e = weyl_equivalent(A, B, bound_or(o, default_orbit_bound));
    if (o.format == "json") {
        json out = base_json("equiv");
        out["result"] = to_string(e);
        print_json(out);
    } else {
        std::cout << to_string(e) << "\n";
    }
    switch (e) {
    case Equivalence::equivalent: return exit_ok;
    case Equivalence::not_equivalent: return exit_negative;
    default: return exit_inconclusive;
    }
}

int cmd_classify(const Options& o) {
    const BraidingMatrix M = load_input(o);
    const Catalog catalog = load_catalog_option(o);
    const Classification c = classify(catalog, M, bound_or(o, catalog_orbit_bound));
    const char* kind = c.kind == Classification::Kind::match      ? "match"
                       : c.kind == Classification::Kind::no_match ? "no_match"
                                                                  : "inconclusive";
    if (o.format == "json") {
        json out = base_json("classify");
        out["result"] = kind;
        if (c.kind == Classification::Kind::match) {
            out["row"] = c.row_id;
            json a = json::object();
            for (const auto& [k, v] : c.assignment) a[k] = v.to_string();
            out["assignment"] = a;
            if (c.free_value) out["free"] = {{c.free_value->first, c.free_value->second.to_string()}};
            out["form"] = c.member->form_index + 1;
        }
        print_json(out);
    } else if (c.kind == Classification::Kind::match) {
        std::cout << "match: row " << c.row_id;
        if (!c.assignment.empty()) std::cout << " with " << to_string(c.assignment);
        if (c.free_value) std::cout << " (free " << c.free_value->first << "=" << c.free_value->second << ")";
        std::cout << ", form " << c.member->form_index + 1 << "\n";
    } else {
        std::cout << kind << "\n";
    }
    switch (c.kind) {
    case Classification::Kind::match: return exit_ok;
    case Classification::Kind::no_match: return exit_negative;
    default: return exit_inconclusive;
    }
}

int cmd_verify(const Options& o) {
    const Catalog catalog = load_catalog_option(o);
    VerifyOptions vo;
    vo.bound = bound_or(o, catalog_orbit_bound);
    vo.rows = o.rows;
    for (int r : vo.rows) (void)find_row(catalog, r);
    const VerifyReport report = verify_all(catalog, vo);

    std::vector<int> row_ids;
    for (const auto& r : report.results)
        if (row_ids.empty() || row_ids.back() != r.row_id) row_ids.push_back(r.row_id);

    if (o.format == "json") {
        json out = base_json("verify");
        json rows = json::array();
        for (int id : row_ids) {
            json inst = json::array();
            for (const auto& r : report.results) {
                if (r.row_id != id) continue;
                json a = json::object();
                for (const auto& [k, v] : r.assignment) a[k] = v.to_string();
                inst.push_back({{"assignment", a},
                                {"verdict", to_string(r.verdict.verdict)},
                                {"classes", r.verdict.class_count},
                                {"orbit", r.verdict.orbit_size},
                                {"detail", r.verdict.detail}});
            }
            rows.push_back({{"row", id}, {"verdict", to_string(report.row_verdict(id))}, {"instantiations", inst}});
        }
        out["rows"] = rows;
        out["disjoint_pairs_checked"] = report.disjoint_pairs_checked;
        out["overlaps"] = report.overlaps.size();
        out["conjugates"] = {{"equal", report.conjugate_pairs_equal},
                             {"disjoint", report.conjugate_pairs_disjoint},
                             {"partial", report.conjugate_pairs_partial}};
        out["result"] = to_string(report.overall());
        print_json(out);
    } else {
        for (int id : row_ids) {
            std::size_t n = 0, pass = 0;
            std::string first_problem;
            for (const auto& r : report.results) {
                if (r.row_id != id) continue;
                ++n;
                if (r.verdict.verdict == Verdict::pass)
                    ++pass;
                else if (first_problem.empty())
                    first_problem = "{" + to_string(r.assignment) + "} " + r.verdict.detail;
            }
            std::cout << "row " << (id < 10 ? " " : "") << id << "  " << to_string(report.row_verdict(id)) << "  "
                      << pass << "/" << n << " instantiations";
            if (!first_problem.empty()) std::cout << "  " << first_problem;
            std::cout << "\n";
        }
        std::cout << "disjointness: " << report.disjoint_pairs_checked << " cross-row pairs, "
                  << report.overlaps.size() << " overlaps\n";
        for (const auto& [a, b] : report.overlaps)
            std::cout << "  overlap: row " << report.results[a].row_id << " {" << to_string(report.results[a].assignment)
                      << "} / row " << report.results[b].row_id << " {" << to_string(report.results[b].assignment)
                      << "}\n";
        std::cout << "conjugate assignments: " << report.conjugate_pairs_equal << " equal, "
                  << report.conjugate_pairs_disjoint << " disjoint, " << report.conjugate_pairs_partial
                  << " partial\n";
        std::cout << "result: " << to_string(report.overall()) << "\n";
    }
    switch (report.overall()) {
    case Verdict::pass: return exit_ok;
    case Verdict::fail: return exit_negative;
    default: return exit_inconclusive;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weyl-Brandt groupoids of braided vector spaces of diagonal type"};
    app.require_subcommand(1);
    Options o;

    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("--matrix", o.matrix, "inline matrix, e.g. \"t, 1; t^-1, -1\"");
        sub->add_option("--file", o.file, "matrix document (JSON with rank and entries)");
    };
    const auto add_bound = [&](CLI::App* sub) {
        sub->add_option("--bound", o.bound, "node bound for orbit enumeration")->check(CLI::PositiveNumber);
    };
    const auto add_format = [&](CLI::App* sub, bool dot) {
        sub->add_option("--format", o.format, "output format")
            ->check(dot ? CLI::IsMember({"text", "json", "dot"}) : CLI::IsMember({"text", "json"}));
    };

    struct Entry {
        CLI::App* app;
        int (*run)(const Options&);
    };
    std::vector<Entry> commands;

    auto* reflect_cmd = app.add_subcommand("reflect", "reflect at a vertex");
    add_input(reflect_cmd);
    add_format(reflect_cmd, false);
    reflect_cmd->add_option("--i", o.vertex, "vertex (1-based)")->required();
    commands.push_back({reflect_cmd, cmd_reflect});

    auto* mij_cmd = app.add_subcommand("mij", "print every m_ij");
    add_input(mij_cmd);
    add_format(mij_cmd, false);
    commands.push_back({mij_cmd, cmd_mij});

    auto* cartan_cmd = app.add_subcommand("cartan", "generalized Cartan matrix");
    add_input(cartan_cmd);
    add_format(cartan_cmd, false);
    commands.push_back({cartan_cmd, cmd_cartan});

    auto* canon_cmd = app.add_subcommand("canon", "canonical twist class");
    add_input(canon_cmd);
    add_format(canon_cmd, false);
    commands.push_back({canon_cmd, cmd_canon});

    auto* orbit_cmd = app.add_subcommand("orbit", "groupoid orbit of the twist class");
    add_input(orbit_cmd);
    add_bound(orbit_cmd);
    add_format(orbit_cmd, true);
    commands.push_back({orbit_cmd, cmd_orbit});

    auto* roots_cmd = app.add_subcommand("roots", "real roots with heights");
    add_input(roots_cmd);
    add_bound(roots_cmd);
    add_format(roots_cmd, false);
    commands.push_back({roots_cmd, cmd_roots});

    auto* equiv_cmd = app.add_subcommand("equiv", "Weyl equivalence test");
    add_input(equiv_cmd);
    add_bound(equiv_cmd);
    add_format(equiv_cmd, false);
    equiv_cmd->add_option("--second", o.second, "second matrix (inline or file)")->required();
    commands.push_back({equiv_cmd, cmd_equiv});

    auto* classify_cmd = app.add_subcommand("classify", "find the table row of a rank 2 matrix");
    add_input(classify_cmd);
    add_bound(classify_cmd);
    add_format(classify_cmd, false);
    classify_cmd->add_option("--catalog", o.catalog, "catalog data file (default: built-in table)");
    commands.push_back({classify_cmd, cmd_classify});

    auto* verify_cmd = app.add_subcommand("verify", "verify the rank 2 table");
    add_bound(verify_cmd);
    add_format(verify_cmd, false);
    verify_cmd->add_option("--row", o.rows, "restrict to these rows");
    verify_cmd->add_option("--catalog", o.catalog, "catalog data file (default: built-in table)");
    commands.push_back({verify_cmd, cmd_verify});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    for (const auto& c : commands) {
        if (!c.app->parsed()) continue;
        try {
            return c.run(o);
        } catch (const usage_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return exit_usage;
        } catch (const parse_error& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return exit_usage;
        } catch (const not_reflectable& e) {
            std::cerr << "error: " << e.what() << "\n";
            return exit_negative;
        } catch (const weyl::error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return exit_usage;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return exit_usage;
        }
    }
    return exit_usage;
}

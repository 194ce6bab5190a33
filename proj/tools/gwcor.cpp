// gwcor: exact calculator for symmetric bilinear forms and quadratic
// correspondences over Q and over odd prime fields.
//
// One subcommand per public operation; every result is a single JSON document
// on standard output.  Exit codes: 0 success, 1 failed mathematical check,
// 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gwcor/cancel.hpp"
#include "gwcor/correspondence.hpp"
#include "gwcor/errors.hpp"
#include "gwcor/fields.hpp"
#include "gwcor/gw.hpp"
#include "gwcor/json_io.hpp"
#include "gwcor/quadspace.hpp"
#include "gwcor/residue.hpp"
#include "gwcor/verify.hpp"

namespace {

using gwcor::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gwcor::input_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw gwcor::input_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void emit(const json& j, const std::string& copy_path) {
    const std::string text = j.dump(2);
    if (!copy_path.empty()) {
        std::ofstream out(copy_path);
        if (!out) throw gwcor::input_error("cannot write file: " + copy_path);
        out << text << "\n";
    }
    std::cout << text << "\n";
}

gwcor::FieldDesc field_desc_of_file(const json& j, const std::string& what) {
    return gwcor::field_from_json(gwcor::jsondetail::member(j, "field", what),
                                  what + ".field");
}

gwcor::FieldDesc field_desc_of_flag(const std::string& spec) {
    if (spec == "q" || spec == "Q") return gwcor::FieldDesc{true, 0};
    if (spec.rfind("fp:", 0) == 0) {
        const std::string num = spec.substr(3);
        std::uint64_t p = 0;
        for (const char c : num) {
            if (c < '0' || c > '9')
                throw gwcor::input_error("bad field spec '" + spec + "'");
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
            if (p > (std::uint64_t(1) << 40))
                throw gwcor::input_error("field modulus out of range in '" + spec + "'");
        }
        return gwcor::FieldDesc{false, p};
    }
    throw gwcor::input_error("unknown field spec '" + spec +
                             "' (expected q or fp:<p>)");
}

bool same_desc(const gwcor::FieldDesc& a, const gwcor::FieldDesc& b) {
    return a.rational == b.rational && a.p == b.p;
}

template <class Fn>
int with_field(const gwcor::FieldDesc& fd, Fn&& fn) {
    if (fd.rational) return fn(gwcor::RationalField{});
    return fn(gwcor::PrimeField(fd.p));
}

gwcor::ResidueMode mode_of_flag(const std::string& spec) {
    if (spec == "coefficient") return gwcor::ResidueMode::coefficient;
    if (spec == "junior-trace") return gwcor::ResidueMode::junior_trace;
    throw gwcor::input_error("unknown mode '" + spec +
                             "' (expected coefficient or junior-trace)");
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

int cmd_invariants(const std::string& file, const std::string& copy) {
    const json j = read_json_file(file);
    return with_field(field_desc_of_file(j, "form"), [&](const auto& k) {
        const auto q = gwcor::quadspace_from_json(k, j);
        emit(gwcor::invariants_to_json(k, gwcor::gw_invariants(q)), copy);
        return 0;
    });
}

int cmd_equal(const std::string& file_a, const std::string& file_b, bool witt,
              const std::string& copy) {
    const json ja = read_json_file(file_a);
    const json jb = read_json_file(file_b);
    const auto da = field_desc_of_file(ja, "first form");
    const auto db = field_desc_of_file(jb, "second form");
    if (!same_desc(da, db))
        throw gwcor::input_error("the two forms live over different fields");
    return with_field(da, [&](const auto& k) {
        const auto a = gwcor::quadspace_from_json(k, ja, "first form");
        const auto b = gwcor::quadspace_from_json(k, jb, "second form");
        const bool eq = witt ? gwcor::witt_equal(a, b) : gwcor::gw_equal(a, b);
        emit(json{{"equal", eq}}, copy);
        return 0;
    });
}

int cmd_diagonalize(const std::string& file, const std::string& copy) {
    const json j = read_json_file(file);
    return with_field(field_desc_of_file(j, "form"), [&](const auto& k) {
        const auto q = gwcor::quadspace_from_json(k, j);
        const auto d = gwcor::diagonalize(q);
        json diag = json::array();
        for (const auto& e : d) diag.push_back(k.str(e));
        emit(json{{"field", gwcor::field_to_json(k)}, {"diagonal", diag}}, copy);
        return 0;
    });
}

int cmd_residue_form(const std::string& file, const std::string& mode_spec,
                     const std::string& copy) {
    const json j = read_json_file(file);
    const auto mode = mode_of_flag(mode_spec);
    return with_field(field_desc_of_file(j, "modulus"), [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        const gwcor::LaurentRing<K> R{k};
        const auto L = gwcor::laurent_from_json(
            k, gwcor::jsondetail::member(j, "modulus", "modulus"), "modulus.modulus");
        const auto rs = gwcor::residue_space(R, L, mode);
        emit(json{{"field", gwcor::field_to_json(k)},
                  {"gram", gwcor::scalar_matrix_to_json(k, rs.space.gram)},
                  {"t_action", gwcor::scalar_matrix_to_json(k, rs.t_action)},
                  {"dimension", rs.space.rank()}},
             copy);
        return 0;
    });
}

int cmd_compose(const std::string& outer_file, const std::string& inner_file,
                const std::string& copy) {
    const json jo = read_json_file(outer_file);
    const json ji = read_json_file(inner_file);
    const auto d_outer = field_desc_of_file(jo, "outer correspondence");
    const auto d_inner = field_desc_of_file(ji, "inner correspondence");
    if (!same_desc(d_outer, d_inner))
        throw gwcor::input_error("the two correspondences live over different fields");
    return with_field(d_outer, [&](const auto& k) {
        const auto outer = gwcor::corr_from_json(k, jo, "outer correspondence");
        const auto inner = gwcor::corr_from_json(k, ji, "inner correspondence");
        emit(gwcor::corr_to_json(gwcor::compose(outer, inner)), copy);
        return 0;
    });
}

int cmd_boxtimes(const std::string& file, const std::string& copy) {
    const json j = read_json_file(file);
    return with_field(field_desc_of_file(j, "form"), [&](const auto& k) {
        const auto q = gwcor::quadspace_from_json(k, j);
        emit(gwcor::corr_to_json(gwcor::boxtimes_gm(q)), copy);
        return 0;
    });
}

int cmd_rho(const std::string& file, long n, const std::string& copy) {
    const json j = read_json_file(file);
    return with_field(field_desc_of_file(j, "correspondence"), [&](const auto& k) {
        const auto c = gwcor::corr_from_json(k, j);
        const auto cls = gwcor::rho_n(c, n);
        emit(json{{"n", n},
                  {"rank", cls.rank()},
                  {"pos", gwcor::quadspace_to_json(cls.pos)},
                  {"neg", gwcor::quadspace_to_json(cls.neg)},
                  {"pos_invariants",
                   gwcor::invariants_to_json(k, gwcor::gw_invariants(cls.pos))},
                  {"neg_invariants",
                   gwcor::invariants_to_json(k, gwcor::gw_invariants(cls.neg))}},
             copy);
        return 0;
    });
}

int cmd_left_inverse(const std::string& file, long n, const std::string& copy) {
    const json j = read_json_file(file);
    return with_field(field_desc_of_file(j, "form"), [&](const auto& k) {
        const auto q = gwcor::quadspace_from_json(k, j);
        const auto rep = gwcor::left_inverse_check(q, n);
        emit(json{{"pass", rep.pass},
                  {"n", rep.n},
                  {"beta", k.str(rep.beta)},
                  {"lhs_invariants", gwcor::invariants_to_json(k, rep.lhs_cross)},
                  {"rhs_invariants", gwcor::invariants_to_json(k, rep.rhs_cross)}},
             copy);
        return rep.pass ? 0 : 1;
    });
}

int cmd_permutation(const std::string& field_spec, const std::string& x_text,
                    const std::string& y_text, const std::string& mode_spec,
                    const std::string& copy) {
    const auto mode = mode_of_flag(mode_spec);
    return with_field(field_desc_of_flag(field_spec), [&](const auto& k) {
        const auto x = k.parse(x_text);
        const auto y = k.parse(y_text);
        const auto rep = gwcor::permutation_fiber_check(k, x, y, mode);
        emit(json{{"pass", rep.pass()},
                  {"split", rep.pass_split},
                  {"metabolic", rep.pass_metabolic},
                  {"residue_invariants", gwcor::invariants_to_json(k, rep.residue_inv)},
                  {"expected_invariants",
                   gwcor::invariants_to_json(k, rep.expected_inv)}},
             copy);
        return rep.pass() ? 0 : 1;
    });
}

int cmd_witt_table(std::uint64_t p, const std::string& copy) {
    const auto t = gwcor::witt_table(p);
    json add = json::array();
    for (const auto& row : t.add) {
        json r = json::array();
        for (const int v : row) r.push_back(v);
        add.push_back(std::move(r));
    }
    emit(json{{"p", t.p},
              {"group", t.group},
              {"representatives", t.reps},
              {"addition", add},
              {"unit_class_order", t.unit_class_order}},
         copy);
    return 0;
}

int cmd_verify(std::uint64_t seed, const std::string& copy) {
    const auto cases = gwcor::run_verify_suite(seed);
    json rows = json::array();
    for (const auto& c : cases) {
        json row{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) row["detail"] = c.detail;
        rows.push_back(std::move(row));
    }
    const bool ok = gwcor::all_pass(cases);
    emit(json{{"seed", seed}, {"pass", ok}, {"cases", rows}}, copy);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Grothendieck-Witt form and correspondence calculator"};
    app.require_subcommand(1);

    std::string copy_path;
    app.add_option("--json", copy_path,
                   "also write the result document to this path")
        ->expected(1);
    app.fallthrough();

    std::string file_a, file_b, field_spec = "q", mode_spec = "coefficient";
    std::string x_text, y_text;
    long n = 2;
    std::uint64_t seed = 0, table_p = 3;

    auto* sc_inv = app.add_subcommand("invariants",
                                      "complete invariant tuple of a form");
    sc_inv->add_option("form", file_a, "form JSON file")->required();

    auto* sc_eqgw = app.add_subcommand("equal-gw", "isometry decision for two forms");
    sc_eqgw->add_option("a", file_a, "first form JSON file")->required();
    sc_eqgw->add_option("b", file_b, "second form JSON file")->required();

    auto* sc_eqw =
        app.add_subcommand("equal-w", "Witt-class equality decision for two forms");
    sc_eqw->add_option("a", file_a, "first form JSON file")->required();
    sc_eqw->add_option("b", file_b, "second form JSON file")->required();

    auto* sc_diag = app.add_subcommand("diagonalize", "orthogonal diagonalization");
    sc_diag->add_option("form", file_a, "form JSON file")->required();

    auto* sc_res = app.add_subcommand(
        "residue-form", "residue pairing of a Laurent modulus on its quotient algebra");
    sc_res->add_option("modulus", file_a, "JSON file with field and modulus")
        ->required();
    sc_res->add_option("--mode", mode_spec, "coefficient (default) or junior-trace");

    auto* sc_comp = app.add_subcommand("compose", "composition outer after inner");
    sc_comp->add_option("outer", file_a, "outer correspondence JSON file")->required();
    sc_comp->add_option("inner", file_b, "inner correspondence JSON file")->required();

    auto* sc_box = app.add_subcommand(
        "boxtimes", "box a constant form into a correspondence with shift action");
    sc_box->add_option("form", file_a, "form JSON file")->required();

    auto* sc_rho = app.add_subcommand(
        "rho", "reduction class of a correspondence at shift exponent n");
    sc_rho->add_option("correspondence", file_a, "correspondence JSON file")
        ->required();
    sc_rho->add_option("--n", n, "shift exponent (default 2)");

    auto* sc_li = app.add_subcommand("left-inverse-check",
                                     "round-trip identity for a boxed form");
    sc_li->add_option("form", file_a, "form JSON file")->required();
    sc_li->add_option("--n", n, "shift exponent (default 2)");

    auto* sc_perm = app.add_subcommand("permutation-check",
                                       "fiber identity at an off-diagonal point");
    sc_perm->add_option("x", x_text, "first coordinate (scalar string)")->required();
    sc_perm->add_option("y", y_text, "second coordinate (scalar string)")->required();
    sc_perm->add_option("--field", field_spec, "q (default) or fp:<p>");
    sc_perm->add_option("--mode", mode_spec, "coefficient (default) or junior-trace");

    auto* sc_wt = app.add_subcommand("witt-table", "Witt group table of F_p");
    sc_wt->add_option("p", table_p, "odd prime modulus")->required();

    auto* sc_ver = app.add_subcommand("verify", "run the named verification suite");
    sc_ver->add_option("--seed", seed, "seed for randomized cases (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << json{{"error", e.what()}, {"kind", "input-error"}}.dump(2)
                  << "\n";
        return 2;
    }

    try {
        if (sc_inv->parsed()) return cmd_invariants(file_a, copy_path);
        if (sc_eqgw->parsed()) return cmd_equal(file_a, file_b, false, copy_path);
        if (sc_eqw->parsed()) return cmd_equal(file_a, file_b, true, copy_path);
        if (sc_diag->parsed()) return cmd_diagonalize(file_a, copy_path);
        if (sc_res->parsed()) return cmd_residue_form(file_a, mode_spec, copy_path);
        if (sc_comp->parsed()) return cmd_compose(file_a, file_b, copy_path);
        if (sc_box->parsed()) return cmd_boxtimes(file_a, copy_path);
        if (sc_rho->parsed()) return cmd_rho(file_a, n, copy_path);
        if (sc_li->parsed()) return cmd_left_inverse(file_a, n, copy_path);
        if (sc_perm->parsed())
            return cmd_permutation(field_spec, x_text, y_text, mode_spec, copy_path);
        if (sc_wt->parsed()) return cmd_witt_table(table_p, copy_path);
        if (sc_ver->parsed()) return cmd_verify(seed, copy_path);
        throw gwcor::input_error("no subcommand given");
    } catch (const gwcor::input_error& e) {
        std::cout << json{{"error", e.what()}, {"kind", "input-error"}}.dump(2)
                  << "\n";
        return 2;
    } catch (const gwcor::math_check_error& e) {
        std::cout << json{{"error", e.what()}, {"kind", "math-check-error"}}.dump(2)
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}, {"kind", "internal-error"}}.dump(2)
                  << "\n";
        return 1;
    }
}

#include "hess/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hess/errors.hpp"
#include "hess/fq.hpp"
#include "hess/hessenberg.hpp"
#include "hess/highest_weight.hpp"
#include "hess/permutation.hpp"
#include "hess/root_system.hpp"
#include "hess/selftest.hpp"

namespace hess::cli {

namespace {

using nlohmann::json;

int checked_n(const HessenbergFunction& h, int n_flag) {
    if (n_flag > 0 && n_flag != h.size()) {
        throw std::invalid_argument("--n disagrees with the length of --h");
    }
    return h.size();
}

FqMatrix parse_operator(const std::string& spec, int n, int q) {
    if (spec == "e1n") return FqMatrix::e1n(n, q);
    if (spec == "regular-nilpotent") return FqMatrix::regular_nilpotent(n, q);
    if (spec == "semisimple-example") return FqMatrix::semisimple_example(n, q);
    std::string text = spec;
    if (!spec.empty() && spec.front() == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot open matrix file '" + spec.substr(1) + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    const json parsed = json::parse(text);
    if (!parsed.is_array()) throw std::invalid_argument("matrix JSON must be a row-major array");
    std::vector<std::vector<int>> rows;
    for (const json& row : parsed) rows.push_back(row.get<std::vector<int>>());
    if (static_cast<int>(rows.size()) != n) {
        throw std::invalid_argument("matrix size disagrees with the hessenberg function");
    }
    return FqMatrix::from_rows(rows, q);
}

json h_json(const HessenbergFunction& h) { return json(h.values()); }

json corner_json(Corner c) { return json::array({c.i, c.j}); }

std::vector<int> parse_alpha(const std::string& text) {
    std::vector<int> coords;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        size_t used = 0;
        coords.push_back(std::stoi(token, &used));
        if (used != token.size()) throw std::invalid_argument("bad coordinate '" + token + "'");
    }
    return coords;
}

int do_decompose(const HessenbergFunction& h, bool with_cells, bool as_json, std::ostream& out) {
    const HessenbergFunction minimal = minimize_nilpotent(h);
    const DecompositionReport rep = decompose(minimal);
    if (as_json) {
        json j;
        j["n"] = rep.n;
        j["h"] = h_json(h);
        j["minimal_h"] = h_json(minimal);
        j["components"] = json::array();
        for (const Component& c : rep.components) {
            j["components"].push_back({{"corner", corner_json(c.corner)},
                                       {"w", c.w.to_string()},
                                       {"dim", c.dimension}});
        }
        j["pure"] = rep.pure;
        if (with_cells && rep.n <= 8) {
            json cells = json::array();
            for (const Permutation& s : rep.cell_set) cells.push_back(s.to_string());
            j["cells"] = cells;
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "n        = " << rep.n << "\n";
    out << "h        = " << h.to_string() << "\n";
    out << "minimal  = " << minimal.to_string() << "\n";
    out << "components:\n";
    for (const Component& c : rep.components) {
        out << "  corner (" << c.corner.i << "," << c.corner.j << ")  w = " << c.w.to_string()
            << "  dim = " << c.dimension << "\n";
    }
    out << "pure     = " << (rep.pure ? "true" : "false") << "\n";
    if (with_cells && rep.n <= 8) {
        out << "cells (" << rep.cell_set.size() << "):";
        for (const Permutation& s : rep.cell_set) out << " " << s.to_string();
        out << "\n";
    }
    return 0;
}

int do_minimize(const HessenbergFunction& h, bool as_json, std::ostream& out) {
    const HessenbergFunction minimal = minimize_nilpotent(h);
    if (as_json) {
        json j;
        j["n"] = h.size();
        j["h"] = h_json(h);
        j["minimal_h"] = h_json(minimal);
        out << j.dump(2) << "\n";
    } else {
        out << minimal.to_string() << "\n";
    }
    return 0;
}

int do_purity(const HessenbergFunction& h, bool as_json, std::ostream& out) {
    const HessenbergFunction minimal = minimize_nilpotent(h);
    const DecompositionReport rep = decompose(minimal);
    const bool banded = is_pure_banded(minimal);
    std::vector<int> dims;
    for (const Component& c : rep.components) dims.push_back(c.dimension);
    if (as_json) {
        json j;
        j["n"] = rep.n;
        j["h"] = h_json(h);
        j["minimal_h"] = h_json(minimal);
        j["dimensions"] = dims;
        j["pure"] = rep.pure;
        j["banded"] = banded;
        out << j.dump(2) << "\n";
    } else {
        out << "pure = " << (rep.pure ? "true" : "false") << " (banded = "
            << (banded ? "true" : "false") << "; dimensions:";
        for (int d : dims) out << " " << d;
        out << ")\n";
    }
    return rep.pure == banded ? 0 : 1;
}

int do_corners(const HessenbergFunction& h, bool as_json, std::ostream& out) {
    const std::vector<Corner> cs = corners(h);
    if (as_json) {
        json j;
        j["n"] = h.size();
        j["h"] = h_json(h);
        j["corners"] = json::array();
        for (Corner c : cs) j["corners"].push_back(corner_json(c));
        out << j.dump(2) << "\n";
    } else {
        out << "corners:";
        for (Corner c : cs) out << " (" << c.i << "," << c.j << ")";
        out << "\n";
    }
    return 0;
}

int do_count(const HessenbergFunction& h, int q, const std::string& xspec, bool as_json,
             std::ostream& out) {
    const FqMatrix x = parse_operator(xspec, h.size(), q);
    const std::uint64_t count = point_count(x, h);
    if (as_json) {
        json j;
        j["n"] = h.size();
        j["q"] = q;
        j["h"] = h_json(h);
        j["x"] = xspec;
        j["count"] = count;
        out << j.dump(2) << "\n";
    } else {
        out << "count = " << count << "\n";
    }
    return 0;
}

int do_verify_cell_union(int n, int q, const std::string& h_text, bool as_json,
                         std::ostream& out) {
    bool all = true;
    int checked = 0;
    json functions = json::array();
    auto check_one = [&](const HessenbergFunction& h) {
        const bool ok = verify_cell_union(h, q);
        all = all && ok;
        ++checked;
        if (!ok) functions.push_back(h_json(h));
    };
    if (!h_text.empty()) {
        check_one(HessenbergFunction::parse(h_text));
    } else {
        std::vector<int> values(static_cast<size_t>(n), 0);
        std::function<void(int, int)> rec = [&](int pos, int minimum) {
            if (pos == n) {
                check_one(HessenbergFunction(values));
                return;
            }
            for (int v = minimum; v <= n; ++v) {
                values[static_cast<size_t>(pos)] = v;
                rec(pos + 1, v);
            }
        };
        rec(0, 0);
    }
    if (as_json) {
        json j;
        j["n"] = n;
        j["q"] = q;
        j["checked"] = checked;
        j["match"] = all;
        j["failures"] = functions;
        out << j.dump(2) << "\n";
    } else {
        out << "cell-union law over " << checked << " function(s): " << (all ? "OK" : "FAILED")
            << "\n";
    }
    return all ? 0 : 1;
}

int do_verify_semisimple(int n, int q, bool as_json, std::ostream& out) {
    const SemisimpleCheck check = verify_semisimple_example(n, q);
    if (as_json) {
        json j;
        j["n"] = n;
        j["q"] = q;
        j["count"] = check.actual;
        j["predicted"] = check.predicted;
        j["match"] = check.match();
        j["split"] = {{"containing_en", check.flags_with_en},
                      {"fixed_hyperplane", check.flags_fixed_hyperplane}};
        out << j.dump(2) << "\n";
    } else {
        out << "predicted = " << check.predicted << ", actual = " << check.actual << " ("
            << (check.match() ? "OK" : "FAILED") << "; classes " << check.flags_with_en << " + "
            << check.flags_fixed_hyperplane << ")\n";
    }
    return check.match() ? 0 : 1;
}

int do_verify_equivalence(const HessenbergFunction& h, const HessenbergFunction& h2, int q,
                          const std::string& xspec, bool as_json, std::ostream& out) {
    const FqMatrix x = parse_operator(xspec, h.size(), q);
    const bool equal = verify_equivalence(x, h, h2);
    if (as_json) {
        json j;
        j["n"] = h.size();
        j["q"] = q;
        j["h"] = h_json(h);
        j["h2"] = h_json(h2);
        j["x"] = xspec;
        j["equal"] = equal;
        out << j.dump(2) << "\n";
    } else {
        out << "member flag sets " << (equal ? "identical" : "differ") << "\n";
    }
    return equal ? 0 : 1;
}

int do_verify_not_cell_union(const HessenbergFunction& h, int q, const std::string& xspec,
                             bool as_json, std::ostream& out) {
    const FqMatrix x = parse_operator(xspec, h.size(), q);
    const bool witness = verify_not_cell_union(x, h);
    if (as_json) {
        json j;
        j["n"] = h.size();
        j["q"] = q;
        j["h"] = h_json(h);
        j["x"] = xspec;
        j["not_cell_union"] = witness;
        out << j.dump(2) << "\n";
    } else {
        out << (witness ? "some Schubert cell is split by the membership condition\n"
                        : "every Schubert cell is entirely in or out (a cell union)\n");
    }
    return witness ? 0 : 1;
}

std::string coord_string(const std::vector<int>& coords) {
    std::string out;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(coords[i]);
    }
    return out;
}

int do_roots(const std::string& system, const std::string& alpha_text, bool as_json,
             std::ostream& out) {
    const RootSystem rs = RootSystem::build(system);
    const std::vector<int> coords = parse_alpha(alpha_text);
    if (static_cast<int>(coords.size()) != rs.rank()) {
        throw std::invalid_argument("--alpha needs " + std::to_string(rs.rank()) + " coordinates");
    }
    const int alpha = rs.index_of(coords);
    if (alpha < 0) throw std::invalid_argument("the given coordinates are not a root of " + system);

    const GeneralHessenbergSpace space = h_alpha(rs, alpha);
    const bool eligible = rs.is_long(alpha);
    int rep = -1;
    bool theorem = false;
    const WeylGroup* weyl = nullptr;
    WeylGroup w_storage = WeylGroup::enumerate(rs);
    if (eligible) {
        weyl = &w_storage;
        rep = max_coset_rep(rs, *weyl, alpha);
        theorem = verify_highest_weight_theorem(rs, *weyl, alpha);
    }

    if (as_json) {
        json j;
        j["system"] = rs.label();
        j["alpha"] = coords;
        json roots = json::array();
        for (int r : space.roots) roots.push_back(rs.coords(r));
        j["h_alpha"] = {{"roots", roots},
                        {"toral", std::vector<int>(space.toral.begin(), space.toral.end())}};
        if (eligible) {
            j["max_word"] = weyl->word(rep);
            j["max_length"] = weyl->length(rep);
            j["theorem"] = theorem;
        } else {
            j["max_word"] = nullptr;
            j["theorem"] = nullptr;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "system   = " << rs.label() << "\n";
        out << "alpha    = " << alpha_text << (rs.is_long(alpha) ? "  (long)" : "  (short)") << "\n";
        out << "H_alpha  = {";
        bool first = true;
        for (int r : space.roots) {
            out << (first ? "" : "; ") << coord_string(rs.coords(r));
            first = false;
        }
        out << "}\n";
        if (!space.toral.empty()) {
            out << "toral    = {";
            first = true;
            for (int i : space.toral) {
                out << (first ? "" : ",") << i;
                first = false;
            }
            out << "}\n";
        }
        if (eligible) {
            out << "max w    =";
            for (int letter : weyl->word(rep)) out << " s" << letter;
            if (weyl->word(rep).empty()) out << " (identity)";
            out << "  (length " << weyl->length(rep) << ")\n";
            out << "theorem  = " << (theorem ? "true" : "false") << "\n";
        } else {
            out << "no solution: alpha has a different length than the highest root\n";
        }
    }
    return eligible && !theorem ? 1 : 0;
}

int do_selftest(const std::string& only, std::ostream& out) {
    std::vector<selftest::CriterionResult> results;
    if (only.empty()) {
        results = selftest::run_all();
    } else {
        std::vector<int> ids;
        std::stringstream ss(only);
        std::string token;
        while (std::getline(ss, token, ',')) ids.push_back(std::stoi(token));
        results = selftest::run_selected(ids);
    }
    selftest::print_results(results, out);
    return selftest::all_pass(results) ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"highest-weight Hessenberg variety calculator"};
    app.require_subcommand(1);
    // --h is an option name here, so help is long-form only
    app.set_help_flag("--help", "print help");

    std::string h_text, h2_text, x_spec = "e1n", system, alpha_text, only;
    int n = 0, q = 0;
    bool as_json = false, with_cells = false;

    const auto with_help = [](CLI::App* sub) {
        sub->set_help_flag("--help", "print help");
        return sub;
    };

    CLI::App* cmd_decompose = with_help(app.add_subcommand("decompose", "Schubert components of (E_1n, h)"));
    cmd_decompose->add_option("--h", h_text, "hessenberg function, e.g. 4,4,4,5,5")->required();
    cmd_decompose->add_option("--n", n, "window size (checked against --h)");
    cmd_decompose->add_flag("--cells", with_cells, "list the member Schubert cells (n <= 8)");
    cmd_decompose->add_flag("--json", as_json);

    CLI::App* cmd_minimize = with_help(app.add_subcommand("minimize", "minimal equivalent function"));
    cmd_minimize->add_option("--h", h_text)->required();
    cmd_minimize->add_flag("--json", as_json);

    CLI::App* cmd_purity = with_help(app.add_subcommand("purity", "pure-dimensionality of (E_1n, h)"));
    cmd_purity->add_option("--h", h_text)->required();
    cmd_purity->add_option("--n", n);
    cmd_purity->add_flag("--json", as_json);

    CLI::App* cmd_corners = with_help(app.add_subcommand("corners", "maximal corner decomposition of h"));
    cmd_corners->add_option("--h", h_text)->required();
    cmd_corners->add_option("--n", n);
    cmd_corners->add_flag("--json", as_json);

    CLI::App* cmd_count = with_help(app.add_subcommand("count", "flags over F_q satisfying the condition"));
    cmd_count->add_option("--h", h_text)->required();
    cmd_count->add_option("--q", q, "field size (prime <= 13)")->required();
    cmd_count->add_option("--n", n);
    cmd_count->add_option("--X", x_spec, "e1n | regular-nilpotent | semisimple-example | "
                                         "JSON rows | @file");
    cmd_count->add_flag("--json", as_json);

    CLI::App* cmd_verify = with_help(app.add_subcommand("verify", "finite-field verification suites"));
    cmd_verify->require_subcommand(1);
    CLI::App* v_cell = with_help(cmd_verify->add_subcommand("cell-union", "point counts match cell sums"));
    v_cell->add_option("--n", n)->required();
    v_cell->add_option("--q", q)->required();
    v_cell->add_option("--h", h_text, "single function (otherwise exhaustive)");
    v_cell->add_flag("--json", as_json);
    CLI::App* v_semi = with_help(cmd_verify->add_subcommand("semisimple", "two-component example counts"));
    v_semi->add_option("--n", n)->required();
    v_semi->add_option("--q", q)->required();
    v_semi->add_flag("--json", as_json);
    CLI::App* v_equiv = with_help(cmd_verify->add_subcommand("equivalence", "same member flags for h, h2"));
    v_equiv->add_option("--h", h_text)->required();
    v_equiv->add_option("--h2", h2_text)->required();
    v_equiv->add_option("--q", q)->required();
    v_equiv->add_option("--X", x_spec);
    v_equiv->add_flag("--json", as_json);
    CLI::App* v_ncu = with_help(cmd_verify->add_subcommand("not-cell-union", "some cell is split by X"));
    v_ncu->add_option("--h", h_text)->required();
    v_ncu->add_option("--q", q)->required();
    v_ncu->add_option("--X", x_spec)->required();
    v_ncu->add_flag("--json", as_json);

    CLI::App* cmd_roots = with_help(app.add_subcommand("roots", "general-type H_alpha and the theorem"));
    cmd_roots->add_option("--system", system, "A1-A4, B2-B4, C2-C4, D4, G2, F4")->required();
    cmd_roots->add_option("--alpha", alpha_text, "coordinates over the simple roots")->required();
    cmd_roots->add_flag("--json", as_json);

    CLI::App* cmd_selftest = with_help(app.add_subcommand("selftest", "run the acceptance checks"));
    cmd_selftest->add_option("--only", only, "comma list of criterion ids, e.g. 1,3");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("hess");
    for (const std::string& a : args) argv_store.push_back(a);
    std::vector<const char*> argv;
    for (const std::string& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (*cmd_decompose) {
            const HessenbergFunction h = HessenbergFunction::parse(h_text);
            checked_n(h, n);
            return do_decompose(h, with_cells, as_json, out);
        }
        if (*cmd_minimize) return do_minimize(HessenbergFunction::parse(h_text), as_json, out);
        if (*cmd_purity) {
            const HessenbergFunction h = HessenbergFunction::parse(h_text);
            checked_n(h, n);
            return do_purity(h, as_json, out);
        }
        if (*cmd_corners) {
            const HessenbergFunction h = HessenbergFunction::parse(h_text);
            checked_n(h, n);
            return do_corners(h, as_json, out);
        }
        if (*cmd_count) {
            const HessenbergFunction h = HessenbergFunction::parse(h_text);
            checked_n(h, n);
            return do_count(h, q, x_spec, as_json, out);
        }
        if (*v_cell) {
            if (!h_text.empty()) n = checked_n(HessenbergFunction::parse(h_text), n);
            if (n < 1) throw std::invalid_argument("--n must be positive");
            return do_verify_cell_union(n, q, h_text, as_json, out);
        }
        if (*v_semi) return do_verify_semisimple(n, q, as_json, out);
        if (*v_equiv) {
            const HessenbergFunction h = HessenbergFunction::parse(h_text);
            const HessenbergFunction h2 = HessenbergFunction::parse(h2_text);
            return do_verify_equivalence(h, h2, q, x_spec, as_json, out);
        }
        if (*v_ncu) {
            const HessenbergFunction h = HessenbergFunction::parse(h_text);
            return do_verify_not_cell_union(h, q, x_spec, as_json, out);
        }
        if (*cmd_roots) return do_roots(system, alpha_text, as_json, out);
        if (*cmd_selftest) return do_selftest(only, out);
        throw std::invalid_argument("no subcommand given");
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        err << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace hess::cli

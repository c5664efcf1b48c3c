#include "affprym/cli.hpp"

#include <chrono>
#include <iomanip>
#include <optional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "affprym/genvec.hpp"
#include "affprym/json_io.hpp"
#include "affprym/selftest.hpp"
#include "affprym/sweep.hpp"

namespace affprym::cli {

using group::AffGroup;
using group::SubgroupType;
using json_io::json;

namespace {

// display width in code points; the tables mix ASCII with ζ/ξ/θ glyphs
size_t utf8_len(const std::string& s) {
    size_t len = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++len;
    return len;
}

std::string pad(const std::string& s, size_t width) {
    std::string out = s;
    size_t len = utf8_len(s);
    while (len++ < width) out += ' ';
    return out;
}

std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.resize(i + 1, 0);
            width[i] = std::max(width[i], utf8_len(row[i]));
        }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += pad(row[i], i + 1 < row.size() ? width[i] : 0);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

SubgroupType parse_type_arg(const AffGroup& G, const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw Error(errc::ParseError, "type must look like \"d,k\"");
    try {
        int d = std::stoi(text.substr(0, comma));
        int k = std::stoi(text.substr(comma + 1));
        return G.type(d, k);
    } catch (const std::invalid_argument&) {
        throw Error(errc::ParseError, "type must look like \"d,k\"");
    }
}

} // namespace

AffGroup group_for_q(int q) {
    if (q < 2) throw Error(errc::ParseError, "q must be at least 2");
    int p = 2;
    while (q % p != 0) ++p;
    int n = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++n;
    }
    if (t != 1)
        throw Error(errc::ParseError, "q = " + std::to_string(q) + " is not a prime power");
    return AffGroup::build(p, n);
}

std::string render_char_table(const AffGroup& G) {
    std::ostringstream head;
    const auto& F = G.field();
    head << "character table of Aff(F_" << G.q() << "), q = " << G.q() << " = " << G.p() << "^"
         << G.n() << "\n";
    head << "modulus";
    for (int c : F.modulus()) head << " " << c;
    head << ", alpha";
    for (int c : F.element(F.alpha()).coeffs) head << " " << c;
    head << "\n";

    std::vector<std::vector<std::string>> grid;
    auto classes = G.classes();
    std::vector<std::string> hdr{"class"}, sz{"size"};
    for (const auto& c : classes) {
        hdr.push_back(c.id.to_string());
        sz.push_back(std::to_string(c.size));
    }
    grid.push_back(hdr);
    grid.push_back(sz);
    auto add_row = [&](const reptheory::Character& chi) {
        std::vector<std::string> row{chi.label};
        for (const auto& v : chi.values) row.push_back(v.to_string());
        grid.push_back(row);
    };
    add_row(reptheory::psi_character(G, G.q() - 1));
    for (int j = 1; j <= G.q() - 2; ++j) add_row(reptheory::psi_character(G, j));
    add_row(reptheory::theta_character(G));
    return head.str() + render_grid(grid);
}

std::string render_rational_table(const AffGroup& G) {
    int m = G.q() - 1;
    std::ostringstream head;
    head << "rational character table of Aff(F_" << G.q() << "), " << G.divisors().size() + 1
         << " rational classes\n";
    // columns: [id], [tau], then [lambda_d] for divisors d < q-1 ascending
    std::vector<group::ClassId> reps{group::ClassId::identity(), group::ClassId::tau()};
    std::vector<std::string> hdr{"class", "[id]", "[τ]"};
    for (int d : G.divisors()) {
        if (d == m) continue;
        reps.push_back(group::ClassId::lambda(d));
        hdr.push_back("[λ" + std::to_string(d) + "]");
    }
    std::vector<std::vector<std::string>> grid{hdr};
    auto add_row = [&](const reptheory::Character& chi) {
        std::vector<std::string> row{chi.label};
        for (const auto& rep : reps) {
            auto r = chi.values[G.class_column(rep)].as_rational();
            row.push_back(rat_to_string(*r));
        }
        grid.push_back(row);
    };
    for (auto it = G.divisors().rbegin(); it != G.divisors().rend(); ++it)
        add_row(reptheory::xi_character(G, *it));
    add_row(reptheory::theta_character(G));
    return head.str() + render_grid(grid);
}

std::string render_subgroup_types(const AffGroup& G) {
    std::vector<std::vector<std::string>> grid;
    for (const auto& t : G.subgroup_types()) {
        long long order = t.d;
        for (int i = 0; i < t.k; ++i) order *= G.p();
        grid.push_back({t.to_string(), "order " + std::to_string(order), G.type_name(t)});
    }
    return render_grid(grid);
}

std::string render_lattice_dot(const AffGroup& G, bool decorated) {
    int m = G.q() - 1;
    std::ostringstream out;
    out << "digraph subgroup_type_lattice {\n";
    out << "  rankdir=BT;\n";
    for (const auto& t : G.subgroup_types()) {
        out << "  \"" << t.to_string() << "\"";
        if (decorated) {
            auto dec = reptheory::rho_decomposition_closed(G, t);
            out << " [label=\"" << dec.to_string(m) << "\"]";
        }
        out << ";\n";
    }
    // the canonical affording pairs get component labels in decorated mode
    std::map<std::pair<std::string, std::string>, std::string> labels;
    if (decorated) {
        for (int di : G.divisors()) {
            if (di == m) continue;
            int rest = m / di;
            int spf = 2;
            while (rest % spf != 0) ++spf;
            SubgroupType H = G.type(di, G.n()), N = G.type(di * spf, G.n());
            auto pr = prym::prym_decomposition(G, H, N);
            if (pr.theta == 0 && pr.xi.size() == 1 && pr.xi.count(di) && pr.xi.at(di) == 1)
                labels[{H.to_string(), N.to_string()}] = reptheory::xi_label(di, m);
        }
        labels[{G.type(m, 0).to_string(), G.type(m, G.n()).to_string()}] = "θ";
    }
    for (const auto& [a, b] : G.type_lattice_edges()) {
        out << "  \"" << a.to_string() << "\" -> \"" << b.to_string() << "\"";
        auto it = labels.find({a.to_string(), b.to_string()});
        if (it != labels.end()) out << " [label=\"" << it->second << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string render_verdict(const AffGroup& G, const prym::Signature& sig,
                           const prym::Verdict& v) {
    int m = G.q() - 1;
    std::ostringstream out;
    out << "q = " << G.q() << " (p = " << G.p() << ", n = " << G.n() << ")\n";
    out << "signature (" << sig.to_string() << ")\n";
    out << "genus of X: " << v.dims.genus_X << "\n";
    out << "dims:";
    for (const auto& [d, dim] : v.dims.xi)
        out << " B[" << reptheory::xi_label(d, m) << "]=" << dim;
    out << " B[θ]=" << v.dims.theta << "\n";
    if (v.realizable) out << "realizable: " << (*v.realizable ? "yes" : "no") << "\n";
    out << "affordable: " << (v.affordable ? "yes" : "no") << "\n";
    if (v.condition) {
        const auto& c = *v.condition;
        out << "condition: ";
        if (c.item == 1) {
            switch (c.reason) {
                case prym::Cond1Reason::qIs2: out << "(1) q = 2"; break;
                case prym::Cond1Reason::qIs9: out << "(1) q = 9"; break;
                case prym::Cond1Reason::FermatPrime: out << "(1) q is a Fermat prime"; break;
                case prym::Cond1Reason::MersenneQminus1:
                    out << "(1) q-1 is a Mersenne prime";
                    break;
            }
        } else if (c.item == 2) {
            out << "(2) signature of the form " << c.form;
        } else {
            out << "(3) q-1 = " << c.d << "^" << c.mu << " * " << c.e << "^" << c.nu
                << ", signature of the form " << c.form;
        }
        out << "\n";
    }
    if (v.affordable && v.simple_decomposition)
        out << "decomposition: J(X) ~ J(Y) × Pr(π^Λ_G)\n";
    if (!v.table.empty()) {
        std::vector<std::vector<std::string>> grid{{"component", "dim", "H", "N"}};
        for (const auto& row : v.table) {
            grid.push_back({"B[" + row.component.to_string(m) + "]", std::to_string(row.dim),
                            G.type_name(row.H), G.type_name(row.N)});
        }
        out << render_grid(grid);
    }
    return out.str();
}

namespace {

std::string render_element(const AffGroup& G, int id) {
    std::ostringstream out;
    auto e = G.element(id);
    out << "(b=[";
    for (size_t i = 0; i < e.b.coeffs.size(); ++i) {
        if (i) out << ",";
        out << e.b.coeffs[i];
    }
    out << "], k=" << e.k << ")";
    return out.str();
}

struct CommonArgs {
    int q = 0;
    bool json = false;
};

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const Error& e) {
        bool want_json = false;
        for (const auto& a : args) want_json = want_json || a == "--json";
        if (want_json) {
            json j{{"error", {{"code", e.code()}, {"message", e.what()}}}};
            out << j.dump(2) << "\n";
        } else {
            err << "error[" << e.code() << "]: " << e.what() << "\n";
        }
        return 1;
    }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact character theory, subgroup types and Prym calculus for Aff(F_q)"};
    app.name("affprym");
    app.require_subcommand(1);

    // char-table
    auto* cmd_char = app.add_subcommand("char-table", "complex character table");
    CommonArgs a_char;
    cmd_char->add_option("q", a_char.q, "prime power")->required();
    cmd_char->add_flag("--json", a_char.json);

    // rational-table
    auto* cmd_rat = app.add_subcommand("rational-table", "rational character table");
    CommonArgs a_rat;
    cmd_rat->add_option("q", a_rat.q, "prime power")->required();
    cmd_rat->add_flag("--json", a_rat.json);

    // subgroup-types
    auto* cmd_types = app.add_subcommand("subgroup-types", "admissible subgroup types (d,k)");
    CommonArgs a_types;
    cmd_types->add_option("q", a_types.q, "prime power")->required();
    cmd_types->add_flag("--json", a_types.json);

    // lattice
    auto* cmd_lat = app.add_subcommand("lattice", "Hasse diagram of subgroup types");
    CommonArgs a_lat;
    bool lat_dot = false, lat_decorated = false;
    cmd_lat->add_option("q", a_lat.q, "prime power")->required();
    cmd_lat->add_flag("--dot", lat_dot, "emit DOT");
    cmd_lat->add_flag("--decorated", lat_decorated, "label nodes with rho_H decompositions");
    cmd_lat->add_flag("--json", a_lat.json);

    // rho
    auto* cmd_rho = app.add_subcommand("rho", "decomposition of Ind_H^G(1) for a type");
    CommonArgs a_rho;
    std::string rho_type;
    cmd_rho->add_option("q", a_rho.q, "prime power")->required();
    cmd_rho->add_option("--type", rho_type, "subgroup type d,k")->required();
    cmd_rho->add_flag("--json", a_rho.json);

    // jacobian
    auto* cmd_jac = app.add_subcommand("jacobian", "group algebra decomposition of J(X/H)");
    CommonArgs a_jac;
    std::string jac_type, jac_sig;
    cmd_jac->add_option("q", a_jac.q, "prime power")->required();
    cmd_jac->add_option("--type", jac_type, "subgroup type d,k")->required();
    cmd_jac->add_option("--signature", jac_sig, "covering signature for dimensions");
    cmd_jac->add_flag("--json", a_jac.json);

    // prym
    auto* cmd_prym = app.add_subcommand("prym", "decomposition of Pr(X/H -> X/N)");
    CommonArgs a_prym;
    std::string prym_sub, prym_sup;
    cmd_prym->add_option("q", a_prym.q, "prime power")->required();
    cmd_prym->add_option("--sub", prym_sub, "type of H as d,k")->required();
    cmd_prym->add_option("--sup", prym_sup, "type of N as d,k")->required();
    cmd_prym->add_flag("--json", a_prym.json);

    // dims
    auto* cmd_dims = app.add_subcommand("dims", "group algebra component dimensions");
    CommonArgs a_dims;
    std::string dims_sig;
    cmd_dims->add_option("q", a_dims.q, "prime power")->required();
    cmd_dims->add_option("--signature", dims_sig, "covering signature")->required();
    cmd_dims->add_flag("--json", a_dims.json);

    // genvec
    auto* cmd_gv = app.add_subcommand("genvec", "search for a generating vector");
    CommonArgs a_gv;
    std::string gv_sig;
    long long gv_budget = genvec::kDefaultBudget;
    bool gv_parallel = false;
    cmd_gv->add_option("q", a_gv.q, "prime power")->required();
    cmd_gv->add_option("--signature", gv_sig, "covering signature")->required();
    cmd_gv->add_option("--budget", gv_budget, "node-expansion cap");
    cmd_gv->add_flag("--parallel", gv_parallel, "partition the search across threads");
    cmd_gv->add_flag("--json", a_gv.json);

    // decide
    auto* cmd_dec = app.add_subcommand("decide", "Prym-affordability of the decomposition");
    CommonArgs a_dec;
    std::string dec_sig;
    bool dec_verify = false;
    long long dec_budget = genvec::kDefaultBudget;
    cmd_dec->add_option("q", a_dec.q, "prime power")->required();
    cmd_dec->add_option("--signature", dec_sig, "covering signature")->required();
    cmd_dec->add_flag("--verify-realizable", dec_verify,
                      "require a generating vector to exist");
    cmd_dec->add_option("--budget", dec_budget, "node-expansion cap");
    cmd_dec->add_flag("--json", a_dec.json);

    // selftest
    auto* cmd_self = app.add_subcommand("selftest", "oracle-vs-closed-form invariant suite");
    std::string self_range;
    bool self_serial = false, self_json = false;
    selftest::Options self_opt;
    cmd_self->add_option("--q", self_range, "q or a..b range of q")->required();
    cmd_self->add_option("--sweep-g", self_opt.sweep_g, "max genus in the theorem sweep");
    cmd_self->add_option("--sweep-s", self_opt.sweep_s, "max period count in the theorem sweep");
    cmd_self->add_option("--budget", self_opt.budget, "generating-vector search budget");
    cmd_self->add_flag("--serial", self_serial, "run the sweep on one thread");
    cmd_self->add_flag("--json", self_json);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (cmd_char->parsed()) {
        auto G = group_for_q(a_char.q);
        if (a_char.json)
            out << json_io::char_table_to_json(G).dump(2) << "\n";
        else
            out << render_char_table(G);
        return 0;
    }
    if (cmd_rat->parsed()) {
        auto G = group_for_q(a_rat.q);
        if (a_rat.json) {
            json rows = json::array();
            for (auto it = G.divisors().rbegin(); it != G.divisors().rend(); ++it) {
                auto chi = reptheory::xi_character(G, *it);
                json values = json::array();
                for (const auto& v : chi.values) values.push_back(json_io::cyclo_to_json(v));
                rows.push_back(json{{"label", chi.label}, {"values", values}});
            }
            auto theta = reptheory::theta_character(G);
            json values = json::array();
            for (const auto& v : theta.values) values.push_back(json_io::cyclo_to_json(v));
            rows.push_back(json{{"label", theta.label}, {"values", values}});
            out << json{{"q", G.q()}, {"rows", rows}}.dump(2) << "\n";
        } else {
            out << render_rational_table(G);
        }
        return 0;
    }
    if (cmd_types->parsed()) {
        auto G = group_for_q(a_types.q);
        if (a_types.json) {
            json types = json::array();
            for (const auto& t : G.subgroup_types()) {
                long long order = t.d;
                for (int i = 0; i < t.k; ++i) order *= G.p();
                types.push_back(json{{"d", t.d},
                                     {"k", t.k},
                                     {"m", t.m},
                                     {"order", order},
                                     {"name", G.type_name(t)}});
            }
            out << json{{"q", G.q()}, {"types", types}}.dump(2) << "\n";
        } else {
            out << render_subgroup_types(G);
        }
        return 0;
    }
    if (cmd_lat->parsed()) {
        auto G = group_for_q(a_lat.q);
        if (a_lat.json)
            out << json_io::lattice_to_json(G).dump(2) << "\n";
        else if (lat_dot)
            out << render_lattice_dot(G, lat_decorated);
        else {
            std::vector<std::vector<std::string>> grid;
            for (const auto& [a, b] : G.type_lattice_edges())
                grid.push_back({a.to_string(), "->", b.to_string()});
            out << render_subgroup_types(G) << "cover relations:\n" << render_grid(grid);
        }
        return 0;
    }
    if (cmd_rho->parsed()) {
        auto G = group_for_q(a_rho.q);
        auto t = parse_type_arg(G, rho_type);
        auto closed = reptheory::rho_decomposition_closed(G, t);
        auto brute = reptheory::rho_decomposition_bruteforce(G, t);
        if (a_rho.json) {
            out << json{{"q", G.q()},
                        {"type", json_io::type_to_json(t)},
                        {"closed", json_io::decomposition_to_json(closed)},
                        {"bruteforce", json_io::decomposition_to_json(brute)},
                        {"agree", closed == brute}}
                       .dump(2)
                << "\n";
        } else {
            int m = G.q() - 1;
            out << "rho_H for H of type " << t.to_string() << " (" << G.type_name(t)
                << "), q = " << G.q() << "\n";
            out << "closed:     " << closed.to_string(m) << "\n";
            out << "bruteforce: " << brute.to_string(m) << "\n";
            out << "agree: " << (closed == brute ? "yes" : "no") << "\n";
        }
        return closed == brute ? 0 : 1;
    }
    if (cmd_jac->parsed()) {
        auto G = group_for_q(a_jac.q);
        auto t = parse_type_arg(G, jac_type);
        auto dec = prym::jacobian_quotient_decomposition(G, t);
        int m = G.q() - 1;
        std::optional<prym::ComponentDims> dims;
        std::optional<prym::Signature> sig;
        if (!jac_sig.empty()) {
            sig = prym::parse_signature(G, jac_sig);
            dims = prym::component_dims(G, *sig);
        }
        if (a_jac.json) {
            json comp = json::object();
            for (const auto& [d, mult] : dec.xi) comp["xi_" + std::to_string(d)] = mult;
            comp["theta"] = dec.theta;
            json j{{"q", G.q()}, {"type", json_io::type_to_json(t)}, {"components", comp}};
            if (dims) {
                j["signature"] = sig->to_string();
                j["dims"] = json_io::dims_to_json(*dims);
                j["genus_quotient"] = prym::quotient_genus(G, *sig, t);
            }
            out << j.dump(2) << "\n";
        } else {
            out << "J(X/H) for H of type " << t.to_string() << " (" << G.type_name(t)
                << "), q = " << G.q() << "\n";
            std::string prod;
            for (const auto& [d, mult] : dec.xi) {
                if (!prod.empty()) prod += " × ";
                prod += d == m ? "J(Y)" : "B[" + reptheory::xi_label(d, m) + "]";
                if (mult > 1) prod += "^" + std::to_string(mult);
            }
            if (dec.theta > 0) {
                if (!prod.empty()) prod += " × ";
                prod += "B[θ]";
                if (dec.theta > 1) prod += "^" + std::to_string(dec.theta);
            }
            out << "J(X/H) ~ " << prod << "\n";
            if (dims) out << "genus of X/H: " << prym::quotient_genus(G, *sig, t) << "\n";
        }
        return 0;
    }
    if (cmd_prym->parsed()) {
        auto G = group_for_q(a_prym.q);
        auto sub = parse_type_arg(G, prym_sub);
        auto sup = parse_type_arg(G, prym_sup);
        auto pr = prym::prym_decomposition(G, sub, sup);
        int m = G.q() - 1;
        if (a_prym.json) {
            json comp = json::object();
            for (const auto& [d, mult] : pr.xi) comp["xi_" + std::to_string(d)] = mult;
            comp["theta"] = pr.theta;
            out << json{{"q", G.q()},
                        {"sub", json_io::type_to_json(sub)},
                        {"sup", json_io::type_to_json(sup)},
                        {"components", comp}}
                       .dump(2)
                << "\n";
        } else {
            out << "Pr(π: X/H → X/N), H = " << sub.to_string() << " (" << G.type_name(sub)
                << "), N = " << sup.to_string() << " (" << G.type_name(sup)
                << "), q = " << G.q() << "\n";
            std::string prod;
            for (const auto& [d, mult] : pr.xi) {
                if (!prod.empty()) prod += " × ";
                prod += "B[" + reptheory::xi_label(d, m) + "]";
                if (mult > 1) prod += "^" + std::to_string(mult);
            }
            if (pr.theta > 0) {
                if (!prod.empty()) prod += " × ";
                prod += "B[θ]";
                if (pr.theta > 1) prod += "^" + std::to_string(pr.theta);
            }
            out << "Pr ~ " << (prod.empty() ? "(trivial)" : prod) << "\n";
        }
        return 0;
    }
    if (cmd_dims->parsed()) {
        auto G = group_for_q(a_dims.q);
        auto sig = prym::parse_signature(G, dims_sig);
        auto dims = prym::component_dims(G, sig);
        auto check = prym::dims_via_general_formula(G, sig);
        if (!(dims == check)) throw Error(errc::Internal, "dimension routes disagree");
        int m = G.q() - 1;
        if (a_dims.json) {
            out << json{{"q", G.q()},
                        {"signature", sig.to_string()},
                        {"genus_X", dims.genus_X},
                        {"dims", json_io::dims_to_json(dims)}}
                       .dump(2)
                << "\n";
        } else {
            out << "q = " << G.q() << ", signature (" << sig.to_string() << ")\n";
            out << "genus of X: " << dims.genus_X << "\n";
            for (const auto& [d, dim] : dims.xi) {
                out << "dim B[" << reptheory::xi_label(d, m) << "] = " << dim;
                if (d == m) out << "   (J(Y))";
                out << "\n";
            }
            out << "dim B[θ] = " << dims.theta << "   (multiplicity " << m << ")\n";
        }
        return 0;
    }
    if (cmd_gv->parsed()) {
        auto G = group_for_q(a_gv.q);
        auto sig = prym::parse_signature(G, gv_sig);
        auto r = genvec::find_generating_vector(G, sig, gv_budget, gv_parallel);
        if (r.status == genvec::SearchResult::Status::Unknown)
            throw Error(errc::BudgetExhausted,
                        "search budget exhausted before sweeping the space");
        if (a_gv.json) {
            json j{{"q", G.q()},
                   {"signature", sig.to_string()},
                   {"realizable", r.status == genvec::SearchResult::Status::Yes},
                   {"nodes", r.nodes}};
            if (r.witness) j["witness"] = json_io::witness_to_json(G, *r.witness);
            out << j.dump(2) << "\n";
        } else {
            out << "q = " << G.q() << ", signature (" << sig.to_string() << "): ";
            if (r.status == genvec::SearchResult::Status::Yes) {
                out << "realizable\n";
                const auto& w = *r.witness;
                for (size_t i = 0; i < w.hyperbolic.size(); ++i) {
                    out << "  a_" << i + 1 << " = " << render_element(G, w.hyperbolic[i].first)
                        << ", b_" << i + 1 << " = "
                        << render_element(G, w.hyperbolic[i].second) << "\n";
                }
                auto periods = sig.periods();
                for (size_t j = 0; j < w.elliptic.size(); ++j) {
                    out << "  c_" << j + 1 << " = " << render_element(G, w.elliptic[j])
                        << ", order " << periods[j] << "\n";
                }
            } else {
                out << "not realizable (search space fully swept)\n";
            }
            out << "nodes expanded: " << r.nodes << "\n";
        }
        return 0;
    }
    if (cmd_dec->parsed()) {
        auto G = group_for_q(a_dec.q);
        auto sig = prym::parse_signature(G, dec_sig);
        auto v = prym::decide_affordable(G, sig, dec_verify, dec_budget);
        if (a_dec.json)
            out << json_io::verdict_to_json(G, sig, v).dump(2) << "\n";
        else
            out << render_verdict(G, sig, v);
        return 0;
    }
    if (cmd_self->parsed()) {
        // range grammar: "a..b" or a single q
        int lo = 0, hi = 0;
        auto dots = self_range.find("..");
        try {
            if (dots == std::string::npos) {
                lo = hi = std::stoi(self_range);
            } else {
                lo = std::stoi(self_range.substr(0, dots));
                hi = std::stoi(self_range.substr(dots + 2));
            }
        } catch (const std::exception&) {
            err << "bad --q range '" << self_range << "'\n";
            return 2;
        }
        if (lo < 2 || hi < lo) {
            err << "q range must satisfy 2 <= a <= b\n";
            return 2;
        }
        self_opt.parallel = !self_serial;
        bool all_pass = true;
        json report = json::array();
        for (int q = lo; q <= hi; ++q) {
            std::optional<AffGroup> G;
            try {
                G.emplace(group_for_q(q));
            } catch (const Error&) {
                continue;  // not a prime power
            }
            auto checks = selftest::run_for_q(*G, self_opt);
            if (self_json) {
                json jc = json::array();
                for (const auto& c : checks)
                    jc.push_back(json{{"name", c.name},
                                      {"pass", c.pass},
                                      {"ms", c.ms},
                                      {"detail", c.detail}});
                report.push_back(json{{"q", q}, {"checks", jc}});
            } else {
                out << "q = " << q << ":\n";
                for (const auto& c : checks) {
                    std::ostringstream ms;
                    ms << std::fixed << std::setprecision(1) << c.ms;
                    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << " ("
                        << ms.str() << " ms)";
                    if (!c.pass) out << " — " << c.detail;
                    out << "\n";
                }
            }
            for (const auto& c : checks) all_pass = all_pass && c.pass;
        }
        if (self_json)
            out << json{{"range", {lo, hi}}, {"pass", all_pass}, {"qs", report}}.dump(2) << "\n";
        else
            out << (all_pass ? "selftest: all checks passed" : "selftest: FAILURES") << "\n";
        return all_pass ? 0 : 1;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace

} // namespace affprym::cli

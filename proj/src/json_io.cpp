#include "affprym/json_io.hpp"

namespace affprym::json_io {

json field_to_json(const gf::FieldTable& F) {
    json j;
    j["p"] = F.p();
    j["n"] = F.n();
    j["modulus"] = F.modulus();
    j["alpha"] = F.element(F.alpha()).coeffs;
    return j;
}

FieldParams field_params(const gf::FieldTable& F) {
    return {F.p(), F.n(), F.modulus(), F.element(F.alpha()).coeffs};
}

FieldParams field_from_json(const json& j) {
    FieldParams fp;
    fp.p = j.at("p").get<int>();
    fp.n = j.at("n").get<int>();
    fp.modulus = j.at("modulus").get<std::vector<int>>();
    fp.alpha = j.at("alpha").get<std::vector<int>>();
    return fp;
}

json cyclo_to_json(const cyclo::CycloNumber& x) {
    json coeffs = json::array();
    for (const Rational& c : x.coeffs())
        coeffs.push_back({rat_num(c).str(), rat_den(c).str()});
    return json{{"M", x.order()}, {"coeffs", coeffs}};
}

cyclo::CycloNumber cyclo_from_json(const json& j) {
    int M = j.at("M").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& pair : j.at("coeffs")) {
        BigInt num(pair.at(0).get<std::string>());
        BigInt den(pair.at(1).get<std::string>());
        coeffs.emplace_back(num, den);
    }
    return cyclo::CycloNumber::from_poly(M, std::move(coeffs));
}

json element_to_json(const group::AffGroup& G, int id) {
    json j;
    j["b"] = G.element(id).b.coeffs;
    j["k"] = G.k_of(id);
    return j;
}

int element_from_json(const group::AffGroup& G, const json& j) {
    group::AffElement e;
    e.b.coeffs = j.at("b").get<std::vector<int>>();
    e.k = j.at("k").get<int>();
    return G.id_of(e);
}

json type_to_json(const group::SubgroupType& t) { return json::array({t.d, t.k}); }

group::SubgroupType type_from_json(const group::AffGroup& G, const json& j) {
    return G.type(j.at(0).get<int>(), j.at(1).get<int>());
}

json decomposition_to_json(const reptheory::Decomposition& dec) {
    json xi = json::object();
    for (const auto& [d, mult] : dec.xi) xi[std::to_string(d)] = mult;
    return json{{"xi", xi}, {"theta", dec.theta}};
}

reptheory::Decomposition decomposition_from_json(const json& j) {
    reptheory::Decomposition dec;
    for (const auto& [key, value] : j.at("xi").items())
        dec.xi[std::stoi(key)] = value.get<long long>();
    dec.theta = j.at("theta").get<long long>();
    return dec;
}

json dims_to_json(const prym::ComponentDims& dims) {
    json j = json::object();
    for (const auto& [d, dim] : dims.xi) j["xi_" + std::to_string(d)] = dim;
    j["theta"] = dims.theta;
    j["genus_X"] = dims.genus_X;
    return j;
}

prym::ComponentDims dims_from_json(const json& j) {
    prym::ComponentDims dims;
    for (const auto& [key, value] : j.items()) {
        if (key == "theta")
            dims.theta = value.get<long long>();
        else if (key == "genus_X")
            dims.genus_X = value.get<long long>();
        else
            dims.xi[std::stoi(key.substr(3))] = value.get<long long>();
    }
    return dims;
}

json lattice_to_json(const group::AffGroup& G) {
    json nodes = json::array();
    for (const auto& t : G.subgroup_types()) nodes.push_back(type_to_json(t));
    json edges = json::array();
    for (const auto& [a, b] : G.type_lattice_edges())
        edges.push_back(json::array({type_to_json(a), type_to_json(b)}));
    return json{{"q", G.q()}, {"nodes", nodes}, {"edges", edges}};
}

json char_table_to_json(const group::AffGroup& G) {
    json classes = json::array();
    json sizes = json::array();
    for (const auto& c : G.classes()) {
        classes.push_back(c.id.to_string());
        sizes.push_back(c.size);
    }
    json rows = json::array();
    auto add_row = [&](const reptheory::Character& chi) {
        json values = json::array();
        for (const auto& v : chi.values) values.push_back(cyclo_to_json(v));
        rows.push_back(json{{"label", chi.label}, {"values", values}});
    };
    add_row(reptheory::psi_character(G, G.q() - 1));
    for (int j = 1; j <= G.q() - 2; ++j) add_row(reptheory::psi_character(G, j));
    add_row(reptheory::theta_character(G));
    return json{{"q", G.q()}, {"field", field_to_json(G.field())},
                {"classes", classes}, {"sizes", sizes}, {"rows", rows}};
}

json witness_to_json(const group::AffGroup& G, const genvec::GeneratingVector& vec) {
    json hyper = json::array();
    for (auto [a, b] : vec.hyperbolic)
        hyper.push_back(json::array({element_to_json(G, a), element_to_json(G, b)}));
    json ell = json::array();
    for (int c : vec.elliptic) ell.push_back(element_to_json(G, c));
    return json{{"field", field_to_json(G.field())}, {"hyperbolic", hyper}, {"elliptic", ell}};
}

genvec::GeneratingVector witness_from_json(const group::AffGroup& G, const json& j) {
    genvec::GeneratingVector vec;
    for (const auto& pair : j.at("hyperbolic"))
        vec.hyperbolic.emplace_back(element_from_json(G, pair.at(0)),
                                    element_from_json(G, pair.at(1)));
    for (const auto& e : j.at("elliptic")) vec.elliptic.push_back(element_from_json(G, e));
    return vec;
}

namespace {

std::string reason_string(prym::Cond1Reason r) {
    switch (r) {
        case prym::Cond1Reason::qIs2: return "qIs2";
        case prym::Cond1Reason::qIs9: return "qIs9";
        case prym::Cond1Reason::FermatPrime: return "FermatPrime";
        case prym::Cond1Reason::MersenneQminus1: return "MersenneQminus1";
    }
    return "?";
}

prym::Cond1Reason reason_from_string(const std::string& s) {
    if (s == "qIs2") return prym::Cond1Reason::qIs2;
    if (s == "qIs9") return prym::Cond1Reason::qIs9;
    if (s == "FermatPrime") return prym::Cond1Reason::FermatPrime;
    if (s == "MersenneQminus1") return prym::Cond1Reason::MersenneQminus1;
    throw Error(errc::ParseError, "unknown Cond1 reason " + s);
}

} // namespace

json verdict_to_json(const group::AffGroup& G, const prym::Signature& sig,
                     const prym::Verdict& v) {
    json j;
    j["q"] = G.q();
    j["field"] = field_to_json(G.field());
    j["signature"] = sig.to_string();
    j["genus_X"] = v.dims.genus_X;
    j["dims"] = dims_to_json(v.dims);
    if (v.realizable) j["realizable"] = *v.realizable;
    j["affordable"] = v.affordable;
    if (v.condition) {
        json c;
        c["item"] = v.condition->item;
        if (v.condition->item == 1) c["reason"] = reason_string(v.condition->reason);
        if (v.condition->item >= 2) c["form"] = v.condition->form;
        if (v.condition->item == 3) {
            c["d"] = v.condition->d;
            c["e"] = v.condition->e;
            c["mu"] = v.condition->mu;
            c["nu"] = v.condition->nu;
        }
        j["condition"] = c;
    }
    json table = json::array();
    for (const auto& row : v.table) {
        table.push_back(json{{"component", row.component.json_key()},
                             {"dim", row.dim},
                             {"H", type_to_json(row.H)},
                             {"N", type_to_json(row.N)},
                             {"H_name", G.type_name(row.H)},
                             {"N_name", G.type_name(row.N)}});
    }
    j["table"] = table;
    j["simple_decomposition"] = v.simple_decomposition;
    return j;
}

prym::Verdict verdict_from_json(const group::AffGroup& G, const json& j) {
    prym::Verdict v;
    v.dims = dims_from_json(j.at("dims"));
    if (j.contains("realizable")) v.realizable = j.at("realizable").get<bool>();
    v.affordable = j.at("affordable").get<bool>();
    if (j.contains("condition")) {
        prym::Condition c;
        c.item = j.at("condition").at("item").get<int>();
        if (c.item == 1) c.reason = reason_from_string(j.at("condition").at("reason"));
        if (c.item >= 2) c.form = j.at("condition").at("form").get<std::string>();
        if (c.item == 3) {
            c.d = j.at("condition").at("d").get<int>();
            c.e = j.at("condition").at("e").get<int>();
            c.mu = j.at("condition").at("mu").get<int>();
            c.nu = j.at("condition").at("nu").get<int>();
        }
        v.condition = c;
    }
    for (const auto& row : j.at("table")) {
        prym::VerdictRow r;
        std::string key = row.at("component").get<std::string>();
        r.component = key == "theta" ? prym::ComponentId::theta_id()
                                     : prym::ComponentId::xi(std::stoi(key.substr(3)));
        r.dim = row.at("dim").get<long long>();
        r.H = type_from_json(G, row.at("H"));
        r.N = type_from_json(G, row.at("N"));
        v.table.push_back(r);
    }
    v.simple_decomposition = j.at("simple_decomposition").get<bool>();
    return v;
}

} // namespace affprym::json_io

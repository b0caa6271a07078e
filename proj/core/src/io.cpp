#include "subint/io.hpp"

#include <fstream>

#include "subint/error.hpp"

namespace subint::io {

namespace {

Json sides(const Formulas& xs) {
    Json out = Json::array();
    for (const auto& f : xs) out.push_back(to_json(f));
    return out;
}

Formulas formulas_from_json(const Json& j) {
    if (!j.is_array()) throw Error("expected an array of formulas");
    Formulas out;
    for (const auto& x : j) out.push_back(formula_from_json(x));
    return out;
}

Json world_set(WorldSet s, std::size_t worlds) {
    Json out = Json::array();
    for (std::size_t w = 0; w < worlds; ++w) {
        if ((s >> w) & 1u) out.push_back(w);
    }
    return out;
}

WorldSet world_set_from_json(const Json& j, std::size_t worlds) {
    WorldSet s = 0;
    for (const auto& w : j) {
        const auto i = w.get<std::size_t>();
        if (i >= worlds) throw Error("world index out of range");
        s |= WorldSet{1} << i;
    }
    return s;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Json to_json(const Formula& f) {
    switch (f.kind()) {
    case Connective::Bottom:
        return Json{{"bot", true}};
    case Connective::Atom:
        return Json{{"atom", f.name()}};
    case Connective::And:
    case Connective::Or:
    case Connective::Imp: {
        const char* op = f.is_and() ? "and" : f.is_or() ? "or" : "imp";
        return Json{{"op", op}, {"l", to_json(f.left())}, {"r", to_json(f.right())}};
    }
    }
    return nullptr;
}

Formula formula_from_json(const Json& j) {
    if (j.is_string()) return parse(j.get<std::string>());
    if (!j.is_object()) throw Error("formula must be an object or a string");
    if (j.contains("bot")) return Formula::bottom();
    if (j.contains("atom")) return Formula::atom(j.at("atom").get<std::string>());
    const auto op = field(j, "op").get<std::string>();
    Formula l = formula_from_json(field(j, "l"));
    Formula r = formula_from_json(field(j, "r"));
    if (op == "and") return Formula::conj(l, r);
    if (op == "or") return Formula::disj(l, r);
    if (op == "imp") return Formula::imp(l, r);
    throw Error("unknown connective \"" + op + "\"");
}

Json to_json(const Sequent& s) { return Json{{"ant", sides(s.ant)}, {"suc", sides(s.suc)}}; }

Sequent sequent_from_json(const Json& j) {
    if (j.is_string()) return parse_sequent(j.get<std::string>());
    return Sequent(formulas_from_json(field(j, "ant")), formulas_from_json(field(j, "suc")));
}

Json to_json(const Derivation& d) {
    Json principal = Json::array();
    if (d.principal().left) principal.push_back(Json{{"side", "left"}, {"index", *d.principal().left}});
    if (d.principal().right) principal.push_back(Json{{"side", "right"}, {"index", *d.principal().right}});
    Json premises = Json::array();
    for (const auto& p : d.premises()) premises.push_back(to_json(p));
    Json out{{"rule", std::string(rule_name(d.rule()))},
             {"conclusion", to_json(d.conclusion())},
             {"principal", principal},
             {"premises", premises}};
    if (d.cut_formula()) out["cut"] = to_json(*d.cut_formula());
    return out;
}

Derivation derivation_from_json(const Json& j) {
    const auto name = field(j, "rule").get<std::string>();
    auto rule = rule_from_name(name);
    if (!rule) throw Error("unknown rule \"" + name + "\"");
    Principal principal;
    for (const auto& p : field(j, "principal")) {
        const auto side = field(p, "side").get<std::string>();
        const auto index = field(p, "index").get<std::size_t>();
        if (side == "left") {
            principal.left = index;
        } else if (side == "right") {
            principal.right = index;
        } else {
            throw Error("principal side must be left or right");
        }
    }
    std::vector<Derivation> premises;
    if (j.contains("premises")) {
        for (const auto& p : j.at("premises")) premises.push_back(derivation_from_json(p));
    }
    std::optional<Formula> cut;
    if (j.contains("cut")) cut = formula_from_json(j.at("cut"));
    return Derivation::make(*rule, sequent_from_json(field(j, "conclusion")), principal, std::move(premises),
                            std::move(cut));
}

Json to_json(const HilbertDerivation& d) {
    Json out{{"conclusion", to_json(d.conclusion())}};
    switch (d.by()) {
    case Justification::Axiom: {
        out["by"] = "axiom";
        out["name"] = d.name();
        Json subst = Json::object();
        for (const auto& [k, v] : d.substitution()) subst[k] = to_json(v);
        out["subst"] = subst;
        break;
    }
    case Justification::Rule: {
        out["by"] = "rule";
        out["name"] = d.name();
        Json premises = Json::array();
        for (const auto& p : d.premises()) premises.push_back(to_json(p));
        out["premises"] = premises;
        break;
    }
    case Justification::Assumption:
        out["by"] = "assumption";
        break;
    }
    return out;
}

HilbertDerivation hilbert_from_json(const Json& j) {
    const auto by = field(j, "by").get<std::string>();
    Formula conclusion = formula_from_json(field(j, "conclusion"));
    if (by == "assumption") return HilbertDerivation::assumption(conclusion);
    const auto name = field(j, "name").get<std::string>();
    if (by == "axiom") {
        Substitution subst;
        if (j.contains("subst")) {
            for (const auto& [k, v] : j.at("subst").items()) subst.emplace(k, formula_from_json(v));
        }
        return HilbertDerivation::make(Justification::Axiom, name, conclusion, std::move(subst), {});
    }
    if (by != "rule") throw Error("justification must be axiom, rule or assumption");
    std::vector<HilbertDerivation> premises;
    if (j.contains("premises")) {
        for (const auto& p : j.at("premises")) premises.push_back(hilbert_from_json(p));
    }
    return HilbertDerivation::make(Justification::Rule, name, conclusion, {}, std::move(premises));
}

Json to_json(const Countermodel& c) {
    const NBFrame& fr = c.model.frame;
    Json nb = Json::array();
    for (std::size_t w = 0; w < fr.worlds(); ++w) {
        Json pairs = Json::array();
        for (WorldSet x = 0; x <= fr.full(); ++x) {
            for (WorldSet y = 0; y <= fr.full(); ++y) {
                if (!NBFrame::forced(x, y) && fr.contains(w, x, y)) {
                    pairs.push_back(Json::array({world_set(x, fr.worlds()), world_set(y, fr.worlds())}));
                }
            }
        }
        nb.push_back(pairs);
    }
    Json valuation = Json::object();
    for (const auto& [atom, set] : c.model.valuation) valuation[atom] = world_set(set, fr.worlds());
    return Json{{"worlds", fr.worlds()}, {"world", c.world}, {"nb", nb}, {"valuation", valuation}};
}

Countermodel countermodel_from_json(const Json& j) {
    const auto worlds = field(j, "worlds").get<std::size_t>();
    NBFrame fr(worlds);
    const Json& nb = field(j, "nb");
    if (nb.size() != worlds) throw Error("one neighbourhood list per world expected");
    for (std::size_t w = 0; w < worlds; ++w) {
        for (const auto& pair : nb[w]) {
            fr.insert(w, world_set_from_json(pair.at(0), worlds), world_set_from_json(pair.at(1), worlds));
        }
    }
    std::map<std::string, WorldSet> valuation;
    for (const auto& [atom, set] : field(j, "valuation").items()) valuation[atom] = world_set_from_json(set, worlds);
    const auto world = field(j, "world").get<std::size_t>();
    if (world >= worlds) throw Error("refuting world out of range");
    return Countermodel{NBModel{fr, valuation}, world};
}

Json to_json(const CheckReport& r) {
    Json out{{"accepted", r.accepted}, {"nodes_checked", r.nodes_checked}};
    if (!r.accepted) {
        out["path"] = r.path;
        out["reason"] = r.reason;
        if (!r.expected.empty()) out["expected"] = r.expected;
        if (!r.actual.empty()) out["actual"] = r.actual;
    }
    return out;
}

Json to_json(const CutStats& s) {
    return Json{{"initial_cuts", s.initial_cuts},
                {"rewrite_steps", s.rewrite_steps},
                {"final_height", s.final_height},
                {"max_steps_single_cut", s.max_steps_single_cut},
                {"max_fuel_single_cut", s.max_fuel_single_cut},
                {"cases", s.cases}};
}

Json to_json(const SearchStats& s) { return Json{{"nodes", s.nodes}, {"memo_hits", s.memo_hits}}; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace subint::io
